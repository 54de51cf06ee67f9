#include "sinr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "sinr/pointloc.hpp"

namespace sinr {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// instance parameters snapped to 1/64 keep the exact-arithmetic paths fast:
// the characteristic polynomials then carry short dyadic coefficients
double snap64(double v) { return std::round(v * 64.0) / 64.0; }

}  // namespace

Network random_network_1d(SplitMix64& rng) {
  Network net;
  net.dim = 1;
  net.alpha = 2.0;
  net.beta = snap64(rng.uniform(1.0, 3.0));
  net.noise = (rng.next() & 1u) ? 0.1 : 0.0;
  const int n = static_cast<int>(rng.range(2, 10));
  std::vector<double> xs;
  while (static_cast<int>(xs.size()) < n) {
    const double x = snap64(rng.uniform(-10.0, 10.0));
    bool ok = true;
    for (double y : xs)
      if (std::abs(x - y) < 0.05) ok = false;
    if (ok) xs.push_back(x);
  }
  for (int i = 0; i < n; ++i)
    net.stations.push_back(
        {"s" + std::to_string(i), Point({xs[i]}), snap64(rng.uniform(1.0, 10.0))});
  return validate_network(std::move(net));
}

Network random_network_2d(SplitMix64& rng, int n_min, int n_max, double box, double min_sep,
                          double power_lo, double power_hi, double beta_lo, double beta_hi,
                          double noise, double alpha) {
  Network net;
  net.dim = 2;
  net.alpha = alpha;
  net.beta = beta_lo == beta_hi ? beta_lo : snap64(rng.uniform(beta_lo, beta_hi));
  net.noise = noise;
  const int n = static_cast<int>(rng.range(n_min, n_max));
  std::vector<Point> pts;
  int guard = 0;
  while (static_cast<int>(pts.size()) < n && guard++ < 100000) {
    const Point p({snap64(rng.uniform(-box, box)), snap64(rng.uniform(-box, box))});
    bool ok = true;
    for (const auto& q : pts)
      if (dist(p, q) < min_sep) ok = false;
    if (ok) pts.push_back(p);
  }
  for (int i = 0; i < n; ++i)
    net.stations.push_back(
        {"s" + std::to_string(i), pts[i], snap64(rng.uniform(power_lo, power_hi))});
  return validate_network(std::move(net));
}

// ---------- 1D battery ----------

Battery1D run_1d_battery(uint64_t seed, int trials) {
  SplitMix64 rng(seed);
  Battery1D out;
  out.instances = trials;
  for (int t = 0; t < trials; ++t) {
    const Network net = random_network_1d(rng);
    const std::size_t allowed = 2 * net.size() - 1;
    const CellCounts counts = count_cells_1d(net);
    if (counts.total > out.worst_total) {
      out.worst_total = counts.total;
      out.worst_allowed = allowed;
    }
    if (counts.total > allowed) {
      out.bound_pass = false;
      out.detail += "bound violated at instance " + std::to_string(t) + "; ";
    }
    for (std::size_t i = 0; i < net.size(); ++i) {
      if (!nfh_check_1d(net, i).pass) {
        out.nfh_pass = false;
        out.detail += "NFH violated at instance " + std::to_string(t) + " station " +
                      std::to_string(i) + "; ";
      }
    }
    double pmin = net.power(0);
    for (std::size_t i = 1; i < net.size(); ++i) pmin = std::min(pmin, net.power(i));
    for (std::size_t i = 0; i < net.size(); ++i) {
      if (net.power(i) == pmin && counts.per_station[i] != 1) {
        out.weakest_pass = false;
        out.detail += "weakest station " + std::to_string(i) + " has " +
                      std::to_string(counts.per_station[i]) + " cells at instance " +
                      std::to_string(t) + "; ";
      }
    }
  }
  return out;
}

SuiteResult verify_bound2n1(uint64_t seed, int trials) {
  const Battery1D b = run_1d_battery(seed, trials);
  SuiteResult r{"bound2n1", b.bound_pass,
                std::to_string(b.instances) + " instances, worst total " +
                    std::to_string(b.worst_total) + " <= " + std::to_string(b.worst_allowed),
                {}};
  r.report = {{"check", "bound2n1"}, {"instance_seed", seed},   {"trials", trials},
              {"pass", b.bound_pass}, {"worst_total", b.worst_total}, {"detail", b.detail}};
  return r;
}

SuiteResult verify_nfh1d(uint64_t seed, int trials) {
  const Battery1D b = run_1d_battery(seed, trials);
  SuiteResult r{"nfh1d", b.nfh_pass, std::to_string(b.instances) + " instances, zero violations",
                {}};
  r.report = {{"check", "nfh1d"}, {"instance_seed", seed}, {"trials", trials},
              {"pass", b.nfh_pass}, {"detail", b.detail}};
  return r;
}

SuiteResult verify_weakest(uint64_t seed, int trials) {
  const Battery1D b = run_1d_battery(seed, trials);
  SuiteResult r{"weakest", b.weakest_pass,
                std::to_string(b.instances) + " instances, weakest station single-celled", {}};
  r.report = {{"check", "weakest"}, {"instance_seed", seed}, {"trials", trials},
              {"pass", b.weakest_pass}, {"detail", b.detail}};
  return r;
}

// ---------- maximum principle ----------

SuiteResult verify_maxprinciple(uint64_t seed, int trials) {
  SplitMix64 rng(seed);
  const int per_net = 5;
  const int networks = std::max(1, trials / per_net);
  int disks = 0;
  bool pass = true;
  std::string detail;
  for (int k = 0; k < networks && pass; ++k) {
    const Network net =
        random_network_2d(rng, 3, 8, 5.0, 0.2, 1.0, 5.0, 1.0, 2.0, 0.1, 2.0);
    for (int d = 0; d < per_net; ++d) {
      // station-free disk: center away from interferers, radius below clearance
      Point center;
      double clearance = 0.0;
      for (int attempt = 0; attempt < 1000; ++attempt) {
        center = Point({rng.uniform(-7.0, 7.0), rng.uniform(-7.0, 7.0)});
        clearance = std::numeric_limits<double>::infinity();
        for (std::size_t j = 1; j < net.size(); ++j)
          clearance = std::min(clearance, dist(net.pos(j), center));
        if (clearance > 0.3) break;
      }
      const double radius = rng.uniform(0.1, 0.9) * clearance;
      const MaxPrincipleResult res = max_principle_check(net, 0, center, radius, 48);
      ++disks;
      if (!res.pass) {
        pass = false;
        detail = "violation: interior " + fmt(res.interior_max) + " > boundary " +
                 fmt(res.boundary_max);
        break;
      }
    }
  }
  SuiteResult r{"maxprinciple", pass,
                std::to_string(disks) + " station-free disks over " + std::to_string(networks) +
                    " networks" + (detail.empty() ? "" : "; " + detail),
                {}};
  r.report = {{"check", "maxprinciple"}, {"instance_seed", seed}, {"trials", trials},
              {"pass", pass}, {"disks", disks}};
  return r;
}

// ---------- hyperbolic convexity ----------

namespace {

// rejection-sample a reception point of s_i in the lifted map, height >= 0
bool sample_lifted_reception(const Network& up, std::size_t i, SplitMix64& rng, double r_max,
                             Point& out) {
  const Point& s = up.pos(i);
  const std::size_t D = s.dim();
  for (int attempt = 0; attempt < 4000; ++attempt) {
    Point p = s;
    const double u = r_max * std::pow(rng.uniform(), 2.0);
    double norm2 = 0.0;
    std::vector<double> dir(D);
    for (std::size_t k = 0; k < D; ++k) {
      dir[k] = rng.uniform(-1.0, 1.0);
      norm2 += dir[k] * dir[k];
    }
    if (norm2 < 1e-12) continue;
    const double norm = std::sqrt(norm2);
    for (std::size_t k = 0; k < D; ++k) p.coords[k] += u * dir[k] / norm;
    p.coords[D - 1] = std::abs(p.coords[D - 1] - s[D - 1]);  // height >= 0
    bool at_station = false;
    for (std::size_t j = 0; j < up.size(); ++j)
      if (up.pos(j) == p) at_station = true;
    if (at_station) continue;
    if (is_heard(up, i, p)) {
      out = p;
      return true;
    }
  }
  return false;
}

Network disconnected_c2_network_1d() {
  // two-station (C2) configuration: Z_0 is the complement of a disk, hence
  // two rays in 1D; its lift heals into one connected zone
  Network net;
  net.dim = 1;
  net.alpha = 2.0;
  net.beta = 1.25;
  net.noise = 0.0;
  net.stations.push_back({"s0", Point({0.0}), 2.0});
  net.stations.push_back({"s1", Point({2.0}), 1.0});
  return validate_network(std::move(net));
}

}  // namespace

SuiteResult verify_hyperbolic(uint64_t seed, int trials) {
  SplitMix64 rng(seed);
  const int networks = 10;
  const int per_net = std::max(1, trials / networks);
  bool pass = true;
  bool saw_disconnected = false;
  int geodesics = 0;
  double min_sinr_margin = std::numeric_limits<double>::infinity();
  std::string detail;

  for (int k = 0; k < networks && pass; ++k) {
    Network net;
    if (k == 0) {
      net = disconnected_c2_network_1d();
      if (reception_intervals(net, 0).count() >= 2) saw_disconnected = true;
    } else if (k % 2 == 1) {
      net = random_network_2d(rng, 2, 6, 4.0, 0.4, 1.0, 4.0, 1.0, 2.0,
                              (rng.next() & 1u) ? 0.05 : 0.0, 2.0);
    } else {
      // 1D stations
      net.dim = 1;
      net.alpha = 2.0;
      net.beta = rng.uniform(1.0, 2.0);
      net.noise = (rng.next() & 1u) ? 0.05 : 0.0;
      const int n = static_cast<int>(rng.range(2, 5));
      std::vector<double> xs;
      while (static_cast<int>(xs.size()) < n) {
        const double x = rng.uniform(-5.0, 5.0);
        bool ok = true;
        for (double y : xs)
          if (std::abs(x - y) < 0.4) ok = false;
        if (ok) xs.push_back(x);
      }
      for (int i = 0; i < n; ++i)
        net.stations.push_back({"s" + std::to_string(i), Point({xs[i]}), rng.uniform(1.0, 4.0)});
      net = validate_network(std::move(net));
    }

    const Network up = embed_up(net);
    double diameter = 0.0;
    for (std::size_t a = 0; a < net.size(); ++a)
      for (std::size_t b = a + 1; b < net.size(); ++b)
        diameter = std::max(diameter, dist(net.pos(a), net.pos(b)));
    for (int g = 0; g < per_net && pass; ++g) {
      const std::size_t i = static_cast<std::size_t>(rng.range(0, net.size() - 1));
      const double r_max = net.noise > 0.0
                               ? fatness_bounds(net, i).delta_hat
                               : 3.0 * std::max(diameter, 1.0);
      Point p1, p2;
      if (!sample_lifted_reception(up, i, rng, r_max, p2)) continue;
      const bool star = (rng.next() % 5u) == 0;
      if (star) {
        p1 = up.pos(i);
      } else if (!sample_lifted_reception(up, i, rng, r_max, p1)) {
        continue;
      }
      const GeodesicCheck res = hyperbolic_reception_check(up, i, p1, p2, 1000);
      ++geodesics;
      min_sinr_margin = std::min(min_sinr_margin, res.min_sinr - up.beta);
      if (!res.pass) {
        pass = false;
        detail = "geodesic dips to SINR " + fmt(res.min_sinr) + " (beta " + fmt(up.beta) + ")";
      }
    }
  }
  if (!saw_disconnected) {
    pass = false;
    detail += " no disconnected base-map instance exercised";
  }
  SuiteResult r{"hyperbolic", pass,
                std::to_string(geodesics) + " geodesics, disconnected base instance included" +
                    (detail.empty() ? "" : "; " + detail),
                {}};
  r.report = {{"check", "hyperbolic"},
              {"instance_seed", seed},
              {"trials", trials},
              {"pass", pass},
              {"geodesics", geodesics},
              {"saw_disconnected", saw_disconnected}};
  return r;
}

// ---------- Voronoi containment ----------

SuiteResult verify_voronoi(uint64_t seed, int trials) {
  SplitMix64 rng(seed);
  bool pass = true;
  int checked_weighted = 0, checked_limit = 0;
  std::string detail;

  const int networks = 12;
  for (int k = 0; k < networks && pass; ++k) {
    const bool limit_case = k % 3 == 2;  // alpha = 64 instances
    const Network net = limit_case
                            ? random_network_2d(rng, 3, 6, 2.0, 0.3, 1.0, 4.0, 1.0, 1.0, 0.01, 64.0)
                            : random_network_2d(rng, 3, 8, 4.0, 0.3, 1.0, 6.0, 1.0, 2.5, 0.05, 2.0);
    for (int t = 0; t < trials / networks; ++t) {
      const std::size_t i = static_cast<std::size_t>(rng.range(0, net.size() - 1));
      Point p = net.pos(i);
      const double u = rng.uniform(0.01, limit_case ? 0.6 : 2.0);
      const double th = rng.uniform(0.0, 2.0 * M_PI);
      p.coords[0] += u * std::cos(th);
      p.coords[1] += u * std::sin(th);
      bool at_station = false;
      for (std::size_t j = 0; j < net.size(); ++j)
        if (net.pos(j) == p) at_station = true;
      if (at_station) continue;
      const ReceptionTag tag = heard_station(net, p);
      if (tag.silent()) continue;
      if (limit_case) {
        ++checked_limit;
        if (voronoi_owner(net, p) != *tag.station) {
          pass = false;
          detail = "alpha=64 reception point escaped its Voronoi cell";
          break;
        }
      } else {
        ++checked_weighted;
        if (weighted_voronoi_owner(net, p) != *tag.station) {
          pass = false;
          detail = "reception point escaped its weighted Voronoi zone";
          break;
        }
      }
    }
  }
  SuiteResult r{"voronoi", pass,
                std::to_string(checked_weighted) + " weighted + " + std::to_string(checked_limit) +
                    " alpha=64 reception points contained" +
                    (detail.empty() ? "" : "; " + detail),
                {}};
  r.report = {{"check", "voronoi"},   {"instance_seed", seed},
              {"trials", trials},    {"pass", pass},
              {"weighted_points", checked_weighted}, {"limit_points", checked_limit}};
  return r;
}

// ---------- transformation invariance ----------

SuiteResult verify_transform(uint64_t seed, int trials) {
  SplitMix64 rng(seed);
  bool pass = true;
  double worst = 0.0;
  std::string detail;
  for (int t = 0; t < trials && pass; ++t) {
    const double alpha = (t % 3 == 0) ? 2.0 : (t % 3 == 1 ? 3.0 : 4.0);
    const Network net = random_network_2d(rng, 2, 8, 4.0, 0.2, 0.5, 5.0, 0.8, 3.0,
                                          rng.uniform(0.0, 0.5), alpha);
    const SimilarityTransform f = SimilarityTransform::rotation2d(
        rng.uniform(0.0, 2.0 * M_PI), Point({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}),
        rng.uniform(0.5, 2.0));
    const Network mapped = transform_network(net, f);
    Point p;
    bool found = false;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
      p = Point({rng.uniform(-6.0, 6.0), rng.uniform(-6.0, 6.0)});
      found = true;
      for (std::size_t j = 0; j < net.size(); ++j)
        if (dist(net.pos(j), p) < 1e-3) found = false;
    }
    if (!found) continue;
    const std::size_t i = static_cast<std::size_t>(rng.range(0, net.size() - 1));
    const double s0 = sinr(net, i, p);
    const double s1 = sinr(mapped, i, f.apply(p));
    const double rel = std::abs(s0 - s1) / s0;
    worst = std::max(worst, rel);
    if (rel > 1e-12) {
      pass = false;
      detail = "relative deviation " + fmt(rel);
    }
  }
  SuiteResult r{"transform", pass,
                std::to_string(trials) + " triples, worst relative deviation " + fmt(worst) +
                    (detail.empty() ? "" : "; " + detail),
                {}};
  r.report = {{"check", "transform"}, {"instance_seed", seed}, {"trials", trials},
              {"pass", pass},        {"worst_rel", worst}};
  return r;
}

// ---------- wire convergence ----------

SuiteResult verify_wireconv(uint64_t seed, int trials) {
  SplitMix64 rng(seed);
  bool pass = true;
  double worst = 0.0;
  const double ratios[4] = {0.25, 0.5, 2.0, 4.0};
  const int variants = std::max(1, trials / 4);
  for (int v = 0; v < variants && pass; ++v) {
    const Wire w{Point({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}),
                 v == 0 ? 1.0 : rng.uniform(0.5, 3.0), v == 0 ? 1.0 : rng.uniform(0.5, 5.0)};
    for (double ratio : ratios) {
      const double d = ratio * w.radius;
      const Point k({w.center[0] + d, w.center[1]});
      const double exact = wire_interference(w, k);
      const double disc = discrete_wire_interference(w, 100000, k);
      const double rel = std::abs(disc - exact) / exact;
      worst = std::max(worst, rel);
      if (rel >= 1e-4) pass = false;
    }
  }
  SuiteResult r{"wireconv", pass,
                "d/r in {0.25,0.5,2,4} x " + std::to_string(variants) +
                    " wires, worst relative error " + fmt(worst),
                {}};
  r.report = {{"check", "wireconv"}, {"instance_seed", seed}, {"trials", trials},
              {"pass", pass},       {"worst_rel", worst}};
  return r;
}

// ---------- Scheme C soundness ----------

namespace {

Network tagcell_network(SplitMix64& rng) {
  return random_network_2d(rng, 2, 6, 3.0, 2.0, 1.0, 1.3, 1.0, 1.3, 1.0, 2.0);
}

}  // namespace

SuiteResult verify_tagcell(uint64_t seed, int trials) {
  SplitMix64 rng(seed);
  bool pass = true;
  std::size_t cells_checked = 0, samples_checked = 0;
  std::string detail;
  const int builds = std::max(1, trials);
  for (int b = 0; b < builds && pass; ++b) {
    const Network net = tagcell_network(rng);
    const double epsilon = (b % 2 == 0) ? 0.05 : 0.1;
    const QDS qds = qds_build(net, 0, Scheme::C, epsilon, {});
    const auto half = even_alpha_half(net.alpha);
    const double two_alpha = 2.0 * net.alpha;
    const double q_lo = std::pow(1.0 - epsilon, two_alpha) * net.beta;
    const double q_hi = std::pow(1.0 + epsilon, two_alpha) * net.beta;
    (void)half;
    const double slack = 1e-12;
    for (uint32_t iy = 0; iy < qds.height && pass; ++iy) {
      for (uint32_t ix = 0; ix < qds.width && pass; ++ix) {
        const CellTag tag = qds.tag_at(ix, iy);
        const GridCell cell = qds.cell(ix, iy);
        ++cells_checked;
        for (int s = 0; s < 100; ++s) {
          const Point p({cell.x0 + (cell.x1 - cell.x0) * rng.uniform(),
                         cell.y0 + (cell.y1 - cell.y0) * rng.uniform()});
          bool at_station = false;
          for (std::size_t j = 0; j < net.size(); ++j)
            if (net.pos(j) == p) at_station = true;
          if (at_station) continue;
          const double v = sinr(net, 0, p);
          ++samples_checked;
          bool ok = true;
          if (tag == CellTag::Plus)
            ok = v >= net.beta * (1.0 - slack);
          else if (tag == CellTag::Minus)
            ok = v < net.beta * (1.0 + slack);
          else
            ok = v >= q_lo * (1.0 - slack) && v <= q_hi * (1.0 + slack);
          if (!ok) {
            pass = false;
            detail = "build " + std::to_string(b) + ": " + tag_name(tag) + " cell sampled SINR " +
                     fmt(v) + " (beta " + fmt(net.beta) + ", eps " + fmt(epsilon) + ")";
            break;
          }
        }
      }
    }
  }
  SuiteResult r{"tagcell", pass,
                std::to_string(builds) + " Scheme C builds, " + std::to_string(cells_checked) +
                    " cells, " + std::to_string(samples_checked) + " samples" +
                    (detail.empty() ? "" : "; " + detail),
                {}};
  r.report = {{"check", "tagcell"}, {"instance_seed", seed}, {"trials", trials},
              {"pass", pass},      {"cells", cells_checked}};
  return r;
}

// ---------- Sturm scan oracle ----------

namespace {

Poly random_test_poly(SplitMix64& rng) {
  if (rng.next() % 5u == 0) {
    // structured: an exact double root inside the scan window
    const long root = rng.range(-3, 3);
    std::vector<Rational> lin{Rational(-root), Rational(1)};
    const Poly square = Poly(lin) * Poly(lin);
    const int qdeg = static_cast<int>(rng.range(0, 9));
    std::vector<Rational> q(qdeg + 1);
    for (auto& c : q) c = Rational(static_cast<long>(rng.range(-50, 50)));
    if (q.back() == 0) q.back() = 1;
    return square * Poly(std::move(q));
  }
  const int deg = static_cast<int>(rng.range(1, 12));
  std::vector<Rational> c(deg + 1);
  for (auto& v : c) v = Rational(static_cast<long>(rng.range(-1000, 1000)));
  while (c.back() == 0) c.back() = Rational(static_cast<long>(rng.range(-1000, 1000)));
  return Poly(std::move(c));
}

// fine-scan count of distinct roots of f in (-4, 4]: double Horner with exact
// rational confirmation wherever the double value is too close to zero
int scan_count(const Poly& f, int log2_samples) {
  const Poly g = square_free_part(f).primitive();
  std::vector<double> cd;
  for (const auto& c : g.coeffs()) cd.push_back(dbl(c));
  double bound = 0.0, p4 = 1.0;
  for (double c : cd) {
    bound += std::abs(c) * p4;
    p4 *= 4.0;
  }
  const double tol = bound * 1e-12;
  const int64_t n = int64_t(1) << log2_samples;
  int count = 0;
  int prev = 0;
  for (int64_t k = 0; k <= n; ++k) {
    const double x = -4.0 + 8.0 * static_cast<double>(k) / static_cast<double>(n);
    double v = 0.0;
    for (std::size_t idx = cd.size(); idx-- > 0;) v = v * x + cd[idx];
    int s;
    if (std::abs(v) < tol)
      s = g.sign_at(rat_of(x));  // exact confirmation
    else
      s = v > 0 ? 1 : -1;
    if (k == 0) {
      prev = s;
      continue;
    }
    if (s == 0) {
      ++count;   // root exactly at a sample point of (-4, 4]
      prev = 0;  // the flip across this root is already accounted for
    } else {
      if (prev != 0 && s != prev) ++count;  // sign change across the gap
      prev = s;
    }
  }
  return count;
}

}  // namespace

SuiteResult verify_sturm_oracle(uint64_t seed, int trials) {
  SplitMix64 rng(seed);
  bool pass = true;
  std::string detail;
  for (int t = 0; t < trials && pass; ++t) {
    const Poly f = random_test_poly(rng);
    const int sturm = sturm_count(f, Rational(-4), Rational(4));
    int scan = scan_count(f, 20);
    if (scan != sturm) scan = scan_count(f, 24);  // refine a disagreement 16x
    if (scan != sturm) {
      pass = false;
      detail = "poly " + std::to_string(t) + ": sturm " + std::to_string(sturm) + " vs scan " +
               std::to_string(scan);
    }
  }
  SuiteResult r{"sturm", pass,
                std::to_string(trials) + " polynomials, scan oracle agreement on (-4,4]" +
                    (detail.empty() ? "" : "; " + detail),
                {}};
  r.report = {{"check", "sturm"}, {"instance_seed", seed}, {"trials", trials}, {"pass", pass}};
  return r;
}

// ---------- two-station closed forms ----------

SuiteResult verify_twostation(uint64_t seed, int trials) {
  SplitMix64 rng(seed);
  bool pass = true;
  int points = 0;
  std::string detail;
  for (int t = 0; t < trials && pass; ++t) {
    Network net;
    net.dim = 2;
    net.alpha = 2.0;
    net.noise = 0.0;
    double psi1, psi2;
    if (t == 0) {
      psi1 = psi2 = 1.0;
      net.beta = 1.0;  // exact halfplane
    } else if (t == 1) {
      psi1 = 1.5;
      psi2 = 1.0;
      net.beta = 1.5;  // tau == 1 via exact doubles
    } else {
      psi1 = rng.uniform(0.5, 4.0);
      psi2 = rng.uniform(0.5, 4.0);
      net.beta = rng.uniform(1.0, 3.0);
    }
    const double a = rng.uniform(0.5, 4.0);
    net.stations.push_back({"s0", Point({0.0, 0.0}), psi1});
    net.stations.push_back({"s1", Point({a, 0.0}), psi2});
    net = validate_network(std::move(net));
    const TwoStationConfig cfg = two_station_config(net, 0, true);
    for (int s = 0; s < 10000; ++s) {
      const Point p({rng.uniform(-3.0 * a, 4.0 * a), rng.uniform(-3.0 * a, 3.0 * a)});
      if (p == net.pos(0) || p == net.pos(1)) continue;
      const double v = sinr(net, 0, p);
      if (std::abs(v - net.beta) <= 1e-9 * net.beta) continue;  // boundary band
      ++points;
      if (cfg.contains(p) != (v >= net.beta)) {
        pass = false;
        detail = "instance " + std::to_string(t) + " mismatch at (" + fmt(p[0]) + "," + fmt(p[1]) +
                 ")";
        break;
      }
    }
  }
  SuiteResult r{"twostation", pass,
                std::to_string(trials) + " instances, " + std::to_string(points) +
                    " points agree" + (detail.empty() ? "" : "; " + detail),
                {}};
  r.report = {{"check", "twostation"}, {"instance_seed", seed}, {"trials", trials}, {"pass", pass}};
  return r;
}

// ---------- omega(n) construction ----------

SuiteResult verify_omega_construction(int n_lo, int n_hi) {
  bool pass = true;
  std::string detail;
  nlohmann::json per_n = nlohmann::json::array();
  for (int n = n_lo; n <= n_hi && pass; ++n) {
    const OmegaN c = construct_omega_n(n);
    if (!c.feasible || !c.r1_pass || !c.r2_pass) {
      pass = false;
      detail = "n=" + std::to_string(n) + " construction verification failed";
      per_n.push_back(c.report());
      break;
    }
    const double extent = c.R + 2.0;
    const CellCount2D count = count_cells_2d_auto(
        c.net, 0, 0.05, Bounds2D{-extent, -extent, extent, extent}, 6);
    nlohmann::json j = c.report();
    j["flood_fill_cells"] = count.components;
    j["grid_step"] = count.grid_step;
    per_n.push_back(j);
    if (count.components != static_cast<std::size_t>(n) + 1) {
      pass = false;
      detail = "n=" + std::to_string(n) + ": flood fill found " +
               std::to_string(count.components) + " cells, expected " + std::to_string(n + 1);
    }
  }
  SuiteResult r{"omega", pass,
                "n in [" + std::to_string(n_lo) + "," + std::to_string(n_hi) +
                    "]: R1/R2 verified, flood fill n+1 cells" +
                    (detail.empty() ? "" : "; " + detail),
                {}};
  r.report = {{"check", "omega"}, {"pass", pass}, {"per_n", per_n}};
  return r;
}

// ---------- QDS round trip ----------

SuiteResult verify_qds_roundtrip(uint64_t seed) {
  SplitMix64 rng(seed);
  const Network net = tagcell_network(rng);
  const QDS qds = qds_build(net, 0, Scheme::C, 0.1, {});
  const std::vector<uint8_t> bytes = qds_serialize(qds);
  const QDS back = qds_deserialize(bytes);
  bool pass = back.station == qds.station && back.scheme == qds.scheme &&
              back.epsilon == qds.epsilon && back.gamma == qds.gamma &&
              back.origin_x == qds.origin_x && back.origin_y == qds.origin_y &&
              back.width == qds.width && back.height == qds.height && back.tags == qds.tags;

  const int queries = 100000;
  const double span = qds.width * qds.gamma;
  volatile int sink = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = 0; k < queries; ++k) {
    const double x = qds.origin_x + rng.uniform(-0.1, 1.1) * span;
    const double y = qds.origin_y + rng.uniform(-0.1, 1.1) * span;
    sink = sink + static_cast<int>(back.query(x, y));
  }
  const auto t1 = std::chrono::steady_clock::now();
  const double secs = std::chrono::duration<double>(t1 - t0).count();

  SuiteResult r{"qds", pass,
                std::string("round-trip ") + (pass ? "identical" : "MISMATCH") + "; " +
                    std::to_string(queries) + " queries in " + fmt(secs) + " s (soft target < 1 s)",
                {}};
  r.report = {{"check", "qds"},   {"instance_seed", seed}, {"pass", pass},
              {"query_seconds", secs}, {"queries", queries},   {"bytes", bytes.size()}};
  return r;
}

std::vector<std::string> suite_names() {
  return {"nfh1d", "bound2n1", "maxprinciple", "hyperbolic",
          "voronoi", "transform", "wireconv", "tagcell"};
}

SuiteResult run_suite(const std::string& name, uint64_t seed, int trials) {
  if (name == "nfh1d") return verify_nfh1d(seed, trials);
  if (name == "bound2n1") return verify_bound2n1(seed, trials);
  if (name == "maxprinciple") return verify_maxprinciple(seed, trials);
  if (name == "hyperbolic") return verify_hyperbolic(seed, trials);
  if (name == "voronoi") return verify_voronoi(seed, trials);
  if (name == "transform") return verify_transform(seed, trials);
  if (name == "wireconv") return verify_wireconv(seed, trials);
  if (name == "tagcell") return verify_tagcell(seed, trials);
  throw ModelError("unknown suite: " + name);
}

}  // namespace sinr
