#include "sinr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace sinr {

// ---------- two-station closed forms ----------

static SimilarityTransform canonical_frame(const Point& si, const Point& sj, double a) {
  const std::size_t d = si.dim();
  SimilarityTransform f;
  f.scale = 1.0;
  f.rotation.assign(d * d, 0.0);
  // Householder reflection mapping u = (sj - si)/a onto e1
  std::vector<double> v(d);
  double vnorm2 = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    v[k] = (sj[k] - si[k]) / a - (k == 0 ? 1.0 : 0.0);
    vnorm2 += v[k] * v[k];
  }
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const double id = (r == c) ? 1.0 : 0.0;
      f.rotation[r * d + c] = vnorm2 < 1e-30 ? id : id - 2.0 * v[r] * v[c] / vnorm2;
    }
  Point t;
  t.coords.assign(d, 0.0);
  f.translation = t;
  f.translation.coords = f.apply(si).coords;
  for (auto& c : f.translation.coords) c = -c;
  return f;
}

bool TwoStationConfig::contains(const Point& p) const {
  switch (kind) {
    case Kind::Halfplane: return to_canonical.apply(p)[0] <= halfplane_offset;
    case Kind::Disk: return dist(p, center) <= radius;
    default: return dist(p, center) >= radius;
  }
}

TwoStationConfig two_station_config(const Network& net, std::size_t i, bool exact) {
  if (net.size() != 2) throw ModelError("two_station_config requires exactly 2 stations");
  if (i > 1) throw ModelError("station index out of range");
  const std::size_t j = 1 - i;
  TwoStationConfig cfg;
  cfg.a = dist(net.pos(i), net.pos(j));
  cfg.tau = net.beta * net.power(j) / net.power(i);
  cfg.to_canonical = canonical_frame(net.pos(i), net.pos(j), cfg.a);

  if (net.noise == 0.0) {
    if (cfg.tau == 1.0) {
      cfg.kind = TwoStationConfig::Kind::Halfplane;
      cfg.halfplane_offset = cfg.a / 2.0;
      return cfg;
    }
    const double A = std::pow(cfg.tau, 2.0 / net.alpha);
    const double qx = cfg.a / (1.0 - A);
    cfg.radius = cfg.a * std::sqrt(A) / std::abs(1.0 - A);
    Point q_canon;
    q_canon.coords.assign(net.pos(i).dim(), 0.0);
    q_canon.coords[0] = qx;
    cfg.center = cfg.to_canonical.inverse().apply(q_canon);
    cfg.kind = cfg.tau > 1.0 ? TwoStationConfig::Kind::Disk : TwoStationConfig::Kind::DiskComplement;
    return cfg;
  }

  if (exact) throw ModelError("exact two-station configuration requires N = 0");

  // noise bounds the zone; describe it by its two crossings of the
  // inter-station axis, found by bisection
  cfg.approximate = true;
  cfg.kind = TwoStationConfig::Kind::Disk;
  const FatnessBounds fb = fatness_bounds(net, i);
  const auto axis_point = [&](double x) {
    Point p = net.pos(i);
    const Point inv = cfg.to_canonical.inverse().apply([&] {
      Point c;
      c.coords.assign(p.dim(), 0.0);
      c.coords[0] = x;
      return c;
    }());
    return inv;
  };
  const auto heard_at = [&](double x) {
    const Point p = axis_point(x);
    for (std::size_t k = 0; k < net.size(); ++k)
      if (net.pos(k) == p) return k == i;
    return sinr(net, i, p) >= net.beta;
  };
  const auto bisect_edge = [&](double inside, double outside) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (inside + outside);
      if (heard_at(mid))
        inside = mid;
      else
        outside = mid;
    }
    return 0.5 * (inside + outside);
  };
  double out_r = std::max(fb.delta_hat, cfg.a) * 2.0;
  while (heard_at(out_r)) out_r *= 2.0;
  double out_l = -out_r;
  while (heard_at(out_l)) out_l *= 2.0;
  const double start = fb.rho_hat / 2.0;
  const double xr = bisect_edge(start, out_r);
  const double xl = bisect_edge(-start, out_l);
  Point c_canon;
  c_canon.coords.assign(net.pos(i).dim(), 0.0);
  c_canon.coords[0] = 0.5 * (xl + xr);
  cfg.center = cfg.to_canonical.inverse().apply(c_canon);
  cfg.radius = 0.5 * (xr - xl);
  return cfg;
}

// ---------- wires ----------

double wire_interference(const Wire& w, const Point& k) {
  const double d2 = dist2(w.center, k);
  const double r2 = w.radius * w.radius;
  if (d2 == r2) throw ModelError("wire interference singular on the wire circle");
  return w.total_power / std::abs(r2 - d2);
}

double discrete_wire_interference(const Wire& w, uint64_t chi, const Point& k) {
  if (chi == 0) throw ModelError("chi must be positive");
  const double p = w.total_power / static_cast<double>(chi);
  double acc = 0.0;
  for (uint64_t t = 0; t < chi; ++t) {
    const double th = 2.0 * M_PI * static_cast<double>(t) / static_cast<double>(chi);
    const double dx = w.center[0] + w.radius * std::cos(th) - k[0];
    const double dy = w.center[1] + w.radius * std::sin(th) - k[1];
    const double d2 = dx * dx + dy * dy;
    if (d2 == 0.0) throw ModelError("query point coincides with a wire station");
    acc += p / d2;
  }
  return acc;
}

double average_circle_interference(const Network& net, std::size_t exclude, const Point& q,
                                   double r) {
  const double r2 = r * r;
  double acc = 0.0;
  for (std::size_t j = 0; j < net.size(); ++j) {
    if (j == exclude) continue;
    const double d2 = dist2(net.pos(j), q);
    if (d2 == r2) throw ModelError("interferer on the averaging circle");
    acc += net.power(j) / std::abs(d2 - r2);
  }
  return acc;
}

MaxPrincipleResult max_principle_check(const Network& net, std::size_t exclude, const Point& q,
                                       double r, int samples) {
  if (samples < 2) throw ModelError("samples must be >= 2");
  for (std::size_t j = 0; j < net.size(); ++j) {
    if (j == exclude) continue;
    if (dist(net.pos(j), q) <= r) throw ModelError("station inside the disk");
  }
  MaxPrincipleResult res;
  res.interior_max = -std::numeric_limits<double>::infinity();
  res.boundary_max = -std::numeric_limits<double>::infinity();
  Point best_interior;
  for (int iy = 0; iy < samples; ++iy) {
    for (int ix = 0; ix < samples; ++ix) {
      const double x = q[0] - r + 2.0 * r * (ix + 0.5) / samples;
      const double y = q[1] - r + 2.0 * r * (iy + 0.5) / samples;
      const double dx = x - q[0], dy = y - q[1];
      if (dx * dx + dy * dy >= r * r) continue;
      const Point p({x, y});
      const double val = interference(net, exclude, p);
      if (val > res.interior_max) {
        res.interior_max = val;
        best_interior = p;
      }
    }
  }
  const int nb = 16 * samples;
  for (int k = 0; k < nb; ++k) {
    const double th = 2.0 * M_PI * k / nb;
    const Point p({q[0] + r * std::cos(th), q[1] + r * std::sin(th)});
    res.boundary_max = std::max(res.boundary_max, interference(net, exclude, p));
  }
  res.pass = res.interior_max <= res.boundary_max + 1e-9;
  if (!res.pass) res.witness = best_interior;
  return res;
}

// ---------- hyperbolic geodesics ----------

Geodesic hyperbolic_geodesic(const Point& p1, const Point& p2) {
  if (p1.dim() != p2.dim() || p1.dim() < 2)
    throw ModelError("geodesic endpoints must share a dimension >= 2");
  const std::size_t D = p1.dim();
  const double h1 = p1[D - 1], h2 = p2[D - 1];
  if ((h1 > 0 && h2 < 0) || (h1 < 0 && h2 > 0))
    throw ModelError("geodesic endpoints lie on opposite sides of the hyperplane");

  Geodesic g;
  g.p1 = p1;
  g.p2 = p2;
  bool same_proj = true;
  for (std::size_t k = 0; k + 1 < D; ++k)
    if (p1[k] != p2[k]) same_proj = false;
  if (same_proj) {
    g.kind = Geodesic::Kind::VerticalSegment;
    return g;
  }

  g.kind = Geodesic::Kind::Arc;
  double L2 = 0.0;
  g.u.assign(D, 0.0);
  for (std::size_t k = 0; k + 1 < D; ++k) {
    g.u[k] = p2[k] - p1[k];
    L2 += g.u[k] * g.u[k];
  }
  const double L = std::sqrt(L2);
  for (auto& c : g.u) c /= L;
  const double s_star = (L2 + h2 * h2 - h1 * h1) / (2.0 * L);
  g.center.coords.assign(D, 0.0);
  for (std::size_t k = 0; k + 1 < D; ++k) g.center.coords[k] = p1[k] + s_star * g.u[k];
  g.radius = std::hypot(s_star, h1);
  g.theta1 = std::atan2(h1, -s_star);
  g.theta2 = std::atan2(h2, L - s_star);
  if (h1 < 0 || h2 < 0) {  // lower half-space: keep the sweep below the hyperplane
    if (g.theta1 > 0) g.theta1 -= 2.0 * M_PI;
    if (g.theta2 > 0) g.theta2 -= 2.0 * M_PI;
  }
  return g;
}

Point Geodesic::point_at(double s) const {
  const std::size_t D = p1.dim();
  Point out;
  out.coords.assign(D, 0.0);
  if (kind == Kind::VerticalSegment) {
    for (std::size_t k = 0; k < D; ++k) out.coords[k] = p1[k] + s * (p2[k] - p1[k]);
    return out;
  }
  const double th = theta1 + s * (theta2 - theta1);
  for (std::size_t k = 0; k + 1 < D; ++k)
    out.coords[k] = center[k] + radius * std::cos(th) * u[k];
  out.coords[D - 1] = radius * std::sin(th);
  return out;
}

Network embed_up(const Network& net) {
  Network up = net;
  up.dim = net.dim + 1;
  for (auto& s : up.stations) s.pos.coords.push_back(0.0);
  return up;
}

GeodesicCheck hyperbolic_reception_check(const Network& up, std::size_t i, const Point& p1,
                                         const Point& p2, int samples) {
  if (samples < 2) throw ModelError("samples must be >= 2");
  if (!is_heard(up, i, p1) || !is_heard(up, i, p2))
    throw ModelError("geodesic endpoints must be reception points");
  const Geodesic g = hyperbolic_geodesic(p1, p2);
  GeodesicCheck res;
  res.min_sinr = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const Point p = g.point_at(static_cast<double>(k) / (samples - 1));
    bool at_station = false;
    for (std::size_t j = 0; j < up.size(); ++j) {
      if (up.pos(j) == p) {
        at_station = true;
        if (j != i) {
          res.pass = false;
          res.witness = p;
          res.min_sinr = 0.0;
        }
        break;
      }
    }
    if (at_station) continue;
    const double v = sinr(up, i, p);
    if (v < res.min_sinr) res.min_sinr = v;
    if (v < up.beta - 1e-9) {
      res.pass = false;
      res.witness = p;
    }
  }
  return res;
}

// ---------- omega(n) construction ----------

OmegaN construct_omega_n(int n, int boundary_samples_per_square) {
  if (n < 2) throw ModelError("construct_omega_n requires n >= 2");
  OmegaN out;
  out.n = n;
  const double nstar = static_cast<double>(n) * n - 1.0;

  bool found = false;
  for (int R = 2 * n + 1; R <= 2000 * n + 2000; ++R) {
    const double Rd = R;
    const double L = 5.0 * Rd * Rd + 4.0 * nstar / 3.0;
    const double U = (5.8 + nstar / (27.0 * Rd * Rd)) * (Rd - 1.0) * (Rd - 1.0);
    if (U > L) {
      out.R = Rd;
      out.L = L;
      out.U = U;
      found = true;
      break;
    }
  }
  if (!found) {
    out.feasible = false;
    return out;
  }
  out.feasible = true;
  out.P0 = 0.5 * (out.L + out.U);

  Network net;
  net.dim = 2;
  net.noise = 1.0;
  net.beta = 1.0;
  net.alpha = 2.0;
  net.stations.push_back({"s0", Point({0.0, 0.0}), out.P0});
  const double a = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * M_PI * i / n;
    const Point c({out.R * std::cos(th), out.R * std::sin(th)});
    out.centers.push_back(c);
    const double offs[4][2] = {{-a, a}, {a, a}, {a, -a}, {-a, -a}};
    for (int k = 0; k < 4; ++k)
      net.stations.push_back({"s" + std::to_string(4 * i + k + 1),
                              Point({c[0] + offs[k][0], c[1] + offs[k][1]}), 1.0});
  }
  out.net = validate_network(std::move(net));

  out.r1_min_sinr = std::numeric_limits<double>::infinity();
  for (const auto& c : out.centers) out.r1_min_sinr = std::min(out.r1_min_sinr, sinr(out.net, 0, c));
  out.r1_pass = out.r1_min_sinr >= 1.0;

  out.r2_max_sinr = 0.0;
  const int per_edge = std::max(1, boundary_samples_per_square / 4);
  for (const auto& c : out.centers) {
    const Point corners[4] = {Point({c[0] - a, c[1] + a}), Point({c[0] + a, c[1] + a}),
                              Point({c[0] + a, c[1] - a}), Point({c[0] - a, c[1] - a})};
    for (int e = 0; e < 4; ++e) {
      const Point& from = corners[e];
      const Point& to = corners[(e + 1) % 4];
      for (int k = 0; k < per_edge; ++k) {
        const double t = (k + 0.5) / per_edge;
        const Point p({from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])});
        out.r2_max_sinr = std::max(out.r2_max_sinr, sinr(out.net, 0, p));
      }
    }
  }
  out.r2_pass = out.r2_max_sinr < 1.0;
  return out;
}

nlohmann::json OmegaN::report() const {
  return {{"check", "omega_n"},   {"n", n},
          {"feasible", feasible}, {"R", R},
          {"P0", P0},             {"L", L},
          {"U", U},               {"r1_pass", r1_pass},
          {"r1_min_sinr", r1_min_sinr}, {"r2_pass", r2_pass},
          {"r2_max_sinr", r2_max_sinr}, {"pass", feasible && r1_pass && r2_pass}};
}

// ---------- log-wires construction ----------

double wire_net_sinr(const WireNetwork& wn, const Point& p) {
  const double d2 = dist2(wn.station_pos, p);
  if (d2 == 0.0) throw ModelError("SINR undefined at the station");
  double inter = 0.0;
  for (const auto& w : wn.wires) inter += wire_interference(w, p);
  return (wn.station_power / d2) / (inter + wn.noise);
}

LogWires construct_log_wires(int rho, double p1, double noise) {
  if (rho < 1) throw ModelError("construct_log_wires requires rho >= 1");
  LogWires out;
  out.rho = rho;
  out.p1 = p1;
  // test point i sits at x = r_i / 2, so x^2 = 64 * 16^(i-2); the wire
  // interference there stays below 6 (inner < 1, outer < 5), which makes
  // P1 >= 64 * 16^(rho-1) * (6 + N) sufficient for reception at every point
  out.feasibility_bound = 64.0 * std::pow(16.0, rho - 1) * (6.0 + noise);
  out.feasible = p1 >= out.feasibility_bound;

  out.net.station_pos = Point({0.0, 0.0});
  out.net.station_power = p1;
  out.net.noise = noise;
  out.net.beta = 1.0;
  for (int i = 1; i <= rho; ++i)
    out.net.wires.push_back({Point({0.0, 0.0}), std::pow(4.0, i), 1.0});

  if (!out.feasible) return out;

  out.test_points.push_back(out.net.station_pos);  // p_1: the station itself
  out.min_sinr = std::numeric_limits<double>::infinity();
  out.pass = true;
  for (int i = 2; i <= rho + 1; ++i) {
    const double r_prev = std::pow(4.0, i - 1);
    const double r_cur = std::pow(4.0, i);
    const double x = (2.0 * r_prev + r_cur) / 3.0;
    const Point p({x, 0.0});
    out.test_points.push_back(p);
    double i1 = 0.0, i2 = 0.0;
    for (const auto& w : out.net.wires) {
      const double v = wire_interference(w, p);
      if (w.radius < x)
        i1 += v;
      else
        i2 += v;
    }
    out.i1_max = std::max(out.i1_max, i1);
    out.i2_max = std::max(out.i2_max, i2);
    const double s = (p1 / (x * x)) / (i1 + i2 + noise);
    out.min_sinr = std::min(out.min_sinr, s);
    if (s < 1.0) out.pass = false;
  }
  return out;
}

nlohmann::json LogWires::report() const {
  return {{"check", "log_wires"},
          {"rho", rho},
          {"P1", p1},
          {"feasibility_bound", feasibility_bound},
          {"feasible", feasible},
          {"pass", feasible && pass},
          {"min_sinr", min_sinr},
          {"i1_max", i1_max},
          {"i2_max", i2_max}};
}

int wire_axis_cell_scan(const WireNetwork& wn, double x_max, int samples) {
  // the no-reception bands hug the wire circles and get arbitrarily thin as
  // the station power grows (half-width ~ r / (2 P1)), so a uniform scan is
  // densified around every wire radius
  std::vector<double> xs;
  xs.reserve(samples + wn.wires.size() * 40001);
  for (int k = 1; k <= samples; ++k) xs.push_back(x_max * k / samples);
  for (const auto& w : wn.wires) {
    const double r = w.radius;
    if (r > x_max) continue;
    for (int k = 0; k <= 40000; ++k)
      xs.push_back(r * (1.0 - 2e-3) + r * 4e-3 * k / 40000.0);
  }
  std::sort(xs.begin(), xs.end());
  int runs = 0;
  bool prev = false;
  for (double x : xs) {
    if (x <= 0.0 || x > x_max) continue;
    bool skip = false;
    for (const auto& w : wn.wires)
      if (std::abs(x - w.radius) < 1e-13 * w.radius) skip = true;
    if (skip) continue;
    const bool heard = wire_net_sinr(wn, Point({x, 0.0})) >= wn.beta;
    if (heard && !prev) ++runs;
    prev = heard;
  }
  return runs;
}

// ---------- grid counting ----------

namespace {

// flattened station data for the hot sampling loops
struct FlatNet {
  std::vector<double> x, y, p;
  double beta, noise, alpha;
  bool alpha2;

  explicit FlatNet(const Network& net)
      : beta(net.beta), noise(net.noise), alpha(net.alpha), alpha2(net.alpha == 2.0) {
    for (const auto& s : net.stations) {
      x.push_back(s.pos[0]);
      y.push_back(s.pos[1]);
      p.push_back(s.power);
    }
  }

  double energy(std::size_t j, double d2) const {
    return alpha2 ? p[j] / d2 : p[j] * std::pow(d2, -0.5 * alpha);
  }

  mutable std::vector<double> e_scratch;

  // 1 when (px,py) belongs to the requested zone (station index, or the
  // empty zone for station < 0), else 0; a station position belongs to that
  // station's own zone
  int side(int station, double px, double py) const {
    const std::size_t n = x.size();
    if (e_scratch.size() != n) e_scratch.resize(n);
    double* e = e_scratch.data();
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double dx = px - x[j], dy = py - y[j];
      const double d2 = dx * dx + dy * dy;
      if (d2 == 0.0) return station >= 0 && j == static_cast<std::size_t>(station) ? 1 : 0;
      e[j] = energy(j, d2);
      total += e[j];
    }
    if (station >= 0) {
      const double own = e[station];
      return own >= beta * (total - own + noise) ? 1 : 0;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] >= beta * (total - e[i] + noise)) return 0;
    return 1;
  }
};

}  // namespace

CellCount2D count_cells_2d(const Network& net, std::optional<std::size_t> station,
                           double grid_step, const Bounds2D& bounds) {
  if (net.dim != 2) throw ModelError("count_cells_2d requires dim = 2");
  if (!(grid_step > 0.0)) throw ModelError("grid step must be positive");
  if (!(bounds.x1 > bounds.x0) || !(bounds.y1 > bounds.y0))
    throw ModelError("degenerate bounds");

  const std::size_t w = static_cast<std::size_t>(std::ceil((bounds.x1 - bounds.x0) / grid_step));
  const std::size_t h = static_cast<std::size_t>(std::ceil((bounds.y1 - bounds.y0) / grid_step));
  if (w * h > 400u * 1000u * 1000u) throw ModelError("grid too large; increase the step");

  CellCount2D out;
  out.grid_step = grid_step;
  const double K = static_cast<double>(net.size()) * net.alpha;
  out.milnor_thom_reference = static_cast<std::size_t>(K * std::pow(2.0 * K - 1.0, net.dim - 1));

  const FlatNet fn(net);
  const int st = station ? static_cast<int>(*station) : -1;

  // corner signs are shared by adjacent cells; a cell is tagged by its
  // center sign and excluded as boundary-crossing when any corner disagrees
  std::vector<uint8_t> corner((w + 1) * (h + 1));
  for (std::size_t iy = 0; iy <= h; ++iy)
    for (std::size_t ix = 0; ix <= w; ++ix)
      corner[iy * (w + 1) + ix] = static_cast<uint8_t>(
          fn.side(st, bounds.x0 + ix * grid_step, bounds.y0 + iy * grid_step));

  std::vector<int8_t> cls(w * h);
  for (std::size_t iy = 0; iy < h; ++iy) {
    for (std::size_t ix = 0; ix < w; ++ix) {
      const int c =
          fn.side(st, bounds.x0 + (ix + 0.5) * grid_step, bounds.y0 + (iy + 0.5) * grid_step);
      const bool corners_agree = corner[iy * (w + 1) + ix] == c &&
                                 corner[iy * (w + 1) + ix + 1] == c &&
                                 corner[(iy + 1) * (w + 1) + ix] == c &&
                                 corner[(iy + 1) * (w + 1) + ix + 1] == c;
      const int8_t tag = corners_agree ? static_cast<int8_t>(c) : int8_t(-1);
      cls[iy * w + ix] = tag;
      if (tag == 1) ++out.plus_cells;
      if (tag == -1) ++out.ambiguous_cells;
    }
  }

  std::vector<uint8_t> seen(w * h, 0);
  std::deque<std::size_t> queue;
  for (std::size_t start = 0; start < w * h; ++start) {
    if (cls[start] != 1 || seen[start]) continue;
    ++out.components;
    seen[start] = 1;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      const std::size_t ix = cur % w, iy = cur / w;
      const std::size_t nbrs[4] = {ix > 0 ? cur - 1 : cur, ix + 1 < w ? cur + 1 : cur,
                                   iy > 0 ? cur - w : cur, iy + 1 < h ? cur + w : cur};
      for (std::size_t nb : nbrs) {
        if (nb == cur || seen[nb] || cls[nb] != 1) continue;
        seen[nb] = 1;
        queue.push_back(nb);
      }
    }
  }
  return out;
}

CellCount2D count_cells_2d_auto(const Network& net, std::optional<std::size_t> station,
                                double initial_step, const Bounds2D& bounds, int max_levels) {
  CellCount2D last;
  std::size_t prev1 = static_cast<std::size_t>(-1), prev2 = static_cast<std::size_t>(-2);
  double step = initial_step;
  for (int level = 0; level < max_levels; ++level) {
    last = count_cells_2d(net, station, step, bounds);
    if (last.components == prev1 && prev1 == prev2) return last;
    prev2 = prev1;
    prev1 = last.components;
    step *= 0.5;
  }
  return last;
}

AreaEstimate area_estimate(const Network& net, std::size_t i, double grid_step) {
  if (net.noise <= 0.0) throw ModelError("area estimate requires N > 0");
  const FatnessBounds fb = fatness_bounds(net, i);
  AreaEstimate est;
  est.lower_bound = M_PI * fb.rho_hat * fb.rho_hat;
  est.upper_bound = M_PI * fb.delta_hat * fb.delta_hat;
  const double cx = net.pos(i)[0], cy = net.pos(i)[1];
  const double r = fb.delta_hat + grid_step;
  const std::size_t m = static_cast<std::size_t>(std::ceil(2.0 * r / grid_step));
  std::size_t inside = 0;
  for (std::size_t iy = 0; iy < m; ++iy) {
    for (std::size_t ix = 0; ix < m; ++ix) {
      const Point p({cx - r + (ix + 0.5) * grid_step, cy - r + (iy + 0.5) * grid_step});
      bool at_station = false;
      for (std::size_t j = 0; j < net.size(); ++j)
        if (net.pos(j) == p) at_station = true;
      if (at_station) continue;
      if (sinr(net, i, p) >= net.beta) ++inside;
    }
  }
  est.area = static_cast<double>(inside) * grid_step * grid_step;
  est.within_bounds = est.area >= est.lower_bound && est.area <= est.upper_bound;
  return est;
}

}  // namespace sinr
