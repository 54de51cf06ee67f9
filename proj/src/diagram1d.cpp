#include "sinr/diagram1d.hpp"

#include <cmath>
#include <limits>

namespace sinr {

double Interval1D::lo_approx() const {
  return lo ? lo->approx() : -std::numeric_limits<double>::infinity();
}

double Interval1D::hi_approx() const {
  return hi ? hi->approx() : std::numeric_limits<double>::infinity();
}

bool IntervalSet::contains(const Rational& x) const {
  for (const auto& iv : intervals) {
    if (iv.lo) {
      const int c = iv.lo->compare(x);  // root vs x
      if (c > 0) continue;              // lo > x: x left of this interval
      if (c == 0 && !iv.lo_closed) continue;
    }
    if (iv.hi) {
      const int c = iv.hi->compare(x);
      if (c < 0) continue;  // hi < x
      if (c == 0 && !iv.hi_closed) continue;
    }
    return true;
  }
  return false;
}

static void check_preconditions(const Network& net) {
  if (net.dim != 1) throw ModelError("1D diagram requires dim = 1");
  if (!even_alpha_half(net.alpha)) throw ModelError("1D diagram requires a positive even integer alpha");
  if (net.beta < 1.0) throw ModelError("1D diagram requires beta >= 1");
}

IntervalSet reception_intervals(const Network& net, std::size_t i) {
  check_preconditions(net);
  const Poly f = line_characteristic(net, i);
  if (f.degree() < 1)
    throw PolyError("degenerate characteristic polynomial");  // impossible for valid networks

  RootIsolation iso = isolate_all_roots(f);
  const auto& roots = iso.roots;
  const std::size_t m = roots.size();

  // sign of F on each open region between consecutive roots
  std::vector<int> gap_sign(m + 1);
  const int lead = sign(f.leading());
  gap_sign[0] = (f.degree() % 2 == 0) ? lead : -lead;
  gap_sign[m] = lead;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const Rational w = rational_between(roots[k], roots[k + 1]);
    gap_sign[k + 1] = f.sign_at(w);
    if (gap_sign[k + 1] == 0) throw PolyError("witness landed on a root");  // cannot happen
  }
  if (m == 0) {
    // no roots: F has constant sign; a valid network always has F < 0 at its
    // own station and F > 0 at interferers, so this cannot happen
    throw PolyError("rootless characteristic polynomial");
  }

  // sweep regions gap_0, root_1, gap_1, ..., root_m, gap_m; roots are always
  // reception points (F = 0), gaps belong iff F < 0 there
  IntervalSet out;
  bool open_run = false;
  Interval1D cur;
  if (gap_sign[0] < 0) {
    open_run = true;
    cur = Interval1D{};
    cur.lo = std::nullopt;
    cur.lo_closed = false;
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (!open_run) {
      cur = Interval1D{};
      cur.lo = roots[k];
      cur.lo_closed = true;
      open_run = true;
    }
    if (gap_sign[k + 1] >= 0) {
      cur.hi = roots[k];
      cur.hi_closed = true;
      out.intervals.push_back(cur);
      open_run = false;
    }
  }
  if (open_run) {
    cur.hi = std::nullopt;
    cur.hi_closed = false;
    out.intervals.push_back(cur);
  }
  return out;
}

CellCounts count_cells_1d(const Network& net) {
  CellCounts counts;
  counts.per_station.resize(net.size(), 0);
  for (std::size_t i = 0; i < net.size(); ++i) {
    counts.per_station[i] = reception_intervals(net, i).count();
    counts.total += counts.per_station[i];
  }
  return counts;
}

NfhResult nfh_gaps_check(const IntervalSet& zone, const std::vector<Rational>& positions) {
  for (std::size_t k = 0; k + 1 < zone.intervals.size(); ++k) {
    const auto& hi = zone.intervals[k].hi;
    const auto& lo = zone.intervals[k + 1].lo;
    if (!hi || !lo) continue;
    bool found = false;
    for (const auto& x : positions) {
      if (hi->compare(x) < 0 && lo->compare(x) > 0) {  // hi < x < lo strictly
        found = true;
        break;
      }
    }
    if (!found) return {false, hi->approx(), lo->approx()};
  }
  return {};
}

NfhResult nfh_check_1d(const Network& net, std::size_t i) {
  const IntervalSet zone = reception_intervals(net, i);
  std::vector<Rational> positions;
  positions.reserve(net.size());
  for (std::size_t j = 0; j < net.size(); ++j) positions.push_back(rat_of(net.pos(j)[0]));
  return nfh_gaps_check(zone, positions);
}

bool zone_member_exact(const Network& net, std::size_t i, const Rational& x) {
  check_preconditions(net);
  const Poly f = line_characteristic(net, i);
  return f.sign_at(x) <= 0;
}

nlohmann::json intervals_to_json(const IntervalSet& set) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& iv : set.intervals) {
    nlohmann::json j;
    if (iv.lo)
      j["lo"] = iv.lo_approx();
    else
      j["lo"] = "-inf";
    if (iv.hi)
      j["hi"] = iv.hi_approx();
    else
      j["hi"] = "inf";
    j["lo_closed"] = iv.lo_closed;
    j["hi_closed"] = iv.hi_closed;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace sinr
