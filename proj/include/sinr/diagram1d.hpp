#pragma once

#include <optional>

#include <json.hpp>

#include "sinr/charpoly.hpp"
#include "sinr/core.hpp"

namespace sinr {

// One maximal connected cell of a 1D reception zone. Unbounded ends are
// open; every finite endpoint is a boundary root (SINR = beta there, so it
// belongs to the zone and the end is closed). Degenerate cells (isolated
// tangency points) have lo == hi.
struct Interval1D {
  std::optional<AlgebraicReal> lo, hi;  // nullopt = -inf / +inf
  bool lo_closed = true, hi_closed = true;

  double lo_approx() const;
  double hi_approx() const;
};

struct IntervalSet {
  std::vector<Interval1D> intervals;

  std::size_t count() const { return intervals.size(); }
  // exact membership of a rational coordinate
  bool contains(const Rational& x) const;
};

// Exact maximal intervals of Z_i for a 1-dimensional network. Requires
// dim = 1, positive even integer alpha, beta >= 1.
IntervalSet reception_intervals(const Network& net, std::size_t i);

struct CellCounts {
  std::vector<std::size_t> per_station;
  std::size_t total = 0;
};

CellCounts count_cells_1d(const Network& net);

struct NfhResult {
  bool pass = true;
  double gap_lo = 0.0, gap_hi = 0.0;  // offending station-free gap when violated
};

// No-free-hole check: every open gap between consecutive cells of Z_i must
// contain at least one station.
NfhResult nfh_check_1d(const Network& net, std::size_t i);

// Definitional gap checker on an explicit decomposition (exposed so the NFH
// violation branch is testable; real networks never produce one).
NfhResult nfh_gaps_check(const IntervalSet& zone, const std::vector<Rational>& station_positions);

// Exact zone membership via the characteristic polynomial sign, independent
// of the interval decomposition path.
bool zone_member_exact(const Network& net, std::size_t i, const Rational& x);

// [ { "lo": number|"-inf", "hi": number|"inf", "lo_closed": bool, "hi_closed": bool }, ... ]
nlohmann::json intervals_to_json(const IntervalSet& set);

}  // namespace sinr
