#pragma once

#include <optional>

#include "sinr/model.hpp"

namespace sinr {

// Outcome of a point-location query: which station is heard at p, if any.
// For beta < 1 zones can overlap; `unique` is false when more than one
// station clears the threshold and the max-SINR one is reported.
struct ReceptionTag {
  std::optional<std::size_t> station;
  bool unique = true;

  bool silent() const { return !station.has_value(); }
};

// Psi_i * dist(s_i, p)^-alpha. Undefined (throws) at p == s_i.
double energy(const Network& net, std::size_t i, const Point& p);

// Sum of the energies of all stations except `exclude`. Throws if p sits on
// one of the summed stations.
double interference(const Network& net, std::size_t exclude, const Point& p);

// E / (I + N); undefined (throws) at any station position.
double sinr(const Network& net, std::size_t i, const Point& p);

// (I + N) / E
double sinr_reciprocal(const Network& net, std::size_t i, const Point& p);

// Reception rule: SINR(s_i, p) >= beta, with the zone including s_i itself
// and excluding every other station's position.
bool is_heard(const Network& net, std::size_t i, const Point& p);

// Station heard at p (ties at exact equality go to the lower index).
ReceptionTag heard_station(const Network& net, const Point& p);

// argmax_i Psi_i^(1/alpha) / dist(s_i, p); ties go to the lower index and a
// query at a station position returns that station.
std::size_t weighted_voronoi_owner(const Network& net, const Point& p);

// argmin_i dist(s_i, p): the unweighted Voronoi owner (alpha -> infinity limit).
std::size_t voronoi_owner(const Network& net, const Point& p);

}  // namespace sinr
