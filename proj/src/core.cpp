#include "sinr/core.hpp"

#include <cmath>
#include <limits>

namespace sinr {

static double energy_from_d2(double power, double d2, double alpha) {
  if (alpha == 2.0) return power / d2;
  return power * std::pow(d2, -0.5 * alpha);
}

double energy(const Network& net, std::size_t i, const Point& p) {
  if (i >= net.size()) throw ModelError("station index out of range");
  const double d2 = dist2(net.pos(i), p);
  if (d2 == 0.0) throw ModelError("energy undefined at station position");
  return energy_from_d2(net.power(i), d2, net.alpha);
}

double interference(const Network& net, std::size_t exclude, const Point& p) {
  if (exclude >= net.size()) throw ModelError("station index out of range");
  double acc = 0.0;
  for (std::size_t j = 0; j < net.size(); ++j) {
    if (j == exclude) continue;
    const double d2 = dist2(net.pos(j), p);
    if (d2 == 0.0) throw ModelError("interference undefined at an interferer's position");
    acc += energy_from_d2(net.power(j), d2, net.alpha);
  }
  return acc;
}

double sinr(const Network& net, std::size_t i, const Point& p) {
  return energy(net, i, p) / (interference(net, i, p) + net.noise);
}

double sinr_reciprocal(const Network& net, std::size_t i, const Point& p) {
  return (interference(net, i, p) + net.noise) / energy(net, i, p);
}

bool is_heard(const Network& net, std::size_t i, const Point& p) {
  if (i >= net.size()) throw ModelError("station index out of range");
  for (std::size_t j = 0; j < net.size(); ++j)
    if (net.pos(j) == p) return j == i;
  return sinr(net, i, p) >= net.beta;
}

ReceptionTag heard_station(const Network& net, const Point& p) {
  for (std::size_t j = 0; j < net.size(); ++j)
    if (net.pos(j) == p) return {j, true};
  ReceptionTag tag;
  double best = -1.0;
  int count = 0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const double s = sinr(net, i, p);
    if (s >= net.beta) {
      ++count;
      if (s > best) {
        best = s;
        tag.station = i;
      }
    }
  }
  tag.unique = count <= 1;
  return tag;
}

std::size_t weighted_voronoi_owner(const Network& net, const Point& p) {
  std::size_t best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < net.size(); ++i) {
    const double d = dist(net.pos(i), p);
    if (d == 0.0) return i;
    const double v = std::pow(net.power(i), 1.0 / net.alpha) / d;
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  return best;
}

std::size_t voronoi_owner(const Network& net, const Point& p) {
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < net.size(); ++i) {
    const double d2 = dist2(net.pos(i), p);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return best;
}

}  // namespace sinr
