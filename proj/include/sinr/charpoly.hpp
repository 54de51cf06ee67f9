#pragma once

#include <optional>

#include "sinr/model.hpp"
#include "sinr/poly.hpp"

namespace sinr {

// Characteristic polynomial of Z_i restricted to the segment p(t) = p1 + t(p2-p1),
// t in [0,1], split as F(t) = beta * g(t) + h(t) so one construction serves
// every reception threshold:
//   g = sum_{k != i} Psi_k prod_{l != k} dist(s_l, p(t))^alpha + N prod_l dist(s_l, p(t))^alpha
//   h = -Psi_i prod_{k != i} dist(s_k, p(t))^alpha
// p(t) is in Z_i at threshold b iff b*g(t) + h(t) <= 0. Requires alpha to be a
// positive even integer and p1 != p2; binary64 inputs are converted exactly.
struct SegmentCharacteristic {
  Poly g, h;
  Poly at(const Rational& beta) const { return g * beta + h; }
};

SegmentCharacteristic segment_characteristic(const Network& net, std::size_t i, const Point& p1,
                                             const Point& p2);

Poly restrict_characteristic(const Network& net, std::size_t i, const Point& p1, const Point& p2,
                             std::optional<Rational> beta_override = std::nullopt);

// Same polynomial in the ambient coordinate for a 1-dimensional network:
// F(x) <= 0 iff x is a reception point of s_i.
Poly line_characteristic(const Network& net, std::size_t i,
                         std::optional<Rational> beta_override = std::nullopt);

}  // namespace sinr
