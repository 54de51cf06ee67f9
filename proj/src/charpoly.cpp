#include "sinr/charpoly.hpp"

namespace sinr {

// |p1 + t (p2 - p1) - s|^2 as an exact quadratic in t
static Poly dist2_on_segment(const Point& p1, const Point& p2, const Point& s) {
  Rational c0(0), c1(0), c2(0);
  for (std::size_t k = 0; k < p1.dim(); ++k) {
    const Rational a = rat_of(p1[k]) - rat_of(s[k]);
    const Rational u = rat_of(p2[k]) - rat_of(p1[k]);
    c0 += a * a;
    c1 += 2 * a * u;
    c2 += u * u;
  }
  return Poly({c0, c1, c2});
}

static Poly dist2_on_line(double station_x) {
  const Rational x = rat_of(station_x);
  return Poly({x * x, -2 * x, Rational(1)});
}

static SegmentCharacteristic build(const Network& net, std::size_t i,
                                   const std::vector<Poly>& dist2_polys) {
  const auto half = even_alpha_half(net.alpha);
  if (!half) throw PolyError("characteristic polynomial requires a positive even integer alpha");
  const std::size_t n = net.size();
  if (i >= n) throw ModelError("station index out of range");

  std::vector<Poly> powed(n);
  for (std::size_t k = 0; k < n; ++k) powed[k] = dist2_polys[k].pow(static_cast<unsigned>(*half));

  // prefix/suffix products give prod_{l != k} in O(n^2) coefficient work
  std::vector<Poly> pre(n + 1), suf(n + 1);
  pre[0] = Poly::constant(Rational(1));
  suf[n] = Poly::constant(Rational(1));
  for (std::size_t k = 0; k < n; ++k) pre[k + 1] = pre[k] * powed[k];
  for (std::size_t k = n; k-- > 0;) suf[k] = suf[k + 1] * powed[k];

  SegmentCharacteristic out;
  out.g = Poly();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i) continue;
    out.g = out.g + (pre[k] * suf[k + 1]) * rat_of(net.power(k));
  }
  if (net.noise != 0.0) out.g = out.g + pre[n] * rat_of(net.noise);
  out.h = -(pre[i] * suf[i + 1]) * rat_of(net.power(i));
  return out;
}

SegmentCharacteristic segment_characteristic(const Network& net, std::size_t i, const Point& p1,
                                             const Point& p2) {
  if (p1 == p2) throw PolyError("degenerate segment: p1 == p2");
  std::vector<Poly> d2;
  d2.reserve(net.size());
  for (std::size_t k = 0; k < net.size(); ++k) d2.push_back(dist2_on_segment(p1, p2, net.pos(k)));
  return build(net, i, d2);
}

Poly restrict_characteristic(const Network& net, std::size_t i, const Point& p1, const Point& p2,
                             std::optional<Rational> beta_override) {
  const SegmentCharacteristic sc = segment_characteristic(net, i, p1, p2);
  return sc.at(beta_override.value_or(rat_of(net.beta)));
}

Poly line_characteristic(const Network& net, std::size_t i, std::optional<Rational> beta_override) {
  if (net.dim != 1) throw ModelError("line characteristic requires dim = 1");
  std::vector<Poly> d2;
  d2.reserve(net.size());
  for (std::size_t k = 0; k < net.size(); ++k) d2.push_back(dist2_on_line(net.pos(k)[0]));
  const SegmentCharacteristic sc = build(net, i, d2);
  return sc.at(beta_override.value_or(rat_of(net.beta)));
}

}  // namespace sinr
