#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sinr {

// Exact arbitrary-precision rational. GMP carries the digits; everything
// built on top (polynomials, Sturm chains, root isolation) lives in poly.hpp.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

// binary64 -> exact dyadic rational (every finite double is one).
inline Rational rat_of(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rat_of: non-finite value");
  return Rational(x);
}

inline double dbl(const Rational& q) { return q.get_d(); }

inline Rational rat_pow(Rational base, unsigned exp) {
  Rational out(1);
  while (exp) {
    if (exp & 1u) out *= base;
    base *= base;
    exp >>= 1u;
  }
  return out;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline std::string rat_str(const Rational& q) { return q.get_str(); }

}  // namespace sinr
