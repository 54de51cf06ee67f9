#pragma once

#include <memory>
#include <vector>

#include "sinr/rational.hpp"

namespace sinr {

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Univariate polynomial with exact rational coefficients, ascending degree,
// trailing zeros stripped. The zero polynomial has an empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly constant(const Rational& v) { return Poly({v}); }
  static Poly x() { return Poly({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Rational& s) const;

  Poly derivative() const;
  Poly pow(unsigned e) const;

  Rational eval(const Rational& x) const;  // Horner
  int sign_at(const Rational& x) const { return sign(eval(x)); }

  // Euclidean division; divisor must be nonzero.
  struct DivMod;
  DivMod divmod(const Poly& d) const;

  // Scale by a positive rational so coefficients become coprime integers.
  // Preserves signs everywhere, hence roots and Sturm variations.
  Poly primitive() const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }

 private:
  void normalize();
  std::vector<Rational> c_;
};

struct Poly::DivMod {
  Poly quot, rem;
};

// gcd made monic; gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

// f / gcd(f, f'): same distinct roots, all simple.
Poly square_free_part(const Poly& f);

// Sturm chain of the square-free part of f. count(a, b) returns the exact
// number of distinct real roots of f in the half-open interval (a, b].
class SturmChain {
 public:
  explicit SturmChain(const Poly& f);

  const Poly& squarefree() const { return seq_.front(); }
  int variations_at(const Rational& x) const;
  int variations_at_infinity(int dir) const;  // dir = +1 or -1

  int count(const Rational& a, const Rational& b) const;
  int count_all() const;

  // Cauchy bound: every real root lies in [-B, B].
  Rational root_bound() const;

 private:
  std::vector<Poly> seq_;
};

int sturm_count(const Poly& f, const Rational& a, const Rational& b);

// A real root known exactly (rational) or by a refinable isolating interval
// (lo, hi] of a shared square-free Sturm chain.
class AlgebraicReal {
 public:
  static AlgebraicReal exact(Rational v);
  AlgebraicReal(std::shared_ptr<const SturmChain> chain, Rational lo, Rational hi);
  // variations_lo: the chain's sign-variation count at lo, when already known
  AlgebraicReal(std::shared_ptr<const SturmChain> chain, Rational lo, Rational hi,
                int variations_lo);

  bool is_exact() const { return exact_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  // -1 / 0 / +1 as this root is <, ==, > q. Always decides.
  int compare(const Rational& q) const;

  // One bisection step; no-op when exact.
  void refine() const;

  // Midpoint after refining to relative width <= 2^-53.
  double approx() const;

 private:
  std::shared_ptr<const SturmChain> chain_;
  mutable Rational lo_, hi_;
  mutable int vlo_ = -1;  // cached variation count at lo (-1 = unknown)
  mutable bool exact_ = false;
};

// Exact rational strictly between two consecutive roots (a < b required).
Rational rational_between(const AlgebraicReal& a, const AlgebraicReal& b);

struct RootIsolation {
  std::shared_ptr<const SturmChain> chain;  // of the square-free part
  std::vector<AlgebraicReal> roots;         // ascending
};

// Distinct real roots of f in (a, b]; throws on the zero polynomial.
RootIsolation isolate_roots(const Poly& f, const Rational& a, const Rational& b);

// Distinct real roots of f over the whole line (isolated inside the Cauchy bound).
RootIsolation isolate_all_roots(const Poly& f);

}  // namespace sinr
