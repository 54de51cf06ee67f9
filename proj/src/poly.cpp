#include "sinr/poly.hpp"

#include <algorithm>

namespace sinr {

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  std::vector<Rational> out(c_);
  for (auto& v : out) v = -v;
  return Poly(std::move(out));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> out(c_);
  for (auto& v : out) v *= s;
  return Poly(std::move(out));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly out = Poly::constant(Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

Poly::DivMod Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw PolyError("division by zero polynomial");
  std::vector<Rational> rem(c_);
  const int dd = d.degree();
  const Rational& lead = d.leading();
  if (static_cast<int>(rem.size()) - 1 < dd) return {Poly(), Poly(std::move(rem))};
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (rem[k] == 0) continue;
    const Rational q = rem[k] / lead;
    quot[k - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d.c_[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm(1), num_gcd(0);
  for (const auto& v : c_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  std::vector<Rational> out(c_);
  for (auto& v : out) {
    v *= den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
  }
  if (num_gcd > 1)
    for (auto& v : out) v /= num_gcd;
  for (auto& v : out) v.canonicalize();
  return Poly(std::move(out));
}

Poly poly_gcd(Poly a, Poly b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    Poly r = a.divmod(b).rem.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

Poly square_free_part(const Poly& f) {
  if (f.is_zero()) throw PolyError("square-free part of the zero polynomial");
  if (f.degree() == 0) return f;
  const Poly g = poly_gcd(f, f.derivative());
  if (g.degree() == 0) return f;
  Poly::DivMod dm = f.divmod(g);
  return dm.quot;
}

static std::vector<Poly> euclid_chain(const Poly& f) {
  std::vector<Poly> seq;
  seq.push_back(f.primitive());
  if (seq.front().degree() >= 1) {
    seq.push_back(seq.front().derivative().primitive());
    while (seq.back().degree() >= 1) {
      Poly r = -(seq[seq.size() - 2].divmod(seq.back()).rem);
      if (r.is_zero()) break;
      seq.push_back(r.primitive());
    }
  }
  return seq;
}

SturmChain::SturmChain(const Poly& f) {
  if (f.is_zero()) throw PolyError("Sturm chain of the zero polynomial");
  seq_ = euclid_chain(f);
  // the chain bottoms out at (a multiple of) gcd(f, f'); a non-constant one
  // means repeated roots, and the variation count is only reliable on the
  // square-free quotient
  if (seq_.size() >= 2 && seq_.back().degree() >= 1) {
    const Poly monic_gcd = seq_.back() * (Rational(1) / seq_.back().leading());
    seq_ = euclid_chain(f.divmod(monic_gcd).quot);
  }
}

static int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(p.sign_at(x));
  return count_variations(signs);
}

int SturmChain::variations_at_infinity(int dir) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) {
    if (p.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sign(p.leading());
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw PolyError("sturm count requires a < b");
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_all() const {
  return variations_at_infinity(-1) - variations_at_infinity(+1);
}

Rational SturmChain::root_bound() const {
  const Poly& g = seq_.front();
  if (g.degree() < 1) return Rational(1);
  Rational bound(0);
  const Rational lead = rat_abs(g.leading());
  for (int k = 0; k < g.degree(); ++k) bound = std::max(bound, Rational(rat_abs(g.coeff(k)) / lead));
  return bound + 1;
}

int sturm_count(const Poly& f, const Rational& a, const Rational& b) {
  if (f.is_zero()) throw PolyError("sturm count of the zero polynomial");
  return SturmChain(f).count(a, b);
}

AlgebraicReal AlgebraicReal::exact(Rational v) {
  AlgebraicReal r(nullptr, v, v);
  r.exact_ = true;
  return r;
}

AlgebraicReal::AlgebraicReal(std::shared_ptr<const SturmChain> chain, Rational lo, Rational hi)
    : chain_(std::move(chain)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ == hi_) exact_ = true;
}

AlgebraicReal::AlgebraicReal(std::shared_ptr<const SturmChain> chain, Rational lo, Rational hi,
                             int variations_lo)
    : chain_(std::move(chain)), lo_(std::move(lo)), hi_(std::move(hi)), vlo_(variations_lo) {
  if (lo_ == hi_) exact_ = true;
}

// the isolating invariant: exactly one root in (lo, hi], so the variation
// count drops by one across the interval; one chain evaluation per step
void AlgebraicReal::refine() const {
  if (exact_) return;
  const Rational m = (lo_ + hi_) / 2;
  if (chain_->squarefree().sign_at(m) == 0) {
    lo_ = hi_ = m;
    exact_ = true;
    return;
  }
  if (vlo_ < 0) vlo_ = chain_->variations_at(lo_);
  const int vm = chain_->variations_at(m);
  if (vm == vlo_)
    lo_ = m;  // root still right of m
  else
    hi_ = m;
}

int AlgebraicReal::compare(const Rational& q) const {
  if (exact_) return lo_ < q ? -1 : (lo_ == q ? 0 : 1);
  if (q <= lo_) return 1;   // root > lo >= q
  if (q > hi_) return -1;   // root <= hi < q
  if (chain_->squarefree().sign_at(q) == 0) {
    lo_ = hi_ = q;
    exact_ = true;
    return 0;
  }
  if (vlo_ < 0) vlo_ = chain_->variations_at(lo_);
  return chain_->variations_at(q) == vlo_ ? 1 : -1;
}

double AlgebraicReal::approx() const {
  if (exact_) return dbl(lo_);
  const Rational eps = Rational(1) / rat_pow(Rational(2), 53);
  while (!exact_) {
    const Rational width = hi_ - lo_;
    const Rational scale = std::max(Rational(1), std::max(rat_abs(lo_), rat_abs(hi_)));
    if (width <= eps * scale) break;
    refine();
  }
  return dbl((lo_ + hi_) / 2);
}

Rational rational_between(const AlgebraicReal& a, const AlgebraicReal& b) {
  while (!(a.hi() < b.lo())) {
    if (a.is_exact() && b.is_exact()) break;
    a.refine();
    b.refine();
  }
  if (a.hi() < b.lo()) return (a.hi() + b.lo()) / 2;
  return (a.lo() + b.hi()) / 2;  // both exact: plain midpoint
}

// variation counts thread down the recursion: each split costs one
// evaluation of the chain, at the midpoint
static void isolate_rec(const std::shared_ptr<const SturmChain>& chain, const Rational& a,
                        const Rational& b, int va, int vb, std::vector<AlgebraicReal>& out) {
  const int count = va - vb;
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(chain, a, b, va);
    return;
  }
  const Rational m = (a + b) / 2;
  const int vm = chain->variations_at(m);
  isolate_rec(chain, a, m, va, vm, out);
  isolate_rec(chain, m, b, vm, vb, out);
}

RootIsolation isolate_roots(const Poly& f, const Rational& a, const Rational& b) {
  if (f.is_zero()) throw PolyError("root isolation of the zero polynomial");
  RootIsolation iso;
  iso.chain = std::make_shared<SturmChain>(f);
  if (iso.chain->squarefree().degree() >= 1 && a < b)
    isolate_rec(iso.chain, a, b, iso.chain->variations_at(a), iso.chain->variations_at(b),
                iso.roots);
  return iso;
}

RootIsolation isolate_all_roots(const Poly& f) {
  if (f.is_zero()) throw PolyError("root isolation of the zero polynomial");
  RootIsolation iso;
  iso.chain = std::make_shared<SturmChain>(f);
  if (iso.chain->squarefree().degree() >= 1) {
    const Rational b = iso.chain->root_bound();
    isolate_rec(iso.chain, -b, b, iso.chain->variations_at(-b), iso.chain->variations_at(b),
                iso.roots);
  }
  return iso;
}

}  // namespace sinr
