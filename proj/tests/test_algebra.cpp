#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sinr/charpoly.hpp"
#include "sinr/rng.hpp"
#include "sinr/verify.hpp"

using namespace sinr;

namespace {

Poly from_ints(std::initializer_list<long> asc) {
  std::vector<Rational> c;
  for (long v : asc) c.emplace_back(v);
  return Poly(std::move(c));
}

Network symmetric_pair(double beta = 1.0, double noise = 0.0) {
  Network net;
  net.dim = 2;
  net.alpha = 2.0;
  net.beta = beta;
  net.noise = noise;
  net.stations.push_back({"s0", Point({0.0, 0.0}), 1.0});
  net.stations.push_back({"s1", Point({2.0, 0.0}), 1.0});
  return validate_network(std::move(net));
}

// sign of beta*(I+N) - E at p(t), computed by exact rational arithmetic
// straight from the SINR definition (independent of the polynomial route)
int exact_reception_sign(const Network& net, std::size_t i, const Point& p1, const Point& p2,
                         const Rational& t) {
  const int m = *even_alpha_half(net.alpha);
  std::vector<Rational> pt(p1.dim());
  for (std::size_t k = 0; k < p1.dim(); ++k) {
    const Rational a = rat_of(p1[k]);
    const Rational b = rat_of(p2[k]);
    pt[k] = a + t * (b - a);
  }
  const auto dist2m = [&](const Point& s) {
    Rational acc(0);
    for (std::size_t k = 0; k < s.dim(); ++k) {
      const Rational d = pt[k] - rat_of(s[k]);
      acc += d * d;
    }
    return rat_pow(acc, static_cast<unsigned>(m));
  };
  Rational lhs = rat_of(net.noise);
  for (std::size_t j = 0; j < net.size(); ++j) {
    if (j == i) continue;
    lhs += rat_of(net.power(j)) / dist2m(net.pos(j));
  }
  lhs *= rat_of(net.beta);
  lhs -= rat_of(net.power(i)) / dist2m(net.pos(i));
  return sign(lhs);
}

}  // namespace

TEST_CASE("polynomial arithmetic and evaluation") {
  const Poly f = from_ints({-2, 0, 1});  // x^2 - 2
  CHECK(f.degree() == 2);
  CHECK(f.eval(Rational(1)) == Rational(-1));
  CHECK(Poly().eval(Rational(5)) == Rational(0));
  CHECK(Poly::x().eval(Rational(1, 3)) == Rational(1, 3));

  const Poly g = from_ints({1, 1});  // x + 1
  CHECK((f * g).degree() == 3);
  CHECK((f + g).eval(Rational(2)) == Rational(5));
  CHECK((f - f).is_zero());
  CHECK(f.derivative() == from_ints({0, 2}));

  // trailing zeros are stripped, zero polynomial is empty
  CHECK(Poly({Rational(1), Rational(0), Rational(0)}).degree() == 0);
  CHECK(Poly({Rational(0)}).is_zero());
}

TEST_CASE("division and gcd") {
  const Poly f = from_ints({-2, 0, 1});
  const Poly g = from_ints({1, 1});
  const auto dm = f.divmod(g);
  CHECK((dm.quot * g + dm.rem) == f);
  CHECK(dm.rem.degree() < g.degree());
  CHECK_THROWS_AS(f.divmod(Poly()), PolyError);

  const Poly p = from_ints({-1, 1});  // x - 1
  const Poly q = from_ints({-2, 1});  // x - 2
  const Poly prod = p * p * q;
  const Poly gcd = poly_gcd(prod, prod.derivative());
  CHECK(gcd.degree() == 1);  // the repeated factor
  CHECK(square_free_part(prod).degree() == 2);
}

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(from_ints({-2, 0, 1}), Rational(0), Rational(2)) == 1);    // x^2-2
  CHECK(sturm_count(from_ints({1, 0, 1}), Rational(-10), Rational(10)) == 0);  // x^2+1
  // (x-1)^2 (x-3): two distinct roots in (0,4]
  const Poly f = from_ints({-1, 1}) * from_ints({-1, 1}) * from_ints({-3, 1});
  CHECK(sturm_count(f, Rational(0), Rational(4)) == 2);
  CHECK_THROWS_AS(sturm_count(Poly(), Rational(0), Rational(1)), PolyError);
}

TEST_CASE("half-open counting convention (a,b]") {
  const Poly f = from_ints({0, 1});  // root at 0
  CHECK(sturm_count(f, Rational(-1), Rational(0)) == 1);
  CHECK(sturm_count(f, Rational(0), Rational(1)) == 0);
}

TEST_CASE("root isolation") {
  const RootIsolation iso = isolate_roots(from_ints({-2, 0, 1}), Rational(0), Rational(2));
  REQUIRE(iso.roots.size() == 1);
  CHECK(iso.roots[0].compare(Rational(141, 100)) > 0);
  CHECK(iso.roots[0].compare(Rational(142, 100)) < 0);
  CHECK(iso.roots[0].approx() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const RootIsolation two =
      isolate_roots(from_ints({-1, 1}) * from_ints({-2, 1}), Rational(0), Rational(3));
  REQUIRE(two.roots.size() == 2);
  CHECK(two.roots[0].compare(Rational(1)) == 0);  // exact rational root detected
  CHECK(two.roots[1].compare(Rational(2)) == 0);

  CHECK(isolate_roots(Poly::constant(Rational(5)), Rational(0), Rational(3)).roots.empty());
}

TEST_CASE("isolation over the whole line") {
  // roots at -3, 1/2, 7
  const Poly f = from_ints({3, 1}) * from_ints({-1, 2}) * from_ints({-7, 1});
  const RootIsolation iso = isolate_all_roots(f);
  REQUIRE(iso.roots.size() == 3);
  CHECK(iso.roots[0].compare(Rational(-3)) == 0);
  CHECK(iso.roots[1].compare(Rational(1, 2)) == 0);
  CHECK(iso.roots[2].compare(Rational(7)) == 0);
}

TEST_CASE("algebraic reals order against rationals") {
  SplitMix64 rng(42);
  for (int t = 0; t < 50; ++t) {
    // random cubic with distinct integer roots
    long r1 = rng.range(-20, 20), r2 = r1 + 1 + rng.range(0, 10), r3 = r2 + 1 + rng.range(0, 10);
    const Poly f = from_ints({-r1, 1}) * from_ints({-r2, 1}) * from_ints({-r3, 1});
    const RootIsolation iso = isolate_all_roots(f);
    REQUIRE(iso.roots.size() == 3);
    CHECK(iso.roots[0].compare(Rational(r1)) == 0);
    CHECK(iso.roots[1].compare(Rational(r2 - 1)) > 0);
    CHECK(iso.roots[1].compare(Rational(r2 + 1)) < 0);
    CHECK(rational_between(iso.roots[0], iso.roots[1]) > Rational(r1));
  }
}

TEST_CASE("restrict_characteristic on the symmetric pair") {
  const Network net = symmetric_pair();
  const Point a({0.0, 0.0}), b({2.0, 0.0});
  const Poly f = restrict_characteristic(net, 0, a, b);
  // reception boundary at the midpoint t = 1/2, F <= 0 left of it
  CHECK(f.eval(Rational(1, 2)) == Rational(0));
  CHECK(f.sign_at(Rational(1, 4)) < 0);
  CHECK(f.sign_at(Rational(3, 4)) > 0);
  CHECK(sturm_count(f, Rational(0), Rational(1)) == 1);

  // dense scan oracle: the sign changes exactly once on (0,1)
  int changes = 0;
  int prev = f.sign_at(Rational(1, 1000));
  for (int k = 2; k < 1000; ++k) {
    const int s = f.sign_at(Rational(k, 1000));
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  CHECK(changes == 1);
}

TEST_CASE("characteristic degree bounds") {
  const Network no_noise = symmetric_pair(1.0, 0.0);
  const Point a({-1.0, 0.5}), b({3.0, -0.5});
  CHECK(restrict_characteristic(no_noise, 0, a, b).degree() <= 2);
  const Network with_noise = symmetric_pair(1.0, 0.25);
  CHECK(restrict_characteristic(with_noise, 0, a, b).degree() <= 4);
}

TEST_CASE("characteristic rejects bad inputs") {
  Network net = symmetric_pair();
  const Point a({0.0, 0.0}), b({2.0, 0.0});
  CHECK_THROWS_AS(restrict_characteristic(net, 0, a, a), PolyError);
  net.alpha = 3.0;
  CHECK_THROWS_AS(restrict_characteristic(net, 0, a, b), PolyError);
  net.alpha = 2.5;
  CHECK_THROWS_AS(restrict_characteristic(net, 0, a, b), PolyError);
}

TEST_CASE("characteristic sign agrees with exact rational SINR") {
  SplitMix64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    Network net;
    net.dim = 2;
    net.alpha = (t % 2 == 0) ? 2.0 : 4.0;
    net.beta = rng.uniform(1.0, 3.0);
    net.noise = (t % 3 == 0) ? 0.0 : rng.uniform(0.0, 0.5);
    const int n = static_cast<int>(rng.range(2, 5));
    for (int i = 0; i < n; ++i)
      net.stations.push_back({"s" + std::to_string(i),
                              Point({rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)}),
                              rng.uniform(0.5, 4.0)});
    net = validate_network(std::move(net));
    const Point p1({rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)});
    const Point p2({rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)});
    if (p1 == p2) continue;
    const std::size_t i = static_cast<std::size_t>(rng.range(0, n - 1));
    const Poly f = restrict_characteristic(net, i, p1, p2);
    const Rational t_eval(static_cast<long>(rng.range(0, 1000)), 1000);
    CHECK(f.sign_at(t_eval) == exact_reception_sign(net, i, p1, p2, t_eval));
  }
}

TEST_CASE("square-free parts have no repeated roots") {
  SplitMix64 rng(99);
  for (int t = 0; t < 60; ++t) {
    const int deg = static_cast<int>(rng.range(1, 9));
    std::vector<Rational> c(deg + 1);
    for (auto& v : c) v = Rational(static_cast<long>(rng.range(-50, 50)));
    if (c.back() == 0) c.back() = 1;
    Poly f(std::move(c));
    if (t % 3 == 0) f = f * f;  // force repetition
    const Poly g = square_free_part(f);
    CHECK(poly_gcd(g, g.derivative()).degree() == 0);
  }
}

TEST_CASE("sturm_count matches the fine-scan oracle (sample batch)") {
  const SuiteResult res = verify_sturm_oracle(7, 120);
  CHECK(res.pass);
}
