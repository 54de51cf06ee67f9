#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sinr/diagram1d.hpp"
#include "sinr/verify.hpp"

using namespace sinr;

namespace {

Network line_net(std::vector<double> xs, std::vector<double> powers, double beta, double noise,
                 double alpha = 2.0) {
  Network net;
  net.dim = 1;
  net.alpha = alpha;
  net.beta = beta;
  net.noise = noise;
  for (std::size_t i = 0; i < xs.size(); ++i)
    net.stations.push_back({"s" + std::to_string(i), Point({xs[i]}), powers[i]});
  return validate_network(std::move(net));
}

}  // namespace

TEST_CASE("symmetric pair: zone of s0 is (-inf, 1]") {
  const Network net = line_net({0.0, 2.0}, {1.0, 1.0}, 1.0, 0.0);
  const IntervalSet set = reception_intervals(net, 0);
  REQUIRE(set.count() == 1);
  CHECK_FALSE(set.intervals[0].lo.has_value());
  REQUIRE(set.intervals[0].hi.has_value());
  CHECK(set.intervals[0].hi->compare(Rational(1)) == 0);
  CHECK(set.intervals[0].hi_closed);
  CHECK(set.contains(Rational(-100)));
  CHECK(set.contains(Rational(1)));
  CHECK_FALSE(set.contains(Rational(101, 100)));
}

TEST_CASE("beta = 4 shrinks the zone to [-2, 2/3]") {
  // 3x^2 + 4x - 4 <= 0 has roots -2 and 2/3
  const Network net = line_net({0.0, 2.0}, {1.0, 1.0}, 4.0, 0.0);
  const IntervalSet set = reception_intervals(net, 0);
  REQUIRE(set.count() == 1);
  REQUIRE(set.intervals[0].lo.has_value());
  REQUIRE(set.intervals[0].hi.has_value());
  CHECK(set.intervals[0].lo->compare(Rational(-2)) == 0);
  CHECK(set.intervals[0].hi->compare(Rational(2, 3)) == 0);
  CHECK(set.intervals[0].lo_approx() == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(set.intervals[0].hi_approx() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(set.contains(Rational(-2)));
  CHECK_FALSE(set.contains(Rational(-201, 100)));
  CHECK(set.contains(Rational(2, 3)));
  CHECK_FALSE(set.contains(Rational(67, 100)));
}

TEST_CASE("noise bounds every zone") {
  const Network net = line_net({0.0, 2.0, 5.0}, {3.0, 1.0, 2.0}, 1.0, 0.1);
  for (std::size_t i = 0; i < net.size(); ++i) {
    const IntervalSet set = reception_intervals(net, i);
    for (const auto& iv : set.intervals) {
      CHECK(iv.lo.has_value());
      CHECK(iv.hi.has_value());
    }
  }
}

TEST_CASE("preconditions") {
  Network net = line_net({0.0, 2.0}, {1.0, 1.0}, 1.0, 0.0);
  net.dim = 1;
  Network beta_low = net;
  beta_low.beta = 0.5;
  CHECK_THROWS_AS(reception_intervals(beta_low, 0), ModelError);
  Network odd = net;
  odd.alpha = 3.0;
  CHECK_THROWS_AS(reception_intervals(odd, 0), ModelError);
  Network flat;
  flat.dim = 2;
  flat.alpha = 2.0;
  flat.beta = 1.0;
  flat.stations.push_back({"a", Point({0.0, 0.0}), 1.0});
  flat.stations.push_back({"b", Point({1.0, 0.0}), 1.0});
  flat = validate_network(std::move(flat));
  CHECK_THROWS_AS(reception_intervals(flat, 0), ModelError);
}

TEST_CASE("count_cells_1d on the symmetric pair") {
  const Network net = line_net({0.0, 2.0}, {1.0, 1.0}, 1.0, 0.0);
  const CellCounts counts = count_cells_1d(net);
  CHECK(counts.total == 2);
  CHECK(counts.per_station[0] == 1);
  CHECK(counts.per_station[1] == 1);
  CHECK(counts.total <= 2 * net.size() - 1);
}

TEST_CASE("C2 pair splits into two cells") {
  // tau = beta * psi1 / psi0 = 0.625 < 1: Z_0 is a disk complement
  const Network net = line_net({0.0, 2.0}, {2.0, 1.0}, 1.25, 0.0);
  CHECK(reception_intervals(net, 0).count() == 2);
  CHECK(reception_intervals(net, 1).count() == 1);
}

TEST_CASE("random instance respects the 2n-1 bound") {
  SplitMix64 rng(55);
  Network net;
  net.dim = 1;
  net.alpha = 2.0;
  net.beta = 1.5;
  net.noise = 0.1;
  for (int i = 0; i < 5; ++i)
    net.stations.push_back(
        {"s" + std::to_string(i), Point({rng.uniform(-8.0, 8.0)}), rng.uniform(1.0, 10.0)});
  net = validate_network(std::move(net));
  CHECK(count_cells_1d(net).total <= 9);
}

TEST_CASE("weakest station has one cell") {
  const Network net = line_net({-4.0, -1.0, 1.5, 6.0}, {5.0, 1.0, 3.0, 2.0}, 1.2, 0.05);
  const CellCounts counts = count_cells_1d(net);
  CHECK(counts.per_station[1] == 1);
}

TEST_CASE("nfh_check_1d passes on real networks") {
  const Network net = line_net({0.0, 1.0, 2.5, 4.0, -3.0}, {4.0, 1.0, 2.0, 1.5, 3.0}, 1.0, 0.0);
  for (std::size_t i = 0; i < net.size(); ++i) CHECK(nfh_check_1d(net, i).pass);
}

TEST_CASE("gap checker semantics") {
  // two cells [0,1] and [2,3]
  IntervalSet zone;
  Interval1D a;
  a.lo = AlgebraicReal::exact(Rational(0));
  a.hi = AlgebraicReal::exact(Rational(1));
  Interval1D b;
  b.lo = AlgebraicReal::exact(Rational(2));
  b.hi = AlgebraicReal::exact(Rational(3));
  zone.intervals = {a, b};

  // a station inside the open gap satisfies NFH
  CHECK(nfh_gaps_check(zone, {Rational(3, 2)}).pass);
  // no station in (1,2): violation, witnessing the gap
  const NfhResult bad = nfh_gaps_check(zone, {Rational(5)});
  CHECK_FALSE(bad.pass);
  CHECK(bad.gap_lo == doctest::Approx(1.0));
  CHECK(bad.gap_hi == doctest::Approx(2.0));
  // stations exactly on the cell boundary do not fill the hole
  CHECK_FALSE(nfh_gaps_check(zone, {Rational(1), Rational(2)}).pass);
  // single cell: vacuous pass
  IntervalSet single;
  single.intervals = {a};
  CHECK(nfh_gaps_check(single, {}).pass);
}

TEST_CASE("interval membership agrees with the exact SINR sign") {
  SplitMix64 rng(77);
  for (int t = 0; t < 40; ++t) {
    const Network net = random_network_1d(rng);
    for (std::size_t i = 0; i < net.size(); ++i) {
      const IntervalSet set = reception_intervals(net, i);
      for (int s = 0; s < 100; ++s) {
        const Rational x(static_cast<long>(rng.range(-12000, 12000)), 1000);
        bool at_station = false;
        for (std::size_t j = 0; j < net.size(); ++j)
          if (rat_of(net.pos(j)[0]) == x) at_station = true;
        if (at_station) continue;
        CHECK(set.contains(x) == zone_member_exact(net, i, x));
      }
    }
  }
}

TEST_CASE("battery: bound, NFH, weakest on seeded instances") {
  const Battery1D b = run_1d_battery(123, 60);
  CHECK(b.bound_pass);
  CHECK(b.nfh_pass);
  CHECK(b.weakest_pass);
}

TEST_CASE("intervals serialize to JSON") {
  const Network net = line_net({0.0, 2.0}, {1.0, 1.0}, 1.0, 0.0);
  const nlohmann::json j = intervals_to_json(reception_intervals(net, 0));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["lo"] == "-inf");
  CHECK(j[0]["hi"].get<double>() == doctest::Approx(1.0));
  CHECK(j[0]["hi_closed"].get<bool>());
}
