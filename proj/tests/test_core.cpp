#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sinr/core.hpp"
#include "sinr/rng.hpp"

using namespace sinr;

namespace {

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

Network random_net(SplitMix64& rng, double alpha, double power_hi, double noise) {
  Network net;
  net.dim = 2;
  net.alpha = alpha;
  net.beta = rng.uniform(1.0, 2.0);
  net.noise = noise;
  const int n = static_cast<int>(rng.range(2, 7));
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point p({rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)});
    bool ok = true;
    for (const auto& q : pts)
      if (dist(p, q) < 0.2) ok = false;
    if (ok) pts.push_back(p);
  }
  for (int i = 0; i < n; ++i)
    net.stations.push_back({"s" + std::to_string(i), pts[i], rng.uniform(1.0, power_hi)});
  return validate_network(std::move(net));
}

}  // namespace

TEST_CASE("energy") {
  const Network net = symmetric_pair();
  CHECK(energy(net, 0, Point({1.0, 0.0})) == doctest::Approx(1.0).epsilon(1e-15));

  Network big = symmetric_pair();
  big.stations[0].power = 4.0;
  CHECK(energy(big, 0, Point({2.0, 0.0})) == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(energy(net, 0, Point({0.0, 0.0})), ModelError);
}

TEST_CASE("interference") {
  const Network net = symmetric_pair();
  CHECK(interference(net, 0, Point({1.0, 0.0})) == doctest::Approx(1.0).epsilon(1e-15));
  // near s1, only s1's energy remains when s1 is excluded in a 2-station net
  CHECK(interference(net, 1, Point({0.5, 0.0})) ==
        doctest::Approx(energy(net, 0, Point({0.5, 0.0}))).epsilon(1e-15));

  Network three;
  three.dim = 2;
  three.alpha = 2.0;
  three.beta = 1.0;
  three.noise = 0.0;
  three.stations.push_back({"a", Point({1.0, 0.0}), 1.0});
  three.stations.push_back({"b", Point({-1.0, 0.0}), 1.0});
  three.stations.push_back({"c", Point({0.0, 1.0}), 1.0});
  three = validate_network(std::move(three));
  CHECK(interference(three, 2, Point({0.0, 0.0})) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(interference(net, 0, Point({2.0, 0.0})), ModelError);
}

TEST_CASE("sinr values on the symmetric pair") {
  const Network net = symmetric_pair();
  CHECK(sinr::sinr(net, 0, Point({1.0, 0.0})) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sinr::sinr(net, 0, Point({0.5, 0.0})) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK_THROWS_AS(sinr::sinr(net, 0, Point({2.0, 0.0})), ModelError);
  CHECK(sinr::sinr(net, 0, Point({0.5, 0.0})) > 0.0);
}

TEST_CASE("sinr_reciprocal") {
  const Network net = symmetric_pair();
  CHECK(sinr_reciprocal(net, 0, Point({1.0, 0.0})) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sinr_reciprocal(net, 0, Point({0.5, 0.0})) ==
        doctest::Approx(1.0 / 9.0).epsilon(1e-14));
  CHECK_THROWS_AS(sinr_reciprocal(net, 0, Point({0.0, 0.0})), ModelError);
}

TEST_CASE("sinr times reciprocal is one") {
  SplitMix64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const Network net = random_net(rng, t % 2 ? 2.0 : 4.0, 5.0, rng.uniform(0.0, 0.5));
    const Point p({rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)});
    bool at = false;
    for (std::size_t j = 0; j < net.size(); ++j)
      if (net.pos(j) == p) at = true;
    if (at) continue;
    const double prod = sinr::sinr(net, 0, p) * sinr_reciprocal(net, 0, p);
    CHECK(std::abs(prod - 1.0) <= 1e-14);
  }
}

TEST_CASE("is_heard") {
  const Network net = symmetric_pair();
  CHECK(is_heard(net, 0, Point({0.0, 0.0})));        // own position
  CHECK_FALSE(is_heard(net, 0, Point({2.0, 0.0})));  // interferer's position
  CHECK(is_heard(net, 0, Point({1.0, 0.0})));        // boundary counts (>=)
  CHECK_FALSE(is_heard(net, 0, Point({1.1, 0.0})));
}

TEST_CASE("heard_station") {
  const Network net = symmetric_pair();
  const ReceptionTag near0 = heard_station(net, Point({0.2, 0.0}));
  REQUIRE_FALSE(near0.silent());
  CHECK(*near0.station == 0);

  // both stations sit exactly at threshold on the bisector: lower index wins
  const ReceptionTag tie = heard_station(net, Point({1.0, 0.0}));
  REQUIRE_FALSE(tie.silent());
  CHECK(*tie.station == 0);

  const Network noisy = symmetric_pair(1.0, 0.5);
  CHECK(heard_station(noisy, Point({50.0, 50.0})).silent());

  // station positions map to their own zones
  CHECK(*heard_station(net, Point({2.0, 0.0})).station == 1);
}

TEST_CASE("heard_station below beta = 1: overlapping zones flagged") {
  Network net = symmetric_pair();
  net.beta = 0.5;
  net = validate_network(std::move(net));
  CHECK(net.zones_may_overlap);
  // both stations clear the threshold at (0.9, 0); the max-SINR one wins
  const ReceptionTag tag = heard_station(net, Point({0.9, 0.0}));
  REQUIRE_FALSE(tag.silent());
  CHECK(*tag.station == 0);
  CHECK_FALSE(tag.unique);
}

TEST_CASE("weighted_voronoi_owner") {
  const Network equal = symmetric_pair();
  CHECK(weighted_voronoi_owner(equal, Point({0.4, 0.2})) == 0);
  CHECK(weighted_voronoi_owner(equal, Point({1.7, -0.3})) == 1);

  Network uneven = symmetric_pair();
  uneven.stations[0].power = 4.0;
  CHECK(weighted_voronoi_owner(uneven, Point({1.5, 0.0})) == 1);  // 2/1.5 < 1/0.5
  CHECK(weighted_voronoi_owner(uneven, Point({0.0, 0.0})) == 0);
}

TEST_CASE("zone disjointness for beta >= 1") {
  SplitMix64 rng(31);
  int points = 0;
  while (points < 10000) {
    const Network net = random_net(rng, 2.0, 6.0, rng.uniform(0.0, 0.3));
    for (int t = 0; t < 200; ++t, ++points) {
      const Point p({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)});
      bool at = false;
      for (std::size_t j = 0; j < net.size(); ++j)
        if (net.pos(j) == p) at = true;
      if (at) continue;
      int heard = 0;
      for (std::size_t i = 0; i < net.size(); ++i)
        if (sinr::sinr(net, i, p) >= net.beta) ++heard;
      CHECK(heard <= 1);
    }
  }
}

TEST_CASE("reception implies weighted Voronoi ownership") {
  SplitMix64 rng(37);
  int checked = 0;
  while (checked < 2000) {
    const Network net = random_net(rng, 2.0, 6.0, 0.05);
    for (int t = 0; t < 100; ++t) {
      const std::size_t i = static_cast<std::size_t>(rng.range(0, net.size() - 1));
      Point p = net.pos(i);
      p.coords[0] += rng.uniform(-1.0, 1.0);
      p.coords[1] += rng.uniform(-1.0, 1.0);
      bool at = false;
      for (std::size_t j = 0; j < net.size(); ++j)
        if (net.pos(j) == p) at = true;
      if (at) continue;
      if (sinr::sinr(net, i, p) >= net.beta) {
        CHECK(weighted_voronoi_owner(net, p) == i);
        ++checked;
      }
    }
  }
}

TEST_CASE("alpha -> infinity reception stays in the Voronoi cell") {
  SplitMix64 rng(41);
  int checked = 0;
  while (checked < 1000) {
    const Network net = random_net(rng, 64.0, 4.0, 0.01);
    for (int t = 0; t < 100; ++t) {
      const std::size_t i = static_cast<std::size_t>(rng.range(0, net.size() - 1));
      Point p = net.pos(i);
      p.coords[0] += rng.uniform(-0.5, 0.5);
      p.coords[1] += rng.uniform(-0.5, 0.5);
      bool at = false;
      for (std::size_t j = 0; j < net.size(); ++j)
        if (net.pos(j) == p) at = true;
      if (at) continue;
      if (sinr::sinr(net, i, p) >= net.beta) {
        CHECK(voronoi_owner(net, p) == i);
        ++checked;
      }
    }
  }
}
