#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sinr/core.hpp"
#include "sinr/rng.hpp"

using namespace sinr;

namespace {

Network symmetric_pair() {
  Network net;
  net.dim = 2;
  net.alpha = 2.0;
  net.beta = 1.0;
  net.noise = 0.0;
  net.stations.push_back({"s0", Point({0.0, 0.0}), 1.0});
  net.stations.push_back({"s1", Point({2.0, 0.0}), 1.0});
  return net;
}

Network random_net(SplitMix64& rng, double alpha) {
  Network net;
  net.dim = 2;
  net.alpha = alpha;
  net.beta = rng.uniform(1.0, 2.0);
  net.noise = rng.uniform(0.0, 1.0);
  const int n = static_cast<int>(rng.range(2, 6));
  for (int i = 0; i < n; ++i)
    net.stations.push_back({"s" + std::to_string(i),
                            Point({rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)}),
                            rng.uniform(0.5, 5.0)});
  return validate_network(std::move(net));
}

}  // namespace

TEST_CASE("validate_network accepts the canonical pair") {
  const Network net = validate_network(symmetric_pair());
  CHECK(net.size() == 2);
  CHECK_FALSE(net.zones_may_overlap);
}

TEST_CASE("validate_network rejects invalid inputs") {
  Network one;
  one.dim = 1;
  one.stations.push_back({"s0", Point({0.0}), 1.0});
  CHECK_THROWS_WITH_AS(validate_network(one), "n >= 2 required", ModelError);

  Network zero_power = symmetric_pair();
  zero_power.stations[1].power = 0.0;
  CHECK_THROWS_AS(validate_network(zero_power), ModelError);

  Network coincident = symmetric_pair();
  coincident.stations[1].pos = coincident.stations[0].pos;
  coincident.stations[1].power = 2.0;
  CHECK_THROWS_AS(validate_network(coincident), ModelError);

  Network mismatched = symmetric_pair();
  mismatched.stations[1].pos = Point({1.0});
  CHECK_THROWS_AS(validate_network(mismatched), ModelError);

  Network negative_noise = symmetric_pair();
  negative_noise.noise = -0.5;
  CHECK_THROWS_AS(validate_network(negative_noise), ModelError);

  Network overlap = symmetric_pair();
  overlap.beta = 0.5;
  CHECK(validate_network(overlap).zones_may_overlap);
}

TEST_CASE("identity transform is a no-op") {
  const Network net = validate_network(symmetric_pair());
  const Network same = transform_network(net, SimilarityTransform::identity(2));
  CHECK(same.noise == net.noise);
  for (std::size_t i = 0; i < net.size(); ++i) CHECK(same.pos(i) == net.pos(i));
}

TEST_CASE("translation keeps SINR unchanged") {
  const Network net = validate_network(symmetric_pair());
  const SimilarityTransform f =
      SimilarityTransform::rotation2d(0.0, Point({5.0, 0.0}), 1.0);
  const Network moved = transform_network(net, f);
  SplitMix64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Point p({rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)});
    if (p == net.pos(0) || p == net.pos(1)) continue;
    const double a = sinr::sinr(net, 0, p);
    const double b = sinr::sinr(moved, 0, f.apply(p));
    CHECK(std::abs(a - b) / a <= 1e-12);
  }
}

TEST_CASE("scaling divides noise by sigma^alpha and keeps SINR") {
  Network net = validate_network(symmetric_pair());
  net.noise = 1.0;
  const SimilarityTransform f =
      SimilarityTransform::rotation2d(0.3, Point({1.0, -2.0}), 2.0);
  const Network mapped = transform_network(net, f);
  CHECK(mapped.noise == doctest::Approx(0.25).epsilon(1e-15));

  SplitMix64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const Point p({rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)});
    bool near = false;
    for (std::size_t j = 0; j < net.size(); ++j)
      if (dist(net.pos(j), p) < 1e-6) near = true;
    if (near) continue;
    const double a = sinr::sinr(net, 0, p);  // direct evaluation oracle
    const double b = sinr::sinr(mapped, 0, f.apply(p));
    CHECK(std::abs(a - b) / a <= 1e-12);
  }
}

TEST_CASE("non-orthogonal rotation is rejected") {
  const Network net = validate_network(symmetric_pair());
  SimilarityTransform f = SimilarityTransform::identity(2);
  f.rotation = {1.0, 0.5, 0.0, 1.0};
  CHECK_THROWS_AS(transform_network(net, f), ModelError);
}

TEST_CASE("transform composed with its inverse is the identity") {
  SplitMix64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const Network net = random_net(rng, 2.0);
    const SimilarityTransform f = SimilarityTransform::rotation2d(
        rng.uniform(0.0, 2.0 * M_PI), Point({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}),
        rng.uniform(0.5, 2.0));
    const Network back = transform_network(transform_network(net, f), f.inverse());
    for (std::size_t i = 0; i < net.size(); ++i)
      for (std::size_t k = 0; k < 2; ++k)
        CHECK(std::abs(back.pos(i)[k] - net.pos(i)[k]) <= 1e-12);
  }
}

TEST_CASE("SINR similarity invariance across alpha") {
  SplitMix64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const double alpha = (t % 3 == 0) ? 2.0 : (t % 3 == 1 ? 3.0 : 4.0);
    const Network net = random_net(rng, alpha);
    const SimilarityTransform f = SimilarityTransform::rotation2d(
        rng.uniform(0.0, 2.0 * M_PI), Point({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}),
        rng.uniform(0.5, 2.0));
    const Network mapped = transform_network(net, f);
    Point p({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)});
    bool near = false;
    for (std::size_t j = 0; j < net.size(); ++j)
      if (dist(net.pos(j), p) < 1e-3) near = true;
    if (near) continue;
    const double a = sinr::sinr(net, 0, p);
    const double b = sinr::sinr(mapped, 0, f.apply(p));
    CHECK(std::abs(a - b) / a <= 1e-12);
  }
}

TEST_CASE("min_station_distance") {
  Network line;
  line.dim = 1;
  line.stations.push_back({"a", Point({0.0}), 1.0});
  line.stations.push_back({"b", Point({2.0}), 1.0});
  const Network two = validate_network(line);
  CHECK(min_station_distance(two, 0) == 2.0);

  line.stations.push_back({"c", Point({1.0}), 1.0});
  line.stations.push_back({"d", Point({5.0}), 1.0});
  const Network four = validate_network(line);
  CHECK(min_station_distance(four, 0) == 1.0);
  CHECK_THROWS_AS(min_station_distance(four, 9), ModelError);
}

TEST_CASE("even_alpha_half") {
  CHECK(even_alpha_half(2.0) == 1);
  CHECK(even_alpha_half(4.0) == 2);
  CHECK_FALSE(even_alpha_half(3.0).has_value());
  CHECK_FALSE(even_alpha_half(2.5).has_value());
  CHECK_FALSE(even_alpha_half(-2.0).has_value());
}

TEST_CASE("network JSON round trip") {
  SplitMix64 rng(5);
  const Network net = random_net(rng, 2.0);
  const nlohmann::json j = network_to_json(net);
  const Network back = network_from_json(j);
  CHECK(back.dim == net.dim);
  CHECK(back.alpha == net.alpha);
  CHECK(back.beta == net.beta);
  CHECK(back.noise == net.noise);
  REQUIRE(back.size() == net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    CHECK(back.stations[i].id == net.stations[i].id);
    CHECK(back.pos(i) == net.pos(i));
    CHECK(back.power(i) == net.power(i));
  }
}
