#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace sinr {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  std::vector<double> coords;

  Point() = default;
  Point(std::initializer_list<double> c) : coords(c) {}
  explicit Point(std::vector<double> c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }
  double& operator[](std::size_t i) { return coords[i]; }
  double operator[](std::size_t i) const { return coords[i]; }
  bool operator==(const Point& o) const { return coords == o.coords; }
};

double dist2(const Point& a, const Point& b);
double dist(const Point& a, const Point& b);

struct Station {
  std::string id;
  Point pos;
  double power = 1.0;
};

// The tuple <d, S, Psi, N, beta, alpha>. `alpha` is the literal exponent of
// the power law Psi * dist^-alpha (the 2-station analysis folds its "2 alpha"
// convention into this one field).
struct Network {
  int dim = 2;
  std::vector<Station> stations;
  double noise = 0.0;
  double beta = 1.0;
  double alpha = 2.0;
  // set by validate_network when beta < 1: per-station reception zones can
  // overlap, heard_station falls back to max-SINR
  bool zones_may_overlap = false;

  std::size_t size() const { return stations.size(); }
  const Point& pos(std::size_t i) const { return stations[i].pos; }
  double power(std::size_t i) const { return stations[i].power; }
};

// Throws ModelError unless every invariant holds: dim >= 1, n >= 2, finite
// coordinates of matching dimension, positive powers, non-negative noise,
// positive alpha, positive beta, no coincident stations.
Network validate_network(Network net);

// Rotation (orthogonal, row-major dim x dim), then scaling, then translation:
// f(p) = scale * R p + translation.
struct SimilarityTransform {
  std::vector<double> rotation;  // row-major dim*dim
  Point translation;
  double scale = 1.0;

  std::size_t dim() const { return translation.dim(); }
  Point apply(const Point& p) const;
  SimilarityTransform inverse() const;

  static SimilarityTransform identity(std::size_t d);
  static SimilarityTransform rotation2d(double angle, const Point& translation, double scale);
};

// Checks R^T R = I to 1e-12 and scale > 0. Maps stations through f and noise
// to N / scale^alpha, which keeps SINR invariant for every alpha (for alpha=2
// this is the stated N / sigma^2).
Network transform_network(const Network& net, const SimilarityTransform& f);

// min { dist(s_ref, s_i) | i != ref }
double min_station_distance(const Network& net, std::size_t ref);

// If alpha is a positive even integer, returns alpha/2.
std::optional<int> even_alpha_half(double alpha);

// JSON file format:
// { "dim": int, "alpha": float, "beta": float, "noise": float,
//   "stations": [ { "id": str, "pos": [float,...], "power": float }, ... ] }
Network network_from_json(const nlohmann::json& j);
nlohmann::json network_to_json(const Network& net);
Network load_network_file(const std::string& path);
void save_network_file(const Network& net, const std::string& path);

}  // namespace sinr
