#include "sinr/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sinr {

double dist2(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const double d = a.coords[i] - b.coords[i];
    s += d * d;
  }
  return s;
}

double dist(const Point& a, const Point& b) { return std::sqrt(dist2(a, b)); }

Network validate_network(Network net) {
  if (net.dim < 1) throw ModelError("dim must be >= 1");
  if (net.stations.size() < 2) throw ModelError("n >= 2 required");
  if (!(net.noise >= 0.0) || !std::isfinite(net.noise)) throw ModelError("noise must be non-negative");
  if (!(net.alpha > 0.0) || !std::isfinite(net.alpha)) throw ModelError("alpha must be positive");
  if (!(net.beta > 0.0) || !std::isfinite(net.beta)) throw ModelError("beta must be positive");
  net.zones_may_overlap = net.beta < 1.0;
  for (const auto& s : net.stations) {
    if (s.pos.dim() != static_cast<std::size_t>(net.dim))
      throw ModelError("station '" + s.id + "': position dimension mismatch");
    for (double c : s.pos.coords)
      if (!std::isfinite(c)) throw ModelError("station '" + s.id + "': non-finite coordinate");
    if (!(s.power > 0.0) || !std::isfinite(s.power))
      throw ModelError("station '" + s.id + "': power must be positive");
  }
  for (std::size_t i = 0; i < net.stations.size(); ++i)
    for (std::size_t j = i + 1; j < net.stations.size(); ++j)
      if (net.stations[i].pos == net.stations[j].pos)
        throw ModelError("stations '" + net.stations[i].id + "' and '" + net.stations[j].id +
                         "' coincide");
  return net;
}

Point SimilarityTransform::apply(const Point& p) const {
  const std::size_t d = dim();
  Point out;
  out.coords.resize(d, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < d; ++c) acc += rotation[r * d + c] * p.coords[c];
    out.coords[r] = scale * acc + translation.coords[r];
  }
  return out;
}

SimilarityTransform SimilarityTransform::inverse() const {
  const std::size_t d = dim();
  SimilarityTransform inv;
  inv.scale = 1.0 / scale;
  inv.rotation.resize(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) inv.rotation[r * d + c] = rotation[c * d + r];
  // inv(p) = R^T (p - t) / scale
  inv.translation.coords.resize(d, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < d; ++c) acc += inv.rotation[r * d + c] * translation.coords[c];
    inv.translation.coords[r] = -acc / scale;
  }
  return inv;
}

SimilarityTransform SimilarityTransform::identity(std::size_t d) {
  SimilarityTransform f;
  f.rotation.assign(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) f.rotation[i * d + i] = 1.0;
  f.translation.coords.assign(d, 0.0);
  f.scale = 1.0;
  return f;
}

SimilarityTransform SimilarityTransform::rotation2d(double angle, const Point& translation,
                                                    double scale) {
  SimilarityTransform f;
  const double c = std::cos(angle), s = std::sin(angle);
  f.rotation = {c, -s, s, c};
  f.translation = translation;
  f.scale = scale;
  return f;
}

static void check_orthogonal(const SimilarityTransform& f) {
  const std::size_t d = f.dim();
  if (f.rotation.size() != d * d) throw ModelError("rotation matrix size mismatch");
  if (!(f.scale > 0.0)) throw ModelError("scale must be positive");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < d; ++k) acc += f.rotation[k * d + i] * f.rotation[k * d + j];
      const double expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(acc - expect) > 1e-12) throw ModelError("rotation is not orthogonal");
    }
  }
}

Network transform_network(const Network& net, const SimilarityTransform& f) {
  if (f.dim() != static_cast<std::size_t>(net.dim)) throw ModelError("transform dimension mismatch");
  check_orthogonal(f);
  Network out = net;
  for (auto& s : out.stations) s.pos = f.apply(s.pos);
  out.noise = net.noise / std::pow(f.scale, net.alpha);
  return out;
}

double min_station_distance(const Network& net, std::size_t ref) {
  if (ref >= net.size()) throw ModelError("reference station index out of range");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < net.size(); ++j)
    if (j != ref) best = std::min(best, dist(net.pos(ref), net.pos(j)));
  return best;
}

std::optional<int> even_alpha_half(double alpha) {
  if (!(alpha > 0.0)) return std::nullopt;
  const double r = std::round(alpha);
  if (r != alpha) return std::nullopt;
  const long long a = static_cast<long long>(r);
  if (a % 2 != 0) return std::nullopt;
  return static_cast<int>(a / 2);
}

Network network_from_json(const nlohmann::json& j) {
  Network net;
  net.dim = j.at("dim").get<int>();
  net.alpha = j.at("alpha").get<double>();
  net.beta = j.at("beta").get<double>();
  net.noise = j.at("noise").get<double>();
  for (const auto& js : j.at("stations")) {
    Station s;
    s.id = js.at("id").get<std::string>();
    s.pos.coords = js.at("pos").get<std::vector<double>>();
    s.power = js.at("power").get<double>();
    net.stations.push_back(std::move(s));
  }
  return validate_network(std::move(net));
}

nlohmann::json network_to_json(const Network& net) {
  nlohmann::json j;
  j["dim"] = net.dim;
  j["alpha"] = net.alpha;
  j["beta"] = net.beta;
  j["noise"] = net.noise;
  j["stations"] = nlohmann::json::array();
  for (const auto& s : net.stations)
    j["stations"].push_back({{"id", s.id}, {"pos", s.pos.coords}, {"power", s.power}});
  return j;
}

Network load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open network file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ModelError("malformed network JSON (" + path + "): " + e.what());
  }
  try {
    return network_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ModelError("invalid network JSON (" + path + "): " + e.what());
  }
}

void save_network_file(const Network& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ModelError("cannot write network file: " + path);
  out << network_to_json(net).dump(2) << "\n";
}

}  // namespace sinr
