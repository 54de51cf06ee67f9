#include "sinr/pointloc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

namespace sinr {

static_assert(std::numeric_limits<double>::is_iec559, "binary64 layout required");

FatnessBounds fatness_bounds(const Network& net, std::size_t i) {
  if (i >= net.size()) throw ModelError("station index out of range");
  const double n = static_cast<double>(net.size());
  const double delta = min_station_distance(net, i);
  const double psi = net.power(i);
  double pbar = 0.0;
  for (const auto& s : net.stations) pbar = std::max(pbar, s.power / psi);
  const double nu = net.noise / psi;
  const double alpha = net.alpha;

  FatnessBounds fb;
  const double worst = net.beta * (pbar * (n - 1.0) + nu * std::pow(delta, alpha));
  fb.rho_hat = delta / (std::pow(worst, 1.0 / alpha) + 1.0);
  fb.rho_hat_coarse = delta / std::pow(pbar * n, 1.0 / alpha);
  fb.delta_finite = net.noise > 0.0;
  fb.delta_hat = fb.delta_finite ? std::pow(1.0 / (net.beta * nu), 1.0 / alpha)
                                 : std::numeric_limits<double>::infinity();
  fb.phi_hat = fb.delta_hat / fb.rho_hat;
  fb.perimeter_bound = 3.0 * M_PI * fb.delta_hat * n * n;
  return fb;
}

const char* tag_name(CellTag t) {
  switch (t) {
    case CellTag::Minus: return "-";
    case CellTag::Plus: return "+";
    default: return "?";
  }
}

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::A: return "A";
    case Scheme::B: return "B";
    case Scheme::C: return "C";
    default: return "colinear";
  }
}

std::optional<Scheme> scheme_from_name(const std::string& name) {
  if (name == "A" || name == "a") return Scheme::A;
  if (name == "B" || name == "b") return Scheme::B;
  if (name == "C" || name == "c") return Scheme::C;
  if (name == "colinear" || name == "collinear") return Scheme::Colinear;
  return std::nullopt;
}

CellTag seg_test(const Poly& f) {
  if (f.is_zero()) return CellTag::Question;
  const int roots =
      f.degree() == 0 ? 0 : SturmChain(f).count(Rational(0), Rational(1));
  if (roots == 0) {
    const bool both_positive = f.sign_at(Rational(0)) > 0 && f.sign_at(Rational(1)) > 0;
    return both_positive ? CellTag::Minus : CellTag::Plus;
  }
  return CellTag::Question;
}

bool stations_collinear(const Network& net) {
  if (net.dim == 1 || net.size() <= 2) return true;
  if (net.dim != 2) return false;
  const Rational ax = rat_of(net.pos(0)[0]), ay = rat_of(net.pos(0)[1]);
  const Rational ux = rat_of(net.pos(1)[0]) - ax, uy = rat_of(net.pos(1)[1]) - ay;
  for (std::size_t j = 2; j < net.size(); ++j) {
    const Rational vx = rat_of(net.pos(j)[0]) - ax, vy = rat_of(net.pos(j)[1]) - ay;
    if (ux * vy - uy * vx != 0) return false;
  }
  return true;
}

// bottom, right, top, left; each parameterized from the lexicographically
// smaller endpoint so shared grid-cell corners land on consistent parameters
static std::array<std::pair<Point, Point>, 4> cell_edges(const GridCell& c) {
  const Point a({c.x0, c.y0}), b({c.x1, c.y0}), d({c.x1, c.y1}), e({c.x0, c.y1});
  return {std::pair<Point, Point>{a, b}, {b, d}, {e, d}, {a, e}};
}

static std::array<SegmentCharacteristic, 4> edge_characteristics(const Network& net, std::size_t i,
                                                                 const GridCell& cell) {
  const auto edges = cell_edges(cell);
  return {segment_characteristic(net, i, edges[0].first, edges[0].second),
          segment_characteristic(net, i, edges[1].first, edges[1].second),
          segment_characteristic(net, i, edges[2].first, edges[2].second),
          segment_characteristic(net, i, edges[3].first, edges[3].second)};
}

static CellTag sturm_cell_on(const std::array<SegmentCharacteristic, 4>& ec, const Rational& beta) {
  for (const auto& e : ec)
    if (seg_test(e.at(beta)) == CellTag::Minus) return CellTag::Minus;
  return CellTag::Plus;
}

static CellTag sturm_cell_b_on(const std::array<SegmentCharacteristic, 4>& ec,
                               const Rational& beta) {
  bool any_plus = false;
  for (const auto& e : ec) {
    const CellTag t = seg_test(e.at(beta));
    if (t == CellTag::Minus) return CellTag::Minus;
    if (t == CellTag::Plus) any_plus = true;
  }
  return any_plus ? CellTag::Plus : CellTag::Question;
}

CellTag sturm_cell(const Network& net, std::size_t i, const GridCell& cell, const Rational& beta) {
  return sturm_cell_on(edge_characteristics(net, i, cell), beta);
}

CellTag sturm_cell_b(const Network& net, std::size_t i, const GridCell& cell,
                     const Rational& beta) {
  return sturm_cell_b_on(edge_characteristics(net, i, cell), beta);
}

struct TagThresholds {
  Rational high, low;
  double high_d, low_d;
};

static TagThresholds tag_thresholds(const Network& net, double epsilon) {
  const auto half = even_alpha_half(net.alpha);
  if (!half) throw QdsError("tagging requires a positive even integer alpha");
  const unsigned a = static_cast<unsigned>(2 * *half);
  const Rational eps = rat_of(epsilon);
  TagThresholds t;
  t.high = rat_pow(Rational(1) + eps, a) * rat_of(net.beta);
  t.low = rat_pow(Rational(1) - eps, a) * rat_of(net.beta);
  t.high_d = dbl(t.high);
  t.low_d = dbl(t.low);
  return t;
}

static CellTag tag_cell_on(const std::array<SegmentCharacteristic, 4>& ec,
                           const TagThresholds& thr) {
  const CellTag t1 = sturm_cell_on(ec, thr.high);
  if (t1 != CellTag::Minus) return CellTag::Plus;
  const CellTag t2 = sturm_cell_on(ec, thr.low);
  if (t2 == CellTag::Minus) return CellTag::Minus;
  return CellTag::Question;
}

CellTag tag_cell(const Network& net, std::size_t i, const GridCell& cell, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw QdsError("epsilon must be in (0,1)");
  return tag_cell_on(edge_characteristics(net, i, cell), tag_thresholds(net, epsilon));
}

// min/max squared distance from a point to the rectangle
static double rect_dmin2(double px, double py, const GridCell& c) {
  const double dx = px < c.x0 ? c.x0 - px : (px > c.x1 ? px - c.x1 : 0.0);
  const double dy = py < c.y0 ? c.y0 - py : (py > c.y1 ? py - c.y1 : 0.0);
  return dx * dx + dy * dy;
}

static double rect_dmax2(double px, double py, const GridCell& c) {
  const double dx = std::max(std::abs(px - c.x0), std::abs(px - c.x1));
  const double dy = std::max(std::abs(py - c.y0), std::abs(py - c.y1));
  return dx * dx + dy * dy;
}

SinrRange cell_sinr_range(const Network& net, std::size_t i, const GridCell& cell) {
  const double inf = std::numeric_limits<double>::infinity();
  const double a2 = -0.5 * net.alpha;
  double own_hi, own_lo, inter_hi = 0.0, inter_lo = 0.0;
  {
    const double dmin2 = rect_dmin2(net.pos(i)[0], net.pos(i)[1], cell);
    const double dmax2 = rect_dmax2(net.pos(i)[0], net.pos(i)[1], cell);
    own_hi = dmin2 == 0.0 ? inf : net.power(i) * std::pow(dmin2, a2);
    own_lo = net.power(i) * std::pow(dmax2, a2);
  }
  for (std::size_t j = 0; j < net.size(); ++j) {
    if (j == i) continue;
    const double dmin2 = rect_dmin2(net.pos(j)[0], net.pos(j)[1], cell);
    const double dmax2 = rect_dmax2(net.pos(j)[0], net.pos(j)[1], cell);
    inter_hi += dmin2 == 0.0 ? inf : net.power(j) * std::pow(dmin2, a2);
    inter_lo += net.power(j) * std::pow(dmax2, a2);
  }
  SinrRange r;
  r.upper = own_hi / (inter_lo + net.noise);  // inf-aware
  r.lower = std::isinf(inter_hi) ? 0.0 : own_lo / (inter_hi + net.noise);
  if (std::isnan(r.upper)) r.upper = inf;  // inf/inf: both bounds degenerate
  return r;
}

GridCell QDS::cell(uint32_t ix, uint32_t iy) const {
  return {origin_x + ix * gamma, origin_y + iy * gamma, origin_x + (ix + 1) * gamma,
          origin_y + (iy + 1) * gamma};
}

CellTag QDS::query(double x, double y) const {
  const double ux = (x - origin_x) / gamma;
  const double uy = (y - origin_y) / gamma;
  const double fx = std::ceil(ux) - 1.0, fy = std::ceil(uy) - 1.0;
  if (fx < 0.0 || fy < 0.0 || fx >= width || fy >= height) return CellTag::Minus;
  return tag_at(static_cast<uint32_t>(fx), static_cast<uint32_t>(fy));
}

std::size_t QDS::count(CellTag t) const {
  std::size_t c = 0;
  for (uint8_t v : tags)
    if (v == static_cast<uint8_t>(t)) ++c;
  return c;
}

QDS qds_build(const Network& net, std::size_t station, Scheme scheme, double epsilon,
              const QdsConfig& cfg) {
  if (station >= net.size()) throw ModelError("station index out of range");
  if (net.dim != 2) throw QdsError("QDS requires a 2-dimensional network");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw QdsError("epsilon must be in (0,1)");
  if (!even_alpha_half(net.alpha)) throw QdsError("QDS requires a positive even integer alpha");
  if (scheme == Scheme::Colinear && !stations_collinear(net))
    throw QdsError("colinear scheme requires collinear stations");

  const FatnessBounds fb = fatness_bounds(net, station);
  double extent_r;
  if (cfg.extent_radius)
    extent_r = *cfg.extent_radius;
  else if (fb.delta_finite)
    extent_r = fb.delta_hat;
  else
    throw QdsError("N = 0: an explicit extent radius is required");
  const double n = static_cast<double>(net.size());
  const double phi = extent_r / fb.rho_hat;

  double gamma;
  switch (scheme) {
    case Scheme::Colinear: gamma = epsilon * fb.rho_hat / (8.0 * n * phi); break;
    case Scheme::A:
      gamma = epsilon * fb.rho_hat / (8.0 * (cfg.c1 + cfg.c2) * n * n * n * n * phi);
      break;
    case Scheme::B: gamma = epsilon / std::sqrt(2.0); break;
    case Scheme::C: gamma = epsilon * fb.rho_hat / (3.0 * std::sqrt(2.0)); break;
    default: throw QdsError("unknown scheme");
  }
  gamma = std::min(gamma, fb.rho_hat / (2.0 * std::sqrt(2.0)));

  const double half_cells = std::ceil(extent_r / gamma);
  if (half_cells > 60000.0) throw QdsError("QDS grid too large; increase epsilon or shrink extent");
  const uint32_t m = static_cast<uint32_t>(half_cells);
  const uint64_t w = 2ull * m;
  if (w * w > cfg.max_cells)
    throw QdsError("QDS grid would exceed the cell cap; increase epsilon or shrink extent");

  QDS q;
  q.station = static_cast<uint32_t>(station);
  q.scheme = scheme;
  q.epsilon = epsilon;
  q.gamma = gamma;
  const double sx = net.pos(station)[0], sy = net.pos(station)[1];
  q.origin_x = sx - m * gamma;
  q.origin_y = sy - m * gamma;
  q.width = q.height = static_cast<uint32_t>(w);
  q.tags.assign(static_cast<std::size_t>(w) * w, static_cast<uint8_t>(CellTag::Minus));

  const double plus_r = fb.rho_hat - std::sqrt(2.0) * gamma;  // > 0 by the gamma clamp
  std::vector<double> minus_r(net.size(), 0.0);
  const bool disjoint = net.beta >= 1.0;
  if (disjoint)
    for (std::size_t j = 0; j < net.size(); ++j)
      if (j != station) minus_r[j] = fatness_bounds(net, j).rho_hat;

  const TagThresholds thr =
      scheme == Scheme::C ? tag_thresholds(net, epsilon) : TagThresholds{};
  const Rational beta_rat = rat_of(net.beta);
  const double beta_d = net.beta;
  const double margin = 1e-9;

  for (uint32_t iy = 0; iy < q.height; ++iy) {
    for (uint32_t ix = 0; ix < q.width; ++ix) {
      const GridCell cell = q.cell(ix, iy);
      CellTag tag;
      if (rect_dmin2(sx, sy, cell) <= plus_r * plus_r) {
        tag = CellTag::Plus;  // cell inside B(s1, rho_hat) subseteq Z_1
      } else {
        bool decided = false;
        if (disjoint) {
          for (std::size_t j = 0; j < net.size() && !decided; ++j) {
            if (j == station || minus_r[j] <= 0.0) continue;
            if (rect_dmax2(net.pos(j)[0], net.pos(j)[1], cell) <= minus_r[j] * minus_r[j]) {
              tag = CellTag::Minus;  // cell inside B(s_j, rho_j) subseteq Z_j
              decided = true;
            }
          }
        }
        if (!decided) {
          // interval shortcut: only taken when it provably matches the
          // literal tagging algorithm's output
          const SinrRange r = cfg.exhaustive ? SinrRange{0.0, std::numeric_limits<double>::infinity()}
                                             : cell_sinr_range(net, station, cell);
          switch (scheme) {
            case Scheme::A:
              if (r.upper < beta_d * (1.0 - margin)) {
                tag = CellTag::Minus;
              } else if (r.lower > beta_d * (1.0 + margin)) {
                tag = CellTag::Plus;
              } else {
                tag = sturm_cell(net, station, cell, beta_rat);
              }
              break;
            case Scheme::B:
            case Scheme::Colinear:
              if (r.upper < beta_d * (1.0 - margin)) {
                tag = CellTag::Minus;
              } else if (r.lower > beta_d * (1.0 + margin)) {
                tag = CellTag::Plus;
              } else {
                tag = sturm_cell_b(net, station, cell, beta_rat);
              }
              break;
            default:
              if (r.upper < thr.low_d * (1.0 - margin)) {
                tag = CellTag::Minus;
              } else if (r.lower > thr.high_d * (1.0 + margin)) {
                tag = CellTag::Plus;
              } else if (r.upper < thr.high_d * (1.0 - margin) &&
                         r.lower > thr.low_d * (1.0 + margin)) {
                tag = CellTag::Question;
              } else {
                tag = tag_cell_on(edge_characteristics(net, station, cell), thr);
              }
              break;
          }
        }
      }
      q.tags[static_cast<std::size_t>(iy) * q.width + ix] = static_cast<uint8_t>(tag);
    }
  }
  return q;
}

// ---------- serialization ----------

namespace {

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back((v >> (8 * i)) & 0xff);
}

void put_f64(std::vector<uint8_t>& out, double d) {
  uint64_t bits;
  std::memcpy(&bits, &d, 8);
  for (int i = 0; i < 8; ++i) out.push_back((bits >> (8 * i)) & 0xff);
}

struct Reader {
  const std::vector<uint8_t>& b;
  std::size_t pos = 0;

  uint8_t u8() {
    if (pos + 1 > b.size()) throw QdsError("truncated QDS stream");
    return b[pos++];
  }
  uint16_t u16() {
    uint16_t v = u8();
    v |= static_cast<uint16_t>(u8()) << 8;
    return v;
  }
  uint32_t u32() {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(u8()) << (8 * i);
    return v;
  }
  double f64() {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(u8()) << (8 * i);
    double d;
    std::memcpy(&d, &v, 8);
    return d;
  }
};

}  // namespace

std::vector<uint8_t> qds_serialize(const QDS& q) {
  std::vector<uint8_t> out;
  out.reserve(51 + q.tags.size() / 4 + 1);
  out.push_back('S');
  out.push_back('Q');
  out.push_back('D');
  out.push_back('S');
  put_u16(out, 1);
  out.push_back(static_cast<uint8_t>(q.scheme));
  put_u32(out, q.station);
  put_f64(out, q.epsilon);
  put_f64(out, q.gamma);
  put_f64(out, q.origin_x);
  put_f64(out, q.origin_y);
  put_u32(out, q.width);
  put_u32(out, q.height);
  const std::size_t ncells = q.tags.size();
  std::size_t k = 0;
  while (k < ncells) {
    uint8_t byte = 0;
    for (int j = 0; j < 4 && k < ncells; ++j, ++k) byte |= (q.tags[k] & 0x3) << (2 * j);
    out.push_back(byte);
  }
  return out;
}

QDS qds_deserialize(const std::vector<uint8_t>& bytes) {
  Reader r{bytes};
  if (bytes.size() < 4 || bytes[0] != 'S' || bytes[1] != 'Q' || bytes[2] != 'D' || bytes[3] != 'S')
    throw QdsError("bad QDS magic");
  r.pos = 4;
  const uint16_t version = r.u16();
  if (version != 1) throw QdsError("unsupported QDS version");
  const uint8_t scheme = r.u8();
  if (scheme > 3) throw QdsError("bad QDS scheme byte");
  QDS q;
  q.scheme = static_cast<Scheme>(scheme);
  q.station = r.u32();
  q.epsilon = r.f64();
  q.gamma = r.f64();
  q.origin_x = r.f64();
  q.origin_y = r.f64();
  q.width = r.u32();
  q.height = r.u32();
  const uint64_t ncells = static_cast<uint64_t>(q.width) * q.height;
  if (ncells == 0) throw QdsError("empty QDS extent");
  const std::size_t nbytes = static_cast<std::size_t>((ncells + 3) / 4);
  if (bytes.size() - r.pos != nbytes) throw QdsError("QDS tag payload size mismatch");
  q.tags.resize(ncells);
  for (uint64_t k = 0; k < ncells; ++k) {
    const uint8_t byte = bytes[r.pos + k / 4];
    const uint8_t tag = (byte >> (2 * (k % 4))) & 0x3;
    if (tag > 2) throw QdsError("bad QDS tag bits");
    q.tags[k] = tag;
  }
  return q;
}

void qds_save(const QDS& q, const std::string& path) {
  const std::vector<uint8_t> bytes = qds_serialize(q);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw QdsError("cannot write QDS file: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

QDS qds_load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw QdsError("cannot open QDS file: " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return qds_deserialize(bytes);
}

}  // namespace sinr
