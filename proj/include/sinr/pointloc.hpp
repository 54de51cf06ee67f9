#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sinr/charpoly.hpp"
#include "sinr/core.hpp"

namespace sinr {

// Inscribed/enclosing radius bounds for Z_i around s_i. rho_hat is the
// derived bound (worst case: all interferers collapsed at distance delta,
// noise replaced by an equivalent station); rho_hat_coarse is the cruder
// delta / (Pbar n)^(1/alpha) form, reported alongside. delta_hat diverges
// when N = 0.
struct FatnessBounds {
  double rho_hat = 0.0;
  double rho_hat_coarse = 0.0;
  double delta_hat = 0.0;
  double phi_hat = 0.0;
  double perimeter_bound = 0.0;
  bool delta_finite = false;
};

FatnessBounds fatness_bounds(const Network& net, std::size_t i);

enum class CellTag : uint8_t { Minus = 0, Plus = 1, Question = 2 };

const char* tag_name(CellTag t);

// Procedure SegTest on the restriction F of the characteristic polynomial to
// a segment, parameterized over t in [0,1]:
//   t = 0 distinct roots: minus when F > 0 at both endpoints, else plus;
//   otherwise question. The zero polynomial yields question.
CellTag seg_test(const Poly& f);

struct GridCell {
  double x0, y0, x1, y1;
};

// Algorithm SturmCell: minus iff some edge SegTest is minus, else plus.
CellTag sturm_cell(const Network& net, std::size_t i, const GridCell& cell, const Rational& beta);

// Algorithm SturmCellB: minus if some edge is minus; else plus if some edge
// is plus; else question.
CellTag sturm_cell_b(const Network& net, std::size_t i, const GridCell& cell, const Rational& beta);

// Algorithm TagCell: SturmCell at threshold (1+eps)^alpha beta; plus unless
// it returns minus; then minus iff SturmCell at (1-eps)^alpha beta is minus;
// else question. Thresholds are exact rationals (binary64 eps is dyadic).
CellTag tag_cell(const Network& net, std::size_t i, const GridCell& cell, double epsilon);

enum class Scheme : uint8_t { A = 0, B = 1, C = 2, Colinear = 3 };

const char* scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(const std::string& name);

// Exact test (rational arithmetic on the dyadic coordinates).
bool stations_collinear(const Network& net);

struct QdsConfig {
  double c1 = 1.0, c2 = 1.0;                 // Scheme A cell-count constants
  std::optional<double> extent_radius;       // required when N = 0
  std::size_t max_cells = 64u * 1024u * 1024u;
  // run the per-edge Sturm tests on every cell, skipping the interval-bound
  // shortcut; build output must not change (exercised by tests)
  bool exhaustive = false;
};

class QdsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grid-backed point-location structure for one station, aligned so the
// station is a grid vertex. Cells outside the stored extent are minus.
struct QDS {
  uint32_t station = 0;
  Scheme scheme = Scheme::C;
  double epsilon = 0.0;
  double gamma = 0.0;
  double origin_x = 0.0, origin_y = 0.0;
  uint32_t width = 0, height = 0;
  std::vector<uint8_t> tags;  // one CellTag per cell, row-major

  CellTag tag_at(uint32_t ix, uint32_t iy) const {
    return static_cast<CellTag>(tags[static_cast<std::size_t>(iy) * width + ix]);
  }
  GridCell cell(uint32_t ix, uint32_t iy) const;
  // Points on shared grid lines resolve to the smaller-index cell.
  CellTag query(double x, double y) const;
  std::size_t count(CellTag t) const;
};

QDS qds_build(const Network& net, std::size_t station, Scheme scheme, double epsilon,
              const QdsConfig& cfg = {});

// Binary format: magic "SQDS", u16 version=1, u8 scheme, u32 station,
// f64 epsilon, f64 gamma, 2 x f64 origin, 2 x u32 extent, then
// ceil(w*h/4) bytes of 2-bit tags row-major (00 minus, 01 plus, 10
// question), everything little-endian.
std::vector<uint8_t> qds_serialize(const QDS& q);
QDS qds_deserialize(const std::vector<uint8_t>& bytes);
void qds_save(const QDS& q, const std::string& path);
QDS qds_load(const std::string& path);

// Rigorous SINR range over a rectangle from per-station min/max distances.
// Exposed for the flood-fill counter and the build fast path.
struct SinrRange {
  double lower, upper;
};
SinrRange cell_sinr_range(const Network& net, std::size_t i, const GridCell& cell);

}  // namespace sinr
