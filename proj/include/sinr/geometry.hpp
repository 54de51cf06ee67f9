#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "sinr/core.hpp"
#include "sinr/pointloc.hpp"

namespace sinr {

// Closed-form zone of station i in a 2-station noiseless network, expressed
// in the canonical frame (s_i at the origin, the other station at (a,0,...))
// plus the map into that frame. tau = beta * Psi_other / Psi_i decides the
// shape; with noise the zone is bounded and only a sampled descriptor is
// available (approximate = true).
struct TwoStationConfig {
  enum class Kind { Disk, DiskComplement, Halfplane };

  Kind kind = Kind::Halfplane;
  double tau = 1.0;
  double a = 0.0;                  // inter-station distance
  Point center;                    // ambient coordinates (disk kinds)
  double radius = 0.0;
  double halfplane_offset = 0.0;   // canonical boundary x = a/2
  bool approximate = false;
  SimilarityTransform to_canonical;

  bool contains(const Point& p) const;
};

TwoStationConfig two_station_config(const Network& net, std::size_t i = 0, bool exact = true);

// Continuous wire: the chi -> infinity limit of chi equally spaced stations
// on a circle with fixed total power (alpha = 2, d = 2).
struct Wire {
  Point center;
  double radius = 1.0;
  double total_power = 1.0;
};

// P / |r^2 - dist(q,k)^2|; singular on the wire circle.
double wire_interference(const Wire& w, const Point& k);

// Exact finite sum over chi equally spaced stations of power P/chi.
double discrete_wire_interference(const Wire& w, uint64_t chi, const Point& k);

// Average interference over the circle boundary(B(q,r)) from all stations
// except `exclude`: sum Psi_i / |dist(s_i,q)^2 - r^2|.
double average_circle_interference(const Network& net, std::size_t exclude, const Point& q,
                                   double r);

struct MaxPrincipleResult {
  bool pass = true;
  double interior_max = 0.0;
  double boundary_max = 0.0;
  Point witness;  // interior point exceeding the boundary max when failing
};

// Interference of S \ {exclude} over the station-free disk B(q,r): sampled
// interior lattice max must not exceed the sampled boundary max + 1e-9.
// `samples` sets the lattice (samples x samples interior, 16*samples boundary).
MaxPrincipleResult max_principle_check(const Network& net, std::size_t exclude, const Point& q,
                                       double r, int samples);

// Hyperbolic geodesic between two points of the upper (or lower) half-space
// model over the hyperplane x_{d+1} = 0: a vertical segment when the
// projections coincide, else the shorter arc of the circle centered on the
// hyperplane, on the line through the projections, equidistant from both.
struct Geodesic {
  enum class Kind { VerticalSegment, Arc };

  Kind kind = Kind::VerticalSegment;
  Point p1, p2;
  Point center;           // arc only (height 0)
  double radius = 0.0;    // arc only
  double theta1 = 0.0, theta2 = 0.0;
  std::vector<double> u;  // horizontal unit direction of the arc plane

  Point point_at(double s) const;  // s in [0,1], endpoints at 0 and 1
};

Geodesic hyperbolic_geodesic(const Point& p1, const Point& p2);

// Stations of `net` re-embedded in the hyperplane x_{d+1} = 0.
Network embed_up(const Network& net);

struct GeodesicCheck {
  bool pass = true;
  double min_sinr = 0.0;
  Point witness;
};

// Both endpoints must be reception points of s_i in the (d+1)-map and obey
// the same-side sign condition; samples >= 2 points along the geodesic are
// then required to satisfy SINR >= beta - 1e-9.
GeodesicCheck hyperbolic_reception_check(const Network& up, std::size_t i, const Point& p1,
                                         const Point& p2, int samples = 1000);

// ---------- extreme constructions ----------

struct OmegaN {
  Network net;  // 4n+1 stations, "s0" first
  int n = 0;
  double R = 0.0, P0 = 0.0, L = 0.0, U = 0.0;
  bool feasible = false;
  bool r1_pass = false, r2_pass = false;
  double r1_min_sinr = 0.0, r2_max_sinr = 0.0;
  std::vector<Point> centers;

  nlohmann::json report() const;
};

// n clusters of four unit-power stations on squares around a ring of radius
// R about a strong central station; s0 is heard near each ring center and
// around itself but not on the square boundaries, giving n+1 cells.
OmegaN construct_omega_n(int n, int boundary_samples_per_square = 128);

struct WireNetwork {
  Point station_pos;
  double station_power = 1.0;
  std::vector<Wire> wires;
  double noise = 1.0;
  double beta = 1.0;
};

double wire_net_sinr(const WireNetwork& wn, const Point& p);

struct LogWires {
  WireNetwork net;
  int rho = 0;
  double p1 = 0.0;
  double feasibility_bound = 0.0;
  bool feasible = false;
  bool pass = false;
  double min_sinr = 0.0;
  double i1_max = 0.0, i2_max = 0.0;  // inner / outer wire interference bounds seen
  std::vector<Point> test_points;

  nlohmann::json report() const;
};

// rho concentric unit-power wires of radius 4^i around a station of power P1;
// P1 >= 16^(rho-1) * (7 + N) guarantees a reception point between consecutive
// wires, giving rho+1 cells.
LogWires construct_log_wires(int rho, double p1, double noise = 1.0);

// Number of maximal SINR >= beta runs along the positive x-axis (analytic
// wire interference), for the wires construction.
int wire_axis_cell_scan(const WireNetwork& wn, double x_max, int samples = 200000);

// ---------- grid counting ----------

struct Bounds2D {
  double x0, y0, x1, y1;
};

struct CellCount2D {
  std::size_t components = 0;
  double grid_step = 0.0;
  std::size_t plus_cells = 0;
  std::size_t ambiguous_cells = 0;
  std::size_t milnor_thom_reference = 0;  // K(2K-1)^(d-1), K = n*alpha
};

// Approximate component count of a reception zone (or of the empty zone when
// station is nullopt) by flood fill over grid cells; cells whose rigorous
// SINR range straddles beta are excluded, making counts a lower-bound
// estimate at coarse steps.
CellCount2D count_cells_2d(const Network& net, std::optional<std::size_t> station,
                           double grid_step, const Bounds2D& bounds);

// Halve the step until the count stabilizes twice.
CellCount2D count_cells_2d_auto(const Network& net, std::optional<std::size_t> station,
                                double initial_step, const Bounds2D& bounds, int max_levels = 10);

struct AreaEstimate {
  double area = 0.0;
  double lower_bound = 0.0;  // pi rho_hat^2
  double upper_bound = 0.0;  // pi delta_hat^2
  bool within_bounds = false;
};

AreaEstimate area_estimate(const Network& net, std::size_t i, double grid_step);

}  // namespace sinr
