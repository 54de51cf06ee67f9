#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sinr/diagram1d.hpp"
#include "sinr/geometry.hpp"
#include "sinr/rng.hpp"

namespace sinr {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
  nlohmann::json report;
};

// Seeded instance generators (SplitMix64 streams, documented in the README).
Network random_network_1d(SplitMix64& rng);
Network random_network_2d(SplitMix64& rng, int n_min, int n_max, double box, double min_sep,
                          double power_lo, double power_hi, double beta_lo, double beta_hi,
                          double noise, double alpha);

// Combined 1D battery: cell-count bound, NFH, weakest-station connectivity
// over the same seeded instances.
struct Battery1D {
  bool bound_pass = true, nfh_pass = true, weakest_pass = true;
  int instances = 0;
  std::size_t worst_total = 0, worst_allowed = 0;
  std::string detail;
};
Battery1D run_1d_battery(uint64_t seed, int trials);

SuiteResult verify_bound2n1(uint64_t seed, int trials);
SuiteResult verify_nfh1d(uint64_t seed, int trials);
SuiteResult verify_weakest(uint64_t seed, int trials);
SuiteResult verify_maxprinciple(uint64_t seed, int trials);
SuiteResult verify_hyperbolic(uint64_t seed, int trials);
SuiteResult verify_voronoi(uint64_t seed, int trials);
SuiteResult verify_transform(uint64_t seed, int trials);
SuiteResult verify_wireconv(uint64_t seed, int trials);
SuiteResult verify_tagcell(uint64_t seed, int trials);

// acceptance-only checks
SuiteResult verify_sturm_oracle(uint64_t seed, int trials);
SuiteResult verify_twostation(uint64_t seed, int trials);
SuiteResult verify_omega_construction(int n_lo, int n_hi);
SuiteResult verify_qds_roundtrip(uint64_t seed);

// CLI surface: the named suites {nfh1d, bound2n1, maxprinciple, hyperbolic,
// voronoi, transform, wireconv, tagcell}.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, uint64_t seed, int trials);

}  // namespace sinr
