// Acceptance suite: one gate per shipped guarantee, printed as a pass/fail
// line. Exit code is nonzero when any gated criterion fails. Thresholds are
// fixed here, not configurable.

#include <chrono>
#include <cstdio>
#include <string>

#include "sinr/verify.hpp"

namespace {

int failures = 0;

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void line(int idx, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%2d] %-28s %s  %s\n", idx, name.c_str(), pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1fs", s);
  return buf;
}

}  // namespace

int main() {
  using namespace sinr;

  // 1-3: exact 1D battery over 200 seeded instances (shared computation),
  // the cell-count criterion carries the 60 s budget
  {
    const auto t0 = std::chrono::steady_clock::now();
    const Battery1D b = run_1d_battery(7, 200);
    const double elapsed = seconds_since(t0);
    line(1, "1d-cell-bound <= 2n-1", b.bound_pass && elapsed < 60.0,
         "200 instances, worst total " + std::to_string(b.worst_total) + " (bound " +
             std::to_string(b.worst_allowed) + "), " + secs(elapsed));
    line(2, "1d-no-free-hole", b.nfh_pass, "same 200 instances, zero violations");
    line(3, "weakest-station-connected", b.weakest_pass,
         "minimum-power station has exactly 1 cell in every instance");
  }

  // 4: the omega(n) construction, n in {2..6}, flood fill n+1 cells, < 5 min
  {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult r = verify_omega_construction(2, 6);
    const double elapsed = seconds_since(t0);
    line(4, "omega-n-construction", r.pass && elapsed < 300.0, r.detail + ", " + secs(elapsed));
  }

  // 5: two-station closed forms vs direct reception, 50 instances x 10^4 points
  {
    const SuiteResult r = verify_twostation(2025, 50);
    line(5, "two-station-closed-forms", r.pass, r.detail);
  }

  // 6: Scheme C soundness, 20 seeded builds, 100 interior samples per cell
  {
    const SuiteResult r = verify_tagcell(11, 20);
    line(6, "scheme-c-soundness", r.pass, r.detail);
  }

  // 7: Sturm counting vs the fine-scan oracle, 1000 seeded polynomials
  {
    const SuiteResult r = verify_sturm_oracle(7, 1000);
    line(7, "sturm-oracle-equivalence", r.pass, r.detail);
  }

  // 8: discrete wire convergence at chi = 1e5 for d/r in {0.25, 0.5, 2, 4}
  {
    const SuiteResult r = verify_wireconv(3, 4);
    line(8, "wire-convergence", r.pass, r.detail);
  }

  // 9: interference maximum principle on 100 station-free disks
  {
    const SuiteResult r = verify_maxprinciple(5, 100);
    line(9, "maximum-principle", r.pass, r.detail);
  }

  // 10: hyperbolic convexity of lifted zones, incl. a disconnected base map
  {
    const SuiteResult r = verify_hyperbolic(3, 100);
    line(10, "hyperbolic-convexity", r.pass, r.detail);
  }

  // 11: similarity-transform invariance to 1e-12 relative
  {
    const SuiteResult r = verify_transform(13, 1000);
    line(11, "transform-invariance", r.pass, r.detail);
  }

  // 12: weighted Voronoi containment + the alpha -> infinity Voronoi limit
  {
    const SuiteResult r = verify_voronoi(19, 1200);
    line(12, "voronoi-containment", r.pass, r.detail);
  }

  // 13: QDS round trip (gated) + query throughput (reported, soft < 1 s)
  {
    const SuiteResult r = verify_qds_roundtrip(11);
    line(13, "qds-roundtrip-throughput", r.pass, r.detail);
  }

  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all 13 acceptance criteria PASS\n");
  return 0;
}
