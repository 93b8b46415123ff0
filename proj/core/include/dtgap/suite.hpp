#pragma once

// Verification driver: sweeps claims over instance grids (run_suite, backing
// the CLI verify command) and the pinned acceptance battery (run_acceptance),
// whose eleven criteria fix their own grids, seeds, family sizes, and
// tolerances in code.

#include <string>
#include <vector>

#include "dtgap/oracles.hpp"

namespace dtgap {

struct GridSpec {
  int max_n = 3;
  int max_u = 3;
  std::vector<int> ells = {2};
};

// verify_claim for every selected claim over every (instance, ell) grid point,
// reports in deterministic grid-major order.  Empty selection: empty report.
std::vector<OracleReport> run_suite(const std::vector<std::string>& selection,
                                    const GridSpec& grid, const VerifyParams& params = {});

struct AcceptanceResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The fixed eleven-criterion battery; indices 1..11.
AcceptanceResult run_acceptance_criterion(int index);
std::vector<AcceptanceResult> run_acceptance();

// The worked 5-set / 4-element example instance used by the fixed-bundle
// criteria and the bundled sample data.
SetCoverInstance example_instance();

}  // namespace dtgap
