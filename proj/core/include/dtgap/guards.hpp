#pragma once

// Resource guards for the exact oracles.  Every brute-force routine checks its
// inputs against these limits and throws GuardExceeded instead of silently
// grinding; callers can raise a limit deliberately (CLI: --guards key=value).

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dtgap {

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Guards {
  int exact_opt_max_n = 30;          // branch-and-bound set count
  int dp_max_vars = 16;              // optimal-tree DP variable count
  int dp_max_budget = 6;             // optimal-tree DP depth budget
  std::uint64_t dp_abort_max_units = 8192;  // abort-mass lattice size in the DP
  int dnf_max_vars = 8;              // exhaustive DNF search variable count
  int dnf_max_terms = 3;             // exhaustive DNF search term count
  std::uint64_t dnf_max_formulas = 30'000'000;  // enumeration size cutoff
  int pmf_check_max_bits = 20;       // n*ell cap for pmf equivalence sweeps
  int restrict_max_z_bits = 16;      // exhaustive completion-seed search cap
  std::uint64_t product_max_atoms = 1'000'000;  // XOR-power support cap
  std::uint64_t dist_max_atoms = 4'000'000;     // explicit distribution cap
  int junta_max_vars = 20;           // junta learner variable cap
  int junta_max_k = 4;               // junta learner subset-size cap
  int generator_max_seed_bits = 24;  // exhaustive pushforward cap

  // Applies comma-separated "key=value" overrides, e.g. "dp_max_budget=7".
  void apply_overrides(const std::string& spec)
  {
    size_t pos = 0;
    while (pos < spec.size()) {
      size_t comma = spec.find(',', pos);
      if (comma == std::string::npos) comma = spec.size();
      std::string item = spec.substr(pos, comma - pos);
      pos = comma + 1;
      if (item.empty()) continue;
      size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("guard override must be key=value: '" + item + "'");
      std::string key = item.substr(0, eq);
      long long value = std::stoll(item.substr(eq + 1));
      if (key == "exact_opt_max_n") exact_opt_max_n = static_cast<int>(value);
      else if (key == "dp_max_vars") dp_max_vars = static_cast<int>(value);
      else if (key == "dp_max_budget") dp_max_budget = static_cast<int>(value);
      else if (key == "dp_abort_max_units") dp_abort_max_units = static_cast<std::uint64_t>(value);
      else if (key == "dnf_max_vars") dnf_max_vars = static_cast<int>(value);
      else if (key == "dnf_max_terms") dnf_max_terms = static_cast<int>(value);
      else if (key == "dnf_max_formulas") dnf_max_formulas = static_cast<std::uint64_t>(value);
      else if (key == "pmf_check_max_bits") pmf_check_max_bits = static_cast<int>(value);
      else if (key == "restrict_max_z_bits") restrict_max_z_bits = static_cast<int>(value);
      else if (key == "product_max_atoms") product_max_atoms = static_cast<std::uint64_t>(value);
      else if (key == "dist_max_atoms") dist_max_atoms = static_cast<std::uint64_t>(value);
      else if (key == "junta_max_vars") junta_max_vars = static_cast<int>(value);
      else if (key == "junta_max_k") junta_max_k = static_cast<int>(value);
      else if (key == "generator_max_seed_bits") generator_max_seed_bits = static_cast<int>(value);
      else throw std::invalid_argument("unknown guard '" + key + "'");
    }
  }
};

}  // namespace dtgap
