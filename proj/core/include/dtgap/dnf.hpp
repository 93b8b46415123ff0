#pragma once

// DNF formulas: an OR of terms, each term an AND of literals.  A term keeps
// its literals sorted by variable with no repeats; the empty term accepts
// everything (width 0) and the empty formula is the constant 0.  size()
// counts terms.
//
// The width trace at an accepted point reports the width of a fixed minimal
// accepting term (lowest term index among minimum-width accepters), plus
// per-position literal counts under a block shape.  restrict_dnf mirrors
// restrict_tree: literals off the completion position are resolved by the
// seed (dropping the literal or the whole term), literals on it become base
// literals with parity-adjusted polarity.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dtgap/bits.hpp"
#include "dtgap/decision_tree.hpp"
#include "dtgap/parity.hpp"

namespace dtgap {

struct DnfTerm {
  std::vector<std::pair<int, bool>> literals;  // (variable, positive), ascending

  int width() const { return static_cast<int>(literals.size()); }
  bool accepts(Word y) const;
  bool operator==(const DnfTerm&) const = default;
};

struct DnfFormula {
  int arity = 0;
  std::vector<DnfTerm> terms;

  std::uint64_t size() const { return terms.size(); }
  bool eval(Word y) const;
  void validate() const;
  bool operator==(const DnfFormula&) const = default;
};

TraceResult dnf_trace(const DnfFormula& f, Word y,
                      const std::optional<BlockShape>& shape = std::nullopt);

DnfFormula restrict_dnf(const DnfFormula& f, Word z, int j, const BlockShape& shape);

// `terms` random terms with widths uniform in [width_lo, width_hi] (clamped to
// arity), variables and polarities uniform.
DnfFormula random_dnf(std::mt19937_64& rng, int arity, int terms, int width_lo, int width_hi);

// Signed DIMACS-style literals, 1-based: [[1, -3], [2]] is (x0 AND !x2) OR x1.
nlohmann::json serialize_dnf(const DnfFormula& f);
DnfFormula parse_dnf(const nlohmann::json& doc, int arity);

}  // namespace dtgap
