#pragma once

// Set-cover instances as bipartite set/element graphs, with exact and greedy
// solvers.  An instance keeps its vertices in document order; every element
// stores its neighborhood as a bitmask over set indices (at most 64 sets).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dtgap/bits.hpp"
#include "dtgap/guards.hpp"

namespace dtgap {

struct SetCoverInstance {
  std::vector<std::string> sets;            // set identifiers, document order
  std::vector<std::string> universe;        // element identifiers, document order
  std::vector<Word> neighborhoods;          // per element: adjacent sets as bitmask

  int n() const { return static_cast<int>(sets.size()); }
  int u() const { return static_cast<int>(universe.size()); }
  int total_vertices() const { return n() + u(); }  // the "N" in distance floors

  bool operator==(const SetCoverInstance&) const = default;
};

// Document schema: {"sets": [...], "universe": [...], "edges": [[set, element], ...]}.
// Rejects malformed documents, duplicate identifiers within a vertex list,
// edges naming unknown vertices, and elements with empty neighborhoods
// ("uncoverable element").  Duplicate edges collapse into one adjacency.
SetCoverInstance parse_instance(const nlohmann::json& doc);
SetCoverInstance parse_instance_text(const std::string& text);

// Canonical document: vertex lists in document order, edges sorted
// lexicographically by (set id, element id).  parse(serialize(x)) == x.
nlohmann::json serialize_instance(const SetCoverInstance& inst);

struct NormalizeResult {
  SetCoverInstance instance;
  std::vector<std::string> removed_elements;  // later duplicates of an earlier neighborhood
  std::vector<std::pair<std::string, std::string>> replicated_sets;  // (new id, source id)
};

// Deletes elements whose neighborhood duplicates an earlier one (covering the
// survivor covers the duplicate), then replicates the first set until
// 1 + ceil(log2 |U|) <= n so that a completion seed fits into n*ell bits.
// Idempotent; optimum and coverability are preserved.
NormalizeResult normalize(const SetCoverInstance& inst);

bool is_normalized(const SetCoverInstance& inst);

// C is a set of set indices.
bool is_cover(const SetCoverInstance& inst, const std::vector<int>& C);

// Requires a coverable instance.  Ties broken toward the lowest set index, so
// the result is deterministic.
std::vector<int> greedy_cover(const SetCoverInstance& inst);

struct OptResult {
  int size = 0;
  std::vector<int> witness;  // lexicographically least optimal cover, ascending
};

// Exact optimum by branch and bound (greedy upper bound, counting lower
// bound), then a forcing pass that pins the lexicographically least witness.
// Guard: n <= guards.exact_opt_max_n.
OptResult exact_opt(const SetCoverInstance& inst, const Guards& guards = {});

// Transposed instance: elements become sets and vice versa, adjacency
// preserved.  exact_opt of the output is the hitting-set optimum of the input.
SetCoverInstance to_hitting_set(const SetCoverInstance& inst);

// Gap parameters for promise problems: yes-instances have a cover of size k,
// no-instances none below k'.
struct GapParams {
  int k = 1;
  int k_prime = 1;
};

void validate(const GapParams& gap);

}  // namespace dtgap
