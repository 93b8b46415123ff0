#pragma once

// Binary decision trees with {0, 1, abort} leaves.  Canonical form: every
// root-to-leaf path queries pairwise distinct variables (validate() enforces
// it).  size() counts leaves, depth() the longest path.
//
// restrict_tree specializes a tree on the block domain to the base domain:
// queries at the completion position j of block i turn into queries of base
// variable i (children swapped when the fixed block bits have odd parity),
// all other queries get resolved by the completion seed z.  The path length
// of the restricted tree at x equals the number of position-j queries the
// original tree makes at parity_complete(z, x, j) — the trace identity the
// extraction arguments ride on.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "json.hpp"

#include "dtgap/bits.hpp"
#include "dtgap/parity.hpp"

namespace dtgap {

enum class Leaf : std::int8_t { Zero = 0, One = 1, Abort = 2 };

inline Leaf leaf_of(bool b) { return b ? Leaf::One : Leaf::Zero; }

struct DecisionTree {
  struct Node {
    int var = -1;  // negative marks a leaf
    int lo = -1;
    int hi = -1;
    Leaf leaf = Leaf::Zero;

    bool is_leaf() const { return var < 0; }
    bool operator==(const Node&) const = default;
  };

  int arity = 0;
  std::vector<Node> nodes;  // root at index 0

  static DecisionTree single_leaf(int arity, Leaf l);

  void validate() const;  // tree-shaped, vars in range, no repeat on any path
  std::uint64_t size() const;  // leaf count
  int depth() const;
  Leaf eval(Word y) const;

  bool operator==(const DecisionTree&) const = default;
};

struct TraceResult {
  Leaf label = Leaf::Zero;
  int length = 0;                    // queries along the path (or accepted width)
  std::vector<int> position_counts;  // per block position, when a shape is given
};

TraceResult dt_trace(const DecisionTree& tree, Word y,
                     const std::optional<BlockShape>& shape = std::nullopt);

DecisionTree restrict_tree(const DecisionTree& tree, Word z, int j, const BlockShape& shape);

// Canonical random tree with exactly min(leaves, 2^arity) leaves; leaf labels
// uniform over {0,1}, flipped to abort with probability abort_weight.
DecisionTree random_tree(std::mt19937_64& rng, int arity, std::uint64_t leaves,
                         double abort_weight = 0.0);

// {"var": v, "lo": ..., "hi": ...} at inner nodes, {"leaf": 0|1|"abort"} at
// leaves; `arity` rides alongside: {"arity": a, "root": ...}.
nlohmann::json serialize_tree(const DecisionTree& tree);
DecisionTree parse_tree(const nlohmann::json& doc);

}  // namespace dtgap
