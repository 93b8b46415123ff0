#include "dtgap/decision_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtgap {

DecisionTree DecisionTree::single_leaf(int arity, Leaf l)
{
  DecisionTree t;
  t.arity = arity;
  Node node;
  node.leaf = l;
  t.nodes.push_back(node);
  return t;
}

namespace {

void validate_walk(const DecisionTree& t, int node, Word seen_vars, std::vector<bool>& visited)
{
  if (node < 0 || static_cast<size_t>(node) >= t.nodes.size())
    throw std::invalid_argument("tree child index out of range");
  if (visited[static_cast<size_t>(node)])
    throw std::invalid_argument("node reachable twice; not a tree");
  visited[static_cast<size_t>(node)] = true;
  const auto& n = t.nodes[static_cast<size_t>(node)];
  if (n.is_leaf()) return;
  if (n.var >= t.arity) throw std::invalid_argument("query variable out of range");
  if (get_bit(seen_vars, n.var))
    throw std::invalid_argument("variable repeats on a root-to-leaf path");
  validate_walk(t, n.lo, with_bit(seen_vars, n.var, true), visited);
  validate_walk(t, n.hi, with_bit(seen_vars, n.var, true), visited);
}

}  // namespace

void DecisionTree::validate() const
{
  if (nodes.empty()) throw std::invalid_argument("tree needs at least one node");
  if (arity < 0 || arity > kMaxVars) throw std::invalid_argument("tree arity out of range");
  std::vector<bool> visited(nodes.size(), false);
  validate_walk(*this, 0, 0, visited);
}

std::uint64_t DecisionTree::size() const
{
  std::uint64_t leaves = 0;
  for (const Node& n : nodes)
    if (n.is_leaf()) ++leaves;
  return leaves;
}

namespace {

int depth_walk(const DecisionTree& t, int node)
{
  const auto& n = t.nodes[static_cast<size_t>(node)];
  if (n.is_leaf()) return 0;
  return 1 + std::max(depth_walk(t, n.lo), depth_walk(t, n.hi));
}

}  // namespace

int DecisionTree::depth() const { return depth_walk(*this, 0); }

Leaf DecisionTree::eval(Word y) const
{
  int node = 0;
  while (!nodes[static_cast<size_t>(node)].is_leaf()) {
    const Node& n = nodes[static_cast<size_t>(node)];
    node = get_bit(y, n.var) ? n.hi : n.lo;
  }
  return nodes[static_cast<size_t>(node)].leaf;
}

TraceResult dt_trace(const DecisionTree& tree, Word y, const std::optional<BlockShape>& shape)
{
  TraceResult r;
  if (shape) r.position_counts.assign(static_cast<size_t>(shape->block_len), 0);
  int node = 0;
  while (!tree.nodes[static_cast<size_t>(node)].is_leaf()) {
    const auto& n = tree.nodes[static_cast<size_t>(node)];
    ++r.length;
    if (shape) ++r.position_counts[static_cast<size_t>(n.var % shape->block_len)];
    node = get_bit(y, n.var) ? n.hi : n.lo;
  }
  r.label = tree.nodes[static_cast<size_t>(node)].leaf;
  return r;
}

namespace {

// z-bit feeding position p != j of block i under the block-major layout.
int z_index(int i, int p, int j, int ell) { return i * (ell - 1) + (p < j ? p : p - 1); }

int restrict_walk(const DecisionTree& tree, int node, Word z, int j, const BlockShape& shape,
                  DecisionTree& out)
{
  const auto& n = tree.nodes[static_cast<size_t>(node)];
  if (n.is_leaf()) {
    out.nodes.push_back(n);
    return static_cast<int>(out.nodes.size()) - 1;
  }
  const int i = n.var / shape.block_len;
  const int p = n.var % shape.block_len;
  if (p != j) {
    // Resolved by the completion seed; the node contracts away.
    const bool bit = get_bit(z, z_index(i, p, j, shape.block_len));
    return restrict_walk(tree, bit ? n.hi : n.lo, z, j, shape, out);
  }
  // Position j of block i carries x_i XOR (parity of the seeded bits of block
  // i), so the query survives as a query of x_i, children swapped on odd
  // parity.
  bool swap = false;
  for (int p2 = 0; p2 < shape.block_len; ++p2)
    if (p2 != j) swap ^= get_bit(z, z_index(i, p2, j, shape.block_len));
  DecisionTree::Node fresh;
  fresh.var = i;
  out.nodes.push_back(fresh);
  const int slot = static_cast<int>(out.nodes.size()) - 1;
  const int lo = restrict_walk(tree, swap ? n.hi : n.lo, z, j, shape, out);
  const int hi = restrict_walk(tree, swap ? n.lo : n.hi, z, j, shape, out);
  out.nodes[static_cast<size_t>(slot)].lo = lo;
  out.nodes[static_cast<size_t>(slot)].hi = hi;
  return slot;
}

}  // namespace

DecisionTree restrict_tree(const DecisionTree& tree, Word z, int j, const BlockShape& shape)
{
  if (tree.arity != shape.arity())
    throw std::invalid_argument("tree arity does not match block shape");
  if (j < 0 || j >= shape.block_len)
    throw std::invalid_argument("completion position out of range");
  DecisionTree out;
  out.arity = shape.blocks;
  // restrict_walk appends parents before children, so the surviving root (or
  // the leaf a fully-contracted tree collapses to) lands at index 0.
  restrict_walk(tree, 0, z, j, shape, out);
  out.validate();
  return out;
}

namespace {

int random_walk(std::mt19937_64& rng, std::vector<int>& avail, std::uint64_t leaves,
                double abort_weight, DecisionTree& out)
{
  if (leaves == 1 || avail.empty()) {
    DecisionTree::Node leaf;
    leaf.leaf = leaf_of(rng() & 1);
    if (abort_weight > 0 &&
        std::uniform_real_distribution<double>(0.0, 1.0)(rng) < abort_weight)
      leaf.leaf = Leaf::Abort;
    out.nodes.push_back(leaf);
    return static_cast<int>(out.nodes.size()) - 1;
  }
  const size_t pick = std::uniform_int_distribution<size_t>(0, avail.size() - 1)(rng);
  std::swap(avail[pick], avail.back());
  const int var = avail.back();
  avail.pop_back();

  const std::uint64_t cap =
      avail.size() >= 63 ? (std::uint64_t{1} << 63) : (std::uint64_t{1} << avail.size());
  const std::uint64_t lo_min = leaves > cap ? leaves - cap : 1;
  const std::uint64_t lo_max = std::min<std::uint64_t>(cap, leaves - 1);
  const std::uint64_t lo_leaves =
      std::uniform_int_distribution<std::uint64_t>(lo_min, lo_max)(rng);

  DecisionTree::Node inner;
  inner.var = var;
  out.nodes.push_back(inner);
  const int slot = static_cast<int>(out.nodes.size()) - 1;
  const int lo = random_walk(rng, avail, lo_leaves, abort_weight, out);
  const int hi = random_walk(rng, avail, leaves - lo_leaves, abort_weight, out);
  out.nodes[static_cast<size_t>(slot)].lo = lo;
  out.nodes[static_cast<size_t>(slot)].hi = hi;

  avail.push_back(var);
  std::swap(avail[pick], avail.back());
  return slot;
}

}  // namespace

DecisionTree random_tree(std::mt19937_64& rng, int arity, std::uint64_t leaves,
                         double abort_weight)
{
  if (arity < 0 || arity > kMaxVars) throw std::invalid_argument("tree arity out of range");
  const std::uint64_t cap = arity >= 63 ? (std::uint64_t{1} << 63) : (std::uint64_t{1} << arity);
  leaves = std::max<std::uint64_t>(1, std::min(leaves, cap));
  DecisionTree out;
  out.arity = arity;
  std::vector<int> avail(static_cast<size_t>(arity));
  for (int v = 0; v < arity; ++v) avail[static_cast<size_t>(v)] = v;
  random_walk(rng, avail, leaves, abort_weight, out);
  out.validate();
  return out;
}

namespace {

nlohmann::json serialize_node(const DecisionTree& tree, int node)
{
  const auto& n = tree.nodes[static_cast<size_t>(node)];
  if (n.is_leaf()) {
    if (n.leaf == Leaf::Abort) return nlohmann::json{{"leaf", "abort"}};
    return nlohmann::json{{"leaf", n.leaf == Leaf::One ? 1 : 0}};
  }
  return nlohmann::json{
      {"var", n.var}, {"lo", serialize_node(tree, n.lo)}, {"hi", serialize_node(tree, n.hi)}};
}

int parse_node(const nlohmann::json& doc, DecisionTree& out)
{
  if (!doc.is_object()) throw std::invalid_argument("tree nodes must be JSON objects");
  if (doc.contains("leaf")) {
    DecisionTree::Node leaf;
    const auto& v = doc["leaf"];
    if (v.is_string() && v.get<std::string>() == "abort")
      leaf.leaf = Leaf::Abort;
    else if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1))
      leaf.leaf = leaf_of(v.get<int>() == 1);
    else
      throw std::invalid_argument("leaf must be 0, 1, or \"abort\"");
    out.nodes.push_back(leaf);
    return static_cast<int>(out.nodes.size()) - 1;
  }
  if (!doc.contains("var") || !doc.contains("lo") || !doc.contains("hi"))
    throw std::invalid_argument("inner nodes need var/lo/hi");
  DecisionTree::Node inner;
  inner.var = doc["var"].get<int>();
  out.nodes.push_back(inner);
  const int slot = static_cast<int>(out.nodes.size()) - 1;
  const int lo = parse_node(doc["lo"], out);
  const int hi = parse_node(doc["hi"], out);
  out.nodes[static_cast<size_t>(slot)].lo = lo;
  out.nodes[static_cast<size_t>(slot)].hi = hi;
  return slot;
}

}  // namespace

nlohmann::json serialize_tree(const DecisionTree& tree)
{
  tree.validate();
  return nlohmann::json{{"arity", tree.arity}, {"root", serialize_node(tree, 0)}};
}

DecisionTree parse_tree(const nlohmann::json& doc)
{
  if (!doc.is_object() || !doc.contains("arity") || !doc.contains("root"))
    throw std::invalid_argument("tree document needs arity and root");
  DecisionTree out;
  out.arity = doc["arity"].get<int>();
  parse_node(doc["root"], out);
  out.validate();
  return out;
}

}  // namespace dtgap
