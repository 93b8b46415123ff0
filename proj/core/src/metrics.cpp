#include "dtgap/metrics.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace dtgap {

Rat dist_exact(const HypothesisFn& h, const FunctionRef& f, const ExplicitDistribution& dist)
{
  if (f.arity != dist.arity)
    throw std::invalid_argument("target arity does not match distribution arity");
  Rat err = 0;
  for (size_t i = 0; i < dist.atoms.size(); ++i) {
    const Leaf out = h(dist.atoms[i]);
    if (out == Leaf::Abort) continue;
    if ((out == Leaf::One) != f.eval(dist.atoms[i])) err += dist.probs[i];
  }
  return err;
}

Rat dist_exact(const DecisionTree& h, const FunctionRef& f, const ExplicitDistribution& dist)
{
  if (h.arity != dist.arity) throw std::invalid_argument("hypothesis arity mismatch");
  return dist_exact(hypothesis_of(h), f, dist);
}

Rat dist_exact(const DnfFormula& h, const FunctionRef& f, const ExplicitDistribution& dist)
{
  if (h.arity != dist.arity) throw std::invalid_argument("hypothesis arity mismatch");
  return dist_exact(hypothesis_of(h), f, dist);
}

McEstimate dist_mc(const HypothesisFn& h, const FunctionRef& f, const GeneratorSpec& gen,
                   std::uint64_t samples, std::uint64_t seed)
{
  if (samples == 0) throw std::invalid_argument("sample count must be positive");
  if (f.arity != gen.output_bits())
    throw std::invalid_argument("target arity does not match generator output");
  std::mt19937_64 rng(seed);
  std::uint64_t disagreements = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Word y = gen.run(rng());
    const Leaf out = h(y);
    if (out == Leaf::Abort) continue;
    if ((out == Leaf::One) != f.eval(y)) ++disagreements;
  }
  McEstimate est;
  est.estimate = Rat(disagreements, samples);
  est.delta = 0.01;
  est.radius = std::sqrt(std::log(2.0 / est.delta) / (2.0 * static_cast<double>(samples)));
  est.samples = samples;
  return est;
}

Rat avg_depth(const DecisionTree& t, const ExplicitDistribution& dist)
{
  if (t.arity != dist.arity) throw std::invalid_argument("tree arity mismatch");
  Rat total = 0;
  for (size_t i = 0; i < dist.atoms.size(); ++i)
    total += dist.probs[i] * dt_trace(t, dist.atoms[i]).length;
  return total;
}

Rat avg_width(const DnfFormula& f, const ExplicitDistribution& dist)
{
  if (f.arity != dist.arity) throw std::invalid_argument("formula arity mismatch");
  Rat total = 0;
  for (size_t i = 0; i < dist.atoms.size(); ++i)
    total += dist.probs[i] * dnf_trace(f, dist.atoms[i]).length;
  return total;
}

Rat abort_prob(const DecisionTree& t, const ExplicitDistribution& dist)
{
  if (t.arity != dist.arity) throw std::invalid_argument("tree arity mismatch");
  Rat total = 0;
  for (size_t i = 0; i < dist.atoms.size(); ++i)
    if (t.eval(dist.atoms[i]) == Leaf::Abort) total += dist.probs[i];
  return total;
}

std::vector<LeafStat> leaf_profile(const DecisionTree& t, const ExplicitDistribution& dist)
{
  if (t.arity != dist.arity) throw std::invalid_argument("tree arity mismatch");
  // node index -> (depth, accumulated mass); only leaves are reported.
  std::map<int, Rat> reach;
  for (size_t i = 0; i < dist.atoms.size(); ++i) {
    int node = 0;
    while (!t.nodes[static_cast<size_t>(node)].is_leaf()) {
      const auto& n = t.nodes[static_cast<size_t>(node)];
      node = get_bit(dist.atoms[i], n.var) ? n.hi : n.lo;
    }
    reach[node] += dist.probs[i];
  }
  // Depths via traversal from the root; node order is not guaranteed to put
  // children after parents.
  std::vector<int> depth(t.nodes.size(), 0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int idx = stack.back();
    stack.pop_back();
    const auto& n = t.nodes[static_cast<size_t>(idx)];
    if (n.is_leaf()) continue;
    depth[static_cast<size_t>(n.lo)] = depth[static_cast<size_t>(idx)] + 1;
    depth[static_cast<size_t>(n.hi)] = depth[static_cast<size_t>(idx)] + 1;
    stack.push_back(n.lo);
    stack.push_back(n.hi);
  }
  std::vector<LeafStat> out;
  for (size_t idx = 0; idx < t.nodes.size(); ++idx)
    if (t.nodes[idx].is_leaf()) {
      LeafStat stat;
      stat.depth = depth[idx];
      stat.label = t.nodes[idx].leaf;
      auto it = reach.find(static_cast<int>(idx));
      stat.reach = it == reach.end() ? Rat(0) : it->second;
      out.push_back(std::move(stat));
    }
  return out;
}

}  // namespace dtgap
