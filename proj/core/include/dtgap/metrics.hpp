#pragma once

// Exact and sampled disagreement metrics.  Distance counts the probability
// mass where the hypothesis outputs a definite wrong answer; abort outputs
// never count as disagreement (they are budgeted separately by abort_prob).
// The target function must be defined on every distribution atom.

#include <cstdint>
#include <functional>
#include <vector>

#include "dtgap/construction.hpp"
#include "dtgap/decision_tree.hpp"
#include "dtgap/dnf.hpp"
#include "dtgap/generator.hpp"
#include "dtgap/rational.hpp"

namespace dtgap {

using HypothesisFn = std::function<Leaf(Word)>;

inline HypothesisFn hypothesis_of(const DecisionTree& t)
{
  return [t](Word y) { return t.eval(y); };
}

inline HypothesisFn hypothesis_of(const DnfFormula& f)
{
  return [f](Word y) { return leaf_of(f.eval(y)); };
}

Rat dist_exact(const HypothesisFn& h, const FunctionRef& f, const ExplicitDistribution& dist);
Rat dist_exact(const DecisionTree& h, const FunctionRef& f, const ExplicitDistribution& dist);
Rat dist_exact(const DnfFormula& h, const FunctionRef& f, const ExplicitDistribution& dist);

struct McEstimate {
  Rat estimate;           // disagreeing samples / total samples
  double radius = 0.0;    // sqrt(ln(2/delta) / (2 samples))
  double delta = 0.01;    // two-sided failure probability behind the radius
  std::uint64_t samples = 0;
};

// Draws `samples` seeds from a per-call mt19937_64 stream and pushes them
// through the generator; deterministic given (seed, samples).
McEstimate dist_mc(const HypothesisFn& h, const FunctionRef& f, const GeneratorSpec& gen,
                   std::uint64_t samples, std::uint64_t seed);

Rat avg_depth(const DecisionTree& t, const ExplicitDistribution& dist);
Rat avg_width(const DnfFormula& f, const ExplicitDistribution& dist);
Rat abort_prob(const DecisionTree& t, const ExplicitDistribution& dist);

struct LeafStat {
  int depth = 0;
  Leaf label = Leaf::Zero;
  Rat reach;  // probability mass arriving at this leaf
};

// One entry per leaf, in node order.
std::vector<LeafStat> leaf_profile(const DecisionTree& t, const ExplicitDistribution& dist);

}  // namespace dtgap
