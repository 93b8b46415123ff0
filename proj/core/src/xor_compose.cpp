#include "dtgap/xor_compose.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dtgap {

FunctionRef xor_power_function(const FunctionRef& base, int m)
{
  if (m < 1) throw std::invalid_argument("copy count must be >= 1");
  if (base.arity * m > kMaxVars) throw GuardExceeded("composed arity exceeds 64 variables");
  const int arity = base.arity;
  const auto eval = base.eval;
  const Word block_mask = (arity == kMaxVars) ? ~Word{0} : ((Word{1} << arity) - 1);
  return FunctionRef{arity * m, [eval, arity, m, block_mask](Word y) {
                       bool acc = false;
                       for (int c = 0; c < m; ++c)
                         acc ^= eval((y >> (c * arity)) & block_mask);
                       return acc;
                     }};
}

ExplicitDistribution xor_power_distribution(const ExplicitDistribution& base, int m,
                                            const Guards& guards)
{
  if (m < 1) throw std::invalid_argument("copy count must be >= 1");
  base.validate();
  if (base.arity * m > kMaxVars) throw GuardExceeded("composed arity exceeds 64 variables");
  double scale = 1.0;
  for (int c = 0; c < m; ++c) {
    scale *= static_cast<double>(base.atoms.size());
    if (scale > static_cast<double>(guards.product_max_atoms))
      throw GuardExceeded("product support exceeds guard");
  }
  ExplicitDistribution out;
  out.arity = base.arity * m;
  out.atoms.push_back(0);
  out.probs.push_back(1);
  for (int c = 0; c < m; ++c) {
    ExplicitDistribution next;
    next.arity = out.arity;
    for (size_t i = 0; i < out.atoms.size(); ++i)
      for (size_t a = 0; a < base.atoms.size(); ++a) {
        next.atoms.push_back(out.atoms[i] | (base.atoms[a] << (c * base.arity)));
        next.probs.push_back(out.probs[i] * base.probs[a]);
      }
    out = std::move(next);
  }
  // Ascending word order for a canonical layout.
  std::vector<size_t> order(out.atoms.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return out.atoms[a] < out.atoms[b]; });
  ExplicitDistribution sorted;
  sorted.arity = out.arity;
  for (size_t i : order) {
    sorted.atoms.push_back(out.atoms[i]);
    sorted.probs.push_back(out.probs[i]);
  }
  sorted.validate();
  return sorted;
}

namespace {

// Appends a copy of `base` for copy index c, with leaves continuing into the
// next copy (or resolving to the accumulated parity at the last).
int compose_walk(const DecisionTree& base, int node, int c, int m, bool parity_so_far,
                 DecisionTree& out)
{
  const auto& n = base.nodes[static_cast<size_t>(node)];
  if (n.is_leaf()) {
    if (n.leaf == Leaf::Abort) {
      // Aborting anywhere aborts the composition.
      out.nodes.push_back(n);
      return static_cast<int>(out.nodes.size()) - 1;
    }
    const bool acc = parity_so_far != (n.leaf == Leaf::One);
    if (c + 1 == m) {
      DecisionTree::Node leaf;
      leaf.leaf = leaf_of(acc);
      out.nodes.push_back(leaf);
      return static_cast<int>(out.nodes.size()) - 1;
    }
    return compose_walk(base, 0, c + 1, m, acc, out);
  }
  DecisionTree::Node inner;
  inner.var = n.var + c * base.arity;
  out.nodes.push_back(inner);
  const int slot = static_cast<int>(out.nodes.size()) - 1;
  const int lo = compose_walk(base, n.lo, c, m, parity_so_far, out);
  const int hi = compose_walk(base, n.hi, c, m, parity_so_far, out);
  out.nodes[static_cast<size_t>(slot)].lo = lo;
  out.nodes[static_cast<size_t>(slot)].hi = hi;
  return slot;
}

}  // namespace

DecisionTree xor_compose_tree(const DecisionTree& base, int m)
{
  base.validate();
  if (m < 1) throw std::invalid_argument("copy count must be >= 1");
  if (m == 1) return base;
  if (base.arity * m > kMaxVars) throw GuardExceeded("composed arity exceeds 64 variables");
  DecisionTree out;
  out.arity = base.arity * m;
  compose_walk(base, 0, 0, m, false, out);
  out.validate();
  return out;
}

double canonical_alpha()
{
  // g(alpha) = 6*alpha*ln(2/alpha) rises from 0 to its maximum at 2/e, so the
  // unique crossing of 1 below 2/e is safe to bisect.
  auto g = [](double a) { return 6.0 * a * std::log(2.0 / a); };
  double lo = 1e-12, hi = 2.0 / std::exp(1.0);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double drucker_bound(double eps, double alpha, std::uint64_t m)
{
  if (eps < 0.0 || eps > 0.5) throw std::invalid_argument("eps must lie in [0, 1/2]");
  if (alpha <= 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must lie in (0, 1]");
  const double base = 1.0 - 2.0 * eps + 6.0 * alpha * std::log(2.0 / alpha) * eps;
  return 0.5 * (1.0 - std::pow(base, static_cast<double>(m)));
}

XorParams amplification_params(const Rat& eps, const Rat& gamma, const Rat& c1, const Rat& c2)
{
  if (eps <= 0 || eps > Rat(1, 2)) throw std::invalid_argument("eps must lie in (0, 1/2]");
  if (gamma <= 0 || gamma >= Rat(1, 2)) throw std::invalid_argument("gamma must lie in (0, 1/2)");
  if (c1 <= 0 || c2 <= 0) throw std::invalid_argument("stage constants must be positive");
  XorParams params;
  const Rat ratio = c1 / eps;  // m1 = ceil(c1/eps)
  Int q = numerator(ratio) / denominator(ratio);
  if (q * denominator(ratio) != numerator(ratio)) q += 1;
  params.m1 = q.convert_to<std::uint64_t>();

  // m2 = ceil(c2*log2(1/gamma)): smallest m with 1/gamma <= 2^(m/c2).
  const Rat inv_gamma = 1 / gamma;
  std::uint64_t m = 0;
  while (!leq_two_power(inv_gamma, Rat(m) / c2)) {
    if (++m > 1'000'000) throw GuardExceeded("stretch stage size exceeds 10^6 copies");
  }
  params.m2 = m;
  params.alpha = canonical_alpha();
  return params;
}

}  // namespace dtgap
