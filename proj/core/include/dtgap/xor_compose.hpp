#pragma once

// XOR powering: f^(+m) evaluates f on m disjoint blocks of inputs and XORs
// the answers; the matching distribution is the m-fold product.  Composing
// with a tree multiplies depth by m (copy c's tree hangs off every leaf of
// copy c-1, leaves re-labeled by accumulated parity).
//
// The two-stage parameter schedule first rides a constant-accuracy stage
// (m1 = ceil(c1/eps) copies push any eps-advantage down to the fixed
// intermediate gap 1/800, provided hypotheses abort with probability at
// least 0.34), then a stretch stage (m2 = ceil(c2*log2(1/gamma)) copies
// reach distance 1/2 - gamma).  drucker_bound is the closed-form
// depth-versus-error tradeoff driving both stages; alpha is its free
// parameter, canonically pinned by 6*alpha*ln(2/alpha) = 1, at which point
// the bound collapses to (1 - (1-eps)^m) / 2.

#include <cstdint>

#include "dtgap/construction.hpp"
#include "dtgap/decision_tree.hpp"
#include "dtgap/guards.hpp"
#include "dtgap/rational.hpp"

namespace dtgap {

FunctionRef xor_power_function(const FunctionRef& base, int m);

// Product over m copies; support is the m-fold product of base atoms, ordered
// ascending as words.  Guard: |atoms|^m <= guards.product_max_atoms.
ExplicitDistribution xor_power_distribution(const ExplicitDistribution& base, int m,
                                            const Guards& guards = {});

// base tree repeated m times with parity-accumulating leaves; depth scales by
// m, size by power.  m = 1 returns base unchanged.
DecisionTree xor_compose_tree(const DecisionTree& base, int m);

double canonical_alpha();  // root of 6*alpha*ln(2/alpha) = 1 in (0, 2/e), 1e-12 residual

// (1 - (1 - 2*eps + 6*alpha*ln(2/alpha)*eps)^m) / 2
double drucker_bound(double eps, double alpha, std::uint64_t m);

struct XorParams {
  std::uint64_t m1 = 1;  // constant-accuracy stage copies
  std::uint64_t m2 = 1;  // stretch stage copies
  double alpha = 0.0;

  std::uint64_t copies() const { return m1 * m2; }
};

// m1 = ceil(c1/eps), m2 = ceil(c2*log2(1/gamma)) — both exact integer
// arithmetic — alpha canonical.
XorParams amplification_params(const Rat& eps, const Rat& gamma, const Rat& c1 = 1,
                               const Rat& c2 = 1);

}  // namespace dtgap
