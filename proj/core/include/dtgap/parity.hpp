#pragma once

// Parity amplification: each of the n base variables is replaced by a block of
// ell fresh variables whose XOR recovers it.  A point y on n*ell variables
// projects to blockwise_parity(y) on n variables; conversely parity_complete
// embeds a base point x into the block domain given free bits z for the
// positions other than one designated completion position j.
//
// Amplifying a function composes it with the projection; amplifying a
// distribution lifts every base atom to the uniform mixture over its parity
// class, i.e. multiplies each base mass by 2^(-n(ell-1)).  The lifted
// distribution is invariant under which position j the completion fills —
// pmf_equivalence_check verifies that identity exhaustively.

#include <cstdint>
#include <vector>

#include "dtgap/construction.hpp"
#include "dtgap/guards.hpp"

namespace dtgap {

struct BlockShape {
  int blocks = 0;     // n
  int block_len = 1;  // ell

  int arity() const { return blocks * block_len; }
};

// x_i = XOR of block i of y.
Word blockwise_parity(Word y, const BlockShape& shape);

// Fills position j (0-based) of every block so block parities equal x; the
// other ell-1 positions of block i come from z in position order.  z uses
// n*(ell-1) bits, block-major.  For fixed j this is a bijection (z, x) <-> y.
Word parity_complete(Word z, Word x, const BlockShape& shape, int j);

// Inverse direction: the z that parity_complete would consume to rebuild y.
Word strip_position(Word y, const BlockShape& shape, int j);

struct AmplifiedFunction {
  PartialFunctionTable base;
  BlockShape shape;

  int arity() const { return shape.arity(); }
  bool defined(Word y) const { return base.defined(blockwise_parity(y, shape)); }
  bool eval(Word y) const { return base.eval(blockwise_parity(y, shape)); }
  FunctionRef ref() const;
};

struct AmplifiedDistribution {
  ExplicitDistribution base;
  BlockShape shape;

  int arity() const { return shape.arity(); }
  Rat pmf(Word y) const;  // base.pmf(projection) * 2^(-n(ell-1)); 0 off support
  std::uint64_t support_size() const;
  // Explicit atoms in increasing word order.  Guard: support_size() <= dist_max_atoms.
  ExplicitDistribution to_explicit(const Guards& guards = {}) const;
};

// ell >= 2 unless identity embedding is explicitly requested (debug escape
// hatch; ell = 1 then amplifies to a relabeled copy of the base pair).
AmplifiedFunction amplify_function(const PartialFunctionTable& base, int ell,
                                   bool allow_identity_embedding = false);
AmplifiedDistribution amplify_distribution(const ExplicitDistribution& base, int ell,
                                           bool allow_identity_embedding = false);

// Pushes the uniform (z, x~base) pair through parity_complete at position j
// and compares with the closed-form lifted pmf.  Exact equality, no tolerance.
// Guard: n*ell <= guards.pmf_check_max_bits.
bool pmf_equivalence_check(const ExplicitDistribution& base, int ell, int j,
                           const Guards& guards = {});

}  // namespace dtgap
