#pragma once

// Seed-driven sampler for the lifted distribution.  Seed layout, low bits
// first:
//
//   [ n*(ell-1) completion bits z | 1 selector bit | ceil(log2 |U|) index bits ]
//
// Selector 0 embeds the all-zeros base point, selector 1 the element encoding
// picked by the index bits; the output is parity_complete(z, x, j = 0).  Bits
// beyond seed_bits() are ignored, so any seed source of at least that width
// works.
//
// When |U| is not a power of two the index table is padded round-robin with
// replicated encodings.  No finite uniform seed can hit mass exactly 1/(2|U|)
// then (powers of two have no odd factors), so the spec'd target of such a
// generator is its own declared pushforward: atom masses count[u] / 2^(b+1)
// scaled by 2^(-n(ell-1)), with the multiplicities recorded here and in bundle
// metadata.  For power-of-two |U| the declared target coincides with the
// analytic lifted distribution exactly.

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "dtgap/construction.hpp"
#include "dtgap/guards.hpp"
#include "dtgap/parity.hpp"
#include "dtgap/setcover.hpp"

namespace dtgap {

struct GeneratorSpec {
  BlockShape shape;                // n blocks of length ell
  int completion_position = 0;     // j, fixed to 0 by the builder
  int index_bits = 0;              // ceil(log2 |U|)
  std::vector<Word> atom_table;    // 2^index_bits element encodings, padded round-robin
  int unpadded_atoms = 0;          // |U| before padding
  int copies = 1;                  // independent copies, seeds and outputs concatenated

  int z_bits() const { return shape.blocks * (shape.block_len - 1); }
  int base_seed_bits() const { return z_bits() + 1 + index_bits; }
  int base_output_bits() const { return shape.arity(); }
  int seed_bits() const { return copies * base_seed_bits(); }
  int output_bits() const { return copies * base_output_bits(); }
  bool padded() const { return static_cast<size_t>(unpadded_atoms) != atom_table.size(); }

  Word run(Word seed) const;

  // Declared target pmf: the exact pushforward of a uniform seed.
  Rat pmf(Word y) const;
  // Same thing as an explicit list (guard: seed space within
  // guards.generator_max_seed_bits).
  ExplicitDistribution declared_target(const Guards& guards = {}) const;
};

// Requires a normalized instance (distinct nonempty neighborhoods and
// 1 + ceil(log2 |U|) <= n, which caps seed_bits() at n*ell).
GeneratorSpec build_generator(const SetCoverInstance& inst, int ell,
                              bool allow_identity_embedding = false);

// m independent copies of a single-copy generator; seed and output chunks
// concatenate low-to-high, pmf multiplies.
GeneratorSpec xor_power_generator(const GeneratorSpec& base, int m);

nlohmann::json serialize_generator(const GeneratorSpec& gen);
GeneratorSpec parse_generator(const nlohmann::json& doc);

}  // namespace dtgap
