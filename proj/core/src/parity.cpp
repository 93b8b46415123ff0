#include "dtgap/parity.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtgap {

namespace {

void check_shape(const BlockShape& shape)
{
  if (shape.blocks < 1 || shape.block_len < 1) throw std::invalid_argument("degenerate block shape");
  if (shape.arity() > kMaxVars) throw GuardExceeded("block domain exceeds 64 variables");
}

void check_position(const BlockShape& shape, int j)
{
  if (j < 0 || j >= shape.block_len)
    throw std::invalid_argument("completion position out of range");
}

}  // namespace

Word blockwise_parity(Word y, const BlockShape& shape)
{
  check_shape(shape);
  Word x = 0;
  const Word block_mask = (shape.block_len == kMaxVars)
                              ? ~Word{0}
                              : ((Word{1} << shape.block_len) - 1);
  for (int i = 0; i < shape.blocks; ++i)
    if (parity((y >> (i * shape.block_len)) & block_mask)) x |= Word{1} << i;
  return x;
}

Word parity_complete(Word z, Word x, const BlockShape& shape, int j)
{
  check_shape(shape);
  check_position(shape, j);
  Word y = 0;
  int z_cursor = 0;
  for (int i = 0; i < shape.blocks; ++i) {
    bool acc = false;
    for (int p = 0; p < shape.block_len; ++p) {
      if (p == j) continue;
      bool bit = get_bit(z, z_cursor++);
      acc ^= bit;
      y = with_bit(y, block_var(i, p, shape.block_len), bit);
    }
    y = with_bit(y, block_var(i, j, shape.block_len), acc ^ get_bit(x, i));
  }
  return y;
}

Word strip_position(Word y, const BlockShape& shape, int j)
{
  check_shape(shape);
  check_position(shape, j);
  Word z = 0;
  int z_cursor = 0;
  for (int i = 0; i < shape.blocks; ++i)
    for (int p = 0; p < shape.block_len; ++p) {
      if (p == j) continue;
      if (get_bit(y, block_var(i, p, shape.block_len)))
        z |= Word{1} << z_cursor;
      ++z_cursor;
    }
  return z;
}

FunctionRef AmplifiedFunction::ref() const
{
  auto copy = *this;
  return FunctionRef{arity(), [copy](Word y) { return copy.eval(y); }};
}

Rat AmplifiedDistribution::pmf(Word y) const
{
  Rat base_mass = base.pmf(blockwise_parity(y, shape));
  if (base_mass == 0) return 0;
  return base_mass * pow2_rat(-static_cast<long long>(shape.blocks) * (shape.block_len - 1));
}

std::uint64_t AmplifiedDistribution::support_size() const
{
  return static_cast<std::uint64_t>(base.atoms.size())
         << (static_cast<std::uint64_t>(shape.blocks) * (shape.block_len - 1));
}

ExplicitDistribution AmplifiedDistribution::to_explicit(const Guards& guards) const
{
  if (support_size() > guards.dist_max_atoms)
    throw GuardExceeded("amplified support of " + std::to_string(support_size()) +
                        " atoms exceeds guard");
  const int z_bits = shape.blocks * (shape.block_len - 1);
  const Rat scale = pow2_rat(-static_cast<long long>(z_bits));
  ExplicitDistribution out;
  out.arity = arity();
  out.atoms.reserve(support_size());
  for (size_t a = 0; a < base.atoms.size(); ++a)
    for (Word z = 0; z < (Word{1} << z_bits); ++z) {
      out.atoms.push_back(parity_complete(z, base.atoms[a], shape, 0));
      out.probs.push_back(base.probs[a] * scale);
    }
  // Canonical order: ascending as words.
  std::vector<size_t> order(out.atoms.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return out.atoms[a] < out.atoms[b]; });
  ExplicitDistribution sorted;
  sorted.arity = out.arity;
  sorted.atoms.reserve(order.size());
  sorted.probs.reserve(order.size());
  for (size_t i : order) {
    sorted.atoms.push_back(out.atoms[i]);
    sorted.probs.push_back(out.probs[i]);
  }
  sorted.validate();
  return sorted;
}

namespace {

void check_ell(int ell, bool allow_identity_embedding)
{
  if (ell < 1) throw std::invalid_argument("block length must be positive");
  if (ell == 1 && !allow_identity_embedding)
    throw std::invalid_argument(
        "block length 1 is the identity embedding; pass the explicit override to allow it");
}

}  // namespace

AmplifiedFunction amplify_function(const PartialFunctionTable& base, int ell,
                                   bool allow_identity_embedding)
{
  check_ell(ell, allow_identity_embedding);
  BlockShape shape{base.arity, ell};
  check_shape(shape);
  PartialFunctionTable labeled = base;
  labeled.label.ell = ell;
  return AmplifiedFunction{std::move(labeled), shape};
}

AmplifiedDistribution amplify_distribution(const ExplicitDistribution& base, int ell,
                                           bool allow_identity_embedding)
{
  check_ell(ell, allow_identity_embedding);
  base.validate();
  BlockShape shape{base.arity, ell};
  check_shape(shape);
  return AmplifiedDistribution{base, shape};
}

bool pmf_equivalence_check(const ExplicitDistribution& base, int ell, int j,
                           const Guards& guards)
{
  AmplifiedDistribution lifted = amplify_distribution(base, ell, /*allow_identity=*/true);
  if (lifted.arity() > guards.pmf_check_max_bits)
    throw GuardExceeded("pmf equivalence sweep over " + std::to_string(lifted.arity()) +
                        " bits exceeds guard");
  const int z_bits = lifted.shape.blocks * (ell - 1);

  // Pushforward of (uniform z) x (base atom) through the position-j completion.
  // Every pushed point and every lifted pmf value carries the same positive
  // factor 2^-z_bits, so the per-point comparison may cancel it from both
  // sides and work with the base masses directly.
  std::vector<std::pair<Word, std::uint32_t>> push;
  push.reserve(lifted.support_size());
  for (std::uint32_t a = 0; a < base.atoms.size(); ++a)
    for (Word z = 0; z < (Word{1} << z_bits); ++z)
      push.emplace_back(parity_complete(z, base.atoms[a], lifted.shape, j), a);
  std::sort(push.begin(), push.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // The completion is a bijection for fixed j, so no mass merging is needed —
  // but verify that too rather than assume it.
  for (size_t i = 0; i + 1 < push.size(); ++i)
    if (push[i].first == push[i + 1].first) return false;

  // Pushed mass probs[a] * 2^-z_bits must equal the closed form
  // base.pmf(projection) * 2^-z_bits at every point.
  for (const auto& [y, a] : push) {
    const Word x = blockwise_parity(y, lifted.shape);
    size_t b = 0;
    while (b < base.atoms.size() && base.atoms[b] != x) ++b;
    if (b == base.atoms.size()) return false;  // left the lifted support
    if (base.probs[b] != base.probs[a]) return false;
  }

  // Same total mass on both sides: each atom must contribute exactly one point
  // per completion seed, which pins the pushforward total at sum(probs).
  std::vector<std::uint64_t> counts(base.atoms.size(), 0);
  for (const auto& [y, a] : push) ++counts[a];
  for (std::uint64_t c : counts)
    if (c != (std::uint64_t{1} << z_bits)) return false;
  Rat total = 0;
  for (const Rat& p : base.probs) total += p;
  return total == 1;
}

}  // namespace dtgap
