#include "dtgap/grid.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "dtgap/bits.hpp"
#include "dtgap/rational.hpp"

namespace dtgap {

namespace {

void check_shape(int n, int u)
{
  if (n < 1 || n > 20) throw std::invalid_argument("set count out of range");
  if (u < 1 || u > 20) throw std::invalid_argument("element count out of range");
}

bool shape_admits_instances(int n, int u)
{
  return 1 + ceil_log2(static_cast<std::uint64_t>(u)) <= n &&
         static_cast<Word>(u) <= (Word{1} << n) - 1;
}

SetCoverInstance from_masks(int n, const std::vector<Word>& masks)
{
  SetCoverInstance inst;
  for (int i = 0; i < n; ++i) inst.sets.push_back("s" + std::to_string(i));
  for (size_t j = 0; j < masks.size(); ++j) inst.universe.push_back("e" + std::to_string(j));
  inst.neighborhoods = masks;
  return inst;
}

}  // namespace

std::vector<SetCoverInstance> enumerate_instances(int n, int u)
{
  check_shape(n, u);
  std::vector<SetCoverInstance> out;
  if (!shape_admits_instances(n, u)) return out;

  std::vector<Word> combo(static_cast<size_t>(u));
  for (int j = 0; j < u; ++j) combo[static_cast<size_t>(j)] = static_cast<Word>(j) + 1;
  const Word top = (Word{1} << n) - 1;
  while (true) {
    out.push_back(from_masks(n, combo));
    int j = u - 1;
    while (j >= 0 && combo[static_cast<size_t>(j)] == top - static_cast<Word>(u - 1 - j)) --j;
    if (j < 0) break;
    ++combo[static_cast<size_t>(j)];
    for (int k = j + 1; k < u; ++k)
      combo[static_cast<size_t>(k)] = combo[static_cast<size_t>(k - 1)] + 1;
  }
  return out;
}

std::uint64_t count_instances(int n, int u)
{
  check_shape(n, u);
  if (!shape_admits_instances(n, u)) return 0;
  const Int pool = (Int(1) << n) - 1;
  Int result = 1;
  for (int i = 0; i < u; ++i) result = result * (pool - i) / (i + 1);
  if (result > Int(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error("instance count exceeds 64 bits");
  return result.convert_to<std::uint64_t>();
}

SetCoverInstance random_instance(int n, int u, std::uint64_t seed)
{
  check_shape(n, u);
  if (!shape_admits_instances(n, u))
    throw std::invalid_argument("no normalized instance has this shape");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Word> draw(1, (Word{1} << n) - 1);
  std::set<Word> masks;
  while (masks.size() < static_cast<size_t>(u)) masks.insert(draw(rng));
  return from_masks(n, std::vector<Word>(masks.begin(), masks.end()));
}

}  // namespace dtgap
