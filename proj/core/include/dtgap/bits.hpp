#pragma once

// Fixed-width bitstring helpers.  Assignments to at most 64 boolean variables
// are packed into a Word; bit k holds variable k, and the printable form puts
// variable 0 in the leftmost character.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dtgap {

using Word = std::uint64_t;

inline constexpr int kMaxVars = 64;

inline bool get_bit(Word w, int i) { return (w >> i) & 1u; }

inline Word with_bit(Word w, int i, bool v)
{
  return v ? (w | (Word{1} << i)) : (w & ~(Word{1} << i));
}

inline bool parity(Word w) { return std::popcount(w) & 1; }

inline std::string to_bitstring(Word w, int len)
{
  std::string s(static_cast<size_t>(len), '0');
  for (int i = 0; i < len; ++i)
    if (get_bit(w, i)) s[static_cast<size_t>(i)] = '1';
  return s;
}

inline Word from_bitstring(const std::string& s)
{
  if (s.size() > kMaxVars) throw std::invalid_argument("bitstring longer than 64");
  Word w = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      w |= Word{1} << i;
    else if (s[i] != '0')
      throw std::invalid_argument("bitstring must be over {0,1}: '" + s + "'");
  }
  return w;
}

// Variable index of position p inside block i when n blocks of length ell are
// laid out contiguously.
inline int block_var(int i, int p, int ell) { return i * ell + p; }

// ceil(log2(u)) for u >= 1.
inline int ceil_log2(std::uint64_t u)
{
  if (u == 0) throw std::invalid_argument("ceil_log2(0)");
  return u == 1 ? 0 : std::bit_width(u - 1);
}

}  // namespace dtgap
