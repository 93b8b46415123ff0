#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dtgap {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical "p/q" form, q > 0, gcd(p, q) = 1.  Integers render as "p/1".
inline std::string fraction_string(const Rat& r)
{
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p/q" or a bare integer "p".
inline Rat parse_fraction(const std::string& s)
{
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

// 2^k as an exact rational, k may be negative.
inline Rat pow2_rat(long long k)
{
  Int one = 1;
  if (k >= 0) return Rat(one << static_cast<unsigned>(k), 1);
  return Rat(1, one << static_cast<unsigned>(-k));
}

inline Int pow_int(Int base, std::uint64_t exp)
{
  Int acc = 1;
  while (exp) {
    if (exp & 1) acc *= base;
    base *= base;
    exp >>= 1;
  }
  return acc;
}

// x <= 2^e decided exactly for rational x > 0 and rational e = p/q (q > 0):
// raise both sides to the q-th power and compare integers.
inline bool leq_two_power(const Rat& x, const Rat& e)
{
  if (x <= 0) return true;
  Int a = numerator(x), b = denominator(x);
  Int p = numerator(e);
  std::uint64_t q = denominator(e).convert_to<std::uint64_t>();
  Int lhs = pow_int(a, q);
  Int rhs = pow_int(b, q);
  if (p >= 0)
    rhs <<= p.convert_to<unsigned>();
  else
    lhs <<= (-p).convert_to<unsigned>();
  return lhs <= rhs;
}

// x <= m * log2(s) decided exactly (s >= 1 integer, x rational): equivalent to
// 2^num(x) <= s^(m*den(x)).
inline bool leq_log2_multiple(const Rat& x, const Int& s, std::uint64_t m)
{
  if (s < 1) throw std::invalid_argument("log2 of non-positive size");
  if (x <= 0) return true;  // m*log2(s) >= 0 for s >= 1
  Int a = numerator(x);
  std::uint64_t b = denominator(x).convert_to<std::uint64_t>();
  Int lhs = Int(1) << a.convert_to<unsigned>();
  Int rhs = pow_int(s, m * b);
  return lhs <= rhs;
}

// Largest integer strictly below 2^e for rational e >= 0; 0 when 2^e <= 1.
// Desk-scale helper: the result must fit in 64 bits.
inline std::uint64_t max_int_strictly_below_pow2(const Rat& e)
{
  if (e < 0) return 0;
  Int p = numerator(e);
  std::uint64_t q = denominator(e).convert_to<std::uint64_t>();
  if (p.convert_to<std::uint64_t>() / q > 62)
    throw std::overflow_error("power-of-two threshold exceeds 64-bit range");
  // s < 2^(p/q)  <=>  s^q < 2^p
  Int two_p = Int(1) << p.convert_to<unsigned>();
  std::uint64_t lo = 0, hi = (std::uint64_t{1} << (p.convert_to<std::uint64_t>() / q + 1));
  while (lo < hi) {  // find largest s with s^q < 2^p
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (pow_int(Int(mid), q) < two_p)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace dtgap
