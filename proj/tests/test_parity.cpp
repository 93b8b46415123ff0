#include <doctest.h>

#include <dtgap/construction.hpp>
#include <dtgap/parity.hpp>
#include <dtgap/setcover.hpp>

#include <set>
#include <stdexcept>

using namespace dtgap;

namespace {

SetCoverInstance example() {
  SetCoverInstance inst;
  inst.sets = {"s1", "s2", "s3", "s4", "s5"};
  inst.universe = {"u1", "u2", "u3", "u4"};
  inst.neighborhoods = {0b00001, 0b00101, 0b01101, 0b10010};
  return inst;
}

} // namespace

TEST_CASE("blockwise parity projects block XORs") {
  BlockShape shape{3, 2};
  // y = 110100 printable (var 0 leftmost): blocks (1,1), (0,1), (0,0).
  Word y = from_bitstring("110100");
  CHECK(blockwise_parity(y, shape) == from_bitstring("010"));
  CHECK(blockwise_parity(0, shape) == 0);
  CHECK(blockwise_parity(from_bitstring("101010"), shape) == from_bitstring("111"));
}

TEST_CASE("parity completion worked example at a middle position") {
  BlockShape shape{4, 3};
  const Word z = 0b10110100;  // bit k = z_k: z2, z4, z5, z7 set
  const Word x = 0b1010;      // x1, x3 set
  const Word y = parity_complete(z, x, shape, 2);
  CHECK(y == 1224);  // vars 3, 6, 7, 10 set
  CHECK(blockwise_parity(y, shape) == x);
  CHECK(strip_position(y, shape, 2) == z);
}

TEST_CASE("completion and strip are inverse bijections for each position") {
  BlockShape shape{3, 2};
  for (int j = 0; j < shape.block_len; ++j) {
    std::set<Word> seen;
    for (Word z = 0; z < (Word{1} << 3); ++z)
      for (Word x = 0; x < (Word{1} << 3); ++x) {
        Word y = parity_complete(z, x, shape, j);
        CHECK(seen.insert(y).second);
        CHECK(blockwise_parity(y, shape) == x);
        CHECK(strip_position(y, shape, j) == z);
      }
    CHECK(seen.size() == 64);  // all of {0,1}^6 exactly once
  }
}

TEST_CASE("amplified function evaluates the base at the block projection") {
  auto f = build_base_function(example());
  auto amp = amplify_function(f, 2);
  CHECK(amp.arity() == 10);
  CHECK(amp.base.label.ell == 2);
  // Encoding of u1 is 10000; lift each variable into a 2-bit block.
  CHECK(amp.eval(from_bitstring("1000000000")) == 1);
  CHECK(amp.eval(from_bitstring("0100000000")) == 1);  // same block parity
  CHECK(amp.eval(from_bitstring("1100000000")) == 0);  // block cancels to zero word
  CHECK(amp.eval(0) == 0);
  CHECK_FALSE(amp.defined(from_bitstring("0010000000")));
  CHECK_THROWS_AS(amp.eval(from_bitstring("0010000000")), std::domain_error);
}

TEST_CASE("amplified distribution pmf and explicit form agree") {
  auto d = build_base_distribution(example());
  auto amp = amplify_distribution(d, 2);
  CHECK(amp.support_size() == 5u << 5);  // 5 atoms * 2^5 parity classes
  CHECK(amp.pmf(0) == Rat(1, 2) * pow2_rat(-5));
  CHECK(amp.pmf(from_bitstring("1000000000")) == Rat(1, 8) * pow2_rat(-5));
  CHECK(amp.pmf(from_bitstring("0010000000")) == Rat(0));

  auto ex = amp.to_explicit();
  ex.validate();
  CHECK(ex.atoms.size() == amp.support_size());
  for (std::size_t i = 0; i + 1 < ex.atoms.size(); ++i)
    CHECK(ex.atoms[i] < ex.atoms[i + 1]);
  for (std::size_t i = 0; i < ex.atoms.size(); ++i)
    CHECK(ex.probs[i] == amp.pmf(ex.atoms[i]));
}

TEST_CASE("lifted pmf is invariant in the completion position") {
  auto d = build_base_distribution(example());
  for (int ell : {2, 3})
    for (int j = 0; j < ell; ++j)
      CHECK(pmf_equivalence_check(d, ell, j));
}

TEST_CASE("identity embedding needs the explicit override") {
  auto f = build_base_function(example());
  auto d = build_base_distribution(example());
  CHECK_THROWS_AS(amplify_function(f, 1), std::invalid_argument);
  CHECK_THROWS_AS(amplify_distribution(d, 1), std::invalid_argument);
  auto amp = amplify_function(f, 1, /*allow_identity_embedding=*/true);
  CHECK(amp.arity() == 5);
  CHECK(amp.eval(from_bitstring("10000")) == 1);
}

TEST_CASE("pmf sweep guard rejects oversized block domains") {
  auto d = build_base_distribution(example());
  Guards tight;
  tight.pmf_check_max_bits = 8;
  CHECK_THROWS_AS(pmf_equivalence_check(d, 2, 0, tight), GuardExceeded);
}
