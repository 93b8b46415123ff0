#include <doctest.h>

#include <dtgap/construction.hpp>
#include <dtgap/setcover.hpp>

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

TEST_CASE("base function: zero word maps to 0, element encodings map to 1") {
  auto f = build_base_function(example());
  CHECK(f.arity == 5);
  REQUIRE(f.support.size() == 5);
  // Support order: all-zeros first, then element encodings in document order.
  CHECK(f.support == std::vector<Word>{0, 0b00001, 0b00101, 0b01101, 0b10010});
  CHECK(f.values == std::vector<bool>{false, true, true, true, true});

  // Same facts through the printable convention (variable 0 leftmost).
  CHECK(f.eval(from_bitstring("00000")) == 0);
  CHECK(f.eval(from_bitstring("10000")) == 1);
  CHECK(f.eval(from_bitstring("10100")) == 1);
  CHECK(f.eval(from_bitstring("10110")) == 1);
  CHECK(f.eval(from_bitstring("01001")) == 1);
}

TEST_CASE("base function is partial: off-support words are undefined") {
  auto f = build_base_function(example());
  CHECK_FALSE(f.defined(from_bitstring("11111")));
  CHECK_THROWS_AS(f.eval(from_bitstring("11111")), std::domain_error);
  CHECK_THROWS_AS(f.eval(from_bitstring("01000")), std::domain_error);
}

TEST_CASE("base distribution: half on zero word, uniform on encodings") {
  auto d = build_base_distribution(example());
  d.validate();
  CHECK(d.arity == 5);
  CHECK(d.atoms == std::vector<Word>{0, 0b00001, 0b00101, 0b01101, 0b10010});
  CHECK(d.pmf(0) == Rat(1, 2));
  CHECK(d.pmf(0b00101) == Rat(1, 8));
  CHECK(d.pmf(0b10010) == Rat(1, 8));
  CHECK(d.pmf(from_bitstring("11111")) == Rat(0));
  Rat total = 0;
  for (auto& p : d.probs) total += p;
  CHECK(total == Rat(1));
}

TEST_CASE("negation is an involution on the labeled table") {
  auto f = build_base_function(example());
  auto g = negate_table(f);
  CHECK(g.arity == f.arity);
  CHECK(g.support == f.support);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    CHECK(g.values[i] == !f.values[i]);
  CHECK(g.label.negated);
  auto h = negate_table(g);
  CHECK(h.values == f.values);
  CHECK_FALSE(h.label.negated);
}

TEST_CASE("monotone disjunction over C computes the base function iff C covers") {
  auto inst = example();
  CHECK(disjunction_consistency(inst, {0, 1}));
  CHECK(disjunction_consistency(inst, {0, 1, 2}));
  CHECK_FALSE(disjunction_consistency(inst, {3, 4}));
  CHECK_FALSE(disjunction_consistency(inst, {0}));
  CHECK_FALSE(disjunction_consistency(inst, {}));
}

TEST_CASE("conjunction consistency mirrors disjunction on the negated table") {
  auto inst = example();
  CHECK(conjunction_consistency(inst, {0, 1}));
  CHECK_FALSE(conjunction_consistency(inst, {3, 4}));
}

TEST_CASE("table and distribution serialization round trip") {
  auto f = build_base_function(example());
  auto doc = serialize_table(f);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 5);
  CHECK(doc[0][0] == "00000");
  CHECK(doc[0][1] == 0);
  CHECK(doc[1][0] == "10000");
  CHECK(doc[1][1] == 1);
  auto f2 = parse_table(doc);
  CHECK(f2.arity == f.arity);
  CHECK(f2.support == f.support);
  CHECK(f2.values == f.values);

  auto d = build_base_distribution(example());
  auto ddoc = serialize_distribution(d);
  REQUIRE(ddoc.size() == 5);
  CHECK(ddoc[0][0] == "00000");
  CHECK(ddoc[0][1] == "1/2");
  CHECK(ddoc[2][1] == "1/8");
  auto d2 = parse_distribution(ddoc);
  CHECK(d2.arity == d.arity);
  CHECK(d2.atoms == d.atoms);
  CHECK(d2.probs == d.probs);
}

TEST_CASE("construction requires a normalized instance") {
  SetCoverInstance dup;
  dup.sets = {"a", "b"};
  dup.universe = {"x", "y"};
  dup.neighborhoods = {0b01, 0b01};
  CHECK_THROWS_AS(build_base_function(dup), std::invalid_argument);
  CHECK_THROWS_AS(build_base_distribution(dup), std::invalid_argument);
}

TEST_CASE("function labels print compactly") {
  FunctionLabel plain;
  plain.ell = 2;
  FunctionLabel neg = plain;
  neg.negated = true;
  FunctionLabel pow = neg;
  pow.xor_copies = 3;
  CHECK(plain.str() != neg.str());
  CHECK(neg.str() != pow.str());
}
