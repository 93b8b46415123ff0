#include <doctest.h>

#include <dtgap/construction.hpp>
#include <dtgap/decision_tree.hpp>
#include <dtgap/dnf.hpp>
#include <dtgap/generator.hpp>
#include <dtgap/metrics.hpp>
#include <dtgap/parity.hpp>
#include <dtgap/setcover.hpp>

#include <cmath>
#include <random>

using namespace dtgap;

namespace {

SetCoverInstance example() {
  SetCoverInstance inst;
  inst.sets = {"s1", "s2", "s3", "s4", "s5"};
  inst.universe = {"u1", "u2", "u3", "u4"};
  inst.neighborhoods = {0b00001, 0b00101, 0b01101, 0b10010};
  return inst;
}

// root: var0 ? (var3 ? abort : 1) : 0   on the {2 blocks, len 2} domain
DecisionTree sample_tree() {
  DecisionTree t;
  t.arity = 4;
  t.nodes.resize(5);
  t.nodes[0] = {0, 1, 2, Leaf::Zero};
  t.nodes[1] = {-1, -1, -1, Leaf::Zero};
  t.nodes[2] = {3, 3, 4, Leaf::Zero};
  t.nodes[3] = {-1, -1, -1, Leaf::One};
  t.nodes[4] = {-1, -1, -1, Leaf::Abort};
  return t;
}

} // namespace

TEST_CASE("decision tree basics: validate, size, depth, eval") {
  auto t = sample_tree();
  t.validate();
  CHECK(t.size() == 3);
  CHECK(t.depth() == 2);
  CHECK(t.eval(from_bitstring("0000")) == Leaf::Zero);
  CHECK(t.eval(from_bitstring("1000")) == Leaf::One);
  CHECK(t.eval(from_bitstring("1001")) == Leaf::Abort);

  auto leaf = DecisionTree::single_leaf(7, Leaf::One);
  leaf.validate();
  CHECK(leaf.size() == 1);
  CHECK(leaf.depth() == 0);
  CHECK(leaf.eval(123) == Leaf::One);
}

TEST_CASE("validate rejects malformed trees") {
  auto t = sample_tree();
  t.nodes[2].var = 0;  // repeats var 0 on the root-hi path
  CHECK_THROWS(t.validate());
  auto u = sample_tree();
  u.nodes[0].var = 4;  // out of range for arity 4
  CHECK_THROWS(u.validate());
}

TEST_CASE("tree serialization round trip") {
  auto t = sample_tree();
  auto doc = serialize_tree(t);
  CHECK(doc["arity"] == 4);
  CHECK(doc["root"]["var"] == 0);
  CHECK(doc["root"]["lo"]["leaf"] == 0);
  CHECK(doc["root"]["hi"]["hi"]["leaf"] == "abort");
  auto t2 = parse_tree(doc);
  t2.validate();
  CHECK(t2.arity == 4);
  for (Word y = 0; y < 16; ++y) CHECK(t2.eval(y) == t.eval(y));
}

TEST_CASE("tree restriction agrees with evaluation under completion") {
  auto t = sample_tree();
  BlockShape shape{2, 2};
  for (int j = 0; j < 2; ++j)
    for (Word z = 0; z < 4; ++z) {
      auto r = restrict_tree(t, z, j, shape);
      r.validate();
      CHECK(r.arity == 2);
      for (Word x = 0; x < 4; ++x) {
        Word y = parity_complete(z, x, shape, j);
        CHECK(r.eval(x) == t.eval(y));
        // Path length below equals position-j queries above.
        auto above = dt_trace(t, y, shape);
        auto below = dt_trace(r, x);
        CHECK(below.length == above.position_counts[j]);
      }
    }
}

TEST_CASE("restriction resolves off-position queries by the seed") {
  auto t = sample_tree();
  BlockShape shape{2, 2};
  // j = 0: var 3 sits at position 1 of block 1 and is fixed by z bit 1.
  auto r = restrict_tree(t, /*z=*/0b00, 0, shape);
  CHECK(r.size() == 2);  // var0 ? 1 : 0
  CHECK(r.eval(0b01) == Leaf::One);
  auto r2 = restrict_tree(t, /*z=*/0b10, 0, shape);
  CHECK(r2.eval(0b01) == Leaf::Abort);
  // Odd fixed parity in block 0 swaps the children of the position-j query.
  auto r3 = restrict_tree(t, /*z=*/0b01, 0, shape);
  CHECK(r3.eval(0b00) == Leaf::One);
  CHECK(r3.eval(0b01) == Leaf::Zero);
}

TEST_CASE("random trees are canonical and honor the leaf budget") {
  std::mt19937_64 rng(7);
  auto t = random_tree(rng, 4, 6);
  t.validate();
  CHECK(t.size() == 6);
  std::mt19937_64 rng2(7);
  CHECK(random_tree(rng2, 4, 6) == t);
  // Leaf budget clamps at 2^arity; abort weight 0 yields no abort leaves.
  std::mt19937_64 rng3(9);
  auto full = random_tree(rng3, 2, 100);
  CHECK(full.size() == 4);
  for (auto& n : full.nodes)
    if (n.is_leaf()) CHECK(n.leaf != Leaf::Abort);
  std::mt19937_64 rng4(11);
  auto aborty = random_tree(rng4, 3, 8, 1.0);
  for (auto& n : aborty.nodes)
    if (n.is_leaf()) CHECK(n.leaf == Leaf::Abort);
}

TEST_CASE("dnf basics: terms, eval, validate") {
  DnfFormula f;
  f.arity = 4;
  f.terms = {DnfTerm{{{0, true}, {2, false}}}, DnfTerm{{{1, true}}}};
  f.validate();
  CHECK(f.size() == 2);
  CHECK(f.terms[0].width() == 2);
  CHECK(f.eval(from_bitstring("1000")));
  CHECK_FALSE(f.eval(from_bitstring("1010")));
  CHECK(f.eval(from_bitstring("0110")));
  CHECK_FALSE(f.eval(from_bitstring("0000")));

  DnfFormula empty;
  empty.arity = 4;
  CHECK_FALSE(empty.eval(0));  // empty formula = constant 0

  DnfFormula top;
  top.arity = 4;
  top.terms = {DnfTerm{}};
  CHECK(top.eval(0));  // empty term accepts everything
  CHECK(top.terms[0].width() == 0);

  DnfFormula bad;
  bad.arity = 4;
  bad.terms = {DnfTerm{{{2, true}, {0, true}}}};  // not ascending
  CHECK_THROWS(bad.validate());
}

TEST_CASE("dnf DIMACS serialization round trip") {
  DnfFormula f;
  f.arity = 4;
  f.terms = {DnfTerm{{{0, true}, {2, false}}}, DnfTerm{{{1, true}}}};
  auto doc = serialize_dnf(f);
  CHECK(doc == nlohmann::json::parse("[[1, -3], [2]]"));
  auto f2 = parse_dnf(doc, 4);
  CHECK(f2 == f);
}

TEST_CASE("dnf trace reports a minimal accepting width") {
  DnfFormula f;
  f.arity = 4;
  f.terms = {DnfTerm{{{0, true}, {1, true}}}, DnfTerm{{{0, true}}}};
  auto tr = dnf_trace(f, from_bitstring("1100"));
  CHECK(tr.label == Leaf::One);
  CHECK(tr.length == 1);  // the width-1 term wins even though term 0 accepts
  auto tr2 = dnf_trace(f, from_bitstring("0000"));
  CHECK(tr2.label == Leaf::Zero);
}

TEST_CASE("dnf restriction agrees with evaluation under completion") {
  std::mt19937_64 rng(21);
  BlockShape shape{2, 2};
  for (int rep = 0; rep < 20; ++rep) {
    auto f = random_dnf(rng, 4, 3, 0, 3);
    f.validate();
    for (int j = 0; j < 2; ++j)
      for (Word z = 0; z < 4; ++z) {
        auto r = restrict_dnf(f, z, j, shape);
        r.validate();
        for (Word x = 0; x < 4; ++x)
          CHECK(r.eval(x) == f.eval(parity_complete(z, x, shape, j)));
      }
  }
}

TEST_CASE("exact distance of the constant-0 tree is the positive mass") {
  auto inst = example();
  auto amp = amplify_function(build_base_function(inst), 2);
  auto lifted = amplify_distribution(build_base_distribution(inst), 2).to_explicit();
  auto zero = DecisionTree::single_leaf(10, Leaf::Zero);
  CHECK(dist_exact(zero, amp.ref(), lifted) == Rat(1, 2));
  auto one = DecisionTree::single_leaf(10, Leaf::One);
  CHECK(dist_exact(one, amp.ref(), lifted) == Rat(1, 2));
  // Abort never counts as disagreement.
  auto abort_all = DecisionTree::single_leaf(10, Leaf::Abort);
  CHECK(dist_exact(abort_all, amp.ref(), lifted) == Rat(0));
  CHECK(abort_prob(abort_all, lifted) == Rat(1));
  CHECK(abort_prob(zero, lifted) == Rat(0));
}

TEST_CASE("average depth and leaf profile on the base example") {
  auto d = build_base_distribution(example());
  DecisionTree t;
  t.arity = 5;
  t.nodes.resize(3);
  t.nodes[0] = {0, 1, 2, Leaf::Zero};
  t.nodes[1] = {-1, -1, -1, Leaf::Zero};
  t.nodes[2] = {-1, -1, -1, Leaf::One};
  t.validate();
  CHECK(avg_depth(t, d) == Rat(1));
  auto leaf = DecisionTree::single_leaf(5, Leaf::Zero);
  CHECK(avg_depth(leaf, d) == Rat(0));

  auto profile = leaf_profile(t, d);
  REQUIRE(profile.size() == 2);
  CHECK(profile[0].depth == 1);
  CHECK(profile[0].label == Leaf::Zero);
  CHECK(profile[0].reach == Rat(5, 8));  // zero word and the u4 encoding
  CHECK(profile[1].reach == Rat(3, 8));
  CHECK(profile[1].label == Leaf::One);
}

TEST_CASE("average width weights accepted points by accepting width") {
  auto d = build_base_distribution(example());
  DnfFormula f;
  f.arity = 5;
  f.terms = {DnfTerm{{{0, true}}}, DnfTerm{{{1, true}, {4, true}}}};
  // Accepts atoms 1, 5, 13 at width 1 (mass 3/8) and atom 18 at width 2 (1/8).
  CHECK(avg_width(f, d) == Rat(3, 8) * 1 + Rat(1, 8) * 2);
}

TEST_CASE("monte carlo distance is deterministic per seed with pinned radius") {
  auto inst = example();
  auto amp = amplify_function(build_base_function(inst), 2);
  auto gen = build_generator(inst, 2);
  auto zero = DecisionTree::single_leaf(10, Leaf::Zero);
  auto est = dist_mc(hypothesis_of(zero), amp.ref(), gen, 10000, 42);
  auto est2 = dist_mc(hypothesis_of(zero), amp.ref(), gen, 10000, 42);
  CHECK(est.estimate == est2.estimate);
  CHECK(est.samples == 10000);
  CHECK(est.delta == doctest::Approx(0.01));
  CHECK(est.radius == doctest::Approx(std::sqrt(std::log(200.0) / 20000.0)));
  // True value is 1/2; the estimate lands well inside a generous band.
  double v = est.estimate.convert_to<double>();
  CHECK(v > 0.45);
  CHECK(v < 0.55);
  auto est3 = dist_mc(hypothesis_of(zero), amp.ref(), gen, 10000, 43);
  CHECK(est3.estimate != est.estimate);  // different stream, almost surely
}
