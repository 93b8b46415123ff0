#include <doctest.h>

#include <dtgap/setcover.hpp>
#include <dtgap/guards.hpp>

#include <algorithm>

using namespace dtgap;

namespace {

const char* kExampleDoc = R"JSON({
  "sets": ["s1", "s2", "s3", "s4", "s5"],
  "universe": ["u1", "u2", "u3", "u4"],
  "edges": [
    ["s1", "u1"], ["s1", "u2"], ["s1", "u3"],
    ["s2", "u4"],
    ["s3", "u2"], ["s3", "u3"],
    ["s4", "u3"],
    ["s5", "u4"]
  ]
})JSON";

SetCoverInstance example() { return parse_instance_text(kExampleDoc); }

} // namespace

TEST_CASE("instance parsing and shape") {
  auto inst = example();
  CHECK(inst.n() == 5);
  CHECK(inst.u() == 4);
  CHECK(inst.total_vertices() == 9);
  CHECK(inst.sets == std::vector<std::string>{"s1", "s2", "s3", "s4", "s5"});
  CHECK(inst.universe == std::vector<std::string>{"u1", "u2", "u3", "u4"});
  // Neighborhood masks, bit i = set i.
  CHECK(inst.neighborhoods == std::vector<Word>{0b00001, 0b00101, 0b01101, 0b10010});
}

TEST_CASE("serialization round trip is canonical") {
  auto inst = example();
  auto doc = serialize_instance(inst);
  auto again = parse_instance(doc);
  CHECK(again == inst);
  CHECK(serialize_instance(again).dump() == doc.dump());
  // Canonical edge order: sorted by (set, element) pairs.
  CHECK(doc["edges"][0] == nlohmann::json::array({"s1", "u1"}));
  CHECK(doc["edges"][7] == nlohmann::json::array({"s5", "u4"}));
}

TEST_CASE("cover predicate") {
  auto inst = example();
  CHECK(is_cover(inst, {0, 1, 2}));
  CHECK(is_cover(inst, {0, 1}));
  CHECK_FALSE(is_cover(inst, {3, 4}));
  CHECK_FALSE(is_cover(inst, {}));
  CHECK(is_cover(inst, {0, 1, 2, 3, 4}));
}

TEST_CASE("greedy cover picks the max-coverage set, lowest index on ties") {
  auto inst = example();
  auto g = greedy_cover(inst);
  CHECK(g == std::vector<int>{0, 1});
  CHECK(is_cover(inst, g));
}

TEST_CASE("exact optimum with lexicographically least witness") {
  auto inst = example();
  Guards guards;
  auto opt = exact_opt(inst, guards);
  CHECK(opt.size == 2);
  CHECK(opt.witness == std::vector<int>{0, 1});
  CHECK(is_cover(inst, opt.witness));
}

TEST_CASE("hitting-set transpose") {
  auto inst = example();
  auto hs = to_hitting_set(inst);
  CHECK(hs.n() == 4);
  CHECK(hs.u() == 5);
  // Element s1 belongs to u1,u2,u3; s2 to u4; s3 to u2,u3; s4 to u3; s5 to u4.
  CHECK(hs.neighborhoods == std::vector<Word>{0b0111, 0b1000, 0b0110, 0b0100, 0b1000});
  Guards guards;
  CHECK(exact_opt(hs, guards).size == 2);
}

TEST_CASE("normalization removes duplicate neighborhoods keeping the first") {
  SetCoverInstance inst;
  inst.sets = {"a", "b"};
  inst.universe = {"x", "y", "z"};
  inst.neighborhoods = {0b01, 0b01, 0b10};
  auto res = normalize(inst);
  CHECK(res.removed_elements == std::vector<std::string>{"y"});
  CHECK(res.instance.universe == std::vector<std::string>{"x", "z"});
  CHECK(res.instance.neighborhoods == std::vector<Word>{0b01, 0b10});
  CHECK(is_normalized(res.instance));
}

TEST_CASE("normalization replicates the first set until index bits fit") {
  // One set, one element: needs 1 + ceil_log2(1) = 1 <= n, already fine.
  SetCoverInstance tiny;
  tiny.sets = {"a"};
  tiny.universe = {"x"};
  tiny.neighborhoods = {0b1};
  CHECK(is_normalized(tiny));
  auto res = normalize(tiny);
  CHECK(res.instance == tiny);
  CHECK(res.replicated_sets.empty());

  // One set, two distinct elements is impossible; two sets, three distinct
  // neighborhoods needs 1 + ceil_log2(3) = 3 > 2, so a replica is added.
  SetCoverInstance wide;
  wide.sets = {"a", "b"};
  wide.universe = {"x", "y", "z"};
  wide.neighborhoods = {0b01, 0b10, 0b11};
  CHECK_FALSE(is_normalized(wide));
  auto res2 = normalize(wide);
  CHECK(res2.instance.n() == 3);
  CHECK(res2.instance.sets[2] == "a_r1");
  REQUIRE(res2.replicated_sets.size() == 1);
  CHECK(res2.replicated_sets[0].first == "a_r1");
  CHECK(res2.replicated_sets[0].second == "a");
  // Replica duplicates the membership pattern of set 0.
  for (std::size_t e = 0; e < res2.instance.neighborhoods.size(); ++e) {
    Word m = res2.instance.neighborhoods[e];
    CHECK(((m >> 2) & 1) == (m & 1));
  }
  CHECK(is_normalized(res2.instance));
  // Optimum is unchanged by replication.
  Guards guards;
  CHECK(exact_opt(res2.instance, guards).size == exact_opt(wide, guards).size);
}

TEST_CASE("normalization replica ids avoid collisions with existing names") {
  SetCoverInstance inst;
  inst.sets = {"a", "a_r1"};
  inst.universe = {"x", "y", "z"};
  inst.neighborhoods = {0b01, 0b10, 0b11};
  auto res = normalize(inst);
  REQUIRE(res.instance.n() == 3);
  CHECK(res.instance.sets[2] != "a_r1");
  CHECK(std::count(res.instance.sets.begin(), res.instance.sets.end(),
                   res.instance.sets[2]) == 1);
}

TEST_CASE("gap parameter validation") {
  GapParams gap;
  CHECK(gap.k == 1);
  CHECK(gap.k_prime == 1);
  CHECK_NOTHROW(validate(GapParams{2, 3}));
  CHECK_THROWS_AS(validate(GapParams{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate(GapParams{3, 2}), std::invalid_argument);
}

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS(parse_instance_text("{}"));
  CHECK_THROWS(parse_instance_text(R"({"sets":[],"universe":["x"],"edges":[]})"));
  CHECK_THROWS(parse_instance_text(
      R"({"sets":["a"],"universe":["x"],"edges":[["a","nope"]]})"));
}
