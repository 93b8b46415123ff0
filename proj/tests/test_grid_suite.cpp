#include <doctest.h>

#include <dtgap/grid.hpp>
#include <dtgap/setcover.hpp>
#include <dtgap/suite.hpp>

#include <set>
#include <stdexcept>

using namespace dtgap;

TEST_CASE("instance enumeration matches the closed-form count") {
  CHECK(count_instances(1, 1) == 1);
  CHECK(count_instances(2, 2) == 3);
  CHECK(count_instances(3, 3) == 35);   // C(7,3)
  CHECK(count_instances(4, 4) == 1365); // C(15,4)
  CHECK(count_instances(2, 3) == 0);    // 1 + ceil(log2 3) > 2
  for (int n = 1; n <= 4; ++n)
    for (int u = 1; u <= 4; ++u) {
      auto insts = enumerate_instances(n, u);
      CHECK(insts.size() == count_instances(n, u));
    }
}

TEST_CASE("enumerated instances are normalized, distinct, and canonically shaped") {
  auto insts = enumerate_instances(3, 2);
  CHECK(insts.size() == 21);  // C(7,2)
  std::set<std::vector<Word>> seen;
  for (const auto& inst : insts) {
    CHECK(inst.n() == 3);
    CHECK(inst.u() == 2);
    CHECK(is_normalized(inst));
    CHECK(inst.sets[0] == "s0");
    CHECK(inst.universe[1] == "e1");
    // Ascending neighborhood masks, strictly.
    CHECK(inst.neighborhoods[0] < inst.neighborhoods[1]);
    CHECK(seen.insert(inst.neighborhoods).second);
  }
  // Lexicographically first and last tuples.
  CHECK(insts.front().neighborhoods == std::vector<Word>{1, 2});
  CHECK(insts.back().neighborhoods == std::vector<Word>{6, 7});

  auto single = enumerate_instances(1, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].neighborhoods == std::vector<Word>{1});

  CHECK(enumerate_instances(2, 3).empty());
}

TEST_CASE("random instances are reproducible and normalized") {
  auto a = random_instance(5, 4, 99);
  auto b = random_instance(5, 4, 99);
  CHECK(a == b);
  CHECK(is_normalized(a));
  CHECK(a.n() == 5);
  CHECK(a.u() == 4);
  for (std::size_t i = 0; i + 1 < a.neighborhoods.size(); ++i)
    CHECK(a.neighborhoods[i] < a.neighborhoods[i + 1]);
  auto c = random_instance(5, 4, 100);
  CHECK_FALSE(a == c);  // astronomically unlikely to collide
  CHECK_THROWS(random_instance(2, 3, 1));
}

TEST_CASE("suite sweep runs selected claims in grid-major order") {
  GridSpec grid;
  grid.max_n = 2;
  grid.max_u = 2;
  grid.ells = {2};
  VerifyParams params;
  params.family = 5;
  auto reports = run_suite({"pmf-equivalence"}, grid, params);
  CHECK(reports.size() == 7);  // 1 + 3 + 3 normalized instances up to 2x2
  for (const auto& r : reports) {
    CHECK(r.claim == "pmf-equivalence");
    CHECK(r.pass);
  }
  CHECK(run_suite({}, grid, params).empty());
  CHECK_THROWS_AS(run_suite({"no-such-claim"}, grid, params), std::invalid_argument);
}

TEST_CASE("suite sweep covers multiple claims per grid point") {
  GridSpec grid;
  grid.max_n = 2;
  grid.max_u = 1;
  grid.ells = {2};
  VerifyParams params;
  params.family = 5;
  auto reports = run_suite({"junta-certificate", "depth-error"}, grid, params);
  CHECK(reports.size() == 2 * 4);  // 1 + 3 instances, two claims each
  for (const auto& r : reports) CHECK(r.pass);
}

TEST_CASE("acceptance criteria are indexed 1 through 11") {
  CHECK_THROWS_AS(run_acceptance_criterion(0), std::invalid_argument);
  CHECK_THROWS_AS(run_acceptance_criterion(12), std::invalid_argument);
}

TEST_CASE("the built-in example instance matches its documented shape") {
  auto inst = example_instance();
  CHECK(inst.sets == std::vector<std::string>{"s1", "s2", "s3", "s4", "s5"});
  CHECK(inst.universe == std::vector<std::string>{"u1", "u2", "u3", "u4"});
  CHECK(inst.neighborhoods == std::vector<Word>{0b00001, 0b00101, 0b01101, 0b10010});
  CHECK(is_normalized(inst));
  Guards guards;
  CHECK(exact_opt(inst, guards).size == 2);
}
