#include <doctest.h>

#include <dtgap/bundle.hpp>
#include <dtgap/circuit.hpp>
#include <dtgap/generator.hpp>
#include <dtgap/oracles.hpp>
#include <dtgap/parity.hpp>
#include <dtgap/setcover.hpp>
#include <dtgap/xor_compose.hpp>

#include <filesystem>

using namespace dtgap;

namespace {

SetCoverInstance example() {
  SetCoverInstance inst;
  inst.sets = {"s1", "s2", "s3", "s4", "s5"};
  inst.universe = {"u1", "u2", "u3", "u4"};
  inst.neighborhoods = {0b00001, 0b00101, 0b01101, 0b10010};
  return inst;
}

SetCoverInstance unit_instance() {
  SetCoverInstance inst;
  inst.sets = {"a"};
  inst.universe = {"x"};
  inst.neighborhoods = {0b1};
  return inst;
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag)
      : path(std::filesystem::temp_directory_path() / ("dtgap_test_" + tag)) {
    std::filesystem::remove_all(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("fnv1a64 reference vectors") {
  CHECK(fnv1a64("") == "fnv1a64:cbf29ce484222325");
  CHECK(fnv1a64("a") == "fnv1a64:af63dc4c8601ec8c");
  CHECK(fnv1a64("ab") != fnv1a64("ba"));
}

TEST_CASE("construction bundle metadata for the running example") {
  auto bundle = gen_construction(example(), 2, /*negated=*/true);
  const auto& m = bundle.metadata;
  CHECK(m.at("schema") == "dtgap-bundle-v1");
  CHECK(m.at("problem") == "construction");
  CHECK(m.at("ell") == 2);
  CHECK(m.at("m") == 1);
  CHECK(m.at("negated") == true);
  CHECK(m.at("n") == 5);
  CHECK(m.at("u") == 4);
  CHECK(m.at("N") == 9);
  CHECK(m.at("gap").at("k") == 2);
  CHECK(m.at("gap").at("k_prime") == 2);
  CHECK(m.at("epsilon").at("kind") == "numeric");
  CHECK(m.at("epsilon").at("value") == "1/36");
  CHECK(m.at("yes_certificate").at("junta_vars") == 4);
  CHECK(m.at("yes_certificate").at("depth") == 4);

  const auto& no_cert = m.at("no_certificate");
  CHECK(no_cert.at("kind") == "numeric");
  CHECK(no_cert.at("tree_size_threshold").at("log2") == "1/2");
  CHECK(no_cert.at("tree_size_threshold").at("max_size") == 1);
  CHECK(no_cert.at("abort_tree_size_threshold").at("log2") == "1/10");
  CHECK(no_cert.at("abort_tree_size_threshold").at("max_size") == 1);
  CHECK(no_cert.at("abort_tree_size_threshold").at("max_abort") == "2/5");
  CHECK(no_cert.at("dnf_size_threshold").at("log2") == "1/4");
  CHECK(no_cert.at("dnf_size_threshold").at("max_size") == 1);
  CHECK(no_cert.at("operative") == "dnf_size_threshold");
  CHECK(no_cert.at("tree_distance_floor") == "1/36");
  CHECK(no_cert.at("abort_distance_floor") == "1/180");
  CHECK(no_cert.at("dnf_distance_floor") == "1/36");

  CHECK(m.at("hash_alg") == "fnv1a64");
  CHECK(m.at("instance_hash").get<std::string>().size() == std::string("fnv1a64:").size() + 16);
  CHECK(m.contains("content_hash"));
  CHECK_FALSE(m.contains("strict_size"));

  // Negated flavor appends the NOT gate.
  CHECK(bundle.circuit.gate_count() == 7);
  CHECK(bundle.generator.output_bits() == 10);

  auto plain = gen_construction(example(), 2, /*negated=*/false);
  CHECK(plain.metadata.at("no_certificate").at("operative") == "tree_size_threshold");
  CHECK(plain.circuit.gate_count() == 6);
  CHECK(plain.metadata.at("content_hash") != m.at("content_hash"));
}

TEST_CASE("bundle generation is deterministic, byte for byte") {
  auto a = gen_construction(example(), 2, true);
  auto b = gen_construction(example(), 2, true);
  CHECK(a.metadata.dump() == b.metadata.dump());
  CHECK(to_netlist(a.circuit) == to_netlist(b.circuit));
  CHECK(serialize_generator(a.generator) == serialize_generator(b.generator));
  CHECK(serialize_instance(a.instance).dump() == serialize_instance(b.instance).dump());
}

TEST_CASE("bundle write, read, and full check round trip") {
  TempDir dir("roundtrip");
  auto bundle = gen_construction(example(), 2, false);
  write_bundle(bundle, dir.path.string());
  CHECK(std::filesystem::exists(dir.path / "instance.json"));
  CHECK(std::filesystem::exists(dir.path / "circuit.net"));
  CHECK(std::filesystem::exists(dir.path / "generator.json"));
  CHECK(std::filesystem::exists(dir.path / "metadata.json"));
  auto loaded = read_bundle(dir.path.string());
  CHECK(loaded.instance == bundle.instance);
  CHECK(loaded.circuit == bundle.circuit);
  CHECK(loaded.metadata == bundle.metadata);
  CHECK_NOTHROW(check_bundle(loaded));
}

TEST_CASE("check_bundle rejects tampered artifacts") {
  auto bundle = gen_construction(example(), 2, false);
  auto tampered = bundle;
  tampered.metadata["epsilon"]["value"] = "1/35";
  CHECK_THROWS(check_bundle(tampered));

  auto wrong_circuit = bundle;
  wrong_circuit.circuit = emit_amplified_circuit(example(), 2, /*negated=*/true);
  CHECK_THROWS(check_bundle(wrong_circuit));

  auto wrong_gen = bundle;
  wrong_gen.generator.atom_table[0] = wrong_gen.generator.atom_table[1];
  CHECK_THROWS(check_bundle(wrong_gen));
}

TEST_CASE("adjudication accepts the junta certificate and rejects constants") {
  auto bundle = gen_construction(example(), 2, false);
  auto yes = cover_junta_tree({0, 1}, BlockShape{5, 2});
  auto v = adjudicate(bundle, yes);
  CHECK(v.pass);
  CHECK(v.problem == "construction");
  CHECK(v.distance == Rat(0));
  CHECK(v.radius == 0.0);
  CHECK(v.epsilon == Rat(1, 36));
  CHECK(v.size == 16);
  CHECK_FALSE(v.size_cap.has_value());

  auto zero = DecisionTree::single_leaf(10, Leaf::Zero);
  auto v0 = adjudicate(bundle, zero);
  CHECK_FALSE(v0.pass);
  CHECK(v0.distance == Rat(1, 2));

  // Against the negated bundle the roles flip.
  auto neg = gen_construction(example(), 2, true);
  auto vneg = adjudicate(neg, cover_junta_tree({0, 1}, BlockShape{5, 2}, /*negated=*/true));
  CHECK(vneg.pass);

  // Arity mismatches are structural errors, not failed verdicts.
  CHECK_THROWS_AS(adjudicate(bundle, DecisionTree::single_leaf(4, Leaf::Zero)),
                  std::invalid_argument);
}

TEST_CASE("strict size caps override a perfect distance") {
  auto bundle = gen_construction(example(), 2, false, /*strict_size=*/1);
  CHECK(bundle.metadata.at("strict_size") == 1);
  auto yes = cover_junta_tree({0, 1}, BlockShape{5, 2});
  auto v = adjudicate(bundle, yes);
  CHECK(v.distance == Rat(0));
  REQUIRE(v.size_cap.has_value());
  CHECK(*v.size_cap == 1);
  CHECK_FALSE(v.pass);  // 16 leaves exceed the cap

  auto zero = DecisionTree::single_leaf(10, Leaf::Zero);
  auto vz = adjudicate(bundle, zero);
  CHECK(vz.size == 1);
  CHECK_FALSE(vz.pass);  // within cap but half the mass is wrong
}

TEST_CASE("verdicts survive hypothesis serialization round trips") {
  auto bundle = gen_construction(example(), 2, false);
  auto yes = cover_junta_tree({0, 1}, BlockShape{5, 2});
  auto again = parse_tree(serialize_tree(yes));
  auto v1 = adjudicate(bundle, yes);
  auto v2 = adjudicate(bundle, again);
  CHECK(verdict_to_json(v1) == verdict_to_json(v2));

  auto doc = verdict_to_json(v1);
  CHECK(doc.at("pass") == true);
  CHECK(doc.at("distance") == "0/1");
  CHECK(doc.at("epsilon") == "1/36");
  CHECK(doc.at("size") == 16);
}

TEST_CASE("monte carlo adjudication reports a radius and stays deterministic") {
  auto bundle = gen_construction(example(), 2, false);
  auto zero = DecisionTree::single_leaf(10, Leaf::Zero);
  AdjudicateMode mode;
  mode.monte_carlo = true;
  mode.samples = 20000;
  mode.seed = 5;
  auto v = adjudicate(bundle, zero, mode);
  CHECK(v.radius > 0.0);
  CHECK_FALSE(v.pass);
  auto v2 = adjudicate(bundle, zero, mode);
  CHECK(v.distance == v2.distance);
  auto doc = verdict_to_json(v);
  CHECK(doc.contains("radius"));
}

TEST_CASE("estimation bundle with one copy matches the plain construction") {
  auto est = gen_estimation(example(), std::nullopt, 1);
  auto con = gen_construction(example(), 2, false);
  CHECK(to_netlist(est.circuit) == to_netlist(con.circuit));
  CHECK(serialize_generator(est.generator) == serialize_generator(con.generator));
  CHECK(est.metadata.at("problem") == "estimation");
  CHECK(est.metadata.at("epsilon").at("value") == "255/512");  // 1/2 - 2^-9
}

TEST_CASE("estimation bundle metadata and certificate on the unit instance") {
  auto bundle = gen_estimation(unit_instance(), std::nullopt, 2);
  const auto& m = bundle.metadata;
  CHECK(m.at("problem") == "estimation");
  CHECK(m.at("ell") == 2);
  CHECK(m.at("m") == 2);
  CHECK(m.at("N") == 2);
  CHECK(m.at("epsilon").at("value") == "1/4");  // 1/2 - 2^-2
  CHECK(m.at("yes_certificate").at("junta_vars") == 4);
  CHECK(m.at("yes_certificate").at("depth") == 4);

  const auto& no_cert = m.at("no_certificate");
  CHECK(no_cert.at("kind") == "symbolic-with-parameters");
  CHECK(no_cert.at("depth_lower_bound").at("form") == "Omega(k_prime*m)");
  CHECK(no_cert.at("depth_lower_bound").at("k_prime") == 1);
  CHECK(no_cert.at("depth_lower_bound").at("m") == 2);
  CHECK(no_cert.at("depth_lower_bound").at("product") == 2);
  CHECK(no_cert.at("stage").at("m1") == 8);         // ceil(1 / (1/(4N))) with N=2
  CHECK(no_cert.at("stage").at("m2") == 2);         // 2^2 reaches 1/gamma = 4
  CHECK(no_cert.at("stage").at("suggested_copies") == 16);
  CHECK(no_cert.at("stage").at("base_advantage") == "1/8");
  CHECK(no_cert.at("stage").at("gamma") == "1/4");
  CHECK(no_cert.at("stage").at("intermediate_gap") == "1/800");
  CHECK(no_cert.at("stage").at("requires_abort_rate") == "17/50");

  CHECK(bundle.generator.copies == 2);
  CHECK(bundle.generator.output_bits() == 4);
  CHECK(bundle.circuit.inputs == 4);
  CHECK_NOTHROW(check_bundle(bundle));

  // The XOR-composed junta tree is a passing yes-hypothesis.
  auto base_yes = cover_junta_tree({0}, BlockShape{1, 2});
  auto composed = xor_compose_tree(base_yes, 2);
  CHECK(composed.depth() == 4);
  auto v = adjudicate(bundle, composed);
  CHECK(v.pass);
  CHECK(v.distance == Rat(0));

  // A constant hypothesis sits at distance 1/2 > 1/4.
  auto vz = adjudicate(bundle, DecisionTree::single_leaf(4, Leaf::Zero));
  CHECK_FALSE(vz.pass);
  CHECK(vz.distance == Rat(1, 2));
}

TEST_CASE("estimation bundles write and read like construction bundles") {
  TempDir dir("estimation");
  auto bundle = gen_estimation(unit_instance(), std::nullopt, 3);
  write_bundle(bundle, dir.path.string());
  auto loaded = read_bundle(dir.path.string());
  CHECK(loaded.metadata == bundle.metadata);
  CHECK(loaded.generator.copies == 3);
  CHECK_NOTHROW(check_bundle(loaded));
}

TEST_CASE("bundle generation validates its inputs") {
  SetCoverInstance dup;
  dup.sets = {"a", "b"};
  dup.universe = {"x", "y"};
  dup.neighborhoods = {0b01, 0b01};
  CHECK_THROWS(gen_construction(dup, 2, false));  // must be normalized
  CHECK_THROWS_AS(gen_construction(example(), 2, false, std::nullopt, GapParams{3, 2}),
                  std::invalid_argument);
  CHECK_THROWS(gen_estimation(example(), std::nullopt, 0));
}
