#include "dtgap/bundle.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "dtgap/construction.hpp"
#include "dtgap/metrics.hpp"
#include "dtgap/parity.hpp"
#include "dtgap/xor_compose.hpp"

namespace dtgap {

std::string fnv1a64(const std::string& bytes)
{
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

namespace {

nlohmann::json threshold_record(const Rat& log2_exponent)
{
  nlohmann::json rec;
  rec["kind"] = "numeric";
  rec["log2"] = fraction_string(log2_exponent);
  rec["max_size"] = max_int_strictly_below_pow2(log2_exponent);
  return rec;
}

GapParams resolve_gap(const SetCoverInstance& inst, const std::optional<GapParams>& gap,
                      const Guards& guards)
{
  if (gap) {
    validate(*gap);
    return *gap;
  }
  const int opt = exact_opt(inst, guards).size;
  return GapParams{opt, opt};
}

std::string instance_bytes(const SetCoverInstance& inst)
{
  return serialize_instance(inst).dump();
}

nlohmann::json common_metadata(const SetCoverInstance& inst, const GapParams& gap)
{
  nlohmann::json meta;
  meta["schema"] = "dtgap-bundle-v1";
  meta["hash_alg"] = "fnv1a64";
  meta["instance_hash"] = fnv1a64(instance_bytes(inst));
  meta["n"] = inst.n();
  meta["u"] = inst.u();
  meta["N"] = inst.total_vertices();
  meta["gap"] = {{"k", gap.k}, {"k_prime", gap.k_prime}};
  return meta;
}

}  // namespace

HardInstanceBundle gen_construction(const SetCoverInstance& inst, int ell, bool negated,
                                    std::optional<std::uint64_t> strict_size,
                                    std::optional<GapParams> gap, std::optional<Rat> epsilon,
                                    const Guards& guards)
{
  if (!is_normalized(inst)) throw std::invalid_argument("bundle needs a normalized instance");
  if (ell < 2) throw std::invalid_argument("block length must be >= 2");
  const GapParams g = resolve_gap(inst, gap, guards);
  const int N = inst.total_vertices();
  const Rat eps = epsilon ? *epsilon : Rat(1, 4 * N);

  HardInstanceBundle bundle;
  bundle.instance = inst;
  bundle.circuit = emit_amplified_circuit(inst, ell, negated);
  bundle.generator = build_generator(inst, ell);

  nlohmann::json meta = common_metadata(inst, g);
  meta["problem"] = "construction";
  meta["ell"] = ell;
  meta["m"] = 1;
  meta["negated"] = negated;
  meta["epsilon"] = {{"kind", "numeric"}, {"value", fraction_string(eps)}};
  meta["yes_certificate"] = {{"kind", "numeric"},
                             {"junta_vars", g.k * ell},
                             {"depth", g.k * ell}};

  nlohmann::json no_cert;
  no_cert["kind"] = "numeric";
  no_cert["tree_size_threshold"] = threshold_record(Rat(g.k_prime * ell, 8));
  no_cert["abort_tree_size_threshold"] = threshold_record(Rat(g.k_prime * ell, 40));
  no_cert["abort_tree_size_threshold"]["max_abort"] = fraction_string(Rat(2, 5));
  no_cert["dnf_size_threshold"] = threshold_record(Rat(g.k_prime * ell, 16));
  no_cert["operative"] = negated ? "dnf_size_threshold" : "tree_size_threshold";
  no_cert["tree_distance_floor"] = fraction_string(Rat(1, 4 * N));
  no_cert["abort_distance_floor"] = fraction_string(Rat(1, 20 * N));
  no_cert["dnf_distance_floor"] = fraction_string(Rat(1, 4 * N));
  meta["no_certificate"] = no_cert;

  if (strict_size) meta["strict_size"] = *strict_size;

  std::ostringstream params;
  params << "problem=construction;ell=" << ell << ";negated=" << negated << ";k=" << g.k
         << ";k_prime=" << g.k_prime << ";epsilon=" << fraction_string(eps);
  if (strict_size) params << ";strict_size=" << *strict_size;
  meta["content_hash"] = fnv1a64(instance_bytes(inst) + "|" + params.str());

  bundle.metadata = std::move(meta);
  return bundle;
}

HardInstanceBundle gen_estimation(const SetCoverInstance& inst, std::optional<GapParams> gap,
                                  int m, std::optional<Rat> epsilon, const Guards& guards)
{
  if (!is_normalized(inst)) throw std::invalid_argument("bundle needs a normalized instance");
  if (m < 1) throw std::invalid_argument("copy count must be >= 1");
  const GapParams g = resolve_gap(inst, gap, guards);
  const int N = inst.total_vertices();
  const Rat eps = epsilon ? *epsilon : Rat(1, 2) - pow2_rat(-N);

  HardInstanceBundle bundle;
  bundle.instance = inst;
  bundle.circuit = xor_power_circuit(emit_amplified_circuit(inst, 2, false), m);
  bundle.generator = xor_power_generator(build_generator(inst, 2), m);

  nlohmann::json meta = common_metadata(inst, g);
  meta["problem"] = "estimation";
  meta["ell"] = 2;
  meta["m"] = m;
  meta["negated"] = false;
  meta["epsilon"] = {{"kind", "numeric"}, {"value", fraction_string(eps)}};
  meta["yes_certificate"] = {{"kind", "numeric"},
                             {"junta_vars", 2 * g.k * m},
                             {"depth", 2 * g.k * m}};

  // The no-side depth bound keeps its constant symbolic; the stage arithmetic
  // that would instantiate it (copy counts from the base advantage 1/(4N)
  // down to gamma = 2^-N) is attached in full.
  const XorParams stage = amplification_params(Rat(1, 4 * N), pow2_rat(-N));
  nlohmann::json no_cert;
  no_cert["kind"] = "symbolic-with-parameters";
  no_cert["depth_lower_bound"] = {{"form", "Omega(k_prime*m)"},
                                  {"k_prime", g.k_prime},
                                  {"m", m},
                                  {"product", g.k_prime * m},
                                  {"constant", "c_est (symbolic)"}};
  no_cert["stage"] = {{"alpha", stage.alpha},
                      {"m1", stage.m1},
                      {"m2", stage.m2},
                      {"suggested_copies", stage.copies()},
                      {"c1", "1"},
                      {"c2", "1"},
                      {"base_advantage", fraction_string(Rat(1, 4 * N))},
                      {"gamma", fraction_string(pow2_rat(-N))},
                      {"intermediate_gap", "1/800"},
                      {"requires_abort_rate", fraction_string(Rat(17, 50))}};
  meta["no_certificate"] = no_cert;

  std::ostringstream params;
  params << "problem=estimation;m=" << m << ";k=" << g.k << ";k_prime=" << g.k_prime
         << ";epsilon=" << fraction_string(eps);
  meta["content_hash"] = fnv1a64(instance_bytes(inst) + "|" + params.str());

  bundle.metadata = std::move(meta);
  return bundle;
}

void write_bundle(const HardInstanceBundle& bundle, const std::string& dir)
{
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const auto write_file = [&](const std::string& name, const std::string& text) {
    std::ofstream out(fs::path(dir) / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + name + " in " + dir);
    out << text;
  };
  write_file("instance.json", serialize_instance(bundle.instance).dump(2) + "\n");
  write_file("circuit.net", to_netlist(bundle.circuit));
  write_file("generator.json", serialize_generator(bundle.generator).dump(2) + "\n");
  write_file("metadata.json", bundle.metadata.dump(2) + "\n");
}

HardInstanceBundle read_bundle(const std::string& dir)
{
  namespace fs = std::filesystem;
  const auto read_file = [&](const std::string& name) {
    std::ifstream in(fs::path(dir) / name, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + name + " in " + dir);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  HardInstanceBundle bundle;
  bundle.instance = parse_instance_text(read_file("instance.json"));
  bundle.circuit = from_netlist(read_file("circuit.net"));
  bundle.generator = parse_generator(nlohmann::json::parse(read_file("generator.json")));
  bundle.metadata = nlohmann::json::parse(read_file("metadata.json"));
  return bundle;
}

namespace {

// The analytic function a bundle's circuit claims to compute.
FunctionRef bundle_function(const HardInstanceBundle& bundle)
{
  const std::string problem = bundle.metadata.at("problem").get<std::string>();
  const int ell = bundle.metadata.at("ell").get<int>();
  PartialFunctionTable base = build_base_function(bundle.instance);
  if (bundle.metadata.at("negated").get<bool>()) base = negate_table(base);
  const AmplifiedFunction amp = amplify_function(base, ell);
  if (problem == "estimation")
    return xor_power_function(amp.ref(), bundle.metadata.at("m").get<int>());
  return amp.ref();
}

HardInstanceBundle rederive(const HardInstanceBundle& bundle, const Guards& guards)
{
  const std::string problem = bundle.metadata.at("problem").get<std::string>();
  GapParams gap{bundle.metadata.at("gap").at("k").get<int>(),
                bundle.metadata.at("gap").at("k_prime").get<int>()};
  const Rat eps = parse_fraction(bundle.metadata.at("epsilon").at("value").get<std::string>());
  if (problem == "construction") {
    std::optional<std::uint64_t> strict;
    if (bundle.metadata.contains("strict_size"))
      strict = bundle.metadata.at("strict_size").get<std::uint64_t>();
    return gen_construction(bundle.instance, bundle.metadata.at("ell").get<int>(),
                            bundle.metadata.at("negated").get<bool>(), strict, gap, eps, guards);
  }
  if (problem == "estimation")
    return gen_estimation(bundle.instance, gap, bundle.metadata.at("m").get<int>(), eps, guards);
  throw std::invalid_argument("unknown bundle problem '" + problem + "'");
}

}  // namespace

void check_bundle(const HardInstanceBundle& bundle, const Guards& guards)
{
  const HardInstanceBundle fresh = rederive(bundle, guards);
  if (fresh.metadata.dump() != bundle.metadata.dump())
    throw std::runtime_error("bundle metadata does not match its re-derivation");
  if (to_netlist(fresh.circuit) != to_netlist(bundle.circuit))
    throw std::runtime_error("bundle circuit does not match its re-derivation");
  if (serialize_generator(fresh.generator).dump() != serialize_generator(bundle.generator).dump())
    throw std::runtime_error("bundle generator does not match its re-derivation");

  // Coherence: every seed's output must satisfy the circuit = function
  // identity, and the seed histogram must reproduce the declared pmf.
  if (bundle.generator.seed_bits() > guards.generator_max_seed_bits)
    throw GuardExceeded("bundle coherence sweep of 2^" +
                        std::to_string(bundle.generator.seed_bits()) + " seeds exceeds guard");
  const FunctionRef f = bundle_function(bundle);
  std::map<Word, std::uint64_t> histogram;
  for (Word seed = 0; seed < (Word{1} << bundle.generator.seed_bits()); ++seed) {
    const Word y = bundle.generator.run(seed);
    if (bundle.circuit.eval(y) != f.eval(y))
      throw std::runtime_error("circuit disagrees with the analytic function on a generator output");
    ++histogram[y];
  }
  const ExplicitDistribution target = bundle.generator.declared_target(guards);
  if (histogram.size() != target.atoms.size())
    throw std::runtime_error("generator support does not match the declared target");
  const Rat seed_mass = pow2_rat(-static_cast<long long>(bundle.generator.seed_bits()));
  for (size_t i = 0; i < target.atoms.size(); ++i) {
    const auto it = histogram.find(target.atoms[i]);
    if (it == histogram.end() || Rat(it->second) * seed_mass != target.probs[i])
      throw std::runtime_error("generator pushforward does not match the declared pmf");
  }
}

namespace {

template <typename Hypothesis>
Verdict adjudicate_impl(const HardInstanceBundle& bundle, const Hypothesis& hypothesis,
                        const nlohmann::json& serialized, const AdjudicateMode& mode,
                        const Guards& guards)
{
  Verdict v;
  v.problem = bundle.metadata.at("problem").get<std::string>();
  v.hypothesis = serialized;
  v.epsilon = parse_fraction(bundle.metadata.at("epsilon").at("value").get<std::string>());
  v.size = hypothesis.size();
  if (hypothesis.arity != bundle.generator.output_bits())
    throw std::invalid_argument("hypothesis arity does not match the bundle domain");

  const FunctionRef f = bundle_function(bundle);
  if (mode.monte_carlo) {
    const McEstimate mc =
        dist_mc(hypothesis_of(hypothesis), f, bundle.generator, mode.samples, mode.seed);
    v.distance = mc.estimate;
    v.radius = mc.radius;
  } else {
    v.distance = dist_exact(hypothesis, f, bundle.generator.declared_target(guards));
  }

  if (bundle.metadata.contains("strict_size"))
    v.size_cap = bundle.metadata.at("strict_size").get<std::uint64_t>();
  v.pass = v.distance <= v.epsilon && (!v.size_cap || v.size <= *v.size_cap);
  return v;
}

}  // namespace

Verdict adjudicate(const HardInstanceBundle& bundle, const DecisionTree& hypothesis,
                   const AdjudicateMode& mode, const Guards& guards)
{
  return adjudicate_impl(bundle, hypothesis, serialize_tree(hypothesis), mode, guards);
}

Verdict adjudicate(const HardInstanceBundle& bundle, const DnfFormula& hypothesis,
                   const AdjudicateMode& mode, const Guards& guards)
{
  return adjudicate_impl(bundle, hypothesis, serialize_dnf(hypothesis), mode, guards);
}

nlohmann::json verdict_to_json(const Verdict& v)
{
  nlohmann::json doc;
  doc["problem"] = v.problem;
  doc["hypothesis"] = v.hypothesis;
  doc["distance"] = fraction_string(v.distance);
  if (v.radius > 0) doc["radius"] = v.radius;
  doc["epsilon"] = fraction_string(v.epsilon);
  doc["size"] = v.size;
  if (v.size_cap) doc["size_cap"] = *v.size_cap;
  doc["pass"] = v.pass;
  return doc;
}

}  // namespace dtgap
