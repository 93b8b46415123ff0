// Command line front end: bundle generation, exact Set-Cover solving, verdict
// adjudication, claim verification sweeps, and bundle reports.
//
// Exit codes: 0 pass, 1 verification/verdict failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dtgap/bundle.hpp"
#include "dtgap/grid.hpp"
#include "dtgap/suite.hpp"

namespace {

using namespace dtgap;

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SetCoverInstance load_instance(const std::string& path)
{
  return parse_instance_text(read_file(path));
}

struct CommonOpts {
  std::string guards_spec;
  Guards guards() const
  {
    Guards g;
    if (!guards_spec.empty()) g.apply_overrides(guards_spec);
    return g;
  }
};

std::optional<GapParams> resolve_gap_flags(int k, int k_prime)
{
  if (k < 0 && k_prime < 0) return std::nullopt;
  if (k < 0) k = k_prime;
  if (k_prime < 0) k_prime = k;
  return GapParams{k, k_prime};
}

std::optional<Rat> resolve_epsilon_flag(const std::string& text)
{
  if (text.empty()) return std::nullopt;
  return parse_fraction(text);
}

int cmd_gen_construction(const std::string& instance_path, const std::string& out_dir, int ell,
                         bool negated, long long strict_size, int k, int k_prime,
                         const std::string& epsilon, const CommonOpts& common)
{
  std::optional<std::uint64_t> strict;
  if (strict_size >= 0) strict = static_cast<std::uint64_t>(strict_size);
  const HardInstanceBundle bundle =
      gen_construction(load_instance(instance_path), ell, negated, strict,
                       resolve_gap_flags(k, k_prime), resolve_epsilon_flag(epsilon),
                       common.guards());
  write_bundle(bundle, out_dir);
  std::cout << bundle.metadata.dump(2) << "\n";
  return 0;
}

int cmd_gen_estimation(const std::string& instance_path, const std::string& out_dir, int m, int k,
                       int k_prime, const std::string& epsilon, const CommonOpts& common)
{
  const HardInstanceBundle bundle =
      gen_estimation(load_instance(instance_path), resolve_gap_flags(k, k_prime), m,
                     resolve_epsilon_flag(epsilon), common.guards());
  write_bundle(bundle, out_dir);
  std::cout << bundle.metadata.dump(2) << "\n";
  return 0;
}

int cmd_solve_setcover(const std::string& instance_path, bool transpose, bool normalize_first,
                       const CommonOpts& common)
{
  SetCoverInstance inst = load_instance(instance_path);
  nlohmann::json doc;
  if (transpose) {
    inst = to_hitting_set(inst);
    doc["transposed"] = true;
  }
  if (normalize_first) {
    const NormalizeResult norm = normalize(inst);
    inst = norm.instance;
    doc["normalized"] = serialize_instance(inst);
    doc["removed_elements"] = norm.removed_elements;
    doc["replicated_sets"] = norm.replicated_sets;
  }
  const OptResult opt = exact_opt(inst, common.guards());
  const std::vector<int> greedy = greedy_cover(inst);
  const auto names = [&](const std::vector<int>& ids) {
    std::vector<std::string> out;
    for (int i : ids) out.push_back(inst.sets.at(static_cast<size_t>(i)));
    return out;
  };
  doc["exact"] = {{"size", opt.size}, {"witness", names(opt.witness)}};
  doc["greedy"] = {{"size", greedy.size()}, {"witness", names(greedy)}};
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_adjudicate(const std::string& bundle_dir, const std::string& hypothesis_path, bool as_dnf,
                   bool monte_carlo, std::uint64_t samples, std::uint64_t seed,
                   const CommonOpts& common)
{
  const HardInstanceBundle bundle = read_bundle(bundle_dir);
  const nlohmann::json hyp = nlohmann::json::parse(read_file(hypothesis_path));
  AdjudicateMode mode;
  mode.monte_carlo = monte_carlo;
  mode.samples = samples;
  mode.seed = seed;
  const Verdict verdict =
      as_dnf ? adjudicate(bundle, parse_dnf(hyp, bundle.generator.output_bits()), mode,
                          common.guards())
             : adjudicate(bundle, parse_tree(hyp), mode, common.guards());
  std::cout << verdict_to_json(verdict).dump(2) << "\n";
  return verdict.pass ? 0 : 1;
}

int cmd_verify(std::vector<std::string> claims, bool list_only, const std::string& instance_path,
               int max_n, int max_u, std::vector<int> ells, std::uint64_t seed, int family,
               const std::string& delta, int copies, std::uint64_t samples, int trials,
               const CommonOpts& common)
{
  if (list_only) {
    nlohmann::json doc = nlohmann::json::array();
    for (const std::string& id : known_claims())
      doc.push_back({{"claim", id}, {"description", claim_description(id)}});
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  if (claims.size() == 1 && claims.front() == "all") claims = known_claims();

  VerifyParams params;
  params.seed = seed;
  params.family = family;
  if (!delta.empty()) params.delta = parse_fraction(delta);
  params.copies = copies;
  params.mc_samples = samples;
  params.mc_trials = trials;
  params.guards = common.guards();
  if (ells.empty()) ells = {2};

  std::vector<OracleReport> reports;
  if (!instance_path.empty()) {
    const SetCoverInstance inst = load_instance(instance_path);
    for (int ell : ells) {
      params.ell = ell;
      for (const std::string& claim : claims) reports.push_back(verify_claim(claim, inst, params));
    }
  } else {
    reports = run_suite(claims, GridSpec{max_n, max_u, ells}, params);
  }

  nlohmann::json doc = nlohmann::json::array();
  bool all_pass = true;
  for (const OracleReport& report : reports) {
    doc.push_back(report_to_json(report));
    all_pass = all_pass && report.pass;
  }
  std::cout << doc.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

int cmd_report(const std::string& bundle_dir, const CommonOpts& common)
{
  const HardInstanceBundle bundle = read_bundle(bundle_dir);
  nlohmann::json doc;
  doc["metadata"] = bundle.metadata;
  doc["circuit"] = {{"inputs", bundle.circuit.inputs},
                    {"gates", bundle.circuit.gate_count()},
                    {"depth", bundle.circuit.depth()}};
  doc["generator"] = {{"seed_bits", bundle.generator.seed_bits()},
                      {"output_bits", bundle.generator.output_bits()}};
  bool ok = true;
  try {
    check_bundle(bundle, common.guards());
    doc["coherence"] = "metadata, circuit, and generator match their re-derivation; "
                       "seed replay matches the declared pmf";
  } catch (const GuardExceeded& e) {
    doc["coherence"] = std::string("skipped: ") + e.what();
  } catch (const std::exception& e) {
    doc["coherence"] = std::string("FAILED: ") + e.what();
    ok = false;
  }
  std::cout << doc.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Set-Cover to decision-tree hardness: bundles, oracles, and verdicts"};
  app.require_subcommand(1);
  int rc = 0;

  CommonOpts common;

  // gen construction | gen estimation
  auto* gen = app.add_subcommand("gen", "emit a hard-instance bundle");
  gen->require_subcommand(1);

  std::string gen_instance, gen_out = "bundle";
  int gen_ell = 2;
  bool gen_negated = false;
  long long gen_strict = -1;
  int gen_m = 1, gen_k = -1, gen_kp = -1;
  std::string gen_eps;

  auto* genc = gen->add_subcommand("construction", "tree/DNF construction flavor");
  genc->add_option("instance", gen_instance, "instance JSON file")->required();
  genc->add_option("-o,--out", gen_out, "output bundle directory");
  genc->add_option("--ell", gen_ell, "block length (>= 2)")->envname("DTGAP_ELL");
  genc->add_flag("--negated", gen_negated, "negate the target function")->envname("DTGAP_NEGATED");
  genc->add_option("--strict-size", gen_strict, "size cap for strictly-proper adjudication")
      ->envname("DTGAP_STRICT_SIZE");
  genc->add_option("--k", gen_k, "yes-side gap parameter (default: exact opt)");
  genc->add_option("--k-prime", gen_kp, "no-side gap parameter (default: exact opt)");
  genc->add_option("--epsilon", gen_eps, "target accuracy as p/q (default 1/(4N))");
  genc->add_option("--guards", common.guards_spec, "guard overrides key=value,...")
      ->envname("DTGAP_GUARDS");
  genc->callback([&] {
    rc = cmd_gen_construction(gen_instance, gen_out, gen_ell, gen_negated, gen_strict, gen_k,
                              gen_kp, gen_eps, common);
  });

  auto* gene = gen->add_subcommand("estimation", "XOR-powered estimation flavor (ell = 2)");
  gene->add_option("instance", gen_instance, "instance JSON file")->required();
  gene->add_option("-o,--out", gen_out, "output bundle directory");
  gene->add_option("--m", gen_m, "number of XOR copies")->envname("DTGAP_M");
  gene->add_option("--k", gen_k, "yes-side gap parameter (default: exact opt)");
  gene->add_option("--k-prime", gen_kp, "no-side gap parameter (default: exact opt)");
  gene->add_option("--epsilon", gen_eps, "target accuracy as p/q (default 1/2 - 2^-N)");
  gene->add_option("--guards", common.guards_spec, "guard overrides key=value,...")
      ->envname("DTGAP_GUARDS");
  gene->callback(
      [&] { rc = cmd_gen_estimation(gen_instance, gen_out, gen_m, gen_k, gen_kp, gen_eps, common); });

  // solve-setcover
  std::string solve_instance;
  bool solve_transpose = false, solve_normalize = false;
  auto* solve = app.add_subcommand("solve-setcover", "exact and greedy covers");
  solve->add_option("instance", solve_instance, "instance JSON file")->required();
  solve->add_flag("--transpose", solve_transpose, "solve the hitting-set transpose instead");
  solve->add_flag("--normalize", solve_normalize, "normalize before solving");
  solve->add_option("--guards", common.guards_spec, "guard overrides key=value,...")
      ->envname("DTGAP_GUARDS");
  solve->callback(
      [&] { rc = cmd_solve_setcover(solve_instance, solve_transpose, solve_normalize, common); });

  // adjudicate
  std::string adj_bundle, adj_hypothesis;
  bool adj_dnf = false, adj_mc = false;
  std::uint64_t adj_samples = 100000, adj_seed = 1;
  auto* adj = app.add_subcommand("adjudicate", "score a hypothesis against a bundle");
  adj->add_option("bundle", adj_bundle, "bundle directory")->required();
  adj->add_option("--hypothesis", adj_hypothesis, "tree (or DNF) JSON file")->required();
  adj->add_flag("--dnf", adj_dnf, "hypothesis file is a DNF");
  adj->add_flag("--mc", adj_mc, "Monte-Carlo mode (default: exact)");
  adj->add_option("--samples", adj_samples, "MC sample count")->envname("DTGAP_SAMPLES");
  adj->add_option("--seed", adj_seed, "MC seed")->envname("DTGAP_SEED");
  adj->add_option("--guards", common.guards_spec, "guard overrides key=value,...")
      ->envname("DTGAP_GUARDS");
  adj->callback([&] {
    rc = cmd_adjudicate(adj_bundle, adj_hypothesis, adj_dnf, adj_mc, adj_samples, adj_seed, common);
  });

  // verify
  std::vector<std::string> ver_claims = {"all"};
  bool ver_list = false;
  std::string ver_instance, ver_delta;
  int ver_max_n = 3, ver_max_u = 3, ver_family = 50, ver_copies = 2, ver_trials = 20;
  std::vector<int> ver_ells = {2};
  std::uint64_t ver_seed = 1, ver_samples = 100000;
  auto* ver = app.add_subcommand("verify", "run claim oracles over a grid or one instance");
  ver->add_option("--claims", ver_claims, "claim ids (or 'all')")->delimiter(',');
  ver->add_flag("--list", ver_list, "list known claims and exit");
  ver->add_option("--instance", ver_instance, "verify this instance instead of a grid");
  ver->add_option("--max-n", ver_max_n, "grid: sets up to this count");
  ver->add_option("--max-u", ver_max_u, "grid: elements up to this count");
  ver->add_option("--ell", ver_ells, "block lengths to sweep")->delimiter(',')->envname("DTGAP_ELL");
  ver->add_option("--seed", ver_seed, "family seed")->envname("DTGAP_SEED");
  ver->add_option("--family", ver_family, "random family size per claim");
  ver->add_option("--delta", ver_delta, "abort budget as p/q (default 39/100)");
  ver->add_option("--copies", ver_copies, "XOR copies for the composition claim");
  ver->add_option("--samples", ver_samples, "MC samples for the calibration claim")
      ->envname("DTGAP_SAMPLES");
  ver->add_option("--trials", ver_trials, "MC trials for the calibration claim");
  ver->add_option("--guards", common.guards_spec, "guard overrides key=value,...")
      ->envname("DTGAP_GUARDS");
  ver->callback([&] {
    rc = cmd_verify(ver_claims, ver_list, ver_instance, ver_max_n, ver_max_u, ver_ells, ver_seed,
                    ver_family, ver_delta, ver_copies, ver_samples, ver_trials, common);
  });

  // report
  std::string rep_bundle;
  auto* rep = app.add_subcommand("report", "inspect and re-check an emitted bundle");
  rep->add_option("bundle", rep_bundle, "bundle directory")->required();
  rep->add_option("--guards", common.guards_spec, "guard overrides key=value,...")
      ->envname("DTGAP_GUARDS");
  rep->callback([&] { rc = cmd_report(rep_bundle, common); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
