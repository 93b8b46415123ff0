#pragma once

// Hard-instance bundles: a circuit computing the target function, a seeded
// generator for the target distribution, and a metadata record carrying the
// yes-certificate, the no-side thresholds, and the target accuracy.  The
// construction flavor is fully numeric; the estimation flavor records its
// no-side depth bound symbolically (the hidden constant is a named parameter)
// together with the XOR-stage arithmetic that produced it.

#include <cstdint>
#include <optional>
#include <string>

#include "dtgap/circuit.hpp"
#include "dtgap/decision_tree.hpp"
#include "dtgap/dnf.hpp"
#include "dtgap/generator.hpp"
#include "dtgap/guards.hpp"
#include "dtgap/setcover.hpp"

namespace dtgap {

struct HardInstanceBundle {
  SetCoverInstance instance;
  Circuit circuit;
  GeneratorSpec generator;
  nlohmann::json metadata;
};

// 64-bit FNV-1a over a byte string, rendered as "fnv1a64:<16 hex digits>".
std::string fnv1a64(const std::string& bytes);

// Construction flavor.  Thresholds derive from k' (the no-side gap), the
// accuracy defaults to 1/(4N), and the circuit is the plain or negated
// amplified function.  Deterministic: equal inputs give byte-identical
// bundles.
HardInstanceBundle gen_construction(const SetCoverInstance& inst, int ell, bool negated,
                                    std::optional<std::uint64_t> strict_size = std::nullopt,
                                    std::optional<GapParams> gap = std::nullopt,
                                    std::optional<Rat> epsilon = std::nullopt,
                                    const Guards& guards = {});

// Estimation flavor: block length fixed to 2, circuit and generator XOR-power
// m copies, accuracy defaults to 1/2 - 2^-N, and the no-side depth bound is
// symbolic in k'*m with the stage arithmetic attached.
HardInstanceBundle gen_estimation(const SetCoverInstance& inst,
                                  std::optional<GapParams> gap = std::nullopt, int m = 1,
                                  std::optional<Rat> epsilon = std::nullopt,
                                  const Guards& guards = {});

// Directory layout: instance.json, circuit.net, generator.json, metadata.json.
void write_bundle(const HardInstanceBundle& bundle, const std::string& dir);
HardInstanceBundle read_bundle(const std::string& dir);

// Re-derives the metadata from the stored instance and parameters and demands
// byte equality, then (within guards) replays every generator seed through
// the circuit against the analytic function/pmf pair.  Throws on mismatch.
void check_bundle(const HardInstanceBundle& bundle, const Guards& guards = {});

struct Verdict {
  std::string problem;            // "construction" or "estimation"
  nlohmann::json hypothesis;      // as submitted
  Rat distance;                   // exact, or the MC point estimate
  double radius = 0.0;            // MC half-width; 0 in exact mode
  Rat epsilon;                    // the bundle's target accuracy
  std::uint64_t size = 0;         // hypothesis size
  std::optional<std::uint64_t> size_cap;
  bool pass = false;              // distance <= epsilon and size within cap
};
nlohmann::json verdict_to_json(const Verdict&);

struct AdjudicateMode {
  bool monte_carlo = false;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
};

Verdict adjudicate(const HardInstanceBundle& bundle, const DecisionTree& hypothesis,
                   const AdjudicateMode& mode = {}, const Guards& guards = {});
Verdict adjudicate(const HardInstanceBundle& bundle, const DnfFormula& hypothesis,
                   const AdjudicateMode& mode = {}, const Guards& guards = {});

}  // namespace dtgap
