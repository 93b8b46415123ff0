#pragma once

// Exhaustive and dynamic-programming oracles that certify distance lower
// bounds over bounded hypothesis classes, plus the claim registry behind the
// `verify` command.  Everything here is exponential by nature and guarded;
// the point is exact desk-scale certification, not scalability.
//
// The registry names claims by what they assert:
//
//   pmf-equivalence        lifted pmf is invariant in the completion position
//   generator-exactness    seed pushforward == declared pmf; circuit == function
//   junta-certificate      optimal cover induces a zero-distance junta tree
//   tree-size-farness      trees under the 2^(opt*ell/8) size bound stay
//                          >= 1/(4N) away from the lifted function
//   tree-size-farness-abort  abort variant: bound 2^(opt*ell/40), floor 1/(20N)
//   dnf-size-farness       DNFs under 2^(opt*ell/16) terms stay >= 1/(4N)
//                          from the negated lifted function
//   depth-error            base-domain trees of small depth err >= 1/(2N)
//   depth-error-abort      abort variant of depth-error (delta < 1/2)
//   width-error            width-capped DNFs err >= 1/(2N) on the base domain
//   tree-restriction       every tested tree restricts to a (2e, 2d/ell) witness
//   tree-restriction-abort abort variant: (10e, 10d/ell, 5*delta/4)
//   dnf-restriction        every tested DNF restricts to a (2e, 2w/ell) witness
//   junta-equivalence      junta learner succeeds at k iff a size-k cover exists
//   avg-depth-law          random trees satisfy avg depth <= 2*log2(size) and
//                          per-leaf reach <= 2^(-depth/2)
//   avg-width-law          near approximators with >= 4 terms satisfy
//                          avg width <= 4*log2(terms)
//   xor-stage              XOR-composition bookkeeping: bound formulas, chain
//                          inequalities, composed yes-side tree, marginals
//   mc-calibration         sampled distance lands inside its stated radius

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dtgap/construction.hpp"
#include "dtgap/decision_tree.hpp"
#include "dtgap/dnf.hpp"
#include "dtgap/guards.hpp"
#include "dtgap/metrics.hpp"
#include "dtgap/parity.hpp"
#include "dtgap/rational.hpp"
#include "dtgap/setcover.hpp"

namespace dtgap {

struct OracleReport {
  std::string claim;
  std::string params;   // instance and parameter summary
  Rat computed;         // the oracle's exact quantity
  Rat threshold;        // what the claim compares it against
  bool pass = false;
  std::string witness;  // serialized extremal hypothesis, when small enough
  std::string detail;   // scope of the class actually checked
};

nlohmann::json report_to_json(const OracleReport& report);

struct DpResult {
  DecisionTree tree;
  Rat min_error;
  Rat abort_mass;  // of the returned tree
};

// Minimum exact distance over all trees of depth <= depth_budget, optionally
// admitting abort leaves of total mass <= abort_budget.  Memoized on the set
// of distribution atoms consistent with the restriction path; with aborts the
// table keeps the Pareto frontier of (abort mass, error) pairs.  Ties break
// toward label 0, abort only where strictly better, lowest splitting
// variable — the witness tree is deterministic.
DpResult opt_tree_dp(const FunctionRef& f, const ExplicitDistribution& dist, int depth_budget,
                     const std::optional<Rat>& abort_budget = std::nullopt,
                     const Guards& guards = {});

struct DnfSearchResult {
  DnfFormula dnf;
  Rat min_error;
  std::uint64_t formulas_searched = 0;
};

// Exhaustive minimum of dist_exact over every DNF with at most max_terms
// terms of width at most max_width.  Terms are enumerated by (width,
// variable combination, polarity mask), formulas by ascending term-index
// combinations; the witness is the first minimizer in that order.
DnfSearchResult min_dist_dnf(const FunctionRef& f, const ExplicitDistribution& dist,
                             int max_terms, int max_width, const Guards& guards = {});

struct RestrictionWitness {
  bool found = false;
  int position = 0;  // completion position j, minimizing E[position queries]
  Word z = 0;
  DecisionTree tree;  // populated by the tree search
  DnfFormula dnf;     // populated by the DNF search
  Rat dist;
  Rat cost;        // average depth (trees) or average width (DNFs)
  Rat abort_mass;  // trees only
  Rat dist_bound;
  Rat cost_bound;
  Rat abort_bound;
  std::uint64_t candidates_checked = 0;
  bool sampled = false;  // z space sampled instead of exhausted
};

// Searches for a completion (j, z) whose restriction of `t` approximates the
// base pair within (2*eps, 2*d/ell) — or (10*eps, 10*d/ell, 5*delta/4) when
// an abort budget is given.  j is fixed to the position with the smallest
// expected query count (ties lowest); z runs in ascending order, seeded
// sampling above guards.restrict_max_z_bits.
RestrictionWitness find_tree_restriction(const DecisionTree& t, const FunctionRef& base_f,
                                         const ExplicitDistribution& base_dist,
                                         const BlockShape& shape, const Rat& eps, const Rat& d,
                                         const std::optional<Rat>& delta = std::nullopt,
                                         const Guards& guards = {},
                                         std::uint64_t sample_seed = 1);

// DNF counterpart, with bounds (2*eps, 2*w/ell) on distance and average width.
RestrictionWitness find_dnf_restriction(const DnfFormula& f, const FunctionRef& base_f,
                                        const ExplicitDistribution& base_dist,
                                        const BlockShape& shape, const Rat& eps, const Rat& w,
                                        const Guards& guards = {}, std::uint64_t sample_seed = 1);

struct JuntaResult {
  bool found = false;
  std::vector<int> vars;    // ascending; the lexicographically least witness
  std::vector<bool> table;  // 2^k entries indexed by packed projection; unseen -> 0
};

// First k-subset (lexicographic order) on which the function is constant over
// every agreement class of the distribution's atoms.
JuntaResult junta_learner(const FunctionRef& f, const ExplicitDistribution& dist, int k,
                          const Guards& guards = {});

// Do any two support atoms agreeing on `vars` always get equal values?
bool depends_only_on(const FunctionRef& f, const std::vector<Word>& support,
                     const std::vector<int>& vars);

// Full tree over the block variables of the cover (ascending), whose leaves
// output the disjunction of the covered blocks' parities — the explicit
// zero-distance witness when `cover` covers the instance.  Negation flips
// every leaf.  Depth |cover|*ell, size 2^(|cover|*ell).
DecisionTree cover_junta_tree(const std::vector<int>& cover, const BlockShape& shape,
                              bool negated = false);

// The exact DNF for "every block has even parity": one full-width term per
// point in the kernel of the blockwise parity map, 2^(n(ell-1)) terms total.
// Zero distance from the negated lifted function; seed stock for the
// width-law and restriction families.
DnfFormula parity_zero_dnf(const BlockShape& shape);

struct VerifyParams {
  int ell = 2;
  Rat delta = Rat(39, 100);  // abort budget for the abort variants
  int copies = 2;            // m for the XOR stage
  std::uint64_t seed = 1;    // base seed for sampled hypothesis families
  int family = 200;          // sampled hypotheses per family
  std::uint64_t mc_samples = 100000;
  int mc_trials = 100;
  Guards guards;
};

// Runs one registered claim against one instance.  Throws on unknown ids and
// guard violations; never weakens a failed check into a pass.
OracleReport verify_claim(const std::string& claim_id, const SetCoverInstance& inst,
                          const VerifyParams& params = {});

std::vector<std::string> known_claims();
std::string claim_description(const std::string& claim_id);

}  // namespace dtgap
