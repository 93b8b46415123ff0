#pragma once

// The base hard pair derived from a set-cover instance: a partial boolean
// function on n = |S| variables together with an explicit distribution on its
// support.
//
// Each universe element is identified with the indicator bitstring of its
// neighborhood.  The function sends the all-zeros string to 0 and every
// element encoding to 1; the distribution puts mass 1/2 on the all-zeros
// string and splits the other half evenly over the element encodings.  A
// cover C makes the function expressible as the monotone disjunction of the
// variables in C, and its negation as the conjunction of their negations —
// both checked exactly here.

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "dtgap/bits.hpp"
#include "dtgap/rational.hpp"
#include "dtgap/setcover.hpp"

namespace dtgap {

// Provenance of a function object: which constructions produced it.
struct FunctionLabel {
  bool negated = false;
  int ell = 0;         // > 0 once parity-amplified with block length ell
  int xor_copies = 0;  // > 0 once XOR-composed over that many copies

  std::string str() const;
  bool operator==(const FunctionLabel&) const = default;
};

// Type-erased total-on-support evaluator handed to metrics and oracles.
struct FunctionRef {
  int arity = 0;
  std::function<bool(Word)> eval;
};

struct PartialFunctionTable {
  int arity = 0;
  std::vector<Word> support;  // pairwise distinct, construction order
  std::vector<bool> values;
  FunctionLabel label;

  PartialFunctionTable() = default;
  PartialFunctionTable(int arity, std::vector<Word> support, std::vector<bool> values,
                       FunctionLabel label = {});

  bool eval(Word x) const;  // throws std::domain_error off support
  bool defined(Word x) const { return index_.count(x) != 0; }
  FunctionRef ref() const;

 private:
  std::unordered_map<Word, bool> index_;
};

struct ExplicitDistribution {
  int arity = 0;
  std::vector<Word> atoms;  // pairwise distinct
  std::vector<Rat> probs;   // positive, summing to exactly 1

  void validate() const;
  Rat pmf(Word x) const;  // 0 off support
};

// Support: the all-zeros string followed by the element encodings in document
// order.  Requires pairwise distinct, nonempty neighborhoods (normalize first).
PartialFunctionTable build_base_function(const SetCoverInstance& inst);

// Same atom order as build_base_function; masses 1/2 and 1/(2|U|).
ExplicitDistribution build_base_distribution(const SetCoverInstance& inst);

// Value flip on the same support; label gains `negated`.  Involution.
PartialFunctionTable negate_table(const PartialFunctionTable& table);

// Does the monotone disjunction  OR_{i in C} x_i  agree with the base function
// on every support point?  (Equivalent to C being a cover.)
bool disjunction_consistency(const SetCoverInstance& inst, const std::vector<int>& C);

// Does  AND_{i in C} !x_i  agree with the negated base function on support?
bool conjunction_consistency(const SetCoverInstance& inst, const std::vector<int>& C);

// JSON forms: table as [[bitstring, bit], ...], distribution as
// [[bitstring, "p/q"], ...], both in atom order.
nlohmann::json serialize_table(const PartialFunctionTable& table);
nlohmann::json serialize_distribution(const ExplicitDistribution& dist);
PartialFunctionTable parse_table(const nlohmann::json& doc);
ExplicitDistribution parse_distribution(const nlohmann::json& doc);

}  // namespace dtgap
