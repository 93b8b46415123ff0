#include "dtgap/construction.hpp"

#include <set>
#include <stdexcept>

namespace dtgap {

std::string FunctionLabel::str() const
{
  std::string s;
  if (negated) s += "negated+";
  if (ell > 0) s += "amplified(" + std::to_string(ell) + ")+";
  if (xor_copies > 0) s += "xor(" + std::to_string(xor_copies) + ")+";
  if (s.empty()) return "plain";
  s.pop_back();
  return s;
}

PartialFunctionTable::PartialFunctionTable(int arity, std::vector<Word> support,
                                           std::vector<bool> values, FunctionLabel label)
    : arity(arity), support(std::move(support)), values(std::move(values)), label(label)
{
  if (this->support.size() != this->values.size())
    throw std::invalid_argument("support/value size mismatch");
  for (size_t i = 0; i < this->support.size(); ++i)
    if (!index_.emplace(this->support[i], this->values[i]).second)
      throw std::invalid_argument("support points must be pairwise distinct");
}

bool PartialFunctionTable::eval(Word x) const
{
  auto it = index_.find(x);
  if (it == index_.end())
    throw std::domain_error("point off support: " + to_bitstring(x, arity));
  return it->second;
}

FunctionRef PartialFunctionTable::ref() const
{
  // Copies the table into the closure so the ref outlives its source.
  auto copy = *this;
  return FunctionRef{arity, [copy](Word x) { return copy.eval(x); }};
}

void ExplicitDistribution::validate() const
{
  if (atoms.size() != probs.size()) throw std::invalid_argument("atom/prob size mismatch");
  std::set<Word> seen;
  Rat total = 0;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (!seen.insert(atoms[i]).second)
      throw std::invalid_argument("distribution atoms must be pairwise distinct");
    if (probs[i] <= 0) throw std::invalid_argument("atom probabilities must be positive");
    total += probs[i];
  }
  if (total != 1) throw std::invalid_argument("atom probabilities must sum to 1, got " +
                                              fraction_string(total));
}

Rat ExplicitDistribution::pmf(Word x) const
{
  for (size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i] == x) return probs[i];
  return 0;
}

namespace {

void require_support_valid(const SetCoverInstance& inst)
{
  std::set<Word> seen;
  for (int j = 0; j < inst.u(); ++j) {
    if (inst.neighborhoods[j] == 0)
      throw std::invalid_argument("element '" + inst.universe[j] +
                                  "' encodes to the all-zeros string; normalize first");
    if (!seen.insert(inst.neighborhoods[j]).second)
      throw std::invalid_argument("element '" + inst.universe[j] +
                                  "' duplicates another neighborhood; normalize first");
  }
}

}  // namespace

PartialFunctionTable build_base_function(const SetCoverInstance& inst)
{
  require_support_valid(inst);
  std::vector<Word> support{0};
  std::vector<bool> values{false};
  for (Word nb : inst.neighborhoods) {
    support.push_back(nb);
    values.push_back(true);
  }
  return PartialFunctionTable(inst.n(), std::move(support), std::move(values));
}

ExplicitDistribution build_base_distribution(const SetCoverInstance& inst)
{
  require_support_valid(inst);
  ExplicitDistribution dist;
  dist.arity = inst.n();
  dist.atoms.push_back(0);
  dist.probs.emplace_back(1, 2);
  for (Word nb : inst.neighborhoods) {
    dist.atoms.push_back(nb);
    dist.probs.emplace_back(Rat(1, 2 * inst.u()));
  }
  dist.validate();
  return dist;
}

PartialFunctionTable negate_table(const PartialFunctionTable& table)
{
  std::vector<bool> flipped;
  flipped.reserve(table.values.size());
  for (bool v : table.values) flipped.push_back(!v);
  FunctionLabel label = table.label;
  label.negated = !label.negated;
  return PartialFunctionTable(table.arity, table.support, std::move(flipped), label);
}

bool disjunction_consistency(const SetCoverInstance& inst, const std::vector<int>& C)
{
  PartialFunctionTable f = build_base_function(inst);
  Word mask = 0;
  for (int i : C) {
    if (i < 0 || i >= inst.n()) throw std::out_of_range("set index out of range");
    mask |= Word{1} << i;
  }
  for (size_t i = 0; i < f.support.size(); ++i)
    if (((f.support[i] & mask) != 0) != f.values[i]) return false;
  return true;
}

bool conjunction_consistency(const SetCoverInstance& inst, const std::vector<int>& C)
{
  PartialFunctionTable g = negate_table(build_base_function(inst));
  Word mask = 0;
  for (int i : C) {
    if (i < 0 || i >= inst.n()) throw std::out_of_range("set index out of range");
    mask |= Word{1} << i;
  }
  for (size_t i = 0; i < g.support.size(); ++i)
    if (((g.support[i] & mask) == 0) != g.values[i]) return false;
  return true;
}

nlohmann::json serialize_table(const PartialFunctionTable& table)
{
  nlohmann::json doc = nlohmann::json::array();
  for (size_t i = 0; i < table.support.size(); ++i)
    doc.push_back({to_bitstring(table.support[i], table.arity), table.values[i] ? 1 : 0});
  return doc;
}

nlohmann::json serialize_distribution(const ExplicitDistribution& dist)
{
  nlohmann::json doc = nlohmann::json::array();
  for (size_t i = 0; i < dist.atoms.size(); ++i)
    doc.push_back({to_bitstring(dist.atoms[i], dist.arity), fraction_string(dist.probs[i])});
  return doc;
}

PartialFunctionTable parse_table(const nlohmann::json& doc)
{
  if (!doc.is_array() || doc.empty()) throw std::invalid_argument("table must be a nonempty array");
  std::vector<Word> support;
  std::vector<bool> values;
  int arity = -1;
  for (const auto& row : doc) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_string() || !row[1].is_number_integer())
      throw std::invalid_argument("table rows must be [bitstring, bit]");
    std::string bits = row[0].get<std::string>();
    if (arity < 0) arity = static_cast<int>(bits.size());
    if (static_cast<int>(bits.size()) != arity)
      throw std::invalid_argument("table rows must share one arity");
    int v = row[1].get<int>();
    if (v != 0 && v != 1) throw std::invalid_argument("table values must be 0 or 1");
    support.push_back(from_bitstring(bits));
    values.push_back(v == 1);
  }
  return PartialFunctionTable(arity, std::move(support), std::move(values));
}

ExplicitDistribution parse_distribution(const nlohmann::json& doc)
{
  if (!doc.is_array() || doc.empty())
    throw std::invalid_argument("distribution must be a nonempty array");
  ExplicitDistribution dist;
  int arity = -1;
  for (const auto& row : doc) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_string() || !row[1].is_string())
      throw std::invalid_argument("distribution rows must be [bitstring, \"p/q\"]");
    std::string bits = row[0].get<std::string>();
    if (arity < 0) arity = static_cast<int>(bits.size());
    if (static_cast<int>(bits.size()) != arity)
      throw std::invalid_argument("distribution rows must share one arity");
    dist.atoms.push_back(from_bitstring(bits));
    dist.probs.push_back(parse_fraction(row[1].get<std::string>()));
  }
  dist.arity = arity;
  dist.validate();
  return dist;
}

}  // namespace dtgap
