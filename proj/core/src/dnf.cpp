#include "dtgap/dnf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dtgap {

bool DnfTerm::accepts(Word y) const
{
  for (const auto& [var, positive] : literals)
    if (get_bit(y, var) != positive) return false;
  return true;
}

bool DnfFormula::eval(Word y) const
{
  for (const DnfTerm& t : terms)
    if (t.accepts(y)) return true;
  return false;
}

void DnfFormula::validate() const
{
  if (arity < 0 || arity > kMaxVars) throw std::invalid_argument("formula arity out of range");
  for (const DnfTerm& t : terms) {
    int prev = -1;
    for (const auto& [var, positive] : t.literals) {
      (void)positive;
      if (var < 0 || var >= arity) throw std::invalid_argument("literal variable out of range");
      if (var <= prev)
        throw std::invalid_argument("term literals must be sorted by variable, no repeats");
      prev = var;
    }
  }
}

TraceResult dnf_trace(const DnfFormula& f, Word y, const std::optional<BlockShape>& shape)
{
  TraceResult r;
  if (shape) r.position_counts.assign(static_cast<size_t>(shape->block_len), 0);
  const DnfTerm* best = nullptr;
  for (const DnfTerm& t : f.terms)
    if (t.accepts(y) && (!best || t.width() < best->width())) best = &t;
  if (!best) {
    r.label = Leaf::Zero;
    return r;
  }
  r.label = Leaf::One;
  r.length = best->width();
  if (shape)
    for (const auto& [var, positive] : best->literals) {
      (void)positive;
      ++r.position_counts[static_cast<size_t>(var % shape->block_len)];
    }
  return r;
}

DnfFormula restrict_dnf(const DnfFormula& f, Word z, int j, const BlockShape& shape)
{
  if (f.arity != shape.arity())
    throw std::invalid_argument("formula arity does not match block shape");
  if (j < 0 || j >= shape.block_len)
    throw std::invalid_argument("completion position out of range");
  auto z_index = [&](int i, int p) { return i * (shape.block_len - 1) + (p < j ? p : p - 1); };
  auto block_parity = [&](int i) {
    bool acc = false;
    for (int p = 0; p < shape.block_len; ++p)
      if (p != j) acc ^= get_bit(z, z_index(i, p));
    return acc;
  };

  DnfFormula out;
  out.arity = shape.blocks;
  for (const DnfTerm& t : f.terms) {
    DnfTerm reduced;
    bool falsified = false;
    for (const auto& [var, positive] : t.literals) {
      const int i = var / shape.block_len;
      const int p = var % shape.block_len;
      if (p != j) {
        if (get_bit(z, z_index(i, p)) != positive) {
          falsified = true;
          break;
        }
        // satisfied literal: drop it
      } else {
        // y_(i,j) = x_i XOR parity(block seed), so the literal's polarity
        // flips with that parity.
        reduced.literals.emplace_back(i, positive != block_parity(i));
      }
    }
    if (!falsified) {
      std::sort(reduced.literals.begin(), reduced.literals.end());
      out.terms.push_back(std::move(reduced));
    }
  }
  out.validate();
  return out;
}

DnfFormula random_dnf(std::mt19937_64& rng, int arity, int terms, int width_lo, int width_hi)
{
  if (arity < 1 || arity > kMaxVars) throw std::invalid_argument("formula arity out of range");
  width_lo = std::clamp(width_lo, 0, arity);
  width_hi = std::clamp(width_hi, width_lo, arity);
  DnfFormula out;
  out.arity = arity;
  std::vector<int> vars(static_cast<size_t>(arity));
  for (int v = 0; v < arity; ++v) vars[static_cast<size_t>(v)] = v;
  for (int t = 0; t < terms; ++t) {
    const int width = std::uniform_int_distribution<int>(width_lo, width_hi)(rng);
    for (int k = 0; k < width; ++k) {
      const size_t pick = std::uniform_int_distribution<size_t>(k, vars.size() - 1)(rng);
      std::swap(vars[static_cast<size_t>(k)], vars[pick]);
    }
    DnfTerm term;
    for (int k = 0; k < width; ++k)
      term.literals.emplace_back(vars[static_cast<size_t>(k)], (rng() & 1) != 0);
    std::sort(term.literals.begin(), term.literals.end());
    out.terms.push_back(std::move(term));
  }
  out.validate();
  return out;
}

nlohmann::json serialize_dnf(const DnfFormula& f)
{
  f.validate();
  nlohmann::json doc = nlohmann::json::array();
  for (const DnfTerm& t : f.terms) {
    nlohmann::json term = nlohmann::json::array();
    for (const auto& [var, positive] : t.literals)
      term.push_back(positive ? var + 1 : -(var + 1));
    doc.push_back(std::move(term));
  }
  return doc;
}

DnfFormula parse_dnf(const nlohmann::json& doc, int arity)
{
  if (!doc.is_array()) throw std::invalid_argument("formula document must be an array of terms");
  DnfFormula out;
  out.arity = arity;
  for (const auto& term_doc : doc) {
    if (!term_doc.is_array())
      throw std::invalid_argument("terms must be arrays of signed literals");
    DnfTerm term;
    std::set<int> seen;
    for (const auto& lit : term_doc) {
      if (!lit.is_number_integer() || lit.get<int>() == 0)
        throw std::invalid_argument("literals are nonzero signed 1-based integers");
      const int signed_var = lit.get<int>();
      const int var = std::abs(signed_var) - 1;
      if (!seen.insert(var).second)
        throw std::invalid_argument("variable repeats inside a term");
      term.literals.emplace_back(var, signed_var > 0);
    }
    std::sort(term.literals.begin(), term.literals.end());
    out.terms.push_back(std::move(term));
  }
  out.validate();
  return out;
}

}  // namespace dtgap
