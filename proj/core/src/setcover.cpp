#include "dtgap/setcover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dtgap {

namespace {

std::vector<std::string> parse_vertex_list(const nlohmann::json& doc, const char* key)
{
  if (!doc.contains(key) || !doc[key].is_array())
    throw std::invalid_argument(std::string("instance document needs a '") + key + "' array");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& v : doc[key]) {
    if (!v.is_string()) throw std::invalid_argument(std::string(key) + " entries must be strings");
    std::string id = v.get<std::string>();
    if (!seen.insert(id).second)
      throw std::invalid_argument("duplicate vertex identifier '" + id + "'");
    out.push_back(std::move(id));
  }
  if (out.empty()) throw std::invalid_argument(std::string("empty '") + key + "' list");
  return out;
}

}  // namespace

SetCoverInstance parse_instance(const nlohmann::json& doc)
{
  if (!doc.is_object()) throw std::invalid_argument("instance document must be a JSON object");
  SetCoverInstance inst;
  inst.sets = parse_vertex_list(doc, "sets");
  inst.universe = parse_vertex_list(doc, "universe");
  if (inst.sets.size() > static_cast<size_t>(kMaxVars))
    throw GuardExceeded("more than 64 sets is outside this build's word size");

  std::map<std::string, int> set_index, elem_index;
  for (int i = 0; i < inst.n(); ++i) set_index[inst.sets[i]] = i;
  for (int j = 0; j < inst.u(); ++j) elem_index[inst.universe[j]] = j;

  inst.neighborhoods.assign(inst.universe.size(), 0);
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw std::invalid_argument("instance document needs an 'edges' array");
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw std::invalid_argument("edges must be [set id, element id] pairs");
    auto s = set_index.find(e[0].get<std::string>());
    if (s == set_index.end())
      throw std::invalid_argument("edge references unknown set '" + e[0].get<std::string>() + "'");
    auto u = elem_index.find(e[1].get<std::string>());
    if (u == elem_index.end())
      throw std::invalid_argument("edge references unknown element '" + e[1].get<std::string>() + "'");
    inst.neighborhoods[u->second] |= Word{1} << s->second;
  }
  for (int j = 0; j < inst.u(); ++j)
    if (inst.neighborhoods[j] == 0)
      throw std::invalid_argument("uncoverable element '" + inst.universe[j] + "'");
  return inst;
}

SetCoverInstance parse_instance_text(const std::string& text)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("instance document is not valid JSON: ") + e.what());
  }
  return parse_instance(doc);
}

nlohmann::json serialize_instance(const SetCoverInstance& inst)
{
  std::vector<std::pair<std::string, std::string>> edges;
  for (int j = 0; j < inst.u(); ++j)
    for (int i = 0; i < inst.n(); ++i)
      if (get_bit(inst.neighborhoods[j], i)) edges.emplace_back(inst.sets[i], inst.universe[j]);
  std::sort(edges.begin(), edges.end());
  nlohmann::json doc;
  doc["sets"] = inst.sets;
  doc["universe"] = inst.universe;
  doc["edges"] = nlohmann::json::array();
  for (auto& [s, u] : edges) doc["edges"].push_back({s, u});
  return doc;
}

NormalizeResult normalize(const SetCoverInstance& inst)
{
  NormalizeResult result;
  SetCoverInstance& out = result.instance;
  out.sets = inst.sets;

  std::set<Word> seen;
  for (int j = 0; j < inst.u(); ++j) {
    if (inst.neighborhoods[j] == 0)
      throw std::invalid_argument("uncoverable element '" + inst.universe[j] + "'");
    if (seen.insert(inst.neighborhoods[j]).second) {
      out.universe.push_back(inst.universe[j]);
      out.neighborhoods.push_back(inst.neighborhoods[j]);
    } else {
      result.removed_elements.push_back(inst.universe[j]);
    }
  }

  // Replicating set 0 leaves every cover valid and the optimum unchanged; new
  // identifiers get a _r<i> suffix (extended until fresh, in case the document
  // already uses such names).
  std::set<std::string> used(out.sets.begin(), out.sets.end());
  int counter = 1;
  while (1 + ceil_log2(out.universe.size()) > static_cast<int>(out.sets.size())) {
    if (out.sets.size() >= static_cast<size_t>(kMaxVars))
      throw GuardExceeded("normalization would exceed 64 sets");
    std::string id = out.sets[0] + "_r" + std::to_string(counter++);
    while (!used.insert(id).second) id += "x";
    int bit = static_cast<int>(out.sets.size());
    out.sets.push_back(id);
    result.replicated_sets.emplace_back(id, out.sets[0]);
    for (auto& nb : out.neighborhoods)
      if (get_bit(nb, 0)) nb |= Word{1} << bit;
  }
  return result;
}

bool is_normalized(const SetCoverInstance& inst)
{
  std::set<Word> seen;
  for (Word nb : inst.neighborhoods) {
    if (nb == 0) return false;
    if (!seen.insert(nb).second) return false;
  }
  return 1 + ceil_log2(inst.universe.size()) <= inst.n();
}

namespace {

Word cover_mask(const std::vector<int>& C, int n)
{
  Word m = 0;
  for (int i : C) {
    if (i < 0 || i >= n) throw std::out_of_range("set index out of range");
    m |= Word{1} << i;
  }
  return m;
}

bool covers_all(const SetCoverInstance& inst, Word mask)
{
  for (Word nb : inst.neighborhoods)
    if ((nb & mask) == 0) return false;
  return true;
}

void require_coverable(const SetCoverInstance& inst)
{
  for (int j = 0; j < inst.u(); ++j)
    if (inst.neighborhoods[j] == 0)
      throw std::invalid_argument("uncoverable element '" + inst.universe[j] + "'");
}

}  // namespace

bool is_cover(const SetCoverInstance& inst, const std::vector<int>& C)
{
  return covers_all(inst, cover_mask(C, inst.n()));
}

std::vector<int> greedy_cover(const SetCoverInstance& inst)
{
  require_coverable(inst);
  std::vector<int> picked;
  std::vector<bool> covered(inst.universe.size(), false);
  size_t remaining = inst.universe.size();
  while (remaining > 0) {
    int best = -1, best_gain = 0;
    for (int i = 0; i < inst.n(); ++i) {
      int gain = 0;
      for (int j = 0; j < inst.u(); ++j)
        if (!covered[j] && get_bit(inst.neighborhoods[j], i)) ++gain;
      if (gain > best_gain) {  // strict: ties stay with the lowest index
        best = i;
        best_gain = gain;
      }
    }
    picked.push_back(best);
    for (int j = 0; j < inst.u(); ++j)
      if (!covered[j] && get_bit(inst.neighborhoods[j], best)) {
        covered[j] = true;
        --remaining;
      }
  }
  return picked;
}

namespace {

// Branch and bound over partial covers.  Branches on an uncovered element with
// the fewest admissible sets; admissible sets are tried in ascending index.
struct CoverSearch {
  const std::vector<Word>& neighborhoods;
  int n;
  Word excluded;
  int best_size;  // strictly better solutions only

  bool feasible_below(Word chosen, int chosen_size, int limit)
  {
    // Is there a cover of size <= limit extending `chosen`, avoiding `excluded`?
    int uncovered_count = 0;
    Word pick_nb = 0;
    int pick_deg = kMaxVars + 1;
    for (Word nb : neighborhoods) {
      if (nb & chosen) continue;
      Word options = nb & ~excluded;
      if (options == 0) return false;
      ++uncovered_count;
      int deg = std::popcount(options);
      if (deg < pick_deg) {
        pick_deg = deg;
        pick_nb = options;
      }
    }
    if (uncovered_count == 0) return chosen_size <= limit;
    if (chosen_size >= limit) return false;
    // Counting bound: one new set covers at most max-degree uncovered elements.
    int max_gain = 0;
    for (int i = 0; i < n; ++i) {
      if (get_bit(excluded | chosen, i)) continue;
      int gain = 0;
      for (Word nb : neighborhoods)
        if (!(nb & chosen) && get_bit(nb, i)) ++gain;
      max_gain = std::max(max_gain, gain);
    }
    if (max_gain == 0) return false;
    if (chosen_size + (uncovered_count + max_gain - 1) / max_gain > limit) return false;
    for (int i = 0; i < n; ++i)
      if (get_bit(pick_nb, i) && feasible_below(chosen | (Word{1} << i), chosen_size + 1, limit))
        return true;
    return false;
  }
};

}  // namespace

OptResult exact_opt(const SetCoverInstance& inst, const Guards& guards)
{
  if (inst.n() > guards.exact_opt_max_n)
    throw GuardExceeded("exact_opt: " + std::to_string(inst.n()) + " sets exceeds guard " +
                        std::to_string(guards.exact_opt_max_n));
  require_coverable(inst);

  CoverSearch search{inst.neighborhoods, inst.n(), /*excluded=*/0, /*best_size=*/0};

  int upper = static_cast<int>(greedy_cover(inst).size());
  int opt = upper;
  while (opt > 0 && search.feasible_below(0, 0, opt - 1)) --opt;

  // Lexicographically least optimal witness: force indices in ascending order
  // whenever an optimal cover through the forced prefix still exists.
  OptResult result;
  result.size = opt;
  Word chosen = 0;
  int chosen_size = 0;
  for (int i = 0; i < inst.n() && chosen_size < opt; ++i) {
    CoverSearch probe{inst.neighborhoods, inst.n(), search.excluded, 0};
    if (probe.feasible_below(chosen | (Word{1} << i), chosen_size + 1, opt)) {
      chosen |= Word{1} << i;
      ++chosen_size;
      result.witness.push_back(i);
    } else {
      search.excluded |= Word{1} << i;
    }
  }
  return result;
}

SetCoverInstance to_hitting_set(const SetCoverInstance& inst)
{
  if (inst.universe.size() > static_cast<size_t>(kMaxVars))
    throw GuardExceeded("transpose would exceed 64 sets");
  SetCoverInstance out;
  out.sets = inst.universe;
  out.universe = inst.sets;
  out.neighborhoods.assign(inst.sets.size(), 0);
  for (int j = 0; j < inst.u(); ++j)
    for (int i = 0; i < inst.n(); ++i)
      if (get_bit(inst.neighborhoods[j], i)) out.neighborhoods[i] |= Word{1} << j;
  return out;
}

void validate(const GapParams& gap)
{
  if (gap.k < 1) throw std::invalid_argument("gap parameter k must be >= 1");
  if (gap.k_prime < gap.k) throw std::invalid_argument("gap parameter k' must be >= k");
}

}  // namespace dtgap
