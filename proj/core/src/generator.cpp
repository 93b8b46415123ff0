#include "dtgap/generator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dtgap {

namespace {

Word run_one(const GeneratorSpec& gen, Word chunk)
{
  const Word z = chunk & ((Word{1} << gen.z_bits()) - 1);
  const bool selector = get_bit(chunk, gen.z_bits());
  Word x = 0;
  if (selector) {
    const Word index = (chunk >> (gen.z_bits() + 1)) & ((Word{1} << gen.index_bits) - 1);
    x = gen.atom_table[static_cast<size_t>(index)];
  }
  return parity_complete(z, x, gen.shape, gen.completion_position);
}

Rat pmf_one(const GeneratorSpec& gen, Word y)
{
  const Word x = blockwise_parity(y, gen.shape);
  Rat base_mass;
  if (x == 0) {
    base_mass = Rat(1, 2);
  } else {
    const auto count = std::count(gen.atom_table.begin(), gen.atom_table.end(), x);
    base_mass = Rat(count, Int(1) << (gen.index_bits + 1));
  }
  return base_mass * pow2_rat(-static_cast<long long>(gen.z_bits()));
}

}  // namespace

Word GeneratorSpec::run(Word seed) const
{
  const int chunk_bits = base_seed_bits();
  const Word chunk_mask = (Word{1} << chunk_bits) - 1;
  Word out = 0;
  for (int c = 0; c < copies; ++c)
    out |= run_one(*this, (seed >> (c * chunk_bits)) & chunk_mask) << (c * base_output_bits());
  return out;
}

Rat GeneratorSpec::pmf(Word y) const
{
  const Word chunk_mask = (base_output_bits() == kMaxVars)
                              ? ~Word{0}
                              : (Word{1} << base_output_bits()) - 1;
  Rat p = 1;
  for (int c = 0; c < copies; ++c)
    p *= pmf_one(*this, (y >> (c * base_output_bits())) & chunk_mask);
  return p;
}

ExplicitDistribution GeneratorSpec::declared_target(const Guards& guards) const
{
  if (seed_bits() > guards.generator_max_seed_bits)
    throw GuardExceeded("seed space of " + std::to_string(seed_bits()) + " bits exceeds guard");
  std::map<Word, Rat> mass;
  const Rat seed_mass = pow2_rat(-static_cast<long long>(seed_bits()));
  for (Word seed = 0; seed < (Word{1} << seed_bits()); ++seed) mass[run(seed)] += seed_mass;
  ExplicitDistribution out;
  out.arity = output_bits();
  for (const auto& [atom, p] : mass) {
    out.atoms.push_back(atom);
    out.probs.push_back(p);
  }
  out.validate();
  return out;
}

GeneratorSpec build_generator(const SetCoverInstance& inst, int ell,
                              bool allow_identity_embedding)
{
  if (!is_normalized(inst))
    throw std::invalid_argument("build_generator needs a normalized instance");
  if (ell < 1 || (ell == 1 && !allow_identity_embedding))
    throw std::invalid_argument("block length must be >= 2 (or explicitly allow the identity embedding)");
  GeneratorSpec gen;
  gen.shape = BlockShape{inst.n(), ell};
  if (gen.shape.arity() > kMaxVars) throw GuardExceeded("output exceeds 64 bits");
  gen.completion_position = 0;
  gen.unpadded_atoms = inst.u();
  gen.index_bits = ceil_log2(static_cast<std::uint64_t>(inst.u()));
  const size_t table_size = size_t{1} << gen.index_bits;
  gen.atom_table.reserve(table_size);
  for (size_t i = 0; i < table_size; ++i)
    gen.atom_table.push_back(inst.neighborhoods[i % inst.neighborhoods.size()]);
  return gen;
}

GeneratorSpec xor_power_generator(const GeneratorSpec& base, int m)
{
  if (m < 1) throw std::invalid_argument("copy count must be >= 1");
  GeneratorSpec gen = base;
  gen.copies = base.copies * m;
  if (gen.output_bits() > kMaxVars) throw GuardExceeded("composed output exceeds 64 bits");
  if (gen.seed_bits() > kMaxVars) throw GuardExceeded("composed seed exceeds 64 bits");
  return gen;
}

nlohmann::json serialize_generator(const GeneratorSpec& gen)
{
  nlohmann::json doc;
  doc["blocks"] = gen.shape.blocks;
  doc["block_len"] = gen.shape.block_len;
  doc["completion_position"] = gen.completion_position;
  doc["z_bits"] = gen.z_bits();
  doc["selector_bits"] = 1;
  doc["index_bits"] = gen.index_bits;
  doc["copies"] = gen.copies;
  doc["seed_bits"] = gen.seed_bits();
  doc["output_bits"] = gen.output_bits();
  doc["unpadded_atoms"] = gen.unpadded_atoms;
  doc["atom_table"] = nlohmann::json::array();
  for (Word atom : gen.atom_table)
    doc["atom_table"].push_back(to_bitstring(atom, gen.shape.blocks));
  return doc;
}

GeneratorSpec parse_generator(const nlohmann::json& doc)
{
  GeneratorSpec gen;
  try {
    gen.shape = BlockShape{doc.at("blocks").get<int>(), doc.at("block_len").get<int>()};
    gen.completion_position = doc.at("completion_position").get<int>();
    gen.index_bits = doc.at("index_bits").get<int>();
    gen.unpadded_atoms = doc.at("unpadded_atoms").get<int>();
    if (doc.contains("copies")) gen.copies = doc["copies"].get<int>();
    for (const auto& s : doc.at("atom_table"))
      gen.atom_table.push_back(from_bitstring(s.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed generator document: ") + e.what());
  }
  if (gen.atom_table.size() != (size_t{1} << gen.index_bits))
    throw std::invalid_argument("atom table size must be 2^index_bits");
  if (gen.unpadded_atoms < 1 || static_cast<size_t>(gen.unpadded_atoms) > gen.atom_table.size())
    throw std::invalid_argument("unpadded atom count out of range");
  if (gen.copies < 1 || gen.seed_bits() > kMaxVars || gen.output_bits() > kMaxVars)
    throw std::invalid_argument("copy count out of range");
  if (doc.contains("z_bits") && doc["z_bits"].get<int>() != gen.z_bits())
    throw std::invalid_argument("inconsistent z_bits");
  if (doc.contains("seed_bits") && doc["seed_bits"].get<int>() != gen.seed_bits())
    throw std::invalid_argument("inconsistent seed_bits");
  return gen;
}

}  // namespace dtgap
