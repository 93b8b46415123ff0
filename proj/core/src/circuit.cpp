#include "dtgap/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace dtgap {

namespace {

const char* kind_name(GateKind k)
{
  switch (k) {
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Not: return "NOT";
    case GateKind::Xor: return "XOR";
  }
  throw std::logic_error("unreachable gate kind");
}

GateKind kind_from_name(const std::string& s)
{
  if (s == "AND") return GateKind::And;
  if (s == "OR") return GateKind::Or;
  if (s == "NOT") return GateKind::Not;
  if (s == "XOR") return GateKind::Xor;
  throw std::invalid_argument("unknown gate kind '" + s + "'");
}

}  // namespace

void Circuit::validate() const
{
  if (inputs < 0) throw std::invalid_argument("negative input count");
  for (size_t g = 0; g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    if (gate.operands.empty()) throw std::invalid_argument("gate without operands");
    if (gate.kind == GateKind::Not && gate.operands.size() != 1)
      throw std::invalid_argument("NOT takes exactly one operand");
    for (const Operand& op : gate.operands) {
      if (op.from_input) {
        if (op.index < 0 || op.index >= inputs)
          throw std::invalid_argument("operand references unknown input");
      } else if (op.index < 0 || static_cast<size_t>(op.index) >= g) {
        throw std::invalid_argument("operand must reference an earlier gate");
      }
    }
  }
  if (output < 0 || static_cast<size_t>(output) >= gates.size())
    throw std::invalid_argument("output must name a gate");
}

bool Circuit::eval(Word x) const
{
  if (inputs > kMaxVars) throw std::invalid_argument("wide circuit needs eval_wide");
  std::vector<bool> bits(static_cast<size_t>(inputs));
  for (int i = 0; i < inputs; ++i) bits[static_cast<size_t>(i)] = get_bit(x, i);
  return eval_wide(bits);
}

bool Circuit::eval_wide(const std::vector<bool>& x) const
{
  if (x.size() != static_cast<size_t>(inputs))
    throw std::invalid_argument("input width mismatch");
  std::vector<bool> value(gates.size());
  for (size_t g = 0; g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    auto fetch = [&](const Operand& op) {
      return op.from_input ? x[static_cast<size_t>(op.index)] : value[static_cast<size_t>(op.index)];
    };
    bool acc;
    switch (gate.kind) {
      case GateKind::And:
        acc = true;
        for (const Operand& op : gate.operands) acc = acc && fetch(op);
        break;
      case GateKind::Or:
        acc = false;
        for (const Operand& op : gate.operands) acc = acc || fetch(op);
        break;
      case GateKind::Xor:
        acc = false;
        for (const Operand& op : gate.operands) acc = acc != fetch(op);
        break;
      case GateKind::Not:
        acc = !fetch(gate.operands[0]);
        break;
      default:
        throw std::logic_error("unreachable gate kind");
    }
    value[g] = acc;
  }
  return value[static_cast<size_t>(output)];
}

int Circuit::depth() const
{
  std::vector<int> level(gates.size(), 0);
  for (size_t g = 0; g < gates.size(); ++g) {
    int deepest = 0;
    for (const Operand& op : gates[g].operands)
      if (!op.from_input) deepest = std::max(deepest, level[static_cast<size_t>(op.index)]);
    level[g] = deepest + 1;
  }
  return gates.empty() ? 0 : level[static_cast<size_t>(output)];
}

std::string to_netlist(const Circuit& c)
{
  c.validate();
  std::ostringstream out;
  out << "inputs " << c.inputs << "\n";
  for (size_t g = 0; g < c.gates.size(); ++g) {
    out << "g" << g << " = " << kind_name(c.gates[g].kind);
    for (const Operand& op : c.gates[g].operands)
      out << " " << (op.from_input ? "x" : "g") << op.index;
    out << "\n";
  }
  out << "output g" << c.output << "\n";
  return out.str();
}

Circuit from_netlist(const std::string& text)
{
  Circuit c;
  std::istringstream in(text);
  std::string line;
  bool saw_inputs = false, saw_output = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "inputs") {
      if (saw_inputs) throw std::invalid_argument("duplicate inputs line");
      if (!(ls >> c.inputs)) throw std::invalid_argument("malformed inputs line");
      saw_inputs = true;
    } else if (head == "output") {
      std::string ref;
      if (!(ls >> ref) || ref.size() < 2 || ref[0] != 'g')
        throw std::invalid_argument("malformed output line");
      c.output = std::stoi(ref.substr(1));
      saw_output = true;
    } else {
      if (head.size() < 2 || head[0] != 'g')
        throw std::invalid_argument("malformed gate line: " + line);
      if (std::stoi(head.substr(1)) != static_cast<int>(c.gates.size()))
        throw std::invalid_argument("gates must appear as g0, g1, ... in order");
      std::string eq, kind;
      if (!(ls >> eq >> kind) || eq != "=")
        throw std::invalid_argument("malformed gate line: " + line);
      Gate gate;
      gate.kind = kind_from_name(kind);
      std::string ref;
      while (ls >> ref) {
        if (ref.size() < 2 || (ref[0] != 'x' && ref[0] != 'g'))
          throw std::invalid_argument("malformed operand '" + ref + "'");
        gate.operands.push_back(Operand{ref[0] == 'x', std::stoi(ref.substr(1))});
      }
      c.gates.push_back(std::move(gate));
    }
  }
  if (!saw_inputs || !saw_output) throw std::invalid_argument("netlist needs inputs and output lines");
  c.validate();
  return c;
}

Circuit emit_amplified_circuit(const SetCoverInstance& inst, int ell, bool negated,
                               bool allow_identity_embedding)
{
  if (!is_normalized(inst))
    throw std::invalid_argument("emit_amplified_circuit needs a normalized instance");
  if (ell < 1 || (ell == 1 && !allow_identity_embedding))
    throw std::invalid_argument("block length must be >= 2 (or explicitly allow the identity embedding)");
  const int n = inst.n();
  Circuit c;
  c.inputs = n * ell;
  for (int i = 0; i < n; ++i) {
    Gate block{GateKind::Xor, {}};
    for (int p = 0; p < ell; ++p)
      block.operands.push_back(Operand{true, block_var(i, p, ell)});
    c.gates.push_back(std::move(block));
  }
  Gate top{GateKind::Or, {}};
  for (int i = 0; i < n; ++i) top.operands.push_back(Operand{false, i});
  c.gates.push_back(std::move(top));
  c.output = n;
  if (negated) {
    c.gates.push_back(Gate{GateKind::Not, {Operand{false, n}}});
    c.output = n + 1;
  }
  c.validate();
  return c;
}

Circuit xor_power_circuit(const Circuit& base, int m)
{
  base.validate();
  if (m < 1) throw std::invalid_argument("copy count must be >= 1");
  if (m == 1) return base;
  Circuit c;
  c.inputs = base.inputs * m;
  Gate top{GateKind::Xor, {}};
  for (int copy = 0; copy < m; ++copy) {
    const int gate_offset = static_cast<int>(c.gates.size());
    const int input_offset = base.inputs * copy;
    for (const Gate& g : base.gates) {
      Gate shifted = g;
      for (Operand& op : shifted.operands)
        op.index += op.from_input ? input_offset : gate_offset;
      c.gates.push_back(std::move(shifted));
    }
    top.operands.push_back(Operand{false, gate_offset + base.output});
  }
  c.gates.push_back(std::move(top));
  c.output = static_cast<int>(c.gates.size()) - 1;
  c.validate();
  return c;
}

}  // namespace dtgap
