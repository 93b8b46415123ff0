#pragma once

// Gate-list circuits with a plain text netlist form:
//
//   inputs 4
//   g0 = XOR x0 x1
//   g1 = XOR x2 x3
//   g2 = OR g0 g1
//   output g2
//
// Operands reference inputs (x<i>) or earlier gates (g<i>); the list is
// topologically ordered by construction.  depth() counts gate levels on the
// longest input-to-output path (inputs sit at level 0, so the two-level
// XOR/OR core reports depth 2 and its negation depth 3; conventions that
// count input nodes as a level report one more).

#include <cstdint>
#include <string>
#include <vector>

#include "dtgap/bits.hpp"
#include "dtgap/setcover.hpp"

namespace dtgap {

enum class GateKind { And, Or, Not, Xor };

struct Operand {
  bool from_input = false;
  int index = 0;

  bool operator==(const Operand&) const = default;
};

struct Gate {
  GateKind kind = GateKind::And;
  std::vector<Operand> operands;

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  int inputs = 0;
  std::vector<Gate> gates;
  int output = -1;

  void validate() const;
  bool eval(Word x) const;  // inputs <= 64
  bool eval_wide(const std::vector<bool>& x) const;
  int depth() const;
  size_t gate_count() const { return gates.size(); }

  bool operator==(const Circuit&) const = default;
};

std::string to_netlist(const Circuit& c);
Circuit from_netlist(const std::string& text);

// OR over blocks of XOR gates: gate i XORs the ell wires of block i, a single
// OR joins the n block gates (fan-in 1 when n = 1), and negation appends a
// NOT.  Requires a normalized instance; ell >= 2 unless the identity
// embedding is explicitly allowed.
Circuit emit_amplified_circuit(const SetCoverInstance& inst, int ell, bool negated,
                               bool allow_identity_embedding = false);

// m disjoint copies of base feeding one top XOR.  m = 1 returns base
// unchanged (a fan-in-1 XOR would be noise).
Circuit xor_power_circuit(const Circuit& base, int m);

}  // namespace dtgap
