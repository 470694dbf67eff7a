#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ecsynth/circuit.hpp"

namespace ecsynth {

// Grammar (LF line endings, single-space separators, '#' starts a comment line):
//   .v <wire>...        all wires, in order (must come first)
//   .i <wire>...        wires carrying input
//   .o <wire>...        wires carrying output
//   BEGIN <NAME> ... END <NAME>   subcircuit over the global wires; defined before use
//   BEGIN ... END                 main block
// Body lines: "tof [c1 [c2]] t", "H w", "T w", "T* w", "S w", "S* w", or a lone subcircuit name
// (a one-token line is always a call, so blocks may share a name with a gate).

struct QcItem {
  enum class Kind { kGate, kCall };
  Kind kind = Kind::kGate;
  GateKind gate = GateKind::kNot;
  std::vector<std::string> wires;
  std::string callee;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct QcBlock {
  std::string name;
  std::vector<QcItem> items;
};

struct QcDocument {
  std::vector<std::string> variables;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<QcBlock> subcircuits;
  QcBlock main;
};

/// `[A-Za-z][A-Za-z0-9_]*`.
bool is_valid_qc_name(std::string_view name);

/// With `group_as_subcircuits`, every top-level group becomes a block named after its label
/// (sanitized; a label reused with different gates gets "_2", "_3", ...; identical bodies share
/// one block) and nested groups are flattened. Gates outside top-level groups go straight into
/// the main block. Throws CircuitError for invalid wire names or a non-identity output relabeling.
void write_qc(std::ostream& os, const Circuit& c, bool group_as_subcircuits = true);
std::string write_qc(const Circuit& c, bool group_as_subcircuits = true);

/// Syntax errors and undefined names throw ParseError with line and column.
QcDocument parse_qc(std::string_view text);
/// Each call of a subcircuit becomes a top-level group labeled with the block name.
Circuit to_circuit(const QcDocument& doc);

}  // namespace ecsynth
