#pragma once

#include "ecsynth/bitvec.hpp"
#include "ecsynth/circuit.hpp"

namespace ecsynth {

/// One bit per wire, indexed by wire id.
using BasisState = BitVec;

/// Runs a NOT/CNOT/TOFFOLI circuit on a basis state and applies the output relabeling, so
/// bit i of the result is logical position i. Throws UnsupportedGate for H/T/S gates
/// (simulate the circuit before Toffoli decomposition instead).
BasisState simulate(const Circuit& c, const BasisState& input);

/// In-place variant without relabeling; `state` must have c.width() bits.
void simulate_in_place(const Circuit& c, BasisState& state);

}  // namespace ecsynth
