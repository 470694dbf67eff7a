#include "ecsynth/revsim.hpp"

#include <string>

#include "ecsynth/errors.hpp"

namespace ecsynth {

void simulate_in_place(const Circuit& c, BasisState& state) {
  if (state.size() != c.width()) {
    throw InvalidInput("state has " + std::to_string(state.size()) + " bits, circuit has " +
                       std::to_string(c.width()) + " wires");
  }
  auto words = state.words();
  auto bit = [&](WireId w) { return (words[w >> 6] >> (w & 63)) & 1u; };
  auto toggle = [&](WireId w, BitVec::Word v) { words[w >> 6] ^= v << (w & 63); };
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kNot:
        toggle(g.wires[0], 1);
        break;
      case GateKind::kCnot:
        toggle(g.wires[1], bit(g.wires[0]));
        break;
      case GateKind::kToffoli:
        toggle(g.wires[2], bit(g.wires[0]) & bit(g.wires[1]));
        break;
      default:
        throw UnsupportedGate("cannot simulate " + std::string(gate_kind_name(g.kind)) +
                              " on basis states; simulate the circuit before Toffoli decomposition");
    }
  }
}

BasisState simulate(const Circuit& c, const BasisState& input) {
  BasisState state = input;
  simulate_in_place(c, state);
  if (c.has_identity_permutation()) return state;
  BasisState out(state.size());
  const auto& perm = c.out_permutation();
  for (std::size_t i = 0; i < perm.size(); ++i) out.set(i, state.get(perm[i]));
  return out;
}

}  // namespace ecsynth
