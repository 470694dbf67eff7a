#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecsynth/circuit.hpp"
#include "ecsynth/ecoracle.hpp"
#include "ecsynth/fieldsynth.hpp"

namespace ecsynth {

/// The eleven n-wire registers, in wire order.
struct RegisterLayout {
  static constexpr std::array<const char*, 11> kNames{"X1", "Y1", "Z1", "C", "Z3", "X3", "Bsq", "D", "Cp", "Z3p", "Y3"};

  std::size_t n = 0;
  RegisterRef X1, Y1, Z1, C, Z3, X3, Bsq, D, Cp, Z3p, Y3;

  /// Adds all registers to `c` (which must be empty). Y1 holds A mid-circuit, X3 is born as A^2.
  static RegisterLayout create(Circuit& c, std::size_t n);
  std::array<const RegisterRef*, 11> all() const { return {&X1, &Y1, &Z1, &C, &Z3, &X3, &Bsq, &D, &Cp, &Z3p, &Y3}; }
  std::array<const RegisterRef*, 5> scratch() const { return {&C, &Bsq, &D, &Cp, &Z3p}; }
};

struct SynthesisOptions {
  bool decompose_toffoli = false;
  /// a2 = 0 drops the a2 / Ia2 blocks entirely instead of leaving empty labeled groups.
  bool skip_a2_block_when_trivial = true;
  /// Accept a fixed point that is not on the curve (structure-only experiments).
  bool allow_off_curve = false;
  /// With the zero-accumulator variant only the first product (whose target is fresh) uses it;
  /// the other four need the general contract and use the full Horner multiplier.
  MultiplierVariant multiplier_variant = MultiplierVariant::kHorner;
};

/// Cost of the building blocks the bounds are stated in.
struct BlockCosts {
  std::size_t n = 0;
  std::uint64_t G_M = 0;    ///< gates of one multiplier (Toffoli level)
  std::uint64_t D_M = 0;    ///< depth of one multiplier (Toffoli level)
  std::uint64_t G_M_T = 0;  ///< T-count of one decomposed multiplier
  std::uint64_t D_M_T = 0;  ///< T-depth of one decomposed multiplier
  std::uint64_t G_S = 0;    ///< CNOTs of the squaring map
  std::uint64_t D_S = 0;    ///< depth of the squaring map
  std::uint64_t A_M = 0;    ///< multiplier ancillae
};

BlockCosts measure_block_costs(const IrreduciblePoly& p, MultiplierVariant variant = MultiplierVariant::kHorner);

struct PointAddResult {
  /// Toffoli-level circuit (what gets simulated).
  Circuit circuit;
  /// Clifford+T expansion, materialized only when decompose_toffoli is set.
  std::optional<Circuit> clifford_t;
  RegisterLayout layout;
  BlockCosts costs;
  /// Metrics of the Toffoli-level circuit; `bounds` holds the audit.
  ResourceReport report;
  /// Metrics after Toffoli decomposition (computed either way).
  ResourceReport decomposed;
  /// Prior-work leading-term formulas at the same n, for comparison only (never enforced).
  std::vector<BoundCheck> reference;
};

/// Fixed-point addition |X1>|Y1>|Z1>|0..0> -> |X1>|Y1>|Z1>|X3>|Y3>|Z3> (plus zeroed scratch)
/// for the generic branch P1 != O, +-P2. Throws CurveError for P2 = O or an off-curve P2
/// without allow_off_curve.
PointAddResult synth_point_add(const Curve& curve, const AffinePoint& p2, const SynthesisOptions& opts = {});

/// Fills report.bounds with the five resource bounds plus the square-root cleanup row and
/// throws BoundViolation naming the first one that fails.
void check_bounds(ResourceReport& report, const ResourceReport& decomposed, const BlockCosts& costs);

/// Same rows, evaluated without throwing.
std::vector<BoundCheck> evaluate_bounds(const ResourceReport& report, const ResourceReport& decomposed,
                                        const BlockCosts& costs);

}  // namespace ecsynth
