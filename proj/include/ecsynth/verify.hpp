#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ecsynth/circuit.hpp"
#include "ecsynth/ecoracle.hpp"
#include "ecsynth/pointadd.hpp"

namespace ecsynth {

/// Simulation is refused above this field size.
inline constexpr std::size_t kMaxVerifyN = 20;

struct VerifyOptions {
  /// Every affine P1 outside {O, P2, -P2} times every nonzero scale (n <= 10).
  bool exhaustive = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};

struct Counterexample {
  LDPoint input;
  std::string message;
};

struct VerifyResult {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<Counterexample> first;

  bool ok() const { return failures == 0; }
};

/// Simulates `circuit` (RegisterLayout wire order) on generic-branch inputs and compares with
/// aldaoud_madd: inputs restored, exact (X3, Y3, Z3), scratch zero, and, when P2 is on the curve,
/// ld_to_affine(result) = affine_add(P1, P2). Throws UnsupportedConfiguration for n > kMaxVerifyN.
VerifyResult verify_point_add(const Curve& curve, const AffinePoint& p2, const Circuit& circuit,
                              const RegisterLayout& layout, const VerifyOptions& opts);

/// Sampled inputs, reproducible from the seed: P1 uniform on the curve minus {O, +-P2}, then a
/// uniform nonzero LD scale.
LDPoint sample_generic_input(const Curve& curve, const AffinePoint& p2, std::mt19937_64& rng);

/// Test hook: turns gate `index` (mod size) into a NOT on its target. Returns the index used.
std::size_t inject_fault(Circuit& c, std::uint64_t index);

}  // namespace ecsynth
