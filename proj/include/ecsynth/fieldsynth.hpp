#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "ecsynth/circuit.hpp"
#include "ecsynth/gf2field.hpp"
#include "ecsynth/linmaps.hpp"

namespace ecsynth {

// Every emit_* function appends to `c` and requires its registers to be pairwise disjoint
// (CircuitError otherwise). The synth_* functions build a standalone circuit instead.

/// |u>|v> -> |u>|v + M u>: weight(M) CNOTs laid out color class by color class, so the
/// depth is max_degree(M).
void emit_linear(Circuit& c, const BinMatrix& m, const RegisterRef& src, const RegisterRef& dst);
/// |a>|b> -> |a>|a + b>: n CNOTs in depth 1.
void emit_add_inplace(Circuit& c, const RegisterRef& src, const RegisterRef& dst);
void emit_square(Circuit& c, const IrreduciblePoly& p, const RegisterRef& src, const RegisterRef& dst);
void emit_sqrt(Circuit& c, const IrreduciblePoly& p, const RegisterRef& src, const RegisterRef& dst);
/// Throws SingularMap for k = 0.
void emit_const_mul(Circuit& c, const FieldElem& k, const RegisterRef& src, const RegisterRef& dst);
/// |a>|v> -> |a>|v + k a^2>.
void emit_sq_then_const(Circuit& c, const FieldElem& k, const RegisterRef& src, const RegisterRef& dst);

enum class MultiplierVariant {
  /// Contract |a>|b>|c> -> |a>|b>|c + ab> for every c.
  kHorner,
  /// Same gates minus the accumulator pre-division; only correct when c = 0 on entry.
  kHornerZeroAccumulator,
};

std::string_view multiplier_variant_name(MultiplierVariant v);
/// "horner" or "horner-zero-acc"; throws InvalidInput.
MultiplierVariant parse_multiplier_variant(std::string_view name);

/// Out-of-place F_{2^n} multiplier |a>|b>|c> -> |a>|b>|c + ab>, the black box used by
/// point-addition synthesis.
class FieldMultiplier {
 public:
  virtual ~FieldMultiplier() = default;
  virtual void emit(Circuit& c, const RegisterRef& a, const RegisterRef& b, const RegisterRef& acc) const = 0;
  virtual std::string name() const = 0;
  /// Scratch wires needed per invocation.
  virtual std::size_t ancillae() const { return 0; }
};

/// Horner-scheme multiplier: for i = n-1 .. 0, multiply the accumulator by x (relabel the
/// accumulator wires cyclically, then one CNOT per middle term of p), then add a_i * b with n
/// Toffolis. With kHorner the accumulator is first divided by x^(n-1), giving n^2 Toffolis
/// and 2(n-1)(weight(p)-2) CNOTs; kHornerZeroAccumulator skips the division. The relabelings
/// cancel, so no swaps are emitted.
class HornerMultiplier final : public FieldMultiplier {
 public:
  HornerMultiplier(IrreduciblePoly p, MultiplierVariant variant = MultiplierVariant::kHorner)
      : p_(std::move(p)), variant_(variant) {}

  void emit(Circuit& c, const RegisterRef& a, const RegisterRef& b, const RegisterRef& acc) const override;
  std::string name() const override { return std::string(multiplier_variant_name(variant_)); }
  MultiplierVariant variant() const { return variant_; }

 private:
  IrreduciblePoly p_;
  MultiplierVariant variant_;
};

void emit_mult(Circuit& c, const IrreduciblePoly& p, const RegisterRef& a, const RegisterRef& b,
               const RegisterRef& acc, MultiplierVariant variant = MultiplierVariant::kHorner);

/// Standalone circuits with registers "a" (source) and "c" (target).
Circuit synth_linear(const BinMatrix& m);
Circuit synth_add_inplace(std::size_t n);
Circuit synth_square(const IrreduciblePoly& p);
Circuit synth_sqrt(const IrreduciblePoly& p);
Circuit synth_const_mul(const FieldElem& k);
Circuit synth_sq_then_const(const FieldElem& k);
/// Standalone multiplier with registers "a", "b", "c".
Circuit synth_mult(const IrreduciblePoly& p, MultiplierVariant variant = MultiplierVariant::kHorner);

}  // namespace ecsynth
