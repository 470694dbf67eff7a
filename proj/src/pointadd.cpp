#include "ecsynth/pointadd.hpp"

#include <algorithm>

#include "ecsynth/errors.hpp"
#include "ecsynth/linmaps.hpp"

namespace ecsynth {

RegisterLayout RegisterLayout::create(Circuit& c, std::size_t n) {
  if (c.width() != 0) throw CircuitError("register layout needs an empty circuit");
  RegisterLayout l;
  l.n = n;
  // Inputs X1, Y1, Z1; outputs X1, Y1, Z1, X3, Y3, Z3; the rest is scratch returned to zero.
  l.X1 = c.add_register("X1", n, true, true);
  l.Y1 = c.add_register("Y1", n, true, true);
  l.Z1 = c.add_register("Z1", n, true, true);
  l.C = c.add_register("C", n, false, false);
  l.Z3 = c.add_register("Z3", n, false, true);
  l.X3 = c.add_register("X3", n, false, true);
  l.Bsq = c.add_register("Bsq", n, false, false);
  l.D = c.add_register("D", n, false, false);
  l.Cp = c.add_register("Cp", n, false, false);
  l.Z3p = c.add_register("Z3p", n, false, false);
  l.Y3 = c.add_register("Y3", n, false, true);
  return l;
}

BlockCosts measure_block_costs(const IrreduciblePoly& p, MultiplierVariant variant) {
  BlockCosts k;
  k.n = p.n();
  const Circuit mult = synth_mult(p, variant);
  const ResourceReport m = metrics(mult, false);
  const ResourceReport md = decomposed_metrics(mult, false);
  k.G_M = m.total_gates;
  k.D_M = m.depth;
  k.G_M_T = md.t_count;
  k.D_M_T = md.t_depth;
  const BinMatrix sq = matrix_of_squaring(p);
  k.G_S = weight(sq);
  k.D_S = max_degree(sq);
  k.A_M = HornerMultiplier(p, variant).ancillae();
  return k;
}

namespace {

// A group whose body is `body`; the group is still recorded (empty) when the body emits nothing.
template <typename F>
void labeled(Circuit& c, const char* label, F&& body) {
  c.begin_group(label);
  body();
  c.end_group();
}

void emit_linear_or_add(Circuit& c, const FieldElem& k, const RegisterRef& src, const RegisterRef& dst) {
  if (k.is_one()) {
    emit_add_inplace(c, src, dst);
  } else {
    emit_const_mul(c, k, src, dst);
  }
}

std::uint64_t group_gate_sum(const ResourceReport& r, std::initializer_list<std::string_view> labels) {
  std::uint64_t sum = 0;
  for (const GroupMetrics& g : r.groups) {
    if (g.level != 0) continue;
    if (std::find(labels.begin(), labels.end(), g.label) != labels.end()) sum += g.counts.total();
  }
  return sum;
}

}  // namespace

PointAddResult synth_point_add(const Curve& curve, const AffinePoint& p2, const SynthesisOptions& opts) {
  if (p2.is_identity()) throw CurveError("the fixed point must not be the identity");
  if (!(p2.x().modulus() == curve.a2.modulus())) throw ModulusMismatch("fixed point and curve over different fields");
  if (!opts.allow_off_curve && !on_curve_affine(curve, p2)) {
    throw CurveError("fixed point (" + p2.x().to_hex() + ", " + p2.y().to_hex() + ") is not on the curve");
  }

  const Field f = curve.field();
  const IrreduciblePoly& p = f.modulus();
  const std::size_t n = f.n();
  const FieldElem& x2 = p2.x();
  const FieldElem& y2 = p2.y();
  const FieldElem xy = x2 + y2;
  const bool drop_a2 = curve.a2.is_zero() && opts.skip_a2_block_when_trivial;

  PointAddResult out;
  Circuit& c = out.circuit;
  const RegisterLayout L = RegisterLayout::create(c, n);
  out.layout = L;

  const HornerMultiplier full(p, MultiplierVariant::kHorner);
  const HornerMultiplier first(p, opts.multiplier_variant);

  // x2 = 0 or y2 = 0 makes the corresponding scaled map vanish; the blocks stay as empty groups.
  auto scaled_square = [&](const FieldElem& k, const RegisterRef& src, const RegisterRef& dst) {
    if (!k.is_zero()) emit_sq_then_const(c, k, src, dst);
  };
  auto scaled = [&](const FieldElem& k, const RegisterRef& src, const RegisterRef& dst) {
    if (!k.is_zero()) emit_linear_or_add(c, k, src, dst);
  };

  // 1. A = Y1 + y2 Z1^2 in place of Y1.
  labeled(c, "SM", [&] { scaled_square(y2, L.Z1, L.Y1); });
  // 2. B = X1 + x2 Z1 in place of X1.
  labeled(c, "X", [&] { scaled(x2, L.Z1, L.X1); });
  // 3. C = B Z1.
  labeled(c, "M", [&] { first.emit(c, L.X1, L.Z1, L.C); });
  // 4. Z3 = C^2, A^2 (future X3), B^2.
  labeled(c, "S", [&] { emit_square(c, p, L.C, L.Z3); });
  labeled(c, "S", [&] { emit_square(c, p, L.Y1, L.X3); });
  labeled(c, "S", [&] { emit_square(c, p, L.X1, L.Bsq); });
  // 5. B^2 + a2 C; D = x2 Z3.
  if (!drop_a2) labeled(c, "a2", [&] { scaled(curve.a2, L.C, L.Bsq); });
  labeled(c, "X", [&] { scaled(x2, L.Z3, L.D); });
  // 6. A + B^2 + a2 C; copies C' and Z3'.
  emit_add_inplace(c, L.Y1, L.Bsq);
  emit_add_inplace(c, L.C, L.Cp);
  emit_add_inplace(c, L.Z3, L.Z3p);
  // 7. X3 = A^2 + C (A + B^2 + a2 C); Z3' = Z3 + A C; Y3 = (x2 + y2) Z3^2.
  labeled(c, "M", [&] { full.emit(c, L.C, L.Bsq, L.X3); });
  labeled(c, "M", [&] { full.emit(c, L.Y1, L.Cp, L.Z3p); });
  labeled(c, "xyZ", [&] { scaled_square(xy, L.Z3, L.Y3); });
  // 8.-10. Y3 += (D + X3)(A C + Z3).
  emit_add_inplace(c, L.X3, L.D);
  labeled(c, "M", [&] { full.emit(c, L.D, L.Z3p, L.Y3); });
  emit_add_inplace(c, L.X3, L.D);

  // Cleanup: every block below undoes a forward block.
  const std::size_t mark = c.size();
  labeled(c, "IM", [&] { full.emit(c, L.Y1, L.Cp, L.Z3p); });
  {
    // Only self-inverse gates inside, so the reversed list is the inverse.
    std::vector<Gate> span(c.gates().begin() + static_cast<std::ptrdiff_t>(mark), c.gates().end());
    std::reverse(span.begin(), span.end());
    for (std::size_t i = 0; i < span.size(); ++i) c.replace_gate(mark + i, span[i]);
  }
  // 12.
  emit_add_inplace(c, L.Y1, L.Bsq);
  emit_add_inplace(c, L.C, L.Cp);
  emit_add_inplace(c, L.Z3, L.Z3p);
  // 13.
  labeled(c, "IX", [&] { scaled(x2, L.Z3, L.D); });
  if (!drop_a2) labeled(c, "Ia2", [&] { scaled(curve.a2, L.C, L.Bsq); });
  // 14. Only B^2 is unsquared: the A^2 wires now hold X3. C = sqrt(Z3) clears C.
  labeled(c, "IS", [&] { emit_square(c, p, L.X1, L.Bsq); });
  labeled(c, "SR", [&] { emit_sqrt(c, p, L.Z3, L.C); });
  // 15., 16.
  labeled(c, "IX", [&] { scaled(x2, L.Z1, L.X1); });
  labeled(c, "ISM", [&] { scaled_square(y2, L.Z1, L.Y1); });

  out.costs = measure_block_costs(p, MultiplierVariant::kHorner);
  out.report = metrics(c, true);
  out.decomposed = decomposed_metrics(c, true);
  check_bounds(out.report, out.decomposed, out.costs);

  const std::uint64_t nn = n;
  const auto& k = out.costs;
  out.reference = {
      {"t_count", "13*G_M^T", 13 * k.G_M_T, out.decomposed.t_count, false},
      {"total_gates", "13*G_M + 12n^2 + O(n)", 13 * k.G_M + 12 * nn * nn, out.report.total_gates, false},
      {"t_depth", "4*D_M^T", 4 * k.D_M_T, out.decomposed.t_depth, false},
      {"depth", "4*D_M + 4n + O(1)", 4 * k.D_M + 4 * nn, out.report.depth, false},
  };

  if (opts.decompose_toffoli) out.clifford_t = decompose_toffoli(c);
  return out;
}

std::vector<BoundCheck> evaluate_bounds(const ResourceReport& report, const ResourceReport& decomposed,
                                        const BlockCosts& k) {
  const std::uint64_t n = k.n;
  return {
      {"t_count", "5*G_M^T", 5 * k.G_M_T, decomposed.t_count, false},
      {"total_gates", "5*G_M + 5*G_S + 10n^2 - 2n + 10", 5 * k.G_M + 5 * k.G_S + 10 * n * n - 2 * n + 10,
       report.total_gates, false},
      {"t_depth", "4*D_M^T", 4 * k.D_M_T, decomposed.t_depth, false},
      {"depth", "3*D_M + max(D_M, n) + D_S + 7n + 4", 3 * k.D_M + std::max<std::uint64_t>(k.D_M, n) + k.D_S + 7 * n + 4,
       report.depth, false},
      {"width", "11n + 4*A_M", 11 * n + 4 * k.A_M, report.width, true},
      {"sqrt_cleanup_gates", "2*G_S + n^2 - n + 1", 2 * k.G_S + n * n - n + 1, group_gate_sum(report, {"IS", "SR"}),
       false},
  };
}

void check_bounds(ResourceReport& report, const ResourceReport& decomposed, const BlockCosts& costs) {
  report.bounds = evaluate_bounds(report, decomposed, costs);
  for (const BoundCheck& b : report.bounds) {
    if (!b.holds()) {
      throw BoundViolation("bound '" + b.name + "' violated: achieved " + std::to_string(b.achieved) +
                           (b.exact ? " != " : " > ") + std::to_string(b.bound) + " (" + b.formula + ")");
    }
  }
}

}  // namespace ecsynth
