#include "ecsynth/fieldsynth.hpp"

#include <algorithm>
#include <initializer_list>
#include <unordered_set>

#include "ecsynth/edgecolor.hpp"
#include "ecsynth/errors.hpp"

namespace ecsynth {

namespace {

void require_disjoint(std::initializer_list<const RegisterRef*> regs) {
  std::unordered_set<WireId> seen;
  for (const RegisterRef* r : regs) {
    for (WireId w : r->wires) {
      if (!seen.insert(w).second) throw CircuitError("register '" + r->name + "' overlaps another operand");
    }
  }
}

void require_size(const RegisterRef& r, std::size_t n) {
  if (r.size() != n) {
    throw CircuitError("register '" + r.name + "' has " + std::to_string(r.size()) + " wires, expected " + std::to_string(n));
  }
}

}  // namespace

void emit_linear(Circuit& c, const BinMatrix& m, const RegisterRef& src, const RegisterRef& dst) {
  require_size(src, m.n());
  require_size(dst, m.n());
  require_disjoint({&src, &dst});
  const BipartiteGraph g = graph_of_matrix(m);
  const EdgeColoring coloring = color_edges(g);
  std::vector<std::vector<std::size_t>> layers(coloring.num_colors);
  for (std::size_t e = 0; e < g.edges.size(); ++e) layers[coloring.color_of[e]].push_back(e);
  c.reserve(c.size() + g.edges.size());
  for (const auto& layer : layers) {
    for (std::size_t e : layer) c.append(Gate::cnot(src[g.edges[e].first], dst[g.edges[e].second]));
  }
}

void emit_add_inplace(Circuit& c, const RegisterRef& src, const RegisterRef& dst) {
  require_size(dst, src.size());
  require_disjoint({&src, &dst});
  for (std::size_t i = 0; i < src.size(); ++i) c.append(Gate::cnot(src[i], dst[i]));
}

void emit_square(Circuit& c, const IrreduciblePoly& p, const RegisterRef& src, const RegisterRef& dst) {
  emit_linear(c, matrix_of_squaring(p), src, dst);
}

void emit_sqrt(Circuit& c, const IrreduciblePoly& p, const RegisterRef& src, const RegisterRef& dst) {
  emit_linear(c, matrix_of_sqrt(p), src, dst);
}

void emit_const_mul(Circuit& c, const FieldElem& k, const RegisterRef& src, const RegisterRef& dst) {
  emit_linear(c, matrix_of_const_mul(k), src, dst);
}

void emit_sq_then_const(Circuit& c, const FieldElem& k, const RegisterRef& src, const RegisterRef& dst) {
  emit_linear(c, matrix_of_sq_then_const(k), src, dst);
}

std::string_view multiplier_variant_name(MultiplierVariant v) {
  switch (v) {
    case MultiplierVariant::kHorner: return "horner";
    case MultiplierVariant::kHornerZeroAccumulator: return "horner-zero-acc";
  }
  return "?";
}

MultiplierVariant parse_multiplier_variant(std::string_view name) {
  if (name == "horner") return MultiplierVariant::kHorner;
  if (name == "horner-zero-acc") return MultiplierVariant::kHornerZeroAccumulator;
  throw InvalidInput("unknown multiplier variant '" + std::string(name) + "'");
}

void HornerMultiplier::emit(Circuit& c, const RegisterRef& a, const RegisterRef& b, const RegisterRef& acc) const {
  const std::size_t n = p_.n();
  require_size(a, n);
  require_size(b, n);
  require_size(acc, n);
  require_disjoint({&a, &b, &acc});

  std::vector<std::size_t> middle;
  for (std::size_t e : p_.support()) {
    if (e != 0 && e != n) middle.push_back(e);
  }
  // pos[j] = wire currently holding accumulator coefficient j.
  std::vector<WireId> pos = acc.wires;

  // acc <- acc * x: old top coefficient wraps to position 0 and feeds the middle terms.
  auto times_x = [&](bool emit_reduction) {
    std::rotate(pos.rbegin(), pos.rbegin() + 1, pos.rend());
    if (emit_reduction) {
      for (std::size_t e : middle) c.append(Gate::cnot(pos[0], pos[e]));
    }
  };
  // acc <- acc / x, the inverse of times_x.
  auto over_x = [&]() {
    for (std::size_t e : middle) c.append(Gate::cnot(pos[0], pos[e]));
    std::rotate(pos.begin(), pos.begin() + 1, pos.end());
  };

  c.reserve(c.size() + n * n + 2 * n * middle.size());
  const bool zero_acc = variant_ == MultiplierVariant::kHornerZeroAccumulator;
  if (!zero_acc) {
    for (std::size_t k = 1; k < n; ++k) over_x();
  }
  for (std::size_t i = n; i-- > 0;) {
    if (i + 1 < n) {
      times_x(true);
    } else if (zero_acc) {
      // The accumulator is zero here: relabel only.
      times_x(false);
    }
    for (std::size_t j = 0; j < n; ++j) c.append(Gate::toffoli(a[i], b[j], pos[j]));
  }
  if (pos != acc.wires) throw std::logic_error("multiplier relabeling did not return to the identity");
}

void emit_mult(Circuit& c, const IrreduciblePoly& p, const RegisterRef& a, const RegisterRef& b,
               const RegisterRef& acc, MultiplierVariant variant) {
  HornerMultiplier(p, variant).emit(c, a, b, acc);
}

namespace {

template <class Emit>
Circuit two_register(std::size_t n, Emit&& emit) {
  Circuit c;
  const RegisterRef a = c.add_register("a", n);
  const RegisterRef t = c.add_register("c", n);
  emit(c, a, t);
  return c;
}

}  // namespace

Circuit synth_linear(const BinMatrix& m) {
  return two_register(m.n(), [&](Circuit& c, const RegisterRef& a, const RegisterRef& t) { emit_linear(c, m, a, t); });
}

Circuit synth_add_inplace(std::size_t n) {
  return two_register(n, [&](Circuit& c, const RegisterRef& a, const RegisterRef& t) { emit_add_inplace(c, a, t); });
}

Circuit synth_square(const IrreduciblePoly& p) { return synth_linear(matrix_of_squaring(p)); }
Circuit synth_sqrt(const IrreduciblePoly& p) { return synth_linear(matrix_of_sqrt(p)); }
Circuit synth_const_mul(const FieldElem& k) { return synth_linear(matrix_of_const_mul(k)); }
Circuit synth_sq_then_const(const FieldElem& k) { return synth_linear(matrix_of_sq_then_const(k)); }

Circuit synth_mult(const IrreduciblePoly& p, MultiplierVariant variant) {
  Circuit c;
  const RegisterRef a = c.add_register("a", p.n());
  const RegisterRef b = c.add_register("b", p.n());
  const RegisterRef acc = c.add_register("c", p.n());
  emit_mult(c, p, a, b, acc, variant);
  return c;
}

}  // namespace ecsynth
