#include "ecsynth/verify.hpp"

#include "ecsynth/errors.hpp"
#include "ecsynth/revsim.hpp"

namespace ecsynth {

namespace {

void load(BasisState& s, const RegisterRef& r, const FieldElem& v) {
  for (std::size_t i = 0; i < r.size(); ++i) s.set(r[i], v.coeff(i));
}

FieldElem read(const Field& f, const BasisState& s, const RegisterRef& r) {
  BitVec bits(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) bits.set(i, s.get(r[i]));
  return f.element(std::move(bits));
}

bool is_generic(const AffinePoint& p1, const AffinePoint& p2) {
  return !p1.is_identity() && !(p1 == p2) && !(p1 == negate(p2));
}

class Checker {
 public:
  Checker(const Curve& curve, const AffinePoint& p2, const Circuit& c, const RegisterLayout& l)
      : curve_(curve), p2_(p2), c_(c), l_(l), f_(curve.field()), on_curve_(on_curve_affine(curve, p2)) {}

  void check(const LDPoint& in, VerifyResult& r) {
    ++r.checked;
    std::string why = run(in);
    if (why.empty()) return;
    ++r.failures;
    if (!r.first) r.first = Counterexample{in, std::move(why)};
  }

 private:
  std::string run(const LDPoint& in) {
    BasisState s(c_.width());
    load(s, l_.X1, in.X);
    load(s, l_.Y1, in.Y);
    load(s, l_.Z1, in.Z);
    const BasisState out = simulate(c_, s);

    if (read(f_, out, l_.X1) != in.X || read(f_, out, l_.Y1) != in.Y || read(f_, out, l_.Z1) != in.Z) {
      return "input registers not restored";
    }
    for (const RegisterRef* r : l_.scratch()) {
      if (!read(f_, out, *r).is_zero()) return "scratch register " + r->name + " not zero";
    }
    const LDPoint got{read(f_, out, l_.X3), read(f_, out, l_.Y3), read(f_, out, l_.Z3)};
    const LDPoint want = aldaoud_madd(curve_, in, p2_, Checked::kNo);
    if (got.X != want.X || got.Y != want.Y || got.Z != want.Z) {
      return "output (" + got.X.to_hex() + ", " + got.Y.to_hex() + ", " + got.Z.to_hex() + ") != formula (" +
             want.X.to_hex() + ", " + want.Y.to_hex() + ", " + want.Z.to_hex() + ")";
    }
    if (on_curve_) {
      const AffinePoint sum = affine_add(curve_, ld_to_affine(in), p2_);
      if (!(ld_to_affine(got) == sum)) return "result does not represent P1 + P2";
    }
    return {};
  }

  const Curve& curve_;
  const AffinePoint& p2_;
  const Circuit& c_;
  const RegisterLayout& l_;
  Field f_;
  bool on_curve_;
};

}  // namespace

LDPoint sample_generic_input(const Curve& curve, const AffinePoint& p2, std::mt19937_64& rng) {
  const Field f = curve.field();
  for (;;) {
    const AffinePoint p1 = random_point(curve, rng);
    if (!is_generic(p1, p2)) continue;
    return ld_scale(affine_to_ld(p1), f.random_nonzero(rng));
  }
}

VerifyResult verify_point_add(const Curve& curve, const AffinePoint& p2, const Circuit& circuit,
                              const RegisterLayout& layout, const VerifyOptions& opts) {
  const std::size_t n = curve.field().n();
  if (n > kMaxVerifyN) {
    throw UnsupportedConfiguration("simulation is limited to n <= " + std::to_string(kMaxVerifyN));
  }
  Checker checker(curve, p2, circuit, layout);
  VerifyResult r;
  if (opts.exhaustive) {
    if (n > 10) throw UnsupportedConfiguration("exhaustive verification is limited to n <= 10");
    const Field f = curve.field();
    const std::uint64_t size = std::uint64_t{1} << n;
    for (const AffinePoint& p1 : all_points(curve)) {
      if (!is_generic(p1, p2)) continue;
      const LDPoint base = affine_to_ld(p1);
      for (std::uint64_t lam = 1; lam < size; ++lam) checker.check(ld_scale(base, f.from_uint(lam)), r);
    }
    return r;
  }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t i = 0; i < opts.samples; ++i) checker.check(sample_generic_input(curve, p2, rng), r);
  return r;
}

std::size_t inject_fault(Circuit& c, std::uint64_t index) {
  if (c.size() == 0) throw CircuitError("cannot inject a fault into an empty circuit");
  const std::size_t i = static_cast<std::size_t>(index % c.size());
  c.replace_gate(i, Gate::not_gate(c.gates()[i].target()));
  return i;
}

}  // namespace ecsynth
