#include <random>

#include "doctest.h"

#include "ecsynth/errors.hpp"
#include "ecsynth/pointadd.hpp"
#include "ecsynth/revsim.hpp"
#include "ecsynth/verify.hpp"

using namespace ecsynth;

namespace {

PointAddResult toy(SynthesisOptions opts = {}) {
  const Field f = Field::parse("1+x");
  opts.allow_off_curve = true;
  return synth_point_add(Curve(f.one(), f.one()), AffinePoint::unchecked(f.one(), f.one()), opts);
}

std::vector<std::string> top_labels(const Circuit& c) {
  std::vector<std::string> out;
  for (const Group& g : c.groups()) {
    if (g.depth == 0) out.push_back(g.label);
  }
  return out;
}

const BoundCheck& bound(const ResourceReport& r, const std::string& name) {
  for (const BoundCheck& b : r.bounds) {
    if (b.name == name) return b;
  }
  FAIL("no bound " << name);
  return r.bounds.front();
}

}  // namespace

TEST_CASE("toy circuit over F2 with the point (1, 1)") {
  const PointAddResult r = toy();
  CHECK(r.report.toffoli_count == 5);
  CHECK(r.report.width == 11);
  CHECK(r.decomposed.t_count == 35);
  CHECK(top_labels(r.circuit) == std::vector<std::string>{"SM", "X", "M", "S", "S", "S", "a2", "X", "M", "M", "xyZ",
                                                          "M", "IM", "IX", "Ia2", "IS", "SR", "IX", "ISM"});
  // Per-gate scheduling lets consecutive decomposed Toffolis overlap their T layers, so the
  // measured T-depth sits below the stage-wise 4 * D_M^T = 16.
  CHECK(r.decomposed.t_depth == 13);
  CHECK(bound(r.report, "t_depth").bound == 16);
  CHECK(bound(r.report, "t_count").achieved == bound(r.report, "t_count").bound);
  CHECK(bound(r.report, "width").achieved == bound(r.report, "width").bound);
  for (const BoundCheck& b : r.report.bounds) CHECK_MESSAGE(b.holds(), b.name);
  CHECK_FALSE(r.clifford_t.has_value());
}

TEST_CASE("decomposition option materializes the Clifford+T circuit") {
  SynthesisOptions opts;
  opts.decompose_toffoli = true;
  const PointAddResult r = toy(opts);
  REQUIRE(r.clifford_t.has_value());
  const ResourceReport m = metrics(*r.clifford_t);
  CHECK(m.t_count == 35);
  CHECK(m.toffoli_count == 0);
  CHECK(m.t_depth == r.decomposed.t_depth);
  CHECK(m.depth == r.decomposed.depth);
  CHECK(top_labels(*r.clifford_t) == top_labels(r.circuit));
}

TEST_CASE("width is 11n and Toffoli count 5n^2") {
  const Field f = Field::parse("1+x^2+x^3+x^4+x^8");
  std::mt19937_64 rng(51);
  const Curve c(f.random(rng), f.random_nonzero(rng));
  const PointAddResult r = synth_point_add(c, random_point(c, rng));
  CHECK(r.report.width == 88);
  CHECK(r.report.toffoli_count == 5 * 64);
  CHECK(r.layout.all().size() == 11);
  CHECK(r.circuit.wire(*r.circuit.find_wire("Y3_7")).output);
  CHECK_FALSE(r.circuit.wire(*r.circuit.find_wire("Cp_0")).output);
}

TEST_CASE("simulation matches the curve arithmetic for n = 2..8") {
  const char* polys[] = {"1+x+x^2", "1+x+x^3", "1+x+x^4", "1+x^2+x^5", "1+x+x^6", "1+x+x^7", "1+x^2+x^3+x^4+x^8"};
  std::mt19937_64 rng(52);
  for (const char* text : polys) {
    const Field f = Field::parse(text);
    for (int curve_no = 0; curve_no < 2; ++curve_no) {
      const Curve c(f.random(rng), f.random_nonzero(rng));
      for (int point_no = 0; point_no < 2; ++point_no) {
        const AffinePoint p2 = random_point(c, rng);
        const PointAddResult r = synth_point_add(c, p2);
        VerifyOptions vo;
        vo.exhaustive = f.n() <= 3;
        vo.samples = 100;
        vo.seed = rng();
        const VerifyResult v = verify_point_add(c, p2, r.circuit, r.layout, vo);
        INFO(text, " ", (v.first ? v.first->message : std::string()));
        CHECK(v.checked > 0);
        CHECK(v.ok());
      }
    }
  }
}

TEST_CASE("variants and trivial coefficients stay correct") {
  const Field f = Field::parse("1+x^2+x^5");
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 6; ++trial) {
    const FieldElem a2 = trial % 3 == 0 ? f.zero() : trial % 3 == 1 ? f.one() : f.random(rng);
    const Curve c(a2, f.random_nonzero(rng));
    const AffinePoint p2 = random_point(c, rng);
    SynthesisOptions opts;
    opts.multiplier_variant = trial % 2 ? MultiplierVariant::kHornerZeroAccumulator : MultiplierVariant::kHorner;
    opts.skip_a2_block_when_trivial = trial < 3;
    const PointAddResult r = synth_point_add(c, p2, opts);
    VerifyOptions vo;
    vo.exhaustive = true;
    CHECK(verify_point_add(c, p2, r.circuit, r.layout, vo).ok());
    const auto labels = top_labels(r.circuit);
    const bool has_a2 = std::find(labels.begin(), labels.end(), "a2") != labels.end();
    CHECK(has_a2 == !(a2.is_zero() && opts.skip_a2_block_when_trivial));
  }
}

TEST_CASE("the point (0, sqrt(a6)) drops the x2-scaled blocks to empty groups") {
  const Field f = Field::parse("1+x+x^3");
  const Curve c(f.one(), f.one());
  const AffinePoint p2 = AffinePoint::checked(c, f.zero(), f.one());
  const PointAddResult r = synth_point_add(c, p2);
  VerifyOptions vo;
  vo.exhaustive = true;
  CHECK(verify_point_add(c, p2, r.circuit, r.layout, vo).ok());
  for (const GroupMetrics& g : r.report.groups) {
    if (g.label == "X" || g.label == "IX") CHECK(g.counts.total() == 0);
  }
}

TEST_CASE("the circuit followed by its inverse is the identity") {
  const Field f = Field::parse("1+x+x^4");
  std::mt19937_64 rng(54);
  const Curve c(f.random(rng), f.random_nonzero(rng));
  const PointAddResult r = synth_point_add(c, random_point(c, rng));
  const Circuit round = compose(r.circuit, inverse(r.circuit));
  for (int trial = 0; trial < 200; ++trial) {
    BasisState s(r.circuit.width());
    for (std::size_t i = 0; i < s.size(); ++i) s.set(i, rng() & 1);
    CHECK(simulate(round, s) == s);
  }
}

TEST_CASE("bounds hold on a NIST trinomial field") {
  const Field f = Field::parse("1+x^74+x^233");
  std::mt19937_64 rng(55);
  const Curve c(f.one(), f.random_nonzero(rng));
  const PointAddResult r = synth_point_add(c, random_point(c, rng));
  CHECK(r.report.bounds.size() == 6);
  for (const BoundCheck& b : r.report.bounds) CHECK_MESSAGE(b.holds(), b.name, " ", b.achieved, " vs ", b.bound);
  CHECK(r.report.width == 11 * 233);
  CHECK(r.decomposed.t_count == 5 * r.costs.G_M_T);
  CHECK(r.reference.size() == 4);
}

TEST_CASE("check_bounds throws on a violated row") {
  ResourceReport report = toy().report;
  ResourceReport decomposed = toy().decomposed;
  BlockCosts costs = toy().costs;
  costs.D_M_T = 1;
  CHECK_THROWS_AS(check_bounds(report, decomposed, costs), BoundViolation);
  costs = toy().costs;
  report.width += 1;
  CHECK_THROWS_AS(check_bounds(report, decomposed, costs), BoundViolation);
}

TEST_CASE("invalid fixed points") {
  const Field f = Field::parse("1+x+x^3");
  const Curve c(f.one(), f.one());
  CHECK_THROWS_AS(synth_point_add(c, AffinePoint::identity(f)), CurveError);
  CHECK_THROWS_AS(synth_point_add(c, AffinePoint::unchecked(f.from_uint(3), f.from_uint(5))), CurveError);
  SynthesisOptions opts;
  opts.allow_off_curve = true;
  CHECK_NOTHROW(synth_point_add(c, AffinePoint::unchecked(f.from_uint(3), f.from_uint(5)), opts));
  const Field g = Field::parse("1+x^2+x^3");
  CHECK_THROWS_AS(synth_point_add(c, AffinePoint::unchecked(g.one(), g.one()), opts), ModulusMismatch);
}

TEST_CASE("verification refuses large fields and catches faults") {
  const Field f = Field::parse("1+x+x^3");
  const Curve c(f.one(), f.one());
  const AffinePoint p2 = AffinePoint::checked(c, f.from_uint(2), f.from_uint(5));
  PointAddResult r = synth_point_add(c, p2);
  inject_fault(r.circuit, r.circuit.size() / 2);
  VerifyOptions vo;
  vo.exhaustive = true;
  const VerifyResult v = verify_point_add(c, p2, r.circuit, r.layout, vo);
  CHECK_FALSE(v.ok());
  CHECK(v.first.has_value());

  const Field big = Field::parse("1+x^3+x^31");
  const Curve cb(big.one(), big.one());
  std::mt19937_64 rng(56);
  const AffinePoint pb = random_point(cb, rng);
  const PointAddResult rb = synth_point_add(cb, pb);
  CHECK_THROWS_AS(verify_point_add(cb, pb, rb.circuit, rb.layout, vo), UnsupportedConfiguration);
}

TEST_CASE("sampled verification is reproducible from the seed") {
  const Field f = Field::parse("1+x^2+x^3+x^4+x^8");
  const Curve c(f.one(), f.one());
  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 50; ++i) {
    const LDPoint p = sample_generic_input(c, AffinePoint::checked(c, f.zero(), f.one()), a);
    const LDPoint q = sample_generic_input(c, AffinePoint::checked(c, f.zero(), f.one()), b);
    CHECK(p.X == q.X);
    CHECK(p.Y == q.Y);
    CHECK(p.Z == q.Z);
  }
}
