#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"

#include "ecsynth/errors.hpp"
#include "ecsynth/pointadd.hpp"
#include "ecsynth/qcformat.hpp"
#include "ecsynth/revsim.hpp"

using namespace ecsynth;

namespace {

Circuit random_classical(std::mt19937_64& rng) {
  Circuit c;
  const std::size_t width = 3 + rng() % 12;
  for (std::size_t i = 0; i < width; ++i) c.add_wire("q" + std::to_string(i), rng() % 4 != 0, rng() % 4 != 0);
  const std::size_t gates = rng() % 50;
  std::size_t open = 0;
  for (std::size_t k = 0; k < gates; ++k) {
    if (rng() % 8 == 0) {
      c.begin_group(rng() % 2 ? "M" : "S");
      ++open;
    } else if (open && rng() % 6 == 0) {
      c.end_group();
      --open;
    }
    const WireId a = rng() % width;
    WireId b = rng() % width;
    WireId t = rng() % width;
    while (b == a) b = rng() % width;
    while (t == a || t == b) t = rng() % width;
    switch (rng() % 3) {
      case 0: c.append(Gate::not_gate(a)); break;
      case 1: c.append(Gate::cnot(a, b)); break;
      default: c.append(Gate::toffoli(a, b, t)); break;
    }
  }
  while (open--) c.end_group();
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

PointAddResult toy() {
  const Field f = Field::parse("1+x");
  SynthesisOptions opts;
  opts.allow_off_curve = true;
  return synth_point_add(Curve(f.one(), f.one()), AffinePoint::unchecked(f.one(), f.one()), opts);
}

}  // namespace

TEST_CASE("single CNOT and empty circuits") {
  Circuit c;
  c.add_wire("a");
  c.add_wire("b", false, true);
  c.append(Gate::cnot(0, 1));
  CHECK(write_qc(c) == ".v a b\n.i a\n.o a b\n\nBEGIN\ntof a b\nEND\n");
  CHECK(write_qc(Circuit{}) == ".v\n.i\n.o\n\nBEGIN\nEND\n");
}

TEST_CASE("Clifford+T gate spelling") {
  Circuit c;
  c.add_wire("w");
  for (GateKind k : {GateKind::kH, GateKind::kT, GateKind::kTdg, GateKind::kS, GateKind::kSdg, GateKind::kNot}) {
    c.append(Gate::single(k, 0));
  }
  CHECK(write_qc(c) == ".v w\n.i w\n.o w\n\nBEGIN\nH w\nT w\nT* w\nS w\nS* w\ntof w\nEND\n");
  const Circuit back = to_circuit(parse_qc(write_qc(c)));
  CHECK(back.gates() == c.gates());
}

TEST_CASE("random classical circuits round trip") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const Circuit c = random_classical(rng);
    for (bool grouped : {true, false}) {
      const std::string text = write_qc(c, grouped);
      const Circuit back = to_circuit(parse_qc(text));
      REQUIRE(back.width() == c.width());
      CHECK(back.gates() == c.gates());
      const ResourceReport a = metrics(c, false), b = metrics(back, false);
      CHECK(a.counts == b.counts);
      CHECK(a.depth == b.depth);
      for (std::size_t i = 0; i < c.width(); ++i) {
        CHECK(back.wire(static_cast<WireId>(i)).name == c.wire(static_cast<WireId>(i)).name);
        CHECK(back.wire(static_cast<WireId>(i)).input == c.wire(static_cast<WireId>(i)).input);
      }
      CHECK(write_qc(back, grouped) == text);
    }
  }
}

TEST_CASE("toy addition circuit matches the golden file") {
  const PointAddResult r = toy();
  const std::string text = write_qc(r.circuit);
  CHECK(text == slurp(std::string(ECSYNTH_GOLDEN_DIR) + "/toy_f2.qc"));
  CHECK(write_qc(toy().circuit) == text);
  for (const char* name : {"SM", "X", "M", "S", "a2", "xyZ", "IM", "IX", "Ia2", "IS", "SR", "ISM"}) {
    CHECK(text.find(std::string("BEGIN ") + name + "\n") != std::string::npos);
  }
  const Circuit back = to_circuit(parse_qc(text));
  CHECK(back.gates() == r.circuit.gates());
  BasisState s(11);
  s.set(0, true);
  s.set(2, true);
  CHECK(simulate(back, s) == simulate(r.circuit, s));
}

TEST_CASE("identical group bodies share one block") {
  Circuit c;
  c.add_register("q", 2);
  for (int k = 0; k < 3; ++k) {
    c.begin_group("S");
    c.append(Gate::cnot(k == 2 ? 1 : 0, k == 2 ? 0 : 1));
    c.end_group();
  }
  const std::string text = write_qc(c);
  CHECK(text.find("BEGIN S\n") != std::string::npos);
  CHECK(text.find("BEGIN S_2\n") != std::string::npos);
  CHECK(text.find("BEGIN S_3\n") == std::string::npos);
  CHECK(text.find("BEGIN\nS\nS\nS_2\nEND\n") != std::string::npos);
}

TEST_CASE("parse errors carry positions") {
  auto error_of = [](const std::string& text) -> std::pair<std::size_t, std::string> {
    try {
      parse_qc(text);
    } catch (const ParseError& e) {
      return {e.line(), e.what()};
    }
    return {0, ""};
  };
  CHECK(error_of(".i a\nBEGIN\nEND\n").first == 1);
  CHECK(error_of("").first == 1);
  const auto undefined = error_of(".v a b\n\nBEGIN\nFOO\nEND\n");
  CHECK(undefined.first == 4);
  CHECK(undefined.second.find("FOO") != std::string::npos);
  CHECK(error_of(".v a b\nBEGIN\nFOO\nEND\nBEGIN FOO\nEND FOO\n").first == 3);
  CHECK(error_of(".v a b\nBEGIN\ntof a c\nEND\n").first == 3);
  CHECK(error_of(".v a b\nBEGIN\ntof a a\nEND\n").first == 3);
  CHECK(error_of(".v a b\nBEGIN\nX a\nEND\n").first == 3);
  CHECK(error_of(".v a b\nBEGIN\ntof a b\n").first > 0);
  CHECK(error_of(".v a 1b\n").first == 1);
  CHECK(error_of(".v a b\nBEGIN M\nEND N\n").first == 3);
  CHECK(error_of(".v a\n# comment\n\nBEGIN\nEND\n").first == 0);
}

TEST_CASE("writer rejects what the format cannot express") {
  Circuit c;
  c.add_wire("a-b");
  CHECK_THROWS_AS(write_qc(c), CircuitError);
  Circuit p;
  p.add_register("q", 2);
  p.relabel({1, 0});
  CHECK_THROWS_AS(write_qc(p), CircuitError);
  CHECK(is_valid_qc_name("X1_0"));
  CHECK_FALSE(is_valid_qc_name("_x"));
}
