#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>

#include "CLI11.hpp"

#include "ecsynth/errors.hpp"
#include "ecsynth/linmaps.hpp"
#include "ecsynth/presets.hpp"
#include "ecsynth/qcformat.hpp"
#include "ecsynth/verify.hpp"

namespace ecadd {

using namespace ecsynth;
using nlohmann::ordered_json;

std::vector<std::string> nist_polys() {
  std::vector<std::string> out;
  for (const FieldPreset& p : kNistFields) out.emplace_back(p.poly);
  return out;
}

std::vector<TableRow> table_rows(TableKind kind, const std::vector<std::string>& polys) {
  std::vector<TableRow> rows;
  for (const std::string& text : polys) {
    const IrreduciblePoly p = IrreduciblePoly::parse(text);
    const BinMatrix m = kind == TableKind::kSquaring ? matrix_of_squaring(p) : matrix_of_sqrt(p);
    rows.push_back({p.to_string(), p.n(), max_degree(m), weight(m)});
  }
  return rows;
}

namespace {

ordered_json counts_json(const GateCounts& c) {
  ordered_json j;
  for (std::size_t k = 0; k < kGateKindCount; ++k) {
    j[std::string(gate_kind_name(static_cast<GateKind>(k)))] = c.by_kind[k];
  }
  return j;
}

ordered_json bounds_json(const std::vector<BoundCheck>& bounds) {
  ordered_json j = ordered_json::object();
  for (const BoundCheck& b : bounds) {
    j[b.name] = {{"formula", b.formula}, {"bound", b.bound}, {"achieved", b.achieved}, {"holds", b.holds()}};
  }
  return j;
}

}  // namespace

ordered_json report_json(const PointAddResult& r, const Curve& curve, const AffinePoint& p2,
                         const SynthesisOptions& opts) {
  const ResourceReport& m = r.report;
  const ResourceReport& d = r.decomposed;
  ordered_json j;
  j["schema"] = 1;
  j["n"] = r.layout.n;
  j["poly"] = curve.field().modulus().to_string();
  j["multiplier_variant"] = std::string(multiplier_variant_name(opts.multiplier_variant));
  j["curve"] = {{"a2", curve.a2.to_hex()}, {"a6", curve.a6.to_hex()}};
  j["point"] = {{"x2", p2.x().to_hex()}, {"y2", p2.y().to_hex()}, {"on_curve", on_curve_affine(curve, p2)}};
  j["counts"] = counts_json(m.counts);
  j["total_gates"] = m.total_gates;
  j["toffoli_count"] = m.toffoli_count;
  j["cnot_count"] = m.cnot_count;
  j["t_count"] = d.t_count;
  j["depth"] = m.depth;
  j["t_depth"] = d.t_depth;
  j["width"] = m.width;
  j["decomposed"] = {{"counts", counts_json(d.counts)},
                     {"total_gates", d.total_gates},
                     {"t_count", d.t_count},
                     {"depth", d.depth},
                     {"t_depth", d.t_depth}};
  ordered_json subs = ordered_json::array();
  for (std::size_t i = 0; i < m.groups.size(); ++i) {
    const GroupMetrics& g = m.groups[i];
    if (g.level != 0) continue;
    subs.push_back({{"label", g.label},
                    {"counts", counts_json(g.counts)},
                    {"depth", g.depth},
                    {"t_count", d.groups[i].counts.t_count()},
                    {"t_depth", d.groups[i].t_depth}});
  }
  j["subcircuits"] = subs;
  const BlockCosts& k = r.costs;
  j["block_costs"] = {{"G_M", k.G_M}, {"D_M", k.D_M}, {"G_M_T", k.G_M_T}, {"D_M_T", k.D_M_T},
                      {"G_S", k.G_S}, {"D_S", k.D_S}, {"A_M", k.A_M}};
  j["bounds"] = bounds_json(m.bounds);
  j["prior_work_reference"] = bounds_json(r.reference);
  return j;
}

namespace {

struct CurveArgs {
  std::string poly;
  std::string a2;
  std::string a6;
  std::string x2;
  std::string y2;
  bool allow_off_curve = false;
};

void add_curve_options(CLI::App* cmd, CurveArgs& a, bool point_required) {
  cmd->add_option("--poly", a.poly, "irreducible polynomial, e.g. \"1+x+x^3\", or a preset B163..B571")->required();
  cmd->add_option("--a2", a.a2, "curve coefficient a2 (hex 0x.. or polynomial)")->required();
  cmd->add_option("--a6", a.a6, "curve coefficient a6, nonzero")->required();
  auto* x = cmd->add_option("--x2", a.x2, "fixed point x coordinate");
  auto* y = cmd->add_option("--y2", a.y2, "fixed point y coordinate");
  if (point_required) {
    x->required();
    y->required();
  } else {
    x->needs(y);
    y->needs(x);
  }
  cmd->add_flag("--allow-off-curve", a.allow_off_curve, "accept a fixed point that is not on the curve");
}

Field make_field(const std::string& text) {
  if (auto preset = find_preset(text)) return Field::parse(*preset);
  return Field::parse(text);
}

struct Problem {
  Curve curve;
  AffinePoint p2;
};

Problem make_problem(const CurveArgs& a, std::uint64_t seed) {
  const Field f = make_field(a.poly);
  Curve curve(f.parse_element(a.a2), f.parse_element(a.a6));
  if (a.x2.empty()) {
    std::mt19937_64 rng(seed);
    return {curve, random_point(curve, rng)};
  }
  const FieldElem x = f.parse_element(a.x2);
  const FieldElem y = f.parse_element(a.y2);
  AffinePoint p2 = a.allow_off_curve ? AffinePoint::unchecked(x, y) : AffinePoint::checked(curve, x, y);
  return {curve, p2};
}

std::uint64_t default_seed() {
  const char* env = std::getenv("ECADD_SEED");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw InvalidInput(std::string("ECADD_SEED is not an unsigned integer: ") + env);
  return v;
}

std::string stem_of(const std::string& path) {
  const std::string ext = ".qc";
  if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
    return path.substr(0, path.size() - ext.size());
  }
  return path;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw InvalidInput("failed writing '" + path + "'");
}

int cmd_synth(const CurveArgs& ca, const SynthesisOptions& opts, const std::string& out_path, bool flat,
              std::uint64_t seed, std::ostream& out) {
  const Problem pr = make_problem(ca, seed);
  const auto t0 = std::chrono::steady_clock::now();
  const PointAddResult r = synth_point_add(pr.curve, pr.p2, opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::string stem = stem_of(out_path);
  {
    std::ofstream f(stem + ".qc", std::ios::binary);
    if (!f) throw InvalidInput("cannot open '" + stem + ".qc' for writing");
    write_qc(f, opts.decompose_toffoli ? *r.clifford_t : r.circuit, !flat);
  }
  write_file(stem + ".report.json", report_json(r, pr.curve, pr.p2, opts).dump(2) + "\n");

  out << "n=" << r.layout.n << " width=" << r.report.width << " toffoli=" << r.report.toffoli_count
      << " cnot=" << r.report.cnot_count << " depth=" << r.report.depth << " t_count=" << r.decomposed.t_count
      << " t_depth=" << r.decomposed.t_depth << "\n";
  out << "fixed point x2=" << pr.p2.x().to_hex() << " y2=" << pr.p2.y().to_hex() << "\n";
  out << "wrote " << stem << ".qc and " << stem << ".report.json (" << std::fixed << std::setprecision(2) << secs
      << " s)\n";
  return kOk;
}

int cmd_tables(const std::string& kind_text, std::vector<std::string> polys, const std::string& json_path,
               std::ostream& out) {
  const TableKind kind = kind_text == "squaring" ? TableKind::kSquaring : TableKind::kSqrt;
  if (polys.empty()) polys = nist_polys();
  for (std::string& p : polys) {
    if (auto preset = find_preset(p)) p = std::string(*preset);
  }
  const std::vector<TableRow> rows = table_rows(kind, polys);

  std::size_t wide = 10;
  for (const TableRow& r : rows) wide = std::max(wide, r.poly.size());
  out << std::left << std::setw(static_cast<int>(wide)) << "polynomial" << std::right << std::setw(7) << "depth"
      << std::setw(8) << "CNOTs" << "\n";
  for (const TableRow& r : rows) {
    out << std::left << std::setw(static_cast<int>(wide)) << r.poly << std::right << std::setw(7) << r.depth
        << std::setw(8) << r.cnots << "\n";
  }
  if (!json_path.empty()) {
    ordered_json j = ordered_json::array();
    for (const TableRow& r : rows) j.push_back({{"poly", r.poly}, {"n", r.n}, {"depth", r.depth}, {"cnots", r.cnots}});
    write_file(json_path, j.dump(2) + "\n");
  }
  return kOk;
}

void print_ld(std::ostream& out, const LDPoint& p) {
  out << "X1=" << p.X.to_hex() << " Y1=" << p.Y.to_hex() << " Z1=" << p.Z.to_hex();
}

int cmd_verify(const CurveArgs& ca, const SynthesisOptions& opts, const VerifyOptions& vo,
               const std::vector<std::uint64_t>& faults, std::ostream& out) {
  const Problem pr = make_problem(ca, vo.seed);
  if (pr.curve.field().n() > kMaxVerifyN) {
    throw UnsupportedConfiguration("verify simulates basis states; n must be <= " + std::to_string(kMaxVerifyN));
  }
  PointAddResult r = synth_point_add(pr.curve, pr.p2, opts);
  for (std::uint64_t f : faults) out << "injected fault at gate " << inject_fault(r.circuit, f) << "\n";
  const VerifyResult v = verify_point_add(pr.curve, pr.p2, r.circuit, r.layout, vo);
  out << "fixed point x2=" << pr.p2.x().to_hex() << " y2=" << pr.p2.y().to_hex() << "\n";
  if (v.ok()) {
    out << "PASS: " << v.checked << " inputs (" << (vo.exhaustive ? "exhaustive" : "sampled") << ")\n";
    return kOk;
  }
  out << "FAIL: " << v.failures << " of " << v.checked << " inputs\n";
  out << "counterexample: ";
  print_ld(out, v.first->input);
  out << "\n  " << v.first->message << "\n";
  return kVerifyFailed;
}

int cmd_point(const CurveArgs& ca, std::uint64_t seed, std::ostream& out) {
  const Problem pr = make_problem(ca, seed);
  out << "x2=" << pr.p2.x().to_hex() << " y2=" << pr.p2.y().to_hex() << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible circuits for fixed-point addition on binary elliptic curves", "ecadd"};
  app.require_subcommand(1);

  CurveArgs ca;
  SynthesisOptions opts;
  std::string multiplier = "horner";
  std::string out_path = "add.qc";
  bool flat = false;
  bool keep_a2 = false;
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto add_synth_options = [&](CLI::App* cmd) {
    cmd->add_option("--multiplier", multiplier, "horner | horner-zero-acc")
        ->check(CLI::IsMember({"horner", "horner-zero-acc"}));
    cmd->add_flag("--keep-a2-block", keep_a2, "emit empty a2/Ia2 groups when a2 = 0");
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "RNG seed (default: $ECADD_SEED or 1)")->each([&](const std::string&) {
      seed_given = true;
    });
  };

  auto* synth = app.add_subcommand("synth", "synthesize the addition circuit; writes <stem>.qc and <stem>.report.json");
  add_curve_options(synth, ca, false);
  add_synth_options(synth);
  add_seed(synth);
  synth->add_option("--out", out_path, "output path; '.qc' is replaced by '.report.json' for the report");
  synth->add_flag("--decompose", opts.decompose_toffoli, "write the Clifford+T expansion");
  synth->add_flag("--flat", flat, "no subcircuit blocks in the .qc file");

  std::string table_kind;
  std::vector<std::string> table_polys;
  std::string table_json;
  bool nist = false;
  auto* tables = app.add_subcommand("tables", "CNOT count and depth of squaring / square-root circuits");
  tables->add_option("kind", table_kind, "squaring | sqrt")->required()->check(CLI::IsMember({"squaring", "sqrt"}));
  tables->add_flag("--nist", nist, "the five NIST binary fields (default when no --poly)");
  tables->add_option("--poly", table_polys, "polynomial(s) or preset names");
  tables->add_option("--json", table_json, "also write the rows as JSON");

  VerifyOptions vo;
  std::vector<std::uint64_t> faults;
  auto* verify = app.add_subcommand("verify", "simulate the circuit against the curve arithmetic");
  add_curve_options(verify, ca, false);
  add_synth_options(verify);
  add_seed(verify);
  verify->add_flag("--exhaustive", vo.exhaustive, "every generic input (n <= 10)");
  verify->add_option("--samples", vo.samples, "number of random inputs")->check(CLI::PositiveNumber);
  verify->add_option("--inject-fault", faults)->group("");

  auto* point = app.add_subcommand("point", "print a random point of the curve");
  add_curve_options(point, ca, false);
  add_seed(point);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kValidation;
  }

  try {
    if (!seed_given) seed = default_seed();
    opts.multiplier_variant = parse_multiplier_variant(multiplier);
    opts.skip_a2_block_when_trivial = !keep_a2;
    opts.allow_off_curve = ca.allow_off_curve;
    if (*synth) return cmd_synth(ca, opts, out_path, flat, seed, out);
    if (*tables) {
      if (nist && !table_polys.empty()) throw InvalidInput("--nist and --poly are exclusive");
      return cmd_tables(table_kind, table_polys, table_json, out);
    }
    if (*verify) {
      vo.seed = seed;
      return cmd_verify(ca, opts, vo, faults, out);
    }
    if (*point) return cmd_point(ca, seed, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const ModulusMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const CurveError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const UnsupportedConfiguration& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const BoundViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace ecadd
