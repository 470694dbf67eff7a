#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ecadd");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ecadd::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "ecadd_cli_test";
  fs::create_directories(dir);
  return dir;
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream f(p);
  REQUIRE(f.good());
  return nlohmann::json::parse(f);
}

}  // namespace

TEST_CASE("synth writes the circuit and a schema-1 report") {
  const fs::path stem = scratch_dir() / "add";
  const Run r = cli({"synth", "--poly", "1+x+x^3", "--a2", "0x1", "--a6", "0x1", "--x2", "0x2", "--y2", "0x5",
                       "--out", (stem.string() + ".qc")});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(fs::exists(stem.string() + ".qc"));
  const nlohmann::json j = read_json(stem.string() + ".report.json");
  CHECK(j["schema"] == 1);
  CHECK(j["n"] == 3);
  CHECK(j["width"] == 33);
  CHECK(j["poly"] == "1+x+x^3");
  CHECK(j["multiplier_variant"] == "horner");
  CHECK(j["toffoli_count"] == 45);
  for (const char* k : {"not", "cnot", "toffoli", "h", "t", "t_dagger", "s", "s_dagger"}) CHECK(j["counts"].contains(k));
  for (const char* k : {"t_count", "total_gates", "t_depth", "depth", "width", "sqrt_cleanup_gates"}) {
    CHECK(j["bounds"][k]["holds"] == true);
  }
  CHECK(j["subcircuits"].size() == 19);
  CHECK(j["prior_work_reference"].contains("t_count"));
}

TEST_CASE("toy structure through the command line") {
  const fs::path stem = scratch_dir() / "toy";
  const Run r = cli({"synth", "--allow-off-curve", "--poly", "1+x", "--a2", "0x1", "--a6", "0x1", "--x2", "0x1",
                       "--y2", "0x1", "--out", stem.string(), "--decompose"});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  const nlohmann::json j = read_json(stem.string() + ".report.json");
  CHECK(j["toffoli_count"] == 5);
  CHECK(j["width"] == 11);
  CHECK(j["t_count"] == 35);
  std::ifstream qc(stem.string() + ".qc");
  std::stringstream text;
  text << qc.rdbuf();
  CHECK(text.str().find("T* ") != std::string::npos);
  CHECK(text.str().find("tof X1_0 Z1_0 C_0") == std::string::npos);
}

TEST_CASE("validation errors exit with 1") {
  Run r = cli({"synth", "--poly", "1+x^2", "--a2", "0x1", "--a6", "0x1", "--x2", "0x1", "--y2", "0x1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("reducible polynomial") != std::string::npos);
  r = cli({"synth", "--poly", "1+x+x^3", "--a2", "0x1", "--a6", "0x1", "--x2", "0x3", "--y2", "0x5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not on the curve") != std::string::npos);
  r = cli({"verify", "--poly", "1+x+x^3", "--a2", "1", "--a6", "0"});
  CHECK(r.code == 1);
  r = cli({"verify", "--poly", "1+x^3+x^31", "--a2", "1", "--a6", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("n must be <= 20") != std::string::npos);
  r = cli({"synth", "--poly", "1+x+x^3", "--a2", "0x1", "--a6", "0x1", "--x2", "0x2"});
  CHECK(r.code == 1);
  CHECK(cli({"bogus"}).code == 1);
  CHECK(cli({"tables", "cube"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("tables for the NIST fields") {
  const fs::path json = scratch_dir() / "sq.json";
  const Run r = cli({"tables", "squaring", "--nist", "--json", json.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("1+x^74+x^233") != std::string::npos);
  const nlohmann::json j = read_json(json);
  REQUIRE(j.size() == 5);
  CHECK(j[1]["depth"] == 3);
  CHECK(j[1]["cnots"] == 386);
  const Run sqrt = cli({"tables", "sqrt", "--poly", "B409"});
  CHECK(sqrt.out.find("613") != std::string::npos);
}

TEST_CASE("verify passes, and fails with a counterexample on an injected fault") {
  const std::vector<std::string> base{"verify", "--poly", "1+x+x^3", "--a2", "1", "--a6", "1", "--exhaustive"};
  Run r = cli(base);
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  auto faulty = base;
  faulty.insert(faulty.end(), {"--inject-fault", "40"});
  r = cli(faulty);
  CHECK(r.code == 2);
  CHECK(r.out.find("counterexample: X1=") != std::string::npos);
}

TEST_CASE("seeded sampling is reproducible, and ECADD_SEED is the default seed") {
  const std::vector<std::string> base{"verify", "--poly", "1+x^2+x^3+x^4+x^8", "--a2", "0x3", "--a6", "0x7",
                                      "--samples", "500"};
  auto seeded = base;
  seeded.insert(seeded.end(), {"--seed", "7"});
  const Run a = cli(seeded), b = cli(seeded);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  setenv("ECADD_SEED", "7", 1);
  const Run env = cli(base);
  unsetenv("ECADD_SEED");
  CHECK(env.out == a.out);
  const Run other = cli({"point", "--poly", "1+x^2+x^3+x^4+x^8", "--a2", "0x3", "--a6", "0x7", "--seed", "8"});
  const Run same = cli({"point", "--poly", "1+x^2+x^3+x^4+x^8", "--a2", "0x3", "--a6", "0x7", "--seed", "7"});
  CHECK(a.out.find(same.out.substr(0, same.out.size() - 1)) != std::string::npos);
  CHECK(other.out != same.out);
  setenv("ECADD_SEED", "seven", 1);
  CHECK(cli(base).code == 1);
  unsetenv("ECADD_SEED");
}
