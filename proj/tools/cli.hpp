#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "ecsynth/pointadd.hpp"

namespace ecadd {

enum ExitCode : int { kOk = 0, kValidation = 1, kVerifyFailed = 2, kInternal = 3 };

/// Entry point of the `ecadd` tool; everything goes to `out` / `err`, nothing calls exit().
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

enum class TableKind { kSquaring, kSqrt };

struct TableRow {
  std::string poly;
  std::size_t n = 0;
  std::size_t depth = 0;
  std::size_t cnots = 0;
};

/// Depth and CNOT count of the colored squaring or square-root circuit, one row per polynomial.
std::vector<TableRow> table_rows(TableKind kind, const std::vector<std::string>& polys);
std::vector<std::string> nist_polys();

/// Resource report in the stable schema-1 layout.
nlohmann::ordered_json report_json(const ecsynth::PointAddResult& r, const ecsynth::Curve& curve,
                                   const ecsynth::AffinePoint& p2, const ecsynth::SynthesisOptions& opts);

}  // namespace ecadd
