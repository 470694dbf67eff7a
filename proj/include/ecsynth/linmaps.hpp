#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ecsynth/bitvec.hpp"
#include "ecsynth/gf2field.hpp"

namespace ecsynth {

/// Square matrix over GF(2) acting on column vectors: out = M * in.
/// Row j lists the input coefficients that are summed into output coefficient j.
/// (Matrices printed in the row-vector convention b = a * M are the transpose of this.)
class BinMatrix {
 public:
  explicit BinMatrix(std::size_t n);
  static BinMatrix identity(std::size_t n);
  /// From explicit 0/1 rows in this (column-vector) convention.
  static BinMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t n() const noexcept { return rows_.size(); }
  bool get(std::size_t row, std::size_t col) const noexcept { return rows_[row].get(col); }
  void set(std::size_t row, std::size_t col, bool v) noexcept { rows_[row].set(col, v); }
  const BitVec& row(std::size_t j) const noexcept { return rows_[j]; }

  std::size_t row_weight(std::size_t j) const noexcept { return rows_[j].popcount(); }
  std::size_t col_weight(std::size_t i) const noexcept;

  BinMatrix transpose() const;
  /// 0/1 grid, one row per line.
  std::string to_string() const;

  friend bool operator==(const BinMatrix&, const BinMatrix&) = default;

 private:
  std::vector<BitVec> rows_;
};

/// Number of 1-entries (the CNOT count of the out-of-place circuit).
std::size_t weight(const BinMatrix& m);
/// Largest row or column weight (the edge-coloring depth).
std::size_t max_degree(const BinMatrix& m);
BinMatrix multiply(const BinMatrix& a, const BinMatrix& b);
/// Gauss-Jordan inverse; throws SingularMap.
BinMatrix invert(const BinMatrix& m);
bool is_invertible(const BinMatrix& m);
BitVec apply(const BinMatrix& m, const BitVec& v);

/// Matrix of a -> c * a in F_2[x]/(p). Throws SingularMap for c = 0.
BinMatrix matrix_of_const_mul(const FieldElem& c);
BinMatrix matrix_of_squaring(const IrreduciblePoly& p);
/// Inverse of the squaring matrix.
BinMatrix matrix_of_sqrt(const IrreduciblePoly& p);
/// Matrix of a -> c * a^2, the fused square-then-scale map.
BinMatrix matrix_of_sq_then_const(const FieldElem& c);

}  // namespace ecsynth
