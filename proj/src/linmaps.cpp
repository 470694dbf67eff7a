#include "ecsynth/linmaps.hpp"

#include <algorithm>
#include <utility>

#include "ecsynth/errors.hpp"

namespace ecsynth {

BinMatrix::BinMatrix(std::size_t n) : rows_(n, BitVec(n)) {
  if (n == 0) throw InvalidInput("matrix dimension must be >= 1");
}

BinMatrix BinMatrix::identity(std::size_t n) {
  BinMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinMatrix BinMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  BinMatrix m(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != rows.size()) throw InvalidInput("matrix rows must be square");
    for (std::size_t i = 0; i < rows.size(); ++i) m.set(j, i, rows[j][i] != 0);
  }
  return m;
}

std::size_t BinMatrix::col_weight(std::size_t i) const noexcept {
  std::size_t w = 0;
  for (const auto& r : rows_) w += r.get(i) ? 1 : 0;
  return w;
}

BinMatrix BinMatrix::transpose() const {
  BinMatrix t(n());
  for (std::size_t j = 0; j < n(); ++j) {
    for (std::size_t i = 0; i < n(); ++i) {
      if (get(j, i)) t.set(i, j, true);
    }
  }
  return t;
}

std::string BinMatrix::to_string() const {
  std::string out;
  out.reserve(n() * (n() + 1));
  for (const auto& r : rows_) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

std::size_t weight(const BinMatrix& m) {
  std::size_t w = 0;
  for (std::size_t j = 0; j < m.n(); ++j) w += m.row_weight(j);
  return w;
}

std::size_t max_degree(const BinMatrix& m) {
  std::vector<std::size_t> cols(m.n(), 0);
  std::size_t best = 0;
  for (std::size_t j = 0; j < m.n(); ++j) {
    best = std::max(best, m.row_weight(j));
    for (std::size_t i = 0; i < m.n(); ++i) cols[i] += m.get(j, i) ? 1 : 0;
  }
  for (std::size_t c : cols) best = std::max(best, c);
  return best;
}

BinMatrix multiply(const BinMatrix& a, const BinMatrix& b) {
  if (a.n() != b.n()) throw InvalidInput("matrix dimension mismatch");
  BinMatrix out(a.n());
  for (std::size_t j = 0; j < a.n(); ++j) {
    BitVec acc(a.n());
    for (std::size_t k = 0; k < a.n(); ++k) {
      if (a.get(j, k)) acc ^= b.row(k);
    }
    for (std::size_t i = 0; i < a.n(); ++i) out.set(j, i, acc.get(i));
  }
  return out;
}

namespace {

// Row-reduces [m | I]; returns false if m is singular.
bool gauss_jordan(const BinMatrix& m, std::vector<BitVec>& inv) {
  const std::size_t n = m.n();
  std::vector<BitVec> work;
  work.reserve(n);
  inv.clear();
  for (std::size_t j = 0; j < n; ++j) {
    work.push_back(m.row(j));
    BitVec e(n);
    e.set(j, true);
    inv.push_back(std::move(e));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !work[pivot].get(col)) ++pivot;
    if (pivot == n) return false;
    std::swap(work[col], work[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && work[r].get(col)) {
        work[r] ^= work[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return true;
}

}  // namespace

BinMatrix invert(const BinMatrix& m) {
  std::vector<BitVec> inv;
  if (!gauss_jordan(m, inv)) throw SingularMap("matrix is singular");
  BinMatrix out(m.n());
  for (std::size_t j = 0; j < m.n(); ++j) {
    for (std::size_t i = 0; i < m.n(); ++i) out.set(j, i, inv[j].get(i));
  }
  return out;
}

bool is_invertible(const BinMatrix& m) {
  std::vector<BitVec> inv;
  return gauss_jordan(m, inv);
}

BitVec apply(const BinMatrix& m, const BitVec& v) {
  if (v.size() != m.n()) throw InvalidInput("vector length does not match matrix dimension");
  BitVec out(m.n());
  for (std::size_t j = 0; j < m.n(); ++j) out.set(j, m.row(j).dot(v));
  return out;
}

namespace {

// Column i of the result is vec(f(x^i)).
template <class F>
BinMatrix matrix_from_columns(const Field& field, F&& f) {
  const std::size_t n = field.n();
  BinMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElem col = f(field.reduce(Gf2Poly::monomial(i)));
    for (std::size_t j = 0; j < n; ++j) {
      if (col.coeff(j)) m.set(j, i, true);
    }
  }
  return m;
}

}  // namespace

BinMatrix matrix_of_const_mul(const FieldElem& c) {
  if (c.is_zero()) throw SingularMap("multiplication by the constant 0 is not invertible");
  return matrix_from_columns(c.field(), [&](const FieldElem& e) { return c * e; });
}

BinMatrix matrix_of_squaring(const IrreduciblePoly& p) {
  return matrix_from_columns(Field(p), [](const FieldElem& e) { return square(e); });
}

BinMatrix matrix_of_sqrt(const IrreduciblePoly& p) { return invert(matrix_of_squaring(p)); }

BinMatrix matrix_of_sq_then_const(const FieldElem& c) {
  return multiply(matrix_of_const_mul(c), matrix_of_squaring(c.modulus()));
}

}  // namespace ecsynth
