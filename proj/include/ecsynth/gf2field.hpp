#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecsynth/bitvec.hpp"

namespace ecsynth {

/// Polynomial over GF(2), coefficients packed little-endian by exponent.
/// Storage is normalized: the top word is never zero, so the zero polynomial has no words.
class Gf2Poly {
 public:
  using Word = std::uint64_t;

  Gf2Poly() = default;

  static Gf2Poly monomial(std::size_t exponent);
  static Gf2Poly from_exponents(std::span<const std::size_t> exponents);
  static Gf2Poly from_bits(const BitVec& bits);
  /// Accepts "1", "x", "x^k" terms joined by '+', in any order; "0" is the zero polynomial.
  /// Repeated terms cancel.
  static Gf2Poly parse(std::string_view text);
  /// "0x..." where bit i of the integer is the coefficient of x^i.
  static Gf2Poly from_hex(std::string_view text);

  /// -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_zero() const noexcept { return words_.empty(); }
  bool coeff(std::size_t i) const noexcept;
  void flip(std::size_t i);

  /// Ascending exponents with coefficient 1.
  std::vector<std::size_t> support() const;
  std::size_t weight() const noexcept;

  /// Ascending-order text, e.g. "1+x^74+x^233".
  std::string to_string() const;
  std::string to_hex() const;
  /// Low `size` coefficients as a bit vector.
  BitVec to_bits(std::size_t size) const;

  Gf2Poly& operator+=(const Gf2Poly& other);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b) { return divmod(a, b).second; }
  Gf2Poly shifted(std::size_t k) const;

  /// (quotient, remainder); throws DivisionByZero for a zero divisor.
  static std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a, const Gf2Poly& b);
  static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

  std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  void normalize();
  std::vector<Word> words_;
};

/// True iff q is irreducible over GF(2) (Rabin's test). Throws InvalidInput for q = 0.
bool is_irreducible(const Gf2Poly& q);

/// Defining polynomial of F_{2^n}. Construction verifies irreducibility and a unit constant term.
class IrreduciblePoly {
 public:
  explicit IrreduciblePoly(Gf2Poly poly);
  static IrreduciblePoly parse(std::string_view text) { return IrreduciblePoly(Gf2Poly::parse(text)); }

  const Gf2Poly& poly() const noexcept { return poly_; }
  std::size_t n() const noexcept { return n_; }
  /// Ascending exponents, including 0 and n.
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  bool is_trinomial() const noexcept { return support_.size() == 3; }
  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const IrreduciblePoly& a, const IrreduciblePoly& b) { return a.poly_ == b.poly_; }

 private:
  Gf2Poly poly_;
  std::size_t n_;
  std::vector<std::size_t> support_;
};

class FieldElem;

/// Lightweight shared handle to a modulus; the factory for elements of one field.
class Field {
 public:
  explicit Field(IrreduciblePoly poly) : poly_(std::make_shared<const IrreduciblePoly>(std::move(poly))) {}
  explicit Field(std::shared_ptr<const IrreduciblePoly> poly) : poly_(std::move(poly)) {}
  static Field parse(std::string_view text) { return Field(IrreduciblePoly::parse(text)); }

  std::size_t n() const noexcept { return poly_->n(); }
  const IrreduciblePoly& modulus() const noexcept { return *poly_; }
  const std::shared_ptr<const IrreduciblePoly>& modulus_ptr() const noexcept { return poly_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem x() const;
  /// Throws InvalidInput if bits.size() != n.
  FieldElem element(BitVec bits) const;
  /// Reduces an arbitrary polynomial representative.
  FieldElem reduce(const Gf2Poly& poly) const;
  /// Hex "0x..." (must have degree < n) or polynomial text (reduced mod p).
  FieldElem parse_element(std::string_view text) const;
  FieldElem from_uint(std::uint64_t value) const;
  FieldElem random(std::mt19937_64& rng) const;
  FieldElem random_nonzero(std::mt19937_64& rng) const;

  friend bool operator==(const Field& a, const Field& b) { return a.poly_ == b.poly_ || *a.poly_ == *b.poly_; }

 private:
  std::shared_ptr<const IrreduciblePoly> poly_;
};

/// Element of F_2[x]/(p): exactly n coefficient bits plus the shared modulus.
class FieldElem {
 public:
  FieldElem(std::shared_ptr<const IrreduciblePoly> modulus, BitVec bits);

  std::size_t n() const noexcept { return bits_.size(); }
  const BitVec& bits() const noexcept { return bits_; }
  bool coeff(std::size_t i) const noexcept { return bits_.get(i); }
  bool is_zero() const noexcept { return bits_.none(); }
  bool is_one() const noexcept;
  const IrreduciblePoly& modulus() const noexcept { return *modulus_; }
  const std::shared_ptr<const IrreduciblePoly>& modulus_ptr() const noexcept { return modulus_; }
  Field field() const;

  Gf2Poly to_poly() const { return Gf2Poly::from_bits(bits_); }
  std::string to_hex() const { return to_poly().to_hex(); }
  std::string to_string() const { return to_poly().to_string(); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  /// a * inverse(b).
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  std::shared_ptr<const IrreduciblePoly> modulus_;
  BitVec bits_;
};

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem square(const FieldElem& a);
/// a^(2^(n-1)).
FieldElem sqrt(const FieldElem& a);
/// Extended Euclid; throws DivisionByZero for 0.
FieldElem inverse(const FieldElem& a);
FieldElem pow(const FieldElem& a, std::uint64_t e);
/// Absolute trace to F_2: sum of a^(2^i), i < n.
bool trace(const FieldElem& a);
/// sum of a^(2^(2i)), i <= (n-1)/2. Only defined for odd n (UnsupportedConfiguration otherwise).
FieldElem half_trace(const FieldElem& a);
/// Some z with z^2 + z = c, or nullopt if none exists (exactly when trace(c) = 1). Odd n uses the
/// half-trace, even n Gaussian elimination.
std::optional<FieldElem> solve_quadratic(const FieldElem& c);

}  // namespace ecsynth
