#include "ecsynth/gf2field.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "ecsynth/errors.hpp"

namespace ecsynth {

namespace {

constexpr std::size_t kBits = 64;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      out.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Reduces `value` in place modulo the sparse modulus, scanning from the top bit.
void reduce_bits(std::vector<std::uint64_t>& value, const std::vector<std::size_t>& support) {
  const std::size_t n = support.back();
  for (std::size_t d = value.size() * kBits; d-- > n;) {
    if (((value[d / kBits] >> (d % kBits)) & 1u) == 0) continue;
    const std::size_t base = d - n;
    for (std::size_t e : support) {
      const std::size_t pos = base + e;
      value[pos / kBits] ^= std::uint64_t{1} << (pos % kBits);
    }
  }
}

std::vector<std::uint64_t> clmul(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::vector<std::uint64_t> out(a.size() + b.size() + 1, 0);
  for (std::size_t wa = 0; wa < a.size(); ++wa) {
    std::uint64_t word = a[wa];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      word &= word - 1;
      const std::size_t shift = wa * kBits + static_cast<std::size_t>(bit);
      const std::size_t ws = shift / kBits;
      const std::size_t bs = shift % kBits;
      for (std::size_t k = 0; k < b.size(); ++k) {
        out[k + ws] ^= b[k] << bs;
        if (bs != 0) out[k + ws + 1] ^= b[k] >> (kBits - bs);
      }
    }
  }
  return out;
}

Gf2Poly square_mod(const Gf2Poly& a, const Gf2Poly& q) { return (a * a) % q; }

}  // namespace

// ---------------------------------------------------------------- Gf2Poly

void Gf2Poly::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::monomial(std::size_t exponent) {
  Gf2Poly p;
  p.flip(exponent);
  return p;
}

Gf2Poly Gf2Poly::from_exponents(std::span<const std::size_t> exponents) {
  Gf2Poly p;
  for (std::size_t e : exponents) p.flip(e);
  return p;
}

Gf2Poly Gf2Poly::from_bits(const BitVec& bits) {
  Gf2Poly p;
  p.words_.assign(bits.words().begin(), bits.words().end());
  p.normalize();
  return p;
}

Gf2Poly Gf2Poly::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InvalidInput("empty polynomial text");
  if (text == "0") return {};
  Gf2Poly p;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t plus = text.find('+', start);
    const std::string_view term = trim(text.substr(start, plus == std::string_view::npos ? text.npos : plus - start));
    if (term == "1") {
      p.flip(0);
    } else if (term == "x") {
      p.flip(1);
    } else if (term.size() > 2 && term.substr(0, 2) == "x^") {
      const std::string_view digits = term.substr(2);
      std::size_t exponent = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw InvalidInput("bad exponent in polynomial term '" + std::string(term) + "'");
      }
      if (exponent > (std::size_t{1} << 20)) throw InvalidInput("exponent too large: " + std::string(digits));
      p.flip(exponent);
    } else {
      throw InvalidInput("bad polynomial term '" + std::string(term) + "' in '" + std::string(text) + "'");
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return p;
}

Gf2Poly Gf2Poly::from_hex(std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
    throw InvalidInput("hex value must start with 0x: '" + std::string(text) + "'");
  }
  const std::string_view digits = text.substr(2);
  Gf2Poly p;
  p.words_.assign((digits.size() * 4 + kBits - 1) / kBits, 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[digits.size() - 1 - i];
    unsigned v = 0;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw InvalidInput("bad hex digit in '" + std::string(text) + "'");
    }
    const std::size_t pos = i * 4;
    p.words_[pos / kBits] |= std::uint64_t{v} << (pos % kBits);
  }
  p.normalize();
  return p;
}

int Gf2Poly::degree() const noexcept {
  if (words_.empty()) return -1;
  return static_cast<int>((words_.size() - 1) * kBits) + (63 - std::countl_zero(words_.back()));
}

bool Gf2Poly::coeff(std::size_t i) const noexcept {
  if (i / kBits >= words_.size()) return false;
  return (words_[i / kBits] >> (i % kBits)) & 1u;
}

void Gf2Poly::flip(std::size_t i) {
  if (i / kBits >= words_.size()) words_.resize(i / kBits + 1, 0);
  words_[i / kBits] ^= std::uint64_t{1} << (i % kBits);
  normalize();
}

std::vector<std::size_t> Gf2Poly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(w * kBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::size_t Gf2Poly::weight() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string Gf2Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t e : support()) {
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += '1';
    } else if (e == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(e);
    }
  }
  return out;
}

std::string Gf2Poly::to_hex() const {
  if (is_zero()) return "0x0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const std::size_t nibbles = static_cast<std::size_t>(degree()) / 4 + 1;
  for (std::size_t i = nibbles; i-- > 0;) {
    const std::size_t pos = i * 4;
    out += kDigits[(words_[pos / kBits] >> (pos % kBits)) & 0xFu];
  }
  return "0x" + out;
}

BitVec Gf2Poly::to_bits(std::size_t size) const {
  BitVec bits(size);
  auto dst = bits.words();
  for (std::size_t k = 0; k < dst.size() && k < words_.size(); ++k) dst[k] = words_[k];
  bits.trim();
  return bits;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t k = 0; k < other.words_.size(); ++k) words_[k] ^= other.words_[k];
  normalize();
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.words_ = clmul(a.words_, b.words_);
  out.normalize();
  return out;
}

Gf2Poly Gf2Poly::shifted(std::size_t k) const {
  Gf2Poly out;
  if (is_zero()) return out;
  out.words_.assign(words_.size() + k / kBits + 1, 0);
  const std::size_t ws = k / kBits;
  const std::size_t bs = k % kBits;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + ws] ^= words_[i] << bs;
    if (bs != 0) out.words_[i + ws + 1] ^= words_[i] >> (kBits - bs);
  }
  out.normalize();
  return out;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& a, const Gf2Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Gf2Poly quotient;
  Gf2Poly rem = a;
  const int db = b.degree();
  while (rem.degree() >= db) {
    const auto shift = static_cast<std::size_t>(rem.degree() - db);
    quotient.flip(shift);
    rem += b.shifted(shift);
  }
  return {std::move(quotient), std::move(rem)};
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Gf2Poly& q) {
  if (q.is_zero()) throw InvalidInput("irreducibility test of the zero polynomial");
  const int deg = q.degree();
  if (deg < 1) return false;
  const auto n = static_cast<std::size_t>(deg);
  const Gf2Poly x = Gf2Poly::monomial(1) % q;

  // powers[k] = x^(2^k) mod q, k = 0..n
  std::vector<Gf2Poly> powers;
  powers.reserve(n + 1);
  powers.push_back(x);
  for (std::size_t k = 1; k <= n; ++k) powers.push_back(square_mod(powers.back(), q));

  if (powers[n] != x) return false;
  for (std::size_t r : prime_factors(n)) {
    const Gf2Poly g = Gf2Poly::gcd(q, powers[n / r] + x);
    if (g.degree() != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- IrreduciblePoly

IrreduciblePoly::IrreduciblePoly(Gf2Poly poly) : poly_(std::move(poly)) {
  if (poly_.is_zero()) throw InvalidInput("modulus is the zero polynomial");
  if (poly_.degree() < 1) throw InvalidInput("modulus must have degree >= 1");
  if (!poly_.coeff(0)) throw InvalidInput("reducible polynomial (no constant term): " + poly_.to_string());
  if (!is_irreducible(poly_)) throw InvalidInput("reducible polynomial: " + poly_.to_string());
  n_ = static_cast<std::size_t>(poly_.degree());
  support_ = poly_.support();
}

// ---------------------------------------------------------------- Field

FieldElem Field::zero() const { return FieldElem(poly_, BitVec(n())); }

FieldElem Field::one() const {
  BitVec b(n());
  b.set(0, true);
  return FieldElem(poly_, std::move(b));
}

FieldElem Field::x() const { return reduce(Gf2Poly::monomial(1)); }

FieldElem Field::element(BitVec bits) const {
  if (bits.size() != n()) throw InvalidInput("field element has " + std::to_string(bits.size()) + " bits, expected " + std::to_string(n()));
  return FieldElem(poly_, std::move(bits));
}

FieldElem Field::reduce(const Gf2Poly& poly) const {
  std::vector<std::uint64_t> words(poly.words().begin(), poly.words().end());
  words.resize(std::max(words.size(), BitVec::word_count(n())), 0);
  reduce_bits(words, poly_->support());
  BitVec bits(n());
  std::copy_n(words.begin(), bits.words().size(), bits.words().begin());
  bits.trim();
  return FieldElem(poly_, std::move(bits));
}

FieldElem Field::parse_element(std::string_view text) const {
  const std::string_view t = trim(text);
  if (t.size() >= 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) {
    const Gf2Poly p = Gf2Poly::from_hex(t);
    if (p.degree() >= static_cast<int>(n())) {
      throw InvalidInput("field element " + std::string(t) + " has degree >= n = " + std::to_string(n()));
    }
    return FieldElem(poly_, p.to_bits(n()));
  }
  return reduce(Gf2Poly::parse(t));
}

FieldElem Field::from_uint(std::uint64_t value) const {
  Gf2Poly p;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((value >> i) & 1u) p.flip(i);
  }
  return reduce(p);
}

FieldElem Field::random(std::mt19937_64& rng) const {
  BitVec bits(n());
  for (auto& w : bits.words()) w = rng();
  bits.trim();
  return FieldElem(poly_, std::move(bits));
}

FieldElem Field::random_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    FieldElem e = random(rng);
    if (!e.is_zero()) return e;
  }
}

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(std::shared_ptr<const IrreduciblePoly> modulus, BitVec bits)
    : modulus_(std::move(modulus)), bits_(std::move(bits)) {
  if (bits_.size() != modulus_->n()) throw InvalidInput("field element width does not match modulus degree");
}

bool FieldElem::is_one() const noexcept {
  if (!bits_.get(0)) return false;
  return bits_.popcount() == 1;
}

Field FieldElem::field() const { return Field(modulus_); }

namespace {

void check_same(const FieldElem& a, const FieldElem& b) {
  if (a.modulus_ptr() != b.modulus_ptr() && !(a.modulus() == b.modulus())) {
    throw ModulusMismatch("operands over different moduli: " + a.modulus().to_string() + " vs " +
                          b.modulus().to_string());
  }
}

FieldElem mul_raw(const FieldElem& a, const FieldElem& b) {
  std::vector<std::uint64_t> prod = clmul(a.bits().words(), b.bits().words());
  reduce_bits(prod, a.modulus().support());
  BitVec bits(a.n());
  std::copy_n(prod.begin(), bits.words().size(), bits.words().begin());
  bits.trim();
  return FieldElem(a.modulus_ptr(), std::move(bits));
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return FieldElem(a.modulus_ptr(), a.bits() ^ b.bits());
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return mul_raw(a, b);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * inverse(b); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.modulus_ptr() != b.modulus_ptr() && !(a.modulus() == b.modulus())) return false;
  return a.bits() == b.bits();
}

FieldElem add(const FieldElem& a, const FieldElem& b) { return a + b; }
FieldElem mul(const FieldElem& a, const FieldElem& b) { return a * b; }
FieldElem square(const FieldElem& a) { return mul_raw(a, a); }

FieldElem sqrt(const FieldElem& a) {
  FieldElem r = a;
  for (std::size_t i = 1; i < a.n(); ++i) r = square(r);
  return r;
}

FieldElem inverse(const FieldElem& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero field element");
  // Invariant: s * a == r0 (mod p), t * a == r1 (mod p).
  Gf2Poly r0 = a.modulus().poly();
  Gf2Poly r1 = a.to_poly();
  Gf2Poly s0;
  Gf2Poly s1 = Gf2Poly::monomial(0);
  while (r1.degree() > 0) {
    auto [q, r] = Gf2Poly::divmod(r0, r1);
    Gf2Poly s = s0 + q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  return a.field().reduce(s1);
}

FieldElem pow(const FieldElem& a, std::uint64_t e) {
  FieldElem result = a.field().one();
  FieldElem base = a;
  while (e != 0) {
    if (e & 1u) result = result * base;
    base = square(base);
    e >>= 1;
  }
  return result;
}

bool trace(const FieldElem& a) {
  FieldElem acc = a;
  FieldElem cur = a;
  for (std::size_t i = 1; i < a.n(); ++i) {
    cur = square(cur);
    acc += cur;
  }
  return acc.coeff(0);
}

FieldElem half_trace(const FieldElem& a) {
  if (a.n() % 2 == 0) throw UnsupportedConfiguration("half-trace requires odd extension degree");
  FieldElem acc = a;
  FieldElem cur = a;
  for (std::size_t i = 1; i <= (a.n() - 1) / 2; ++i) {
    cur = square(square(cur));
    acc += cur;
  }
  return acc;
}

std::optional<FieldElem> solve_quadratic(const FieldElem& c) {
  const std::size_t n = c.n();
  if (n % 2 == 1) {
    if (trace(c)) return std::nullopt;
    return half_trace(c);
  }
  // Even n: z -> z^2 + z is linear with a one-dimensional kernel {0, 1}; eliminate over GF(2).
  // Each basis entry keeps its image, reduced to a distinct lowest set bit, and the preimage.
  struct Row {
    BitVec image;
    BitVec pre;
  };
  const auto lowest = [n](const BitVec& v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v.get(i)) return i;
    }
    return n;
  };
  std::vector<std::optional<Row>> by_pivot(n);
  const Field f = c.field();
  for (std::size_t i = 0; i < n; ++i) {
    BitVec pre(n);
    pre.set(i, true);
    const FieldElem xi = f.element(pre);
    Row row{(square(xi) + xi).bits(), pre};
    for (std::size_t p = lowest(row.image); p < n; p = lowest(row.image)) {
      if (!by_pivot[p]) {
        by_pivot[p] = row;
        break;
      }
      row.image ^= by_pivot[p]->image;
      row.pre ^= by_pivot[p]->pre;
    }
  }
  BitVec target = c.bits();
  BitVec z(n);
  for (std::size_t p = lowest(target); p < n; p = lowest(target)) {
    if (!by_pivot[p]) return std::nullopt;
    target ^= by_pivot[p]->image;
    z ^= by_pivot[p]->pre;
  }
  return f.element(z);
}

}  // namespace ecsynth
