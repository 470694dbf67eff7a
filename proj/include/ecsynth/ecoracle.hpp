#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ecsynth/gf2field.hpp"

namespace ecsynth {

/// Ordinary binary curve y^2 + xy = x^3 + a2 x^2 + a6 with a6 != 0.
struct Curve {
  FieldElem a2;
  FieldElem a6;

  /// Throws CurveError for a6 = 0, ModulusMismatch for mixed fields.
  Curve(FieldElem a2_, FieldElem a6_);
  Field field() const { return a2.field(); }
};

/// Affine point or the identity O.
class AffinePoint {
 public:
  static AffinePoint identity(const Field& f);
  /// Throws CurveError if (x, y) is not on the curve.
  static AffinePoint checked(const Curve& curve, FieldElem x, FieldElem y);
  /// No membership test; only for reproducing off-curve constructions.
  static AffinePoint unchecked(FieldElem x, FieldElem y);

  bool is_identity() const noexcept { return infinity_; }
  const FieldElem& x() const noexcept { return x_; }
  const FieldElem& y() const noexcept { return y_; }

  friend bool operator==(const AffinePoint& a, const AffinePoint& b);

 private:
  AffinePoint(bool infinity, FieldElem x, FieldElem y) : infinity_(infinity), x_(std::move(x)), y_(std::move(y)) {}
  bool infinity_;
  FieldElem x_;
  FieldElem y_;
};

/// López–Dahab triple: x = X/Z, y = Y/Z^2; Z = 0 is the identity class.
struct LDPoint {
  FieldElem X;
  FieldElem Y;
  FieldElem Z;

  bool is_identity() const { return Z.is_zero(); }
};

enum class Checked { kYes, kNo };

bool on_curve_affine(const Curve& curve, const AffinePoint& p);
/// Y^2 + XYZ = X^3 Z + a2 X^2 Z^2 + a6 Z^4 for Z != 0; (X, 0, 0) with X != 0 for the identity.
bool on_curve_ld(const Curve& curve, const LDPoint& p);

AffinePoint negate(const AffinePoint& p);
/// Group law in affine coordinates, all branches. With Checked::kYes off-curve inputs throw CurveError.
AffinePoint affine_add(const Curve& curve, const AffinePoint& p1, const AffinePoint& p2, Checked checked = Checked::kYes);

/// Mixed López–Dahab + affine addition for the generic branch:
///   A = Y1 + y2 Z1^2, B = X1 + x2 Z1, C = B Z1, Z3 = C^2, D = x2 Z3,
///   X3 = A^2 + C (A + B^2 + a2 C), Y3 = (D + X3)(A C + Z3) + (y2 + x2) Z3^2.
/// With Checked::kYes, throws CurveError unless O != P1 != +-P2 and both points are on the curve.
LDPoint aldaoud_madd(const Curve& curve, const LDPoint& p1, const AffinePoint& p2, Checked checked = Checked::kYes);

AffinePoint ld_to_affine(const LDPoint& p);
/// (x, y, 1); the identity maps to (1, 0, 0).
LDPoint affine_to_ld(const AffinePoint& p);
/// (lambda X, lambda^2 Y, lambda Z).
LDPoint ld_scale(const LDPoint& p, const FieldElem& lambda);
/// Same projective class: X1 Z2 = X2 Z1 and Y1 Z2^2 = Y2 Z1^2; all Z = 0 triples are equal.
bool ld_equal(const LDPoint& p, const LDPoint& q);

/// Uniform on-curve point other than O, via solve_quadratic.
AffinePoint random_point(const Curve& curve, std::mt19937_64& rng);
AffinePoint scalar_mul(const Curve& curve, std::uint64_t k, const AffinePoint& p);

/// Every affine point including O (O first); intended for n <= 16.
std::vector<AffinePoint> all_points(const Curve& curve);

}  // namespace ecsynth
