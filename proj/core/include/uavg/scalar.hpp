#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace uavg {

using Rational = mpq_class;

class ScalarField;
using FieldPtr = std::shared_ptr<const ScalarField>;

/// Coordinates of a field element in the power basis 1, x, ..., x^{d-1}.
using Coords = std::vector<Rational>;

/// The coefficient field: either Q, or a simple extension Q[x]/(m(x)).
///
/// Extensions are validated on construction: m must be monic of degree >= 2,
/// and for degree <= 3 it must have no rational root (which for those degrees
/// is equivalent to irreducibility). Higher-degree moduli are taken on trust.
class ScalarField {
 public:
  static FieldPtr rationals();

  /// \p modulus lists the coefficients of m(x) from the constant term up;
  /// the last one must be 1.
  static FieldPtr extension(std::string variable, std::vector<Rational> modulus);

  bool is_rational() const { return modulus_.empty(); }
  int degree() const { return is_rational() ? 1 : static_cast<int>(modulus_.size()) - 1; }
  const std::string& variable() const { return variable_; }
  std::span<const Rational> modulus() const { return modulus_; }

  /// Structural equality (same variable name and modulus).
  bool same_as(const ScalarField& other) const;

  // Coordinate-level arithmetic. All inputs must have degree() coordinates.
  Coords add(const Coords& a, const Coords& b) const;
  Coords sub(const Coords& a, const Coords& b) const;
  Coords mul(const Coords& a, const Coords& b) const;
  Coords neg(const Coords& a) const;
  Coords inverse(const Coords& a) const;
  Coords zero() const { return Coords(static_cast<size_t>(degree())); }
  Coords one() const;
  /// Embeds a rational as a field element.
  Coords lift(const Rational& r) const;

  std::string to_string() const;

 private:
  ScalarField() = default;

  std::string variable_;
  std::vector<Rational> modulus_;
  // x^k mod m for k = d .. 2d-2, in power-basis coordinates
  std::vector<Coords> reduction_;
};

/// Returns the smaller field containing both, i.e. the extension if one side
/// is Q. Throws InputError if the two are distinct extensions.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

bool is_zero(const Coords& c);

/// An element of a ScalarField.
class Scalar {
 public:
  Scalar();
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  Scalar(FieldPtr field, Coords coords);

  /// The class of x in Q[x]/(m).
  static Scalar generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const Coords& coords() const { return coords_; }

  bool is_zero() const;
  /// True when every coordinate beyond the constant one is zero.
  bool is_rational() const;
  /// Throws InputError unless is_rational().
  Rational to_rational() const;

  Scalar promoted(const FieldPtr& field) const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Coordinatewise equality after promotion to a common field.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  FieldPtr field_;
  Coords coords_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace uavg
