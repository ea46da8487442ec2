#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symsing/core/rational.hpp"

namespace symsing {

/// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<Integer>;

/// The d-th cyclotomic polynomial, by dividing z^d - 1 by Phi_k for every proper divisor k of d.
IntPoly cyclotomic_polynomial(int d);

/// Q(zeta_d) presented as Q[z]/(Phi_d).  Instances are immutable; get() hands out a shared
/// instance per d and is safe to call concurrently.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int d);

  int order() const { return d_; }
  /// phi(d), the number of coefficients of a reduced representative.
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const IntPoly& modulus() const { return modulus_; }

  /// Reduces an arbitrary coefficient vector modulo Phi_d in place.
  void reduce(std::vector<Rational>& coeffs) const;

  explicit CyclotomicField(int d);

 private:
  int d_;
  IntPoly modulus_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Element of Q(zeta_d).  An element without a field is a plain rational and combines with any
/// field; combining elements of two different fields is an error.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(int v) : Cyclo(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& v);             // NOLINT(google-explicit-constructor)
  Cyclo(FieldPtr field, std::vector<Rational> coeffs);

  /// zeta_d^k for any integer k.
  static Cyclo zeta_power(const FieldPtr& field, long k);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  Cyclo inverse() const;
  std::string to_string() const;

 private:
  void trim();
  static FieldPtr common_field(const Cyclo& a, const Cyclo& b);

  FieldPtr field_;
  std::vector<Rational> coeffs_;  // coefficient of z^i, no trailing zeros
};

inline bool is_zero(const Cyclo& c) { return c.is_zero(); }
inline Cyclo inverse(const Cyclo& c) { return c.inverse(); }
inline std::string to_string(const Cyclo& c) { return c.to_string(); }

}  // namespace symsing
