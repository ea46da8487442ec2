#pragma once

#include <string>

#include "symsing/core/rational.hpp"

namespace symsing {

/// a + b*sqrt(2) with rational a, b.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(int a) : a_(a) {}                // NOLINT(google-explicit-constructor)
  QSqrt2(const Rational& a) : a_(a) {}    // NOLINT(google-explicit-constructor)
  QSqrt2(const Rational& a, const Rational& b) : a_(a), b_(b) {}

  static QSqrt2 sqrt2() { return QSqrt2(0, 1); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }
  QSqrt2& operator+=(const QSqrt2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QSqrt2& operator-=(const QSqrt2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QSqrt2& operator*=(const QSqrt2& o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    return *this;
  }
  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }

  /// Throws std::domain_error on zero.
  QSqrt2 inverse() const;
  std::string to_string() const;

 private:
  Rational a_, b_;
};

inline bool is_zero(const QSqrt2& v) { return v.is_zero(); }
inline QSqrt2 inverse(const QSqrt2& v) { return v.inverse(); }
inline std::string to_string(const QSqrt2& v) { return v.to_string(); }

}  // namespace symsing
