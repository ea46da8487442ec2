#include "symsing/core/qsqrt2.hpp"

#include <stdexcept>

namespace symsing {

QSqrt2 QSqrt2::inverse() const {
  // sqrt(2) is irrational, so the norm vanishes only at zero.
  Rational norm = a_ * a_ - 2 * b_ * b_;
  if (norm == 0) throw std::domain_error("QSqrt2::inverse of zero");
  return QSqrt2(a_ / norm, -b_ / norm);
}

std::string QSqrt2::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string s = b_.get_str() + "*sqrt2";
  if (a_ == 0) return s;
  return "(" + a_.get_str() + (sgn(b_) < 0 ? " " : " + ") + s + ")";
}

}  // namespace symsing
