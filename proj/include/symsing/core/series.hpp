#pragma once

#include <vector>

#include "symsing/core/poly.hpp"

namespace symsing {

/// Polynomial carrier with every term of weighted degree above `order` dropped.  The truncation
/// weights default to the ring's grading weights.
class TruncatedSeries {
 public:
  TruncatedSeries(const QPoly& p, long order, std::vector<int> weights = {});

  const QPoly& poly() const { return poly_; }
  long order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }
  bool is_zero() const { return poly_.is_zero(); }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& s) const;
  /// Multiplies by a polynomial and truncates.
  TruncatedSeries times(const QPoly& p) const;
  TruncatedSeries pow(unsigned k) const;

 private:
  long degree(const Exponents& e) const;
  void check_compatible(const TruncatedSeries& o) const;

  QPoly poly_;
  long order_;
  std::vector<int> weights_;
};

/// S with S^2 * f == 1 up to the truncation.  The constant term of f must be a nonzero rational
/// square (std::domain_error otherwise) and every other term must have positive weighted degree.
TruncatedSeries series_inv_sqrt(const QPoly& f, long order, const std::vector<int>& weights = {});

}  // namespace symsing
