#pragma once

#include <vector>

#include "symsing/core/rational.hpp"
#include "symsing/report/report.hpp"

namespace symsing::hilbert {

struct GradedDimOptions {
  /// Split the generator monomials by torus weight and clear each part separately.
  bool split_by_torus = true;
  /// Added to the clearing exponent of every part (0 = least uniform exponent).
  int extra_clearing = 0;
};

/// Dimension of the degree-n part of Q[q, Q, e, b_0, ..., b_d] inside the function field, with
/// q, Q, e of degree 2 and b_j of degree d - 2.
std::size_t graded_dimension(int d, int n, const GradedDimOptions& options = {});

/// Number of generator monomials of degree n (an upper bound for graded_dimension).
std::size_t monomial_count(int d, int n);

/// Numerator 1 + t^2 + ... + t^{2d-4} + (d-1) t^{d-2} and denominator (1-t^2)^2 (1-t^{d-2})^2,
/// coefficients from t^0 upwards.
std::vector<Integer> hilbert_numerator(int d);
std::vector<Integer> hilbert_denominator(int d);

/// Power-series coefficients of numerator / denominator through t^N (denominator(0) must be 1).
std::vector<Integer> series_quotient(const std::vector<Integer>& numerator, const std::vector<Integer>& denominator,
                                     int N);
std::vector<Integer> series_coefficients(int d, int N);

/// graded_dimension(d, n) against the series for every n <= N (N >= 2d), plus the series identity
/// numerator = denominator * series mod t^{N+1}.
VerificationReport verify_hilbert(int d, int N);
/// The same comparison against arbitrary expected coefficients.
VerificationReport verify_hilbert_against(int d, const std::vector<Integer>& expected);

/// Quotient dimension of the fiber algebra and its faithful matrix representation.
VerificationReport verify_fiber_algebra(int d);

}  // namespace symsing::hilbert
