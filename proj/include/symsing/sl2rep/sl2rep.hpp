#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symsing/core/matrix.hpp"
#include "symsing/core/poly.hpp"
#include "symsing/report/report.hpp"

namespace symsing::sl2rep {

constexpr std::uint64_t default_seed = 20240611;

/// (a, b; c, d) acting by x -> a x + c Y, y -> a y + c X, X -> b y + d X, Y -> b x + d Y.
struct GL2Element {
  Rational a, b, c, d;

  GL2Element(Rational a_, Rational b_, Rational c_, Rational d_);
  Rational det() const { return a * d - b * c; }
  friend GL2Element operator*(const GL2Element& g, const GL2Element& h);
  Json to_json() const;
};

/// The substitution above on Q[x, y, X, Y].  act_gl2(g h) = act_gl2(g) o act_gl2(h).
QPoly act_gl2(const GL2Element& g, const QPoly& p);

/// Weight of p under a one-parameter grading of (x, y, X, Y), nullopt if p is not homogeneous
/// for it.
std::optional<long> grading_weight(const QPoly& p, const std::vector<int>& grading);
/// The torus xi -> diag(xi^-1, xi), which scales x, y by xi^-1 and X, Y by xi.
const std::vector<int>& torus_grading();

/// Span stability of span(q, Q, e), span(a_0..a_d), span(beta_0..beta_d) and g(delta) = det(g) delta
/// for `trials` random invertible integer matrices with entries in [-3, 3] plus the fixed
/// matrices (1,1;0,1) and (2,1;1,1); torus and homothety weights of the generators.
VerificationReport verify_module_structure(int d, int trials, std::uint64_t seed = default_seed);

/// Span stability for explicitly given matrices.
VerificationReport verify_module_structure(int d, const std::vector<GL2Element>& matrices);

/// Basis order of the domain: E, H, F, e1^4, e1^3 e2, e1^2 e2^2, e1 e2^3, e2^4.
std::vector<std::string> sl3_domain_labels();
/// Images of the domain basis as 3x3 matrices over Q(sqrt 2).
std::vector<Matrix<QSqrt2>> sl3_table();

/// Injectivity (rank 8), trace zero, the 24 infinitesimal equivariance residuals and the image of
/// H + e1^4 - e2^4.  The table can be replaced for corrupted-input runs.
VerificationReport sl3_embedding_check();
VerificationReport sl3_embedding_check(const std::vector<Matrix<QSqrt2>>& table);

/// f = (x, Y; y, X), f* = (X, Y; -y, -x): the products f* f and f f*, their determinants and
/// delta^2 = e^2 - 4qQ.
VerificationReport sosp_check();

}  // namespace symsing::sl2rep
