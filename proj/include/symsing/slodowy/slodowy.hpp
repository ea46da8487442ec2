#pragma once

#include <optional>
#include <vector>

#include "symsing/core/matrix.hpp"
#include "symsing/core/poly.hpp"
#include "symsing/report/report.hpp"

namespace symsing::slodowy {

struct SL2Triple {
  QMatrix e, h, f;
};

/// Jordan blocks of sizes (d - 2, 2): e = sum E_{i,i+1} inside each block, h the weight string
/// (m-1, m-3, ..., 1-m) per block of size m, f the matching lowering operator.
SL2Triple build_triple(int d);

/// [h, e] = 2e, [h, f] = -2f, [e, f] = h, traceless, rank(e) = d - 2.
VerificationReport verify_triple(int d, const SL2Triple& triple);

struct SlicePresentation {
  int d = 0;
  SL2Triple triple;
  /// Traceless part of ker(ad f), from an exact nullspace.
  std::vector<QMatrix> basis;
  /// Q[z1, ..., z_{d+3}].
  RingPtr ring;
  /// Entries of e + sum z_i basis_i, row-major.
  std::vector<QPoly> generic;
  /// c_1..c_d of det(t - M) = t^d + c_1 t^{d-1} + ... + c_d; equations[0] is c_1 (identically 0),
  /// the slice equations are c_2..c_d.
  std::vector<QPoly> char_coefficients;
  std::vector<QPoly> equations() const;
  Json to_json() const;
};

SlicePresentation slice_equations(int d);
SlicePresentation slice_equations(const SL2Triple& triple);

/// Matrix e + sum z_i basis_i at a rational point.
QMatrix slice_point(const SlicePresentation& slice, const std::vector<Rational>& z);
/// Rank of the Jacobian of the slice equations at z.
std::size_t jacobian_rank(const SlicePresentation& slice, const std::vector<Rational>& z);
/// True iff m is nilpotent of Jordan type (n), certified by rank(m^k) = n - k.
bool is_regular_nilpotent(const QMatrix& m);

/// Small-integer points z with at most two nonzero coordinates in [-2, 2], tried in a fixed
/// order until one gives a regular nilpotent matrix.  Stops after max_candidates.
std::optional<std::vector<Rational>> find_regular_point(const SlicePresentation& slice, std::size_t max_candidates);

VerificationReport verify_slice_geometry(int d, std::size_t max_candidates = 20000);
VerificationReport verify_slice_geometry(const SlicePresentation& slice, std::size_t max_candidates = 20000);

}  // namespace symsing::slodowy
