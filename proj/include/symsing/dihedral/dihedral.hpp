#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symsing/core/matrix.hpp"
#include "symsing/core/poly.hpp"
#include "symsing/report/report.hpp"

namespace symsing::dihedral {

/// Element of W_d acting on V = span(x, y) by its matrix and on V* by the inverse transpose.
struct GroupElement {
  Matrix<Cyclo> matrix;
  bool reflection = false;
  Cyclo det;
  std::string label;  // "r^k" for rotations diag(z^k, z^-k), "s_j" for reflections
};

/// ts = diag(zeta, zeta^-1).
GroupElement rotation(int d);
/// s_j = (0, zeta^j; zeta^-j, 0).
GroupElement reflection(int d, int j);
GroupElement compose(const GroupElement& a, const GroupElement& b);
/// Closure of {ts, s_0} under multiplication: r^0..r^{d-1} then s_0..s_{d-1}.
std::vector<GroupElement> build_group(int d);

/// Q[x, y, X, Y], every variable of weight 1.
const RingPtr& coordinate_ring();

/// The generators of the invariant and semi-invariant rings of W_d.
struct InvariantBundle {
  int d = 0;
  QPoly q, Q, e, delta;
  std::vector<QPoly> a, beta;  // a_0..a_d, beta_0..beta_d

  /// (name, polynomial) pairs of the invariants q, Q, e, a_i.
  std::vector<std::pair<std::string, QPoly>> invariants() const;
  /// (name, polynomial) pairs of delta, beta_j.
  std::vector<std::pair<std::string, QPoly>> semi_invariants() const;
};

InvariantBundle invariants(int d);

/// Induced automorphism of Q(zeta_d)[x, y, X, Y]: x -> m11 x + m21 y, y -> m12 x + m22 y, and
/// X, Y likewise with the inverse transpose.
CPoly act(const GroupElement& w, const CPoly& p);
CPoly act(const GroupElement& w, const QPoly& p);

/// Invariance of q, Q, e, a_i and det-semi-invariance of delta, beta_j under all of W_d, plus
/// invariance of every pairwise product of semi-invariants and delta^2 = e^2 - 4qQ.
VerificationReport verify_invariance(int d);
/// Same suite on an arbitrary bundle (used for corrupted inputs).
VerificationReport verify_invariance(const InvariantBundle& bundle);

/// Q[q, Q, e], every variable of weight 1, so that Psi_k is homogeneous of degree k.
const RingPtr& psi_ring();
/// Psi_k from Psi_0 = 1, Psi_1 = e, Psi_k = e Psi_{k-1} - qQ Psi_{k-2}.  Psi_{-1} = 0.
QPoly psi(int k);
/// Psi_k re-embedded into a ring containing q, Q and e.
QPoly psi(int k, const RingPtr& target);

/// Recurrence, the specializations at Q = 0, q = 0 and e = 0, homogeneity, and the generating
/// series identity (sum Psi_k t^k)(1 - e t + qQ t^2) = 1 mod t^{N+1}.
VerificationReport verify_psi(int N);
/// The same checks run against another sequence (Psi_k in psi_ring()).
VerificationReport verify_psi(int N, const std::function<QPoly(int)>& source);

}  // namespace symsing::dihedral
