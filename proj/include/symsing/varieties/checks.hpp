#pragma once

#include <optional>
#include <vector>

#include "symsing/core/groebner.hpp"
#include "symsing/varieties/presentation.hpp"

namespace symsing::varieties {

/// Substitutes the invariants (and, for Y, b_j = beta_j / delta with delta cleared) into every
/// relation and requires the zero polynomial in Q[x, y, X, Y].
VerificationReport verify_presentation_on_invariants(Kind kind, int d);
VerificationReport verify_presentation_on_invariants(const VarietyPresentation& p);

/// The expressions of a_j through b's and of D b_j through a's, cleared of delta.
VerificationReport verify_blowup_relations(int d);

/// The identities behind Y_0 = C^4, cleared by delta, and their images under the involution
/// q <-> Q, delta -> -delta, a_j -> a_{d-j}, beta_j -> beta_{d-j}, which give chart Y_d.
VerificationReport verify_chart_Y0(int d);

/// Ring Q[q, Q, a, Bm, B, Bp] for chart Y_r (a = a_r, Bm = B_{r-1}, B = B_r, Bp = B_{r+1}).
RingPtr chart_ring();
/// The two chart relations.
std::vector<QPoly> chart_relations(int d, int r);
/// All 2x2 minors of their Jacobian.
std::vector<QPoly> jacobian_minors(const std::vector<QPoly>& f);

/// Groebner certificate that the chart relations plus the Jacobian minors generate (1).  With
/// with_minors = false the relations alone are tested (their ideal is proper, so the check
/// fails; used as a control).
VerificationReport verify_chart_Yr_smooth(int d, int r, bool with_minors = true, const Budget& budget = {});

/// b_j -> a_j S with S = (c + 4qQ - e^2)^{-1/2} expanded to order N in q, Q, e.  The constant
/// c defaults to d^2.
VerificationReport verify_completion_substitution(int d, int N, std::optional<long> constant = std::nullopt);

/// q = Q = 0, e = 1 in Q(d) and Y(d).
VerificationReport verify_orbit_representatives(int d);

/// a_i^+ and a_i^- for d = 2m, and the generators of J_1 = (D, a_i^-) and J_2 = (D, a_i^+), all
/// over the ambient ring.
struct SingularLocusIdeals {
  int d = 0;
  std::vector<QPoly> a_plus, a_minus;
  std::vector<QPoly> J1, J2;
};
SingularLocusIdeals singular_locus_ideals(int d);

/// Factorizations of a_i^{+-}, the squares and products of the beta's through a^{+-}, and the
/// invariance of every generator of J_1, J_2.  d must be even.
VerificationReport verify_singular_locus(int d);

/// q = 1, Q = -w, e = 0, b_{2k} = v w^k, b_{2k+1} = u w^k into Y(d), reduced modulo
/// u^2 - v^2 w - 1.
VerificationReport verify_phi_immersion(int d);

/// q = Q = 0, e = xi, b_1 = ... = b_{d-1} = 0 in Y(d) leaves only b_0 b_d = -xi^{d-2}.
VerificationReport verify_fiber_identity(int d);

}  // namespace symsing::varieties
