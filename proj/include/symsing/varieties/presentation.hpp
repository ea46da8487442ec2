#pragma once

#include <string>
#include <vector>

#include "symsing/core/poly.hpp"
#include "symsing/dihedral/dihedral.hpp"
#include "symsing/report/report.hpp"

namespace symsing::varieties {

enum class Kind { Q, Z, Y };

std::string to_string(Kind k);
/// "Q", "Z" or "Y"; throws std::invalid_argument otherwise.
Kind parse_kind(const std::string& s);

/// lhs = rhs.  Linear relations carry j only (k = -1).
struct Relation {
  std::string type;  // "linear" or "quadratic"
  int j = 0, k = -1;
  QPoly lhs, rhs;

  QPoly poly() const { return lhs - rhs; }
  std::string label() const;
};

struct VarietyPresentation {
  std::string kind;
  int d = 0;
  RingPtr ring;
  std::vector<Relation> relations;

  std::vector<QPoly> polys() const;
  /// {kind, d, variables: [{name, weight}], relations: [canonical strings of lhs - rhs]}.
  Json to_json() const;
};

/// q, Q, e of weight 2 and a_0..a_d of weight d; with_c adds the weight-4 deformation symbol c.
RingPtr invariant_ring(int d, bool with_c = false);
/// q, Q, e of weight 2 and b_0..b_d of weight d-2.
RingPtr blowup_ring(int d);

/// Q(d), Z(d) (with c = d^2) or Y(d).  Rejects d < 4.
VarietyPresentation presentation(Kind kind, int d);
/// Z(d) with the deformation constant left as the symbol c (homogeneous of weight 4).
VarietyPresentation presentation_z_formal(int d);

/// Counts, homogeneity of Q(d), Y(d) and formal Z(d), the sign swap between the Q/Z and Y
/// quadratics, and the specializations c -> 0 (gives Q(d)) and c -> d^2 (gives Z(d)).
VerificationReport verify_presentation_structure(int d);

/// Every variable needed to state identities between invariants, semi-invariants and the
/// blow-up coordinates: q, Q, e, c, D, delta, a_*, b_*, beta_*.
RingPtr ambient_ring(int d);

/// delta^M * P evaluated at b_j = beta_j / delta and D = delta^2, with the least M >= 0 making it
/// polynomial (or the given M if it is large enough).  Result lives in ambient_ring(d) and
/// contains no b_* and no D.
struct Cleared {
  QPoly poly;
  int exponent = 0;
};
Cleared clear_delta(const QPoly& p, int d, int exponent = -1);

/// Image in Q[x, y, X, Y] of a polynomial over the ambient ring that contains no b_* or D.
QPoly to_coordinates(const QPoly& p, const dihedral::InvariantBundle& bundle);
/// clear_delta followed by to_coordinates.
QPoly cleared_coordinates(const QPoly& p, const dihedral::InvariantBundle& bundle, int* exponent = nullptr);

}  // namespace symsing::varieties
