#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symsing/core/poly.hpp"

namespace symsing {

struct MonomialOrder {
  enum class Kind { degrevlex, lex, weighted_revlex };
  Kind kind = Kind::degrevlex;
  /// Variable priority, most significant first.  Empty means table order.
  std::vector<std::size_t> permutation;
  /// Grading for weighted_revlex.  Empty means the ring's weights.
  std::vector<int> weights;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::lex, {}, {}}; }
  static MonomialOrder weighted(std::vector<int> w = {}) { return {Kind::weighted_revlex, {}, std::move(w)}; }

  /// Negative, zero or positive as a is smaller than, equal to or larger than b.
  int compare(const Exponents& a, const Exponents& b, const PolyRing& ring) const;
};

/// Resource limits for Groebner computations.  Exceeding one raises BudgetExceeded.
struct Budget {
  std::size_t max_basis = 5000;
  std::size_t max_terms = 2000000;
  double max_seconds = 600.0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduced Groebner basis over Q, monic, sorted by increasing leading monomial.  The zero ideal
/// gives an empty list, the unit ideal gives {1}.
std::vector<QPoly> groebner_basis(const std::vector<QPoly>& gens, const MonomialOrder& order = {},
                                  const Budget& budget = {});

/// Remainder of p on multivariate division by basis.
QPoly normal_form(const QPoly& p, const std::vector<QPoly>& basis, const MonomialOrder& order = {});

/// True if every S-polynomial of basis reduces to zero.
bool is_groebner(const std::vector<QPoly>& basis, const MonomialOrder& order = {});

bool ideal_contains(const std::vector<QPoly>& gens, const QPoly& p, const MonomialOrder& order = {},
                    const Budget& budget = {});

bool is_unit_ideal(const std::vector<QPoly>& basis);

Exponents leading_monomial(const QPoly& p, const MonomialOrder& order = {});

/// Monomials outside the leading-term ideal of a Groebner basis; nullopt if there are infinitely
/// many.
std::optional<std::vector<Exponents>> standard_monomials(const std::vector<QPoly>& basis, std::size_t nvars,
                                                         const MonomialOrder& order = {});

/// dim_Q of Q[vars]/(gens); nullopt when infinite.
std::optional<std::size_t> quotient_dimension(const std::vector<QPoly>& gens, const MonomialOrder& order = {},
                                              const Budget& budget = {});

}  // namespace symsing
