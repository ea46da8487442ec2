#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symsing/report/report.hpp"

namespace symsing::quiver {

/// Coordinates indexed by vertex: slot 0 is the framing vertex rho_inf, slot 1 + i is rho_i.
using DimVector = std::vector<int>;
using Parameter = std::vector<int>;

enum class RootKind { real, imaginary, not_a_root };
std::string to_string(RootKind k);

/// The affine type-A cycle rho_0 -> rho_1 -> ... -> rho_{d-1} -> rho_0 with a framing rho_inf -> rho_0.
class FramedQuiver {
 public:
  explicit FramedQuiver(int d);

  int d() const { return d_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(d_) + 1; }
  /// (e_i, e_j) = 2 delta_ij - #arrows between i and j.
  int pairing(std::size_t i, std::size_t j) const { return form_[i * vertex_count() + j]; }
  int form(const DimVector& a, const DimVector& b) const;
  /// 1 - (a, a) / 2; the form is even, so this is an integer.
  int p_value(const DimVector& a) const { return 1 - form(a, a) / 2; }
  DimVector reflect(const DimVector& a, std::size_t i) const;
  RootKind classify_root(const DimVector& a) const;
  bool is_root(const DimVector& a) const { return classify_root(a) != RootKind::not_a_root; }

  DimVector zero() const { return DimVector(vertex_count(), 0); }
  DimVector simple(std::size_t vertex) const;
  /// rho_i for i in 0..d-1.
  DimVector rho(int i) const { return simple(static_cast<std::size_t>(i) + 1); }
  DimVector rho_inf() const { return simple(0); }
  /// Minimal imaginary root: ones on the cycle, zero at the framing vertex.
  DimVector delta_imag() const;
  /// rho_1 + ... + rho_{d-1}.
  DimVector highest_root() const;
  /// v = rho_inf + 2 delta_imag.
  DimVector v() const;
  /// lambda_inf = -2, lambda_0 = 1, zero elsewhere.
  Parameter lambda() const;
  std::string label(const DimVector& a) const;

 private:
  int d_;
  std::vector<int> form_;
};

int dot(const Parameter& lambda, const DimVector& a);

/// Norm-2 and norm-4 vectors of the type A_{d-1} sublattice (vertices rho_1..rho_{d-1}) by
/// enumeration, compared with the positive roots and with the nested / disjoint families.
VerificationReport norm_sets(int d);
/// Norm-4 vectors alpha <= 2 alpha_h compared with a claimed set (coordinates on rho_1..rho_{d-1}).
VerificationReport verify_norm4_against(int d, const std::vector<std::vector<int>>& claimed);
/// The nested (i < k <= l < j) and disjoint non-adjacent (j + 1 < k) families alpha_{i,j} + alpha_{k,l}.
std::vector<std::vector<int>> norm4_families(int d);
/// Same families with both index ranges strict (i < k < l < j and i < j < k < l).
std::vector<std::vector<int>> norm4_families_strict(int d);

struct Decomposition {
  std::vector<DimVector> parts;
  int p_sum = 0;
};

struct SigmaEntry {
  DimVector alpha;
  RootKind kind;
  int p = 0;
  bool in_sigma = false;
  /// Best proper decomposition into positive roots with lambda . beta = 0, if any.
  std::optional<Decomposition> best;
};

/// Every positive root alpha <= v with lambda . alpha = 0, with its condition-(B) verdict.
std::vector<SigmaEntry> sigma_candidates(int d, const Parameter& lambda);
std::vector<DimVector> sigma_lambda(int d, const Parameter& lambda);
std::vector<DimVector> sigma_lambda(int d);
std::vector<DimVector> expected_sigma(int d);
VerificationReport verify_sigma(int d);
VerificationReport verify_sigma(int d, const Parameter& lambda);

struct RepresentationType {
  std::vector<std::pair<DimVector, int>> entries;
  int dimension = 0;
};

/// All ways to write v as sum n_i beta_i with beta_i in sigma (real roots in one entry only).
std::vector<RepresentationType> representation_types(int d, const std::vector<DimVector>& sigma);
std::vector<RepresentationType> representation_types(int d);
std::vector<RepresentationType> expected_types(int d);
VerificationReport verify_leaves(int d);
VerificationReport verify_leaves(int d, const std::vector<DimVector>& sigma);

/// Local quiver at the zero-dimensional leaf, and the partitions lambda = (d-2, 2), mu = (d).
VerificationReport local_quiver_data(int d);

/// Sigma, representation types and local quiver data as JSON.
Json quiver_export(int d);
Json to_json(const FramedQuiver& quiver, const DimVector& a);

}  // namespace symsing::quiver
