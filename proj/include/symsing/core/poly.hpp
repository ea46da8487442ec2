#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symsing/core/cyclotomic.hpp"
#include "symsing/core/qsqrt2.hpp"
#include "symsing/core/rational.hpp"

namespace symsing {

struct Variable {
  std::string name;
  int weight = 1;
  friend bool operator==(const Variable& a, const Variable& b) { return a.name == b.name && a.weight == b.weight; }
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;
using Exponents = std::vector<std::uint16_t>;

/// An ordered table of named, weighted variables.  Position in the table is the variable order
/// used for printing and for the default monomial order.
class PolyRing {
 public:
  explicit PolyRing(std::vector<Variable> vars);
  static RingPtr make(std::vector<Variable> vars) { return std::make_shared<const PolyRing>(std::move(vars)); }

  std::size_t size() const { return vars_.size(); }
  const Variable& var(std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }
  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws std::out_of_range for unknown names.
  std::size_t index(const std::string& name) const;
  long weighted_degree(const Exponents& e) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

/// Total-degree reverse lexicographic comparison; true if a comes before b in printing order,
/// i.e. a is the larger monomial.
bool degrevlex_greater(const Exponents& a, const Exponents& b);

std::string monomial_to_string(const PolyRing& ring, const Exponents& e);

namespace detail {
inline int field_tag(const Rational&) { return 0; }
inline int field_tag(const Integer&) { return 0; }
inline int field_tag(const QSqrt2&) { return 0; }
inline int field_tag(const Cyclo& c) { return (c.field() && !c.is_rational()) ? c.field()->order() : 0; }
std::string coefficient_text(const std::string& raw, bool unit_monomial, bool& negative);
}  // namespace detail

/// Sparse multivariate polynomial.  Terms are keyed by exponent vector; zero coefficients are
/// never stored.
template <class K>
class Poly {
 public:
  using Coeff = K;
  using Terms = std::map<Exponents, K>;

  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, const K& constant) : ring_(std::move(ring)) {
    if (!symsing::is_zero(constant)) terms_.emplace(Exponents(ring_->size(), 0), constant);
  }

  static Poly variable(const RingPtr& ring, const std::string& name) { return variable(ring, ring->index(name)); }
  static Poly variable(const RingPtr& ring, std::size_t i) {
    Exponents e(ring->size(), 0);
    e[i] = 1;
    return monomial(ring, std::move(e), K(1));
  }
  static Poly monomial(const RingPtr& ring, Exponents e, const K& c) {
    Poly p(ring);
    p.add_term(e, c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  void add_term(const Exponents& e, const K& c) {
    if (symsing::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (symsing::is_zero(it->second)) terms_.erase(it);
  }

  K coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }
  K constant_term() const { return coefficient(Exponents(ring_->size(), 0)); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    adopt_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    adopt_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const K& s) {
    if (symsing::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.ring_ ? a.ring_ : b.ring_);
    if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_)) throw std::invalid_argument("Poly: ring mismatch");
    Exponents e;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        e.resize(ea.size());
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned k) const {
    Poly result(ring_, K(1)), base = *this;
    while (k) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return result;
  }

  /// Weighted degree of the top term under the given weights (ring weights if empty); -1 for zero.
  long max_degree(const std::vector<int>& weights = {}) const {
    long best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e, weights));
    return best;
  }
  long min_degree(const std::vector<int>& weights = {}) const {
    long best = -1;
    for (const auto& [e, c] : terms_) {
      long d = degree_of(e, weights);
      if (best < 0 || d < best) best = d;
    }
    return best;
  }
  bool is_homogeneous(const std::vector<int>& weights = {}) const {
    return terms_.empty() || max_degree(weights) == min_degree(weights);
  }
  /// Drops every term of weighted degree above max_deg.
  Poly truncate(long max_deg, const std::vector<int>& weights = {}) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
      if (degree_of(e, weights) <= max_deg) r.terms_.emplace(e, c);
    return r;
  }
  /// Terms of exactly the given weighted degree.
  Poly homogeneous_part(long deg, const std::vector<int>& weights = {}) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
      if (degree_of(e, weights) == deg) r.terms_.emplace(e, c);
    return r;
  }

  Poly derivative(std::size_t var) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents f = e;
      --f[var];
      r.add_term(f, c * K(static_cast<int>(e[var])));
    }
    return r;
  }
  Poly derivative(const std::string& name) const { return derivative(ring_->index(name)); }

  /// Largest exponent of a variable across all terms.
  unsigned max_exponent(std::size_t var) const {
    unsigned m = 0;
    for (const auto& [e, c] : terms_) m = std::max<unsigned>(m, e[var]);
    return m;
  }

  /// Terms sorted in canonical printing order (degrevlex, variables in table order).
  std::vector<std::pair<Exponents, K>> sorted_terms() const {
    std::vector<std::pair<Exponents, K>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return degrevlex_greater(a.first, b.first); });
    return v;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : sorted_terms()) {
      bool unit = std::all_of(e.begin(), e.end(), [](std::uint16_t x) { return x == 0; });
      bool neg = false;
      std::string coeff = detail::coefficient_text(symsing::to_string(c), unit, neg);
      std::string mono = unit ? "" : monomial_to_string(*ring_, e);
      std::string term = coeff.empty() ? mono : (mono.empty() ? coeff : coeff + "*" + mono);
      if (first)
        out = neg ? "-" + term : term;
      else
        out += (neg ? " - " : " + ") + term;
      first = false;
    }
    return out;
  }

  /// Applies f to every coefficient, landing in the given ring (same variable count).
  template <class L, class F>
  Poly<L> map_coefficients(F f, RingPtr target = nullptr) const {
    Poly<L> r(target ? target : ring_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

 private:
  long degree_of(const Exponents& e, const std::vector<int>& weights) const {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += long(e[i]) * (weights.empty() ? ring_->var(i).weight : weights[i]);
    return d;
  }
  void adopt_ring(const Poly& o) {
    if (!ring_) {
      ring_ = o.ring_;
    } else if (o.ring_ && !same_ring(ring_, o.ring_)) {
      throw std::invalid_argument("Poly: ring mismatch");
    }
  }

  RingPtr ring_;
  Terms terms_;
};

template <class K>
inline bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

using QPoly = Poly<Rational>;
using ZPoly = Poly<Integer>;
using CPoly = Poly<Cyclo>;
using RPoly = Poly<QSqrt2>;

/// Raised by substitute() when a variable of the source polynomial has no image.
class UnboundVariable : public std::invalid_argument {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::invalid_argument("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Image of p under the ring homomorphism sending each variable to its binding.  All images
/// must live in the target ring and share a coefficient field.
template <class K>
Poly<K> substitute(const Poly<K>& p, const std::map<std::string, Poly<K>>& binding, const RingPtr& target) {
  const PolyRing& src = *p.ring();
  std::vector<const Poly<K>*> image(src.size(), nullptr);
  std::vector<bool> used(src.size(), false);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  int tag = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = binding.find(src.var(i).name);
    if (it == binding.end()) {
      if (used[i]) throw UnboundVariable(src.var(i).name);
      continue;
    }
    if (!same_ring(it->second.ring(), target))
      throw std::invalid_argument("substitute: image of '" + src.var(i).name + "' is not in the target ring");
    image[i] = &it->second;
    for (const auto& [e, c] : it->second.terms()) {
      int t = detail::field_tag(c);
      if (t && tag && t != tag) throw std::domain_error("coefficient-field mismatch in substitution");
      if (t) tag = t;
    }
  }
  for (const auto& [e, c] : p.terms()) {
    int t = detail::field_tag(c);
    if (t && tag && t != tag) throw std::domain_error("coefficient-field mismatch in substitution");
  }
  // powers[i][k] = image_i^k, filled lazily
  std::vector<std::vector<Poly<K>>> powers(src.size());
  auto power = [&](std::size_t i, unsigned k) -> const Poly<K>& {
    auto& tab = powers[i];
    if (tab.empty()) tab.emplace_back(target, K(1));
    while (tab.size() <= k) tab.push_back(tab.back() * *image[i]);
    return tab[k];
  };
  Poly<K> result(target);
  for (const auto& [e, c] : p.terms()) {
    Poly<K> term(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    result += term;
  }
  return result;
}

/// Re-embeds p into a ring that contains all of its variables (matched by name).
template <class K>
Poly<K> change_ring(const Poly<K>& p, const RingPtr& target) {
  std::vector<std::size_t> where(p.ring()->size());
  for (std::size_t i = 0; i < where.size(); ++i) where[i] = target->index(p.ring()->var(i).name);
  Poly<K> r(target);
  Exponents f(target->size());
  for (const auto& [e, c] : p.terms()) {
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

/// Rational polynomial viewed over Q(zeta) or Q(sqrt2).
template <class L>
Poly<L> lift(const QPoly& p, RingPtr target = nullptr) {
  return p.template map_coefficients<L>([](const Rational& c) { return L(c); }, std::move(target));
}

}  // namespace symsing
