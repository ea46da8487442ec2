#include "symsing/core/poly.hpp"

#include <set>

namespace symsing {

PolyRing::PolyRing(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw std::invalid_argument("PolyRing: empty variable name");
    if (v.weight <= 0) throw std::invalid_argument("PolyRing: weight of '" + v.name + "' must be positive");
    if (!seen.insert(v.name).second) throw std::invalid_argument("PolyRing: duplicate variable '" + v.name + "'");
  }
}

std::optional<std::size_t> PolyRing::find(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t PolyRing::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw std::out_of_range("PolyRing: no variable named '" + name + "'");
  return *i;
}

long PolyRing::weighted_degree(const Exponents& e) const {
  long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += long(e[i]) * vars_[i].weight;
  return d;
}

bool degrevlex_greater(const Exponents& a, const Exponents& b) {
  long da = 0, db = 0;
  for (auto x : a) da += x;
  for (auto x : b) db += x;
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::string monomial_to_string(const PolyRing& ring, const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += ring.var(i).name;
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

namespace detail {

std::string coefficient_text(const std::string& raw, bool unit_monomial, bool& negative) {
  std::string s = raw;
  negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);
  if (s == "1" && !unit_monomial) return "";
  return s;
}

}  // namespace detail

}  // namespace symsing
