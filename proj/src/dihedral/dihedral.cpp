#include "symsing/dihedral/dihedral.hpp"

#include <mutex>
#include <stdexcept>

namespace symsing::dihedral {

namespace {

Matrix<Cyclo> mat2(const Cyclo& a, const Cyclo& b, const Cyclo& c, const Cyclo& d) {
  Matrix<Cyclo> m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

Cyclo det2(const Matrix<Cyclo>& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// Labels an element of the closure by matching it against the explicit rotations/reflections.
std::string label_of(const Matrix<Cyclo>& m, int d, const FieldPtr& field, bool& is_reflection) {
  is_reflection = is_zero(m(0, 0));
  const Cyclo& probe = is_reflection ? m(0, 1) : m(0, 0);
  for (int k = 0; k < d; ++k)
    if (probe == Cyclo::zeta_power(field, k)) return (is_reflection ? "s_" : "r^") + std::to_string(k);
  throw std::logic_error("dihedral closure produced an unexpected element");
}

}  // namespace

GroupElement rotation(int d) {
  auto f = CyclotomicField::get(d);
  Matrix<Cyclo> m = mat2(Cyclo::zeta_power(f, 1), Cyclo(0), Cyclo(0), Cyclo::zeta_power(f, -1));
  return {m, false, det2(m), "r^1"};
}

GroupElement reflection(int d, int j) {
  auto f = CyclotomicField::get(d);
  Matrix<Cyclo> m = mat2(Cyclo(0), Cyclo::zeta_power(f, j), Cyclo::zeta_power(f, -j), Cyclo(0));
  return {m, true, det2(m), "s_" + std::to_string(((j % d) + d) % d)};
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  Matrix<Cyclo> m = a.matrix * b.matrix;
  int d = 0;
  for (const auto& x : m.data())
    if (x.field()) d = x.field()->order();
  if (d == 0) d = 1;
  bool refl = false;
  std::string label = label_of(m, d, CyclotomicField::get(d), refl);
  return {m, refl, det2(m), label};
}

std::vector<GroupElement> build_group(int d) {
  if (d < 1) throw std::invalid_argument("build_group: d must be positive");
  auto field = CyclotomicField::get(d);
  std::vector<Matrix<Cyclo>> elems{Matrix<Cyclo>::identity(2)};
  const std::vector<Matrix<Cyclo>> gens{rotation(d).matrix, reflection(d, 0).matrix};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Matrix<Cyclo> p = elems[i] * g;
      bool seen = false;
      for (const auto& x : elems)
        if (x == p) {
          seen = true;
          break;
        }
      if (!seen) elems.push_back(p);
    }
  }
  std::vector<GroupElement> rotations(d), reflections(d);
  for (const auto& m : elems) {
    bool refl = false;
    std::string label = label_of(m, d, field, refl);
    int k = std::stoi(label.substr(2));
    (refl ? reflections : rotations)[k] = {m, refl, det2(m), label};
  }
  rotations.insert(rotations.end(), reflections.begin(), reflections.end());
  for (const auto& g : rotations)
    if (g.label.empty()) throw std::logic_error("dihedral closure is incomplete");
  if (elems.size() != rotations.size()) throw std::logic_error("dihedral closure has wrong order");
  return rotations;
}

const RingPtr& coordinate_ring() {
  static const RingPtr ring = PolyRing::make({{"x", 1}, {"y", 1}, {"X", 1}, {"Y", 1}});
  return ring;
}

std::vector<std::pair<std::string, QPoly>> InvariantBundle::invariants() const {
  std::vector<std::pair<std::string, QPoly>> out{{"q", q}, {"Q", Q}, {"e", e}};
  for (int i = 0; i <= d; ++i) out.emplace_back("a" + std::to_string(i), a[i]);
  return out;
}

std::vector<std::pair<std::string, QPoly>> InvariantBundle::semi_invariants() const {
  std::vector<std::pair<std::string, QPoly>> out{{"delta", delta}};
  for (int j = 0; j <= d; ++j) out.emplace_back("beta" + std::to_string(j), beta[j]);
  return out;
}

InvariantBundle invariants(int d) {
  const auto& R = coordinate_ring();
  auto x = QPoly::variable(R, "x"), y = QPoly::variable(R, "y");
  auto X = QPoly::variable(R, "X"), Y = QPoly::variable(R, "Y");
  InvariantBundle b;
  b.d = d;
  b.q = x * y;
  b.Q = X * Y;
  b.e = x * X + y * Y;
  b.delta = x * X - y * Y;
  for (int i = 0; i <= d; ++i) {
    QPoly left = x.pow(d - i) * Y.pow(i), right = y.pow(d - i) * X.pow(i);
    b.a.push_back(left + right);
    b.beta.push_back(left - right);
  }
  return b;
}

CPoly act(const GroupElement& w, const CPoly& p) {
  const auto& R = coordinate_ring();
  const auto& m = w.matrix;
  Cyclo det = det2(m);
  Cyclo inv = det.inverse();
  // inverse transpose: n11 = m22/det, n12 = -m21/det, n21 = -m12/det, n22 = m11/det
  Cyclo n11 = m(1, 1) * inv, n12 = -(m(1, 0) * inv), n21 = -(m(0, 1) * inv), n22 = m(0, 0) * inv;
  auto v = [&](const char* name) { return CPoly::variable(R, name); };
  std::map<std::string, CPoly> binding{
      {"x", m(0, 0) * v("x") + m(1, 0) * v("y")},
      {"y", m(0, 1) * v("x") + m(1, 1) * v("y")},
      {"X", n11 * v("X") + n21 * v("Y")},
      {"Y", n12 * v("X") + n22 * v("Y")},
  };
  return substitute(p, binding, R);
}

CPoly act(const GroupElement& w, const QPoly& p) { return act(w, lift<Cyclo>(p)); }

VerificationReport verify_invariance(int d) { return verify_invariance(invariants(d)); }

VerificationReport verify_invariance(const InvariantBundle& bundle) {
  const int d = bundle.d;
  VerificationReport rep;
  const auto group = build_group(d);
  std::size_t reflections = 0;
  for (const auto& g : group) reflections += g.reflection ? 1 : 0;
  rep.add(make_check("dihedral.group_order", {{"d", d}},
                     group.size() == static_cast<std::size_t>(2 * d) && reflections == static_cast<std::size_t>(d),
                     {{"order", group.size()}, {"reflections", reflections}}));

  auto sweep = [&](const std::string& name, const QPoly& f, bool semi) {
    CPoly lifted = lift<Cyclo>(f);
    for (const auto& w : group) {
      CPoly target = semi ? w.det * lifted : lifted;
      CPoly residual = act(w, lifted) - target;
      if (!residual.is_zero()) {
        rep.add(make_check(semi ? "dihedral.semi_invariance" : "dihedral.invariance", {{"d", d}, {"f", name}}, false,
                           {{"element", w.label}, {"residual", residual.to_string()}}));
        return;
      }
    }
    rep.add(make_check(semi ? "dihedral.semi_invariance" : "dihedral.invariance", {{"d", d}, {"f", name}}, true,
                       {{"elements_checked", group.size()}}));
  };
  for (const auto& [name, f] : bundle.invariants()) sweep(name, f, false);
  const auto semis = bundle.semi_invariants();
  for (const auto& [name, f] : semis) sweep(name, f, true);

  // products of two semi-invariants are invariant
  bool products_ok = true;
  Json witness = {{"pairs_checked", 0}};
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < semis.size() && products_ok; ++i)
    for (std::size_t j = i; j < semis.size() && products_ok; ++j) {
      CPoly prod = lift<Cyclo>(semis[i].second * semis[j].second);
      ++pairs;
      for (const auto& w : group) {
        CPoly residual = act(w, prod) - prod;
        if (!residual.is_zero()) {
          products_ok = false;
          witness = {{"pair", semis[i].first + "*" + semis[j].first},
                     {"element", w.label},
                     {"residual", residual.to_string()}};
          break;
        }
      }
    }
  if (products_ok) witness = {{"pairs_checked", pairs}};
  rep.add(make_check("dihedral.semi_invariant_products", {{"d", d}}, products_ok, witness));

  QPoly residual = bundle.delta * bundle.delta - (bundle.e * bundle.e - Rational(4) * bundle.q * bundle.Q);
  rep.add(make_check("dihedral.delta_squared", {{"d", d}}, residual.is_zero(),
                     residual.is_zero() ? Json(nullptr) : Json(residual.to_string())));
  return rep;
}

const RingPtr& psi_ring() {
  static const RingPtr ring = PolyRing::make({{"q", 1}, {"Q", 1}, {"e", 1}});
  return ring;
}

QPoly psi(int k) {
  static std::mutex mu;
  static std::vector<QPoly> table;
  if (k < 0) return QPoly(psi_ring());
  std::lock_guard<std::mutex> lock(mu);
  const auto& R = psi_ring();
  if (table.empty()) {
    table.emplace_back(R, Rational(1));
    table.push_back(QPoly::variable(R, "e"));
  }
  const QPoly e = QPoly::variable(R, "e");
  const QPoly qQ = QPoly::variable(R, "q") * QPoly::variable(R, "Q");
  while (table.size() <= static_cast<std::size_t>(k)) {
    const std::size_t n = table.size();
    table.push_back(e * table[n - 1] - qQ * table[n - 2]);
  }
  return table[k];
}

QPoly psi(int k, const RingPtr& target) { return change_ring(psi(k), target); }

VerificationReport verify_psi(int N, const std::function<QPoly(int)>& source) {
  VerificationReport rep;
  const auto& R = psi_ring();
  const QPoly q = QPoly::variable(R, "q"), Q = QPoly::variable(R, "Q"), e = QPoly::variable(R, "e");
  const QPoly zero(R);

  bool base_ok = source(0) == QPoly(R, Rational(1)) && source(1) == e;
  rep.add(make_check("psi.initial_values", {{"N", N}}, base_ok, {{"psi0", source(0).to_string()}, {"psi1", source(1).to_string()}}));

  // independent recomputation of the recurrence
  Json rec_witness = nullptr, spec_witness = nullptr, hom_witness = nullptr;
  QPoly prev2 = zero, prev1(R, Rational(1));
  for (int k = 0; k <= N; ++k) {
    QPoly expected = k == 0 ? QPoly(R, Rational(1)) : e * prev1 - q * Q * prev2;
    if (k > 0) {
      prev2 = prev1;
      prev1 = expected;
    }
    QPoly p = source(k);
    if (rec_witness.is_null() && p != expected) rec_witness = {{"k", k}, {"residual", (p - expected).to_string()}};
    if (hom_witness.is_null() && !(p.is_homogeneous() && p.max_degree() == k))
      hom_witness = {{"k", k}, {"degree", p.max_degree()}};

    QPoly ek = e.pow(static_cast<unsigned>(k));
    QPoly at_Q0 = substitute(p, {{"q", q}, {"Q", zero}, {"e", e}}, R);
    QPoly at_q0 = substitute(p, {{"q", zero}, {"Q", Q}, {"e", e}}, R);
    QPoly at_e0 = substitute(p, {{"q", q}, {"Q", Q}, {"e", zero}}, R);
    QPoly want_e0 = (k % 2) ? zero : (Rational(-1) * q * Q).pow(static_cast<unsigned>(k / 2));
    if (spec_witness.is_null()) {
      if (at_Q0 != ek) spec_witness = {{"k", k}, {"case", "Q=0"}, {"value", at_Q0.to_string()}};
      else if (at_q0 != ek) spec_witness = {{"k", k}, {"case", "q=0"}, {"value", at_q0.to_string()}};
      else if (at_e0 != want_e0) spec_witness = {{"k", k}, {"case", "e=0"}, {"value", at_e0.to_string()}};
    }
  }
  rep.add(make_check("psi.recurrence", {{"N", N}}, rec_witness.is_null(), rec_witness));
  rep.add(make_check("psi.homogeneity", {{"N", N}}, hom_witness.is_null(), hom_witness));
  rep.add(make_check("psi.specializations", {{"N", N}}, spec_witness.is_null(), spec_witness));

  // generating series in Q[q, Q, e, t], truncated in t
  const RingPtr T = PolyRing::make({{"q", 1}, {"Q", 1}, {"e", 1}, {"t", 1}});
  const QPoly t = QPoly::variable(T, "t");
  QPoly series(T);
  for (int k = 0; k <= N; ++k) series += change_ring(source(k), T) * t.pow(static_cast<unsigned>(k));
  QPoly denom = QPoly(T, Rational(1)) - change_ring(e, T) * t + change_ring(q * Q, T) * t * t;
  const std::vector<int> t_only{0, 0, 0, 1};
  QPoly residual = (series * denom).truncate(N, t_only) - QPoly(T, Rational(1));
  rep.add(make_check("psi.generating_series", {{"N", N}}, residual.is_zero(),
                     residual.is_zero() ? Json(nullptr) : Json(residual.to_string())));
  return rep;
}

VerificationReport verify_psi(int N) {
  return verify_psi(N, [](int k) { return psi(k); });
}

}  // namespace symsing::dihedral
