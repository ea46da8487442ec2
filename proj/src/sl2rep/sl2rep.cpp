#include "symsing/sl2rep/sl2rep.hpp"

#include <array>
#include <random>
#include <set>
#include <stdexcept>

#include "symsing/dihedral/dihedral.hpp"

namespace symsing::sl2rep {

GL2Element::GL2Element(Rational a_, Rational b_, Rational c_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (det() == 0) throw std::invalid_argument("GL2Element: singular matrix");
}

GL2Element operator*(const GL2Element& g, const GL2Element& h) {
  return GL2Element(g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d);
}

Json GL2Element::to_json() const {
  return Json::array({Json::array({a.get_str(), b.get_str()}), Json::array({c.get_str(), d.get_str()})});
}

QPoly act_gl2(const GL2Element& g, const QPoly& p) {
  const RingPtr& R = dihedral::coordinate_ring();
  auto v = [&](const char* n) { return QPoly::variable(R, n); };
  std::map<std::string, QPoly> binding{
      {"x", g.a * v("x") + g.c * v("Y")},
      {"y", g.a * v("y") + g.c * v("X")},
      {"X", g.b * v("y") + g.d * v("X")},
      {"Y", g.b * v("x") + g.d * v("Y")},
  };
  return substitute(p, binding, R);
}

std::optional<long> grading_weight(const QPoly& p, const std::vector<int>& grading) {
  if (p.is_zero()) return std::nullopt;
  std::optional<long> w;
  for (const auto& [e, c] : p.terms()) {
    long t = 0;
    for (std::size_t i = 0; i < e.size(); ++i) t += long(e[i]) * grading[i];
    if (w && *w != t) return std::nullopt;
    w = t;
  }
  return w;
}

const std::vector<int>& torus_grading() {
  static const std::vector<int> g{-1, -1, 1, 1};
  return g;
}

namespace {

// Coefficients of `target` in the basis `span`, if it lies in the span.
std::optional<std::vector<Rational>> coordinates_in(const std::vector<QPoly>& span, const QPoly& target) {
  std::set<Exponents> monos;
  for (const auto& p : span)
    for (const auto& [e, c] : p.terms()) monos.insert(e);
  for (const auto& [e, c] : target.terms())
    if (!monos.count(e)) return std::nullopt;
  std::vector<Exponents> rows(monos.begin(), monos.end());
  QMatrix A(rows.size(), span.size());
  std::vector<Rational> rhs(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < span.size(); ++j) A(i, j) = span[j].coefficient(rows[i]);
    rhs[i] = target.coefficient(rows[i]);
  }
  return solve(A, rhs);
}

Rational rational_power(const Rational& base, long k) {
  Rational r(1);
  for (long i = 0; i < std::abs(k); ++i) r *= base;
  return k < 0 ? inverse(r) : r;
}

}  // namespace

VerificationReport verify_module_structure(int d, const std::vector<GL2Element>& matrices) {
  VerificationReport rep;
  const auto inv = dihedral::invariants(d);
  const std::vector<QPoly> adjoint{inv.q, inv.Q, inv.e};
  struct Span {
    std::string name;
    const std::vector<QPoly>* basis;
  };
  const std::vector<Span> spans{{"q,Q,e", &adjoint}, {"a_0..a_d", &inv.a}, {"beta_0..beta_d", &inv.beta}};
  Json used = Json::array();
  for (const auto& g : matrices) used.push_back(g.to_json());
  for (const auto& s : spans) {
    Json bad = nullptr;
    for (const auto& g : matrices) {
      for (std::size_t i = 0; i < s.basis->size() && bad.is_null(); ++i)
        if (!coordinates_in(*s.basis, act_gl2(g, (*s.basis)[i])))
          bad = {{"matrix", g.to_json()}, {"basis_index", i}, {"image", act_gl2(g, (*s.basis)[i]).to_string()}};
      if (!bad.is_null()) break;
    }
    rep.add(make_check("sl2rep.span_stable", {{"d", d}, {"span", s.name}}, bad.is_null(),
                       bad.is_null() ? Json({{"matrices", used}}) : bad));
  }
  Json bad = nullptr;
  for (const auto& g : matrices) {
    QPoly r = act_gl2(g, inv.delta) - g.det() * inv.delta;
    if (!r.is_zero()) {
      bad = {{"matrix", g.to_json()}, {"residual", r.to_string()}};
      break;
    }
  }
  rep.add(make_check("sl2rep.delta_det_character", {{"d", d}}, bad.is_null(),
                     bad.is_null() ? Json({{"matrices", matrices.size()}}) : bad));
  return rep;
}

VerificationReport verify_module_structure(int d, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_module_structure: trials must be positive");
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(d));
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<GL2Element> mats{GL2Element(1, 1, 0, 1), GL2Element(2, 1, 1, 1)};
  while (static_cast<int>(mats.size()) < trials + 2) {
    int a = entry(rng), b = entry(rng), c = entry(rng), dd = entry(rng);
    if (a * dd - b * c != 0) mats.emplace_back(a, b, c, dd);
  }
  VerificationReport rep = verify_module_structure(d, mats);

  // action property on a sample of pairs
  const auto inv = dihedral::invariants(d);
  Json bad = nullptr;
  for (std::size_t i = 0; i + 1 < mats.size() && bad.is_null(); ++i) {
    const auto& g = mats[i];
    const auto& h = mats[i + 1];
    for (const QPoly& p : {inv.a[1], inv.beta[0], inv.e}) {
      QPoly r = act_gl2(g * h, p) - act_gl2(g, act_gl2(h, p));
      if (!r.is_zero()) {
        bad = {{"g", g.to_json()}, {"h", h.to_json()}, {"residual", r.to_string()}};
        break;
      }
    }
  }
  rep.add(make_check("sl2rep.group_action", {{"d", d}, {"seed", seed}}, bad.is_null(), bad));

  // torus weights of xi -> diag(xi^-1, xi): q, Q, e, b_j get -2, 2, 0, 2j - d
  Json weights = Json::object();
  bad = nullptr;
  auto record = [&](const std::string& name, const QPoly& p, long expected) {
    auto w = grading_weight(p, torus_grading());
    weights[name] = w ? Json(*w) : Json("inhomogeneous");
    // the grading is the actual substitution: evaluate at xi = 2
    GL2Element t(Rational(1, 2), 0, 0, 2);
    bool matches = w && *w == expected && act_gl2(t, p) == rational_power(Rational(2), expected) * p;
    if (!matches && bad.is_null()) bad = {{"generator", name}, {"expected", expected}, {"weight", weights[name]}};
  };
  record("q", inv.q, -2);
  record("Q", inv.Q, 2);
  record("e", inv.e, 0);
  record("delta", inv.delta, 0);
  for (int j = 0; j <= d; ++j) {
    // b_j = beta_j / delta and delta has torus weight 0
    record("b" + std::to_string(j), inv.beta[j], 2 * j - d);
    record("a" + std::to_string(j), inv.a[j], 2 * j - d);
  }
  rep.add(make_check("sl2rep.torus_weights", {{"d", d}}, bad.is_null(), bad.is_null() ? Json(weights) : bad));

  // homotheties lambda I: a_j weight d, delta weight 2, b_j weight d - 2
  bad = nullptr;
  for (int lambda : {2, 3}) {
    GL2Element h(lambda, 0, 0, lambda);
    Rational L(lambda);
    for (int j = 0; j <= d && bad.is_null(); ++j) {
      bool a_ok = act_gl2(h, inv.a[j]) == rational_power(L, d) * inv.a[j];
      // b_j -> lambda^{w} b_j means beta_j -> lambda^{w + 2} beta_j
      bool b_ok = act_gl2(h, inv.beta[j]) == rational_power(L, (d - 2) + 2) * inv.beta[j];
      bool delta_ok = act_gl2(h, inv.delta) == rational_power(L, 2) * inv.delta;
      if (!(a_ok && b_ok && delta_ok)) bad = {{"lambda", lambda}, {"j", j}};
    }
  }
  rep.add(make_check("sl2rep.homothety_weights", {{"d", d}}, bad.is_null(),
                     bad.is_null() ? Json({{"a_weight", d}, {"delta_weight", 2}, {"b_weight", d - 2}}) : bad));
  return rep;
}

std::vector<std::string> sl3_domain_labels() {
  return {"E", "H", "F", "e1^4", "e1^3*e2", "e1^2*e2^2", "e1*e2^3", "e2^4"};
}

std::vector<Matrix<QSqrt2>> sl3_table() {
  const QSqrt2 r2 = QSqrt2::sqrt2(), h2(0, Rational(1, 2));
  auto M = [](std::initializer_list<std::initializer_list<QSqrt2>> rows) { return Matrix<QSqrt2>(rows); };
  return {
      M({{0, r2, 0}, {0, 0, -r2}, {0, 0, 0}}),
      M({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}),
      M({{0, 0, 0}, {r2, 0, 0}, {0, -r2, 0}}),
      M({{0, 0, 2}, {0, 0, 0}, {0, 0, 0}}),
      M({{0, h2, 0}, {0, 0, h2}, {0, 0, 0}}),
      M({{Rational(-1, 3), 0, 0}, {0, Rational(2, 3), 0}, {0, 0, Rational(-1, 3)}}),
      M({{0, 0, 0}, {-h2, 0, 0}, {0, -h2, 0}}),
      M({{0, 0, 0}, {0, 0, 0}, {2, 0, 0}}),
  };
}

VerificationReport sl3_embedding_check() { return sl3_embedding_check(sl3_table()); }

VerificationReport sl3_embedding_check(const std::vector<Matrix<QSqrt2>>& table) {
  if (table.size() != 8) throw std::invalid_argument("sl3_embedding_check: table needs 8 images");
  VerificationReport rep;
  const auto labels = sl3_domain_labels();

  Matrix<QSqrt2> flat(8, 9);
  for (std::size_t k = 0; k < 8; ++k)
    for (std::size_t i = 0; i < 9; ++i) flat(k, i) = table[k](i / 3, i % 3);
  std::size_t rank = exact_rank(flat);
  rep.add(make_check("sl2rep.sl3.injective", Json::object(), rank == 8, {{"rank", rank}}));

  Json traces = Json::object();
  bool traces_ok = true;
  for (std::size_t k = 0; k < 8; ++k) {
    QSqrt2 t = table[k].trace();
    traces[labels[k]] = t.to_string();
    traces_ok = traces_ok && t.is_zero();
  }
  rep.add(make_check("sl2rep.sl3.traceless", Json::object(), traces_ok, traces));

  // action of E, H, F on the domain, as coefficient vectors in the basis above
  using Vec = std::array<QSqrt2, 8>;
  auto action = [](int A, std::size_t m) {
    Vec out{};
    if (m < 3) {
      // ad on sl2: [E,H] = -2E, [E,F] = H, [H,E] = 2E, [H,F] = -2F, [F,E] = -H, [F,H] = 2F
      static const int table_sl2[3][3][3] = {
          {{0, 0, 0}, {-2, 0, 0}, {0, 1, 0}},
          {{2, 0, 0}, {0, 0, 0}, {0, 0, -2}},
          {{0, -1, 0}, {0, 0, 2}, {0, 0, 0}},
      };
      for (int i = 0; i < 3; ++i) out[i] = table_sl2[A][m][i];
      return out;
    }
    // e1^a e2^b with a = 4 - (m - 3), b = m - 3
    int b = static_cast<int>(m) - 3, a = 4 - b;
    if (A == 0 && b > 0) out[m - 1] = b;
    if (A == 1) out[m] = a - b;
    if (A == 2 && a > 0) out[m + 1] = a;
    return out;
  };
  auto image = [&](const Vec& v) {
    Matrix<QSqrt2> r(3, 3);
    for (std::size_t k = 0; k < 8; ++k)
      if (!v[k].is_zero()) r = r + v[k] * table[k];
    return r;
  };
  std::size_t zero = 0;
  Json bad = nullptr;
  for (int A = 0; A < 3; ++A)
    for (std::size_t m = 0; m < 8; ++m) {
      Matrix<QSqrt2> residual = commutator(table[A], table[m]) - image(action(A, m));
      if (residual.is_zero()) {
        ++zero;
      } else if (bad.is_null()) {
        bad = {{"A", labels[A]}, {"m", labels[m]}, {"residual", residual.to_string()}};
      }
    }
  rep.add(make_check("sl2rep.sl3.equivariance", {{"level", "Lie algebra"}}, zero == 24,
                     bad.is_null() ? Json({{"zero_residuals", zero}}) : bad));

  Matrix<QSqrt2> special = table[1] + table[3] - table[7];
  Matrix<QSqrt2> expected({{2, 0, 2}, {0, 0, 0}, {-2, 0, -2}});
  std::size_t special_rank = exact_rank(special);
  bool ok = special == expected && special_rank == 1 && special.trace().is_zero();
  rep.add(make_check("sl2rep.sl3.minimal_orbit_element", Json::object(), ok,
                     {{"image", special.to_string()}, {"rank", special_rank}, {"trace", special.trace().to_string()}}));
  return rep;
}

VerificationReport sosp_check() {
  const RingPtr& R = dihedral::coordinate_ring();
  const QPoly x = QPoly::variable(R, "x"), y = QPoly::variable(R, "y"), X = QPoly::variable(R, "X"),
              Y = QPoly::variable(R, "Y");
  const QPoly zero(R), one(R, Rational(1));
  using M2 = std::array<QPoly, 4>;  // row-major
  auto mul = [](const M2& a, const M2& b) {
    return M2{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  };
  auto det = [](const M2& a) { return a[0] * a[3] - a[1] * a[2]; };
  auto text = [](const M2& a) {
    return Json::array({Json::array({a[0].to_string(), a[1].to_string()}), Json::array({a[2].to_string(), a[3].to_string()})});
  };
  auto residual_of = [&](const M2& a, const M2& b) -> Json {
    const char* names[4] = {"(1,1)", "(1,2)", "(2,1)", "(2,2)"};
    for (int i = 0; i < 4; ++i)
      if (a[i] != b[i]) return {{"entry", names[i]}, {"residual", (a[i] - b[i]).to_string()}};
    return nullptr;
  };
  const M2 f{x, Y, y, X};
  // (f(s), o) = omega(s, f*(o)) gives f* = omega^-1 f^T form
  const M2 omega_inv{zero, one, -one, zero}, form{zero, one, one, zero};
  const M2 f_transpose{x, y, Y, X};
  const M2 fstar = mul(mul(omega_inv, f_transpose), form);
  const auto inv = dihedral::invariants(4);

  VerificationReport rep;
  Json r = residual_of(fstar, M2{X, Y, -y, -x});
  rep.add(make_check("sl2rep.sosp.adjoint", Json::object(), r.is_null(), r.is_null() ? text(fstar) : r));
  const M2 sp = mul(fstar, f), so = mul(f, fstar);
  r = residual_of(sp, M2{x * X + y * Y, Rational(2) * X * Y, Rational(-2) * x * y, -(x * X) - y * Y});
  rep.add(make_check("sl2rep.sosp.fstar_f", Json::object(), r.is_null(), r.is_null() ? text(sp) : r));
  r = residual_of(so, M2{inv.delta, zero, zero, -inv.delta});
  rep.add(make_check("sl2rep.sosp.f_fstar", Json::object(), r.is_null(), r.is_null() ? text(so) : r));
  QPoly d1 = det(sp), d2 = det(so), target = -(inv.delta * inv.delta);
  rep.add(make_check("sl2rep.sosp.determinants", Json::object(), d1 == d2 && d1 == target,
                     {{"det_fstar_f", d1.to_string()}, {"det_f_fstar", d2.to_string()}}));
  QPoly rel = inv.delta * inv.delta - (inv.e * inv.e - Rational(4) * inv.q * inv.Q);
  rep.add(make_check("sl2rep.sosp.delta_squared", Json::object(), rel.is_zero(),
                     rel.is_zero() ? Json(nullptr) : Json(rel.to_string())));
  return rep;
}

}  // namespace symsing::sl2rep
