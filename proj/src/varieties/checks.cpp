#include "symsing/varieties/checks.hpp"

#include <stdexcept>

#include "symsing/core/series.hpp"

namespace symsing::varieties {

using dihedral::InvariantBundle;
using dihedral::psi;

namespace {

QPoly var(const RingPtr& R, const std::string& name) { return QPoly::variable(R, name); }
QPoly var(const RingPtr& R, const std::string& stem, int i) { return QPoly::variable(R, stem + std::to_string(i)); }

struct Identity {
  std::string id;
  QPoly lhs, rhs;
  QPoly poly() const { return lhs - rhs; }
};

// Runs a family of identities through delta clearing and the invariant substitution; one check
// for the whole family, carrying the first failure.
Check identity_family(const std::string& check_id, Json params, const std::vector<Identity>& family,
                      const InvariantBundle& bundle) {
  int max_exponent = 0;
  std::size_t failures = 0;
  Json first = nullptr;
  for (const auto& ident : family) {
    int exponent = 0;
    QPoly residual = cleared_coordinates(ident.poly(), bundle, &exponent);
    max_exponent = std::max(max_exponent, exponent);
    if (!residual.is_zero()) {
      if (first.is_null())
        first = {{"identity", ident.id}, {"clearing_exponent", exponent}, {"residual", residual.to_string()}};
      ++failures;
    }
  }
  if (failures) {
    first["failing"] = failures;
    return make_check(check_id, std::move(params), false, first);
  }
  return make_check(check_id, std::move(params), true,
                    {{"identities", family.size()}, {"max_clearing_exponent", max_exponent}});
}

std::map<std::string, QPoly> identity_binding(const RingPtr& src, const RingPtr& target) {
  std::map<std::string, QPoly> b;
  for (const auto& v : src->variables())
    if (target->find(v.name)) b.emplace(v.name, var(target, v.name));
  return b;
}

}  // namespace

VerificationReport verify_presentation_on_invariants(Kind kind, int d) {
  return verify_presentation_on_invariants(presentation(kind, d));
}

VerificationReport verify_presentation_on_invariants(const VarietyPresentation& p) {
  VerificationReport rep;
  const InvariantBundle bundle = dihedral::invariants(p.d);
  std::vector<Identity> family;
  for (const auto& r : p.relations) family.push_back({r.label(), r.lhs, r.rhs});
  rep.add(identity_family("varieties.presentation_on_invariants", {{"kind", p.kind}, {"d", p.d}}, family, bundle));
  return rep;
}

VerificationReport verify_blowup_relations(int d) {
  const RingPtr A = ambient_ring(d);
  const QPoly q = var(A, "q"), Q = var(A, "Q"), e = var(A, "e"), D = var(A, "D");
  auto a = [&](int i) { return var(A, "a", i); };
  auto b = [&](int i) { return var(A, "b", i); };
  std::vector<Identity> lower, upper, dlines;
  for (int j = 0; j <= d - 1; ++j)
    lower.push_back({"a" + std::to_string(j) + " = e b_j - 2q b_{j+1}", a(j), e * b(j) - Rational(2) * q * b(j + 1)});
  for (int j = 1; j <= d; ++j)
    upper.push_back({"a" + std::to_string(j) + " = 2Q b_{j-1} - e b_j", a(j), Rational(2) * Q * b(j - 1) - e * b(j)});
  dlines.push_back({"D b0 = e a0 - 2q a1", D * b(0), e * a(0) - Rational(2) * q * a(1)});
  for (int j = 1; j <= d - 1; ++j)
    dlines.push_back({"D b" + std::to_string(j) + " = Q a_{j-1} - q a_{j+1}", D * b(j), Q * a(j - 1) - q * a(j + 1)});
  dlines.push_back({"D b" + std::to_string(d) + " = 2Q a_{d-1} - e a_d", D * b(d),
                    Rational(2) * Q * a(d - 1) - e * a(d)});
  const InvariantBundle bundle = dihedral::invariants(d);
  VerificationReport rep;
  rep.add(identity_family("varieties.blowup.a_from_b", {{"d", d}, {"form", "e b_j - 2q b_{j+1}"}}, lower, bundle));
  rep.add(identity_family("varieties.blowup.a_from_b", {{"d", d}, {"form", "2Q b_{j-1} - e b_j"}}, upper, bundle));
  rep.add(identity_family("varieties.blowup.D_times_b", {{"d", d}}, dlines, bundle));
  return rep;
}

VerificationReport verify_chart_Y0(int d) {
  if (d < 4) throw std::invalid_argument("verify_chart_Y0: d must be at least 4");
  const RingPtr A = ambient_ring(d);
  const QPoly q = var(A, "q"), Q = var(A, "Q"), e = var(A, "e"), delta = var(A, "delta");
  auto a = [&](int i) { return var(A, "a", i); };
  auto beta = [&](int i) { return var(A, "beta", i); };

  std::vector<Identity> y0, yd;
  y0.push_back({"(i)", delta * a(0), e * beta(0) - Rational(2) * q * beta(1)});
  yd.push_back({"(i)", delta * a(d), Rational(2) * Q * beta(d - 1) - e * beta(d)});
  for (int j = 1; j <= d - 1; ++j) {
    y0.push_back({"(ii) j=" + std::to_string(j), a(j) * beta(0),
                  a(0) * beta(j) + Rational(2) * q.pow(d - j) * psi(j - 1, A) * delta});
    yd.push_back({"(ii) j=" + std::to_string(j), a(d - j) * beta(d),
                  a(d) * beta(d - j) - Rational(2) * Q.pow(d - j) * psi(j - 1, A) * delta});
  }
  y0.push_back({"(iii)", a(d) * beta(0), a(1) * beta(d - 1) + e * psi(d - 2, A) * delta});
  yd.push_back({"(iii)", a(0) * beta(d), a(d - 1) * beta(1) - e * psi(d - 2, A) * delta});

  const InvariantBundle bundle = dihedral::invariants(d);
  VerificationReport rep;
  rep.add(identity_family("varieties.chart_Y0", {{"d", d}}, y0, bundle));
  rep.add(identity_family("varieties.chart_Yd", {{"d", d}}, yd, bundle));

  // the involution on generators
  std::map<std::string, QPoly> sigma = identity_binding(A, A);
  sigma["q"] = Q;
  sigma["Q"] = q;
  sigma["delta"] = -delta;
  for (int j = 0; j <= d; ++j) {
    sigma["a" + std::to_string(j)] = a(d - j);
    sigma["beta" + std::to_string(j)] = beta(d - j);
  }
  Json bad = nullptr;
  for (std::size_t i = 0; i < y0.size() && bad.is_null(); ++i) {
    QPoly image = substitute(y0[i].poly(), sigma, A);
    QPoly target = yd[i].poly();
    if (image != target && image != -target)
      bad = {{"identity", y0[i].id}, {"image", image.to_string()}, {"expected", target.to_string()}};
  }
  rep.add(make_check("varieties.chart_Yd.mirror_of_Y0", {{"d", d}}, bad.is_null(), bad));

  // sigma matches the coordinate swap x <-> Y, y <-> X
  const RingPtr& C = dihedral::coordinate_ring();
  std::map<std::string, QPoly> swap{{"x", var(C, "Y")}, {"Y", var(C, "x")}, {"y", var(C, "X")}, {"X", var(C, "y")}};
  std::vector<std::string> gens{"q", "Q", "e", "delta"};
  for (int j = 0; j <= d; ++j) {
    gens.push_back("a" + std::to_string(j));
    gens.push_back("beta" + std::to_string(j));
  }
  bad = nullptr;
  for (const auto& g : gens) {
    QPoly lhs = to_coordinates(sigma[g], bundle);
    QPoly rhs = substitute(to_coordinates(var(A, g), bundle), swap, C);
    if (lhs != rhs) {
      bad = {{"generator", g}, {"residual", (lhs - rhs).to_string()}};
      break;
    }
  }
  rep.add(make_check("varieties.chart_Yd.involution_is_coordinate_swap", {{"d", d}}, bad.is_null(), bad));
  return rep;
}

RingPtr chart_ring() {
  static const RingPtr ring = PolyRing::make({{"q", 1}, {"Q", 1}, {"a", 1}, {"Bm", 1}, {"B", 1}, {"Bp", 1}});
  return ring;
}

std::vector<QPoly> chart_relations(int d, int r) {
  if (r < 1 || r > d - 1) throw std::invalid_argument("chart_relations: r must lie in [1, d-1]");
  const RingPtr& R = chart_ring();
  const QPoly q = var(R, "q"), Q = var(R, "Q"), a = var(R, "a"), Bm = var(R, "Bm"), B = var(R, "B"), Bp = var(R, "Bp");
  return {q * Bp - Q * Bm + a * B,
          Bm * Bp + q.pow(d - r - 1) * Q.pow(r - 1) * B * B - QPoly(R, Rational(1))};
}

std::vector<QPoly> jacobian_minors(const std::vector<QPoly>& f) {
  const std::size_t n = f.front().ring()->size();
  std::vector<std::vector<QPoly>> J(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t v = 0; v < n; ++v) J[i].push_back(f[i].derivative(v));
  std::vector<QPoly> minors;
  for (std::size_t r1 = 0; r1 < f.size(); ++r1)
    for (std::size_t r2 = r1 + 1; r2 < f.size(); ++r2)
      for (std::size_t c1 = 0; c1 < n; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < n; ++c2) {
          QPoly m = J[r1][c1] * J[r2][c2] - J[r1][c2] * J[r2][c1];
          if (!m.is_zero()) minors.push_back(m);
        }
  return minors;
}

VerificationReport verify_chart_Yr_smooth(int d, int r, bool with_minors, const Budget& budget) {
  VerificationReport rep;
  const auto rel = chart_relations(d, r);
  Json params = {{"d", d}, {"r", r}, {"with_minors", with_minors}};
  std::vector<QPoly> gens = rel;
  if (with_minors) {
    auto minors = jacobian_minors(rel);
    gens.insert(gens.end(), minors.begin(), minors.end());
  }
  try {
    auto basis = groebner_basis(gens, MonomialOrder::degrevlex(), budget);
    bool unit = is_unit_ideal(basis);
    Json w = {{"generators", gens.size()}, {"basis_size", basis.size()}, {"field", "Q"}};
    if (!unit && !basis.empty()) w["first_basis_element"] = basis.front().to_string();
    rep.add(make_check("varieties.chart_Yr_smooth", params, unit, w));
  } catch (const BudgetExceeded& ex) {
    rep.add(skipped("varieties.chart_Yr_smooth", params, ex.what()));
  }
  if (with_minors) {
    // the chart itself is nonempty: the two relations alone do not generate (1)
    try {
      auto basis = groebner_basis(rel, MonomialOrder::degrevlex(), budget);
      rep.add(make_check("varieties.chart_Yr_nonempty", {{"d", d}, {"r", r}}, !is_unit_ideal(basis),
                         {{"basis_size", basis.size()}}));
    } catch (const BudgetExceeded& ex) {
      rep.add(skipped("varieties.chart_Yr_nonempty", {{"d", d}, {"r", r}}, ex.what()));
    }
  }
  return rep;
}

VerificationReport verify_completion_substitution(int d, int N, std::optional<long> constant) {
  if (N < 4) throw std::invalid_argument("verify_completion_substitution: N must be at least 4");
  const long c = constant.value_or(static_cast<long>(d) * d);
  const VarietyPresentation Y = presentation(Kind::Y, d), Z = presentation(Kind::Z, d);
  const RingPtr R = Z.ring;
  // the completion is in q, Q, e; a_j are carried along polynomially
  std::vector<int> weights(R->size(), 0);
  weights[R->index("q")] = weights[R->index("Q")] = weights[R->index("e")] = 1;
  const QPoly q = var(R, "q"), Q = var(R, "Q"), e = var(R, "e");
  const QPoly f = QPoly(R, Rational(c)) + Rational(4) * q * Q - e * e;
  Json params = {{"d", d}, {"N", N}, {"constant", c}};

  VerificationReport rep;
  const TruncatedSeries S = series_inv_sqrt(f, N, weights);
  const std::vector<TruncatedSeries> Spow{S.pow(0), S, S * S};
  TruncatedSeries defining = Spow[2].times(f) - Spow[0];
  rep.add(make_check("varieties.completion.inv_sqrt", params, defining.is_zero(),
                     defining.is_zero() ? Json(nullptr) : Json(defining.poly().to_string())));

  std::map<std::string, QPoly> rename = identity_binding(Y.ring, R);
  for (int j = 0; j <= d; ++j) rename.emplace("b" + std::to_string(j), var(R, "a", j));
  const std::size_t b0 = Y.ring->index("b0");

  auto image = [&](const QPoly& p) {
    TruncatedSeries out(QPoly(R), N, weights);
    for (const auto& [ex, coeff] : p.terms()) {
      unsigned k = 0;
      for (int j = 0; j <= d; ++j) k += ex[b0 + j];
      QPoly mono = substitute(QPoly::monomial(Y.ring, ex, coeff), rename, R);
      out = out + Spow.at(k).times(mono);
    }
    return out;
  };

  std::size_t failures[2] = {0, 0};
  Json first[2] = {nullptr, nullptr};
  for (std::size_t i = 0; i < Y.relations.size(); ++i) {
    const auto& ry = Y.relations[i];
    const auto& rz = Z.relations[i];
    const bool lin = ry.type == "linear";
    TruncatedSeries residual = lin ? image(ry.poly()) - S.times(rz.poly()) : image(ry.poly()) + Spow[2].times(rz.poly());
    if (!residual.is_zero()) {
      int slot = lin ? 0 : 1;
      if (first[slot].is_null()) first[slot] = {{"relation", ry.label()}, {"remainder", residual.poly().to_string()}};
      ++failures[slot];
    }
  }
  for (int slot = 0; slot < 2; ++slot) {
    Json p = params;
    p["relations"] = slot == 0 ? "linear" : "quadratic";
    Json w = first[slot];
    if (!w.is_null()) w["failing"] = failures[slot];
    rep.add(make_check("varieties.completion.substitution", p, failures[slot] == 0, w));
  }
  return rep;
}

namespace {

// Specializes q = Q = 0, e = 1, reads off the linear consequences x_j = 0, and reduces the
// quadratic relations modulo them.
Check orbit_check(const VarietyPresentation& p, const std::string& stem, const QPoly& expected) {
  const int d = p.d;
  const RingPtr R = p.ring;
  std::map<std::string, QPoly> point = identity_binding(R, R);
  point["q"] = QPoly(R);
  point["Q"] = QPoly(R);
  point["e"] = QPoly(R, Rational(1));
  std::vector<QPoly> linear, remaining;
  for (const auto& r : p.relations) {
    QPoly s = substitute(r.poly(), point, R);
    (r.type == "linear" ? linear : remaining).push_back(s);
  }
  bool linear_ok = linear.size() == static_cast<std::size_t>(d - 1);
  for (int j = 1; linear_ok && j <= d - 1; ++j) linear_ok = linear[j - 1] == var(R, stem, j);
  std::map<std::string, QPoly> kill = identity_binding(R, R);
  for (int j = 1; j <= d - 1; ++j) kill[stem + std::to_string(j)] = QPoly(R);
  std::vector<std::string> survivors;
  bool quad_ok = true;
  for (const auto& s : remaining) {
    QPoly red = substitute(s, kill, R);
    if (red.is_zero()) continue;
    survivors.push_back(red.to_string());
    if (red != expected) quad_ok = false;
  }
  quad_ok = quad_ok && survivors.size() == 1;
  Json lin_text = Json::array();
  for (const auto& l : linear) lin_text.push_back(l.to_string());
  return make_check("varieties.orbit_representative", {{"kind", p.kind}, {"d", d}}, linear_ok && quad_ok,
                    {{"linear_consequences", lin_text},
                     {"remaining_relations", survivors},
                     {"expected", expected.to_string() + " = 0"}});
}

}  // namespace

VerificationReport verify_orbit_representatives(int d) {
  VerificationReport rep;
  const auto Qp = presentation(Kind::Q, d);
  const auto Yp = presentation(Kind::Y, d);
  const QPoly one_Q(Qp.ring, Rational(1)), one_Y(Yp.ring, Rational(1));
  // a_0 a_d = 1 and b_0 b_d = -1
  rep.add(orbit_check(Qp, "a", var(Qp.ring, "a", 0) * var(Qp.ring, "a", d) - one_Q));
  rep.add(orbit_check(Yp, "b", -(var(Yp.ring, "b", 0) * var(Yp.ring, "b", d)) - one_Y));
  return rep;
}

SingularLocusIdeals singular_locus_ideals(int d) {
  if (d % 2) throw std::invalid_argument("singular_locus_ideals: d must be even");
  const int m = d / 2;
  const RingPtr A = ambient_ring(d);
  const QPoly q = var(A, "q"), Q = var(A, "Q"), e = var(A, "e"), D = var(A, "D");
  SingularLocusIdeals s;
  s.d = d;
  for (int i = 0; i <= d; ++i) {
    QPoly shift = i % 2 == 0 ? Rational(2) * q.pow(m - i / 2) * Q.pow(i / 2) : q.pow(m - i / 2 - 1) * Q.pow(i / 2) * e;
    s.a_plus.push_back(var(A, "a", i) + shift);
    s.a_minus.push_back(var(A, "a", i) - shift);
  }
  s.J1.push_back(D);
  s.J2.push_back(D);
  s.J1.insert(s.J1.end(), s.a_minus.begin(), s.a_minus.end());
  s.J2.insert(s.J2.end(), s.a_plus.begin(), s.a_plus.end());
  return s;
}

VerificationReport verify_singular_locus(int d) {
  if (d % 2 || d < 4) throw std::invalid_argument("verify_singular_locus: d must be even and at least 4");
  const int m = d / 2;
  const auto s = singular_locus_ideals(d);
  const RingPtr A = ambient_ring(d);
  const InvariantBundle bundle = dihedral::invariants(d);
  const RingPtr& C = dihedral::coordinate_ring();
  const QPoly x = var(C, "x"), y = var(C, "y"), X = var(C, "X"), Y = var(C, "Y");
  auto L = [&](int j, int sign) {
    QPoly first = x.pow(m - j) * Y.pow(j), second = y.pow(m - j) * X.pow(j);
    return sign > 0 ? first + second : first - second;
  };
  auto beta = [&](int i) { return var(A, "beta", i); };
  auto coords = [&](const QPoly& p) { return to_coordinates(p, bundle); };

  VerificationReport rep;
  auto family = [&](const std::string& id, const std::vector<std::pair<std::string, QPoly>>& residuals) {
    Json bad = nullptr;
    for (const auto& [label, r] : residuals)
      if (!r.is_zero()) {
        bad = {{"identity", label}, {"residual", r.to_string()}};
        break;
      }
    rep.add(make_check(id, {{"d", d}}, bad.is_null(),
                       bad.is_null() ? Json({{"identities", residuals.size()}}) : bad));
  };

  std::vector<std::pair<std::string, QPoly>> fact_even, fact_odd, sq_even, sq_odd, products;
  for (int j = 0; j <= m; ++j)
    for (int sign : {1, -1}) {
      const auto& ai = sign > 0 ? s.a_plus : s.a_minus;
      std::string tag = sign > 0 ? "+" : "-";
      fact_even.emplace_back("a_" + std::to_string(2 * j) + tag, coords(ai[2 * j]) - L(j, sign) * L(j, sign));
      if (j < m)
        fact_odd.emplace_back("a_" + std::to_string(2 * j + 1) + tag, coords(ai[2 * j + 1]) - L(j, sign) * L(j + 1, sign));
    }
  for (int j = 0; j <= m; ++j)
    sq_even.emplace_back("beta_" + std::to_string(2 * j) + "^2",
                         coords(beta(2 * j) * beta(2 * j) - s.a_minus[2 * j] * s.a_plus[2 * j]));
  for (int j = 0; j < m; ++j) {
    QPoly rhs = Rational(1, 4) * (s.a_plus[2 * j] * s.a_minus[2 * j + 2] +
                                  Rational(2) * s.a_plus[2 * j + 1] * s.a_minus[2 * j + 1] +
                                  s.a_minus[2 * j] * s.a_plus[2 * j + 2]);
    sq_odd.emplace_back("beta_" + std::to_string(2 * j + 1) + "^2", coords(beta(2 * j + 1) * beta(2 * j + 1) - rhs));
  }
  for (int j = 0; j <= d - 1; ++j) {
    QPoly rhs = Rational(1, 2) * (s.a_plus[j] * s.a_minus[j + 1] + s.a_minus[j] * s.a_plus[j + 1]);
    products.emplace_back("beta_" + std::to_string(j) + "*beta_" + std::to_string(j + 1),
                          coords(beta(j) * beta(j + 1) - rhs));
  }
  family("varieties.singular_locus.even_factorization", fact_even);
  family("varieties.singular_locus.odd_factorization", fact_odd);
  family("varieties.singular_locus.even_beta_squares", sq_even);
  family("varieties.singular_locus.odd_beta_squares", sq_odd);
  family("varieties.singular_locus.adjacent_beta_products", products);

  // every generator of J_1 and J_2 is W_d-invariant; D is evaluated as delta^2
  const auto group = dihedral::build_group(d);
  Json bad = nullptr;
  std::size_t checked = 0;
  for (int which = 0; which < 2 && bad.is_null(); ++which) {
    const auto& J = which == 0 ? s.J1 : s.J2;
    for (std::size_t g = 0; g < J.size() && bad.is_null(); ++g) {
      QPoly f = cleared_coordinates(J[g], bundle);
      CPoly lifted = lift<Cyclo>(f);
      for (const auto& w : group) {
        CPoly r = dihedral::act(w, lifted) - lifted;
        if (!r.is_zero()) {
          bad = {{"ideal", which == 0 ? "J1" : "J2"}, {"generator", J[g].to_string()}, {"element", w.label},
                 {"residual", r.to_string()}};
          break;
        }
      }
      ++checked;
    }
  }
  rep.add(make_check("varieties.singular_locus.generators_invariant", {{"d", d}}, bad.is_null(),
                     bad.is_null() ? Json({{"generators", checked}, {"group_order", group.size()}}) : bad));
  return rep;
}

VerificationReport verify_phi_immersion(int d) {
  const VarietyPresentation Y = presentation(Kind::Y, d);
  const RingPtr S = PolyRing::make({{"u", 1}, {"v", 1}, {"w", 1}});
  const QPoly u = var(S, "u"), v = var(S, "v"), w = var(S, "w");
  std::map<std::string, QPoly> phi{{"q", QPoly(S, Rational(1))}, {"Q", -w}, {"e", QPoly(S)}};
  for (int j = 0; j <= d; ++j) phi.emplace("b" + std::to_string(j), (j % 2 ? u : v) * w.pow(j / 2));
  // u^2 -> v^2 w + 1
  const QPoly u2 = v * v * w + QPoly(S, Rational(1));
  const std::size_t iu = 0;
  auto reduce = [&](const QPoly& p) {
    QPoly out(S);
    for (const auto& [ex, c] : p.terms()) {
      Exponents f = ex;
      unsigned pairs = f[iu] / 2;
      f[iu] = static_cast<std::uint16_t>(f[iu] % 2);
      out += QPoly::monomial(S, f, c) * u2.pow(pairs);
    }
    return out;
  };
  std::size_t failures = 0;
  Json first = nullptr;
  for (const auto& r : Y.relations) {
    QPoly red = reduce(substitute(r.poly(), phi, S));
    if (!red.is_zero()) {
      if (first.is_null()) first = {{"relation", r.label()}, {"residual", red.to_string()}};
      ++failures;
    }
  }
  if (!first.is_null()) first["failing"] = failures;
  VerificationReport rep;
  rep.add(make_check("varieties.phi_immersion", {{"d", d}}, failures == 0,
                     failures == 0 ? Json({{"relations", Y.relations.size()}, {"modulus", "u^2 - v^2*w - 1"}}) : first));
  return rep;
}

VerificationReport verify_fiber_identity(int d) {
  const VarietyPresentation Y = presentation(Kind::Y, d);
  const RingPtr F = PolyRing::make({{"xi", 1}, {"b0", 1}, {"b" + std::to_string(d), 1}});
  const QPoly xi = var(F, "xi"), b0 = var(F, "b0"), bd = var(F, "b", d);
  std::map<std::string, QPoly> point{{"q", QPoly(F)}, {"Q", QPoly(F)}, {"e", xi}, {"b0", b0}};
  point.emplace("b" + std::to_string(d), bd);
  for (int j = 1; j <= d - 1; ++j) point.emplace("b" + std::to_string(j), QPoly(F));
  std::vector<std::pair<std::string, QPoly>> survivors;
  for (const auto& r : Y.relations) {
    QPoly s = substitute(r.poly(), point, F);
    if (!s.is_zero()) survivors.emplace_back(r.label(), s);
  }
  // b_1 b_{d-1} - b_0 b_d = xi^{d-2} with b_1 = b_{d-1} = 0
  const QPoly expected = -(b0 * bd) - xi.pow(d - 2);
  const std::string expected_label = "quadratic j=1 k=" + std::to_string(d - 1);
  bool ok = survivors.size() == 1 && survivors[0].first == expected_label && survivors[0].second == expected;
  Json surv = Json::array();
  for (const auto& [label, p] : survivors) surv.push_back({{"relation", label}, {"specialized", p.to_string()}});
  VerificationReport rep;
  rep.add(make_check("varieties.fiber_identity", {{"d", d}}, ok,
                     {{"surviving_relations", surv},
                      {"constraint", "b0*b" + std::to_string(d) + " = -xi^" + std::to_string(d - 2)}}));
  return rep;
}

}  // namespace symsing::varieties
