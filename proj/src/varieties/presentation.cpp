#include "symsing/varieties/presentation.hpp"

#include <stdexcept>

namespace symsing::varieties {

using dihedral::psi;

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Q: return "Q";
    case Kind::Z: return "Z";
    case Kind::Y: return "Y";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  if (s == "Q") return Kind::Q;
  if (s == "Z") return Kind::Z;
  if (s == "Y") return Kind::Y;
  throw std::invalid_argument("unknown presentation kind '" + s + "' (expected Q, Z or Y)");
}

std::string Relation::label() const {
  return type == "linear" ? "linear j=" + std::to_string(j)
                          : "quadratic j=" + std::to_string(j) + " k=" + std::to_string(k);
}

std::vector<QPoly> VarietyPresentation::polys() const {
  std::vector<QPoly> out;
  for (const auto& r : relations) out.push_back(r.poly());
  return out;
}

Json VarietyPresentation::to_json() const {
  Json vars = Json::array();
  for (const auto& v : ring->variables()) vars.push_back({{"name", v.name}, {"weight", v.weight}});
  Json rels = Json::array();
  for (const auto& r : relations) rels.push_back(r.poly().to_string());
  return {{"kind", kind}, {"d", d}, {"variables", vars}, {"relations", rels}};
}

namespace {

void require_d(int d) {
  if (d < 4) throw std::invalid_argument("presentation: d must be at least 4 (got " + std::to_string(d) + ")");
}

std::vector<Variable> indexed(const std::string& stem, int d, int weight) {
  std::vector<Variable> v;
  for (int i = 0; i <= d; ++i) v.push_back({stem + std::to_string(i), weight});
  return v;
}

QPoly var(const RingPtr& R, const std::string& name) { return QPoly::variable(R, name); }
QPoly var(const RingPtr& R, const std::string& stem, int i) { return QPoly::variable(R, stem + std::to_string(i)); }

// q^{d-k-1} Q^{j-1} Psi_{k-j}(q, Q, e), the common cofactor of every quadratic relation.
QPoly cofactor(const RingPtr& R, int d, int j, int k) {
  return var(R, "q").pow(d - k - 1) * var(R, "Q").pow(j - 1) * psi(k - j, R);
}

// Quadratic relations of Q/Z type; `factor` multiplies the cofactor.
VarietyPresentation invariant_type(const std::string& kind, int d, const RingPtr& R, const QPoly& factor) {
  VarietyPresentation p{kind, d, R, {}};
  const QPoly q = var(R, "q"), Q = var(R, "Q"), e = var(R, "e");
  for (int j = 1; j <= d - 1; ++j)
    p.relations.push_back({"linear", j, -1, e * var(R, "a", j), q * var(R, "a", j + 1) + Q * var(R, "a", j - 1)});
  for (int j = 1; j <= d - 1; ++j)
    for (int k = j; k <= d - 1; ++k)
      p.relations.push_back({"quadratic", j, k, var(R, "a", j - 1) * var(R, "a", k + 1) - var(R, "a", j) * var(R, "a", k),
                             factor * cofactor(R, d, j, k)});
  return p;
}

}  // namespace

RingPtr invariant_ring(int d, bool with_c) {
  std::vector<Variable> v{{"q", 2}, {"Q", 2}, {"e", 2}};
  if (with_c) v.push_back({"c", 4});
  auto a = indexed("a", d, d);
  v.insert(v.end(), a.begin(), a.end());
  return PolyRing::make(v);
}

RingPtr blowup_ring(int d) {
  std::vector<Variable> v{{"q", 2}, {"Q", 2}, {"e", 2}};
  auto b = indexed("b", d, d - 2);
  v.insert(v.end(), b.begin(), b.end());
  return PolyRing::make(v);
}

VarietyPresentation presentation_z_formal(int d) {
  require_d(d);
  const RingPtr R = invariant_ring(d, true);
  const QPoly e = var(R, "e");
  QPoly factor = e * e - Rational(4) * var(R, "q") * var(R, "Q") - var(R, "c");
  return invariant_type("Z", d, R, factor);
}

VarietyPresentation presentation(Kind kind, int d) {
  require_d(d);
  if (kind == Kind::Q) {
    const RingPtr R = invariant_ring(d);
    const QPoly e = var(R, "e");
    return invariant_type("Q", d, R, e * e - Rational(4) * var(R, "q") * var(R, "Q"));
  }
  if (kind == Kind::Z) {
    VarietyPresentation formal = presentation_z_formal(d);
    const RingPtr R = invariant_ring(d);
    std::map<std::string, QPoly> binding;
    for (const auto& v : R->variables()) binding.emplace(v.name, var(R, v.name));
    binding.emplace("c", QPoly(R, Rational(d * d)));
    VarietyPresentation p{"Z", d, R, {}};
    for (const auto& r : formal.relations)
      p.relations.push_back({r.type, r.j, r.k, substitute(r.lhs, binding, R), substitute(r.rhs, binding, R)});
    return p;
  }
  const RingPtr R = blowup_ring(d);
  VarietyPresentation p{"Y", d, R, {}};
  const QPoly q = var(R, "q"), Q = var(R, "Q"), e = var(R, "e");
  for (int j = 1; j <= d - 1; ++j)
    p.relations.push_back({"linear", j, -1, e * var(R, "b", j), q * var(R, "b", j + 1) + Q * var(R, "b", j - 1)});
  for (int j = 1; j <= d - 1; ++j)
    for (int k = j; k <= d - 1; ++k)
      p.relations.push_back({"quadratic", j, k, var(R, "b", j) * var(R, "b", k) - var(R, "b", j - 1) * var(R, "b", k + 1),
                             cofactor(R, d, j, k)});
  return p;
}

VerificationReport verify_presentation_structure(int d) {
  VerificationReport rep;
  const std::size_t expected = static_cast<std::size_t>((d - 1) + d * (d - 1) / 2);
  const auto Qp = presentation(Kind::Q, d), Zp = presentation(Kind::Z, d), Yp = presentation(Kind::Y, d);
  const auto Zf = presentation_z_formal(d);

  for (const auto* p : {&Qp, &Zp, &Yp}) {
    std::size_t lin = 0, quad = 0;
    for (const auto& r : p->relations) (r.type == "linear" ? lin : quad)++;
    rep.add(make_check("varieties.relation_count", {{"kind", p->kind}, {"d", d}},
                       p->relations.size() == expected && lin == static_cast<std::size_t>(d - 1),
                       {{"linear", lin}, {"quadratic", quad}, {"expected_total", expected}}));
  }

  for (const auto* p : {&Qp, &Yp, &Zf}) {
    Json bad = nullptr;
    for (const auto& r : p->relations)
      if (!r.poly().is_homogeneous()) {
        bad = {{"relation", r.label()}, {"poly", r.poly().to_string()}};
        break;
      }
    std::string kind = p == &Zf ? "Z(formal c)" : p->kind;
    rep.add(make_check("varieties.homogeneity", {{"kind", kind}, {"d", d}}, bad.is_null(), bad));
  }

  // Y quadratics are the Q quadratics with the two products swapped (a -> b renamed)
  {
    const RingPtr Y = Yp.ring;
    std::map<std::string, QPoly> rename{{"q", var(Y, "q")}, {"Q", var(Y, "Q")}, {"e", var(Y, "e")}};
    for (int i = 0; i <= d; ++i) rename.emplace("a" + std::to_string(i), var(Y, "b", i));
    Json bad = nullptr;
    for (std::size_t i = 0; i < Qp.relations.size(); ++i) {
      const auto& rq = Qp.relations[i];
      const auto& ry = Yp.relations[i];
      if (rq.type != "quadratic") continue;
      QPoly renamed = substitute(rq.lhs, rename, Y);
      if (renamed != -ry.lhs || renamed == ry.lhs) {
        bad = {{"relation", rq.label()}, {"Q_lhs", rq.lhs.to_string()}, {"Y_lhs", ry.lhs.to_string()}};
        break;
      }
    }
    rep.add(make_check("varieties.sign_discipline", {{"d", d}}, bad.is_null(), bad));
  }

  // c -> 0 recovers Q(d), c -> d^2 recovers Z(d), term for term
  for (int which = 0; which < 2; ++which) {
    const auto& target = which == 0 ? Qp : Zp;
    const RingPtr R = target.ring;
    std::map<std::string, QPoly> binding;
    for (const auto& v : R->variables()) binding.emplace(v.name, var(R, v.name));
    binding.emplace("c", QPoly(R, which == 0 ? Rational(0) : Rational(d * d)));
    Json bad = nullptr;
    for (std::size_t i = 0; i < Zf.relations.size(); ++i) {
      QPoly specialized = substitute(Zf.relations[i].poly(), binding, R);
      if (specialized != target.relations[i].poly()) {
        bad = {{"relation", Zf.relations[i].label()}, {"residual", (specialized - target.relations[i].poly()).to_string()}};
        break;
      }
    }
    rep.add(make_check(which == 0 ? "varieties.z_specializes_to_q" : "varieties.z_formal_instantiation", {{"d", d}},
                       bad.is_null(), bad));
  }
  return rep;
}

RingPtr ambient_ring(int d) {
  std::vector<Variable> v{{"q", 2}, {"Q", 2}, {"e", 2}, {"c", 4}, {"D", 4}, {"delta", 2}};
  for (auto& x : indexed("a", d, d)) v.push_back(x);
  for (auto& x : indexed("b", d, d - 2)) v.push_back(x);
  for (auto& x : indexed("beta", d, d)) v.push_back(x);
  return PolyRing::make(v);
}

Cleared clear_delta(const QPoly& p, int d, int exponent) {
  const RingPtr A = ambient_ring(d);
  QPoly src = change_ring(p, A);
  const std::size_t iD = A->index("D"), idelta = A->index("delta");
  const std::size_t b0 = A->index("b0"), beta0 = A->index("beta0");
  auto excess = [&](const Exponents& e) {
    long k = 0;
    for (int j = 0; j <= d; ++j) k += e[b0 + j];
    return k - 2L * e[iD];
  };
  long M = 0;
  for (const auto& [e, c] : src.terms()) M = std::max(M, excess(e));
  if (exponent >= 0) {
    if (exponent < M) throw std::invalid_argument("clear_delta: exponent too small");
    M = exponent;
  }
  QPoly out(A);
  for (const auto& [e, c] : src.terms()) {
    Exponents f = e;
    f[idelta] = static_cast<std::uint16_t>(f[idelta] + M - excess(e));
    f[iD] = 0;
    for (int j = 0; j <= d; ++j) {
      f[beta0 + j] = static_cast<std::uint16_t>(f[beta0 + j] + f[b0 + j]);
      f[b0 + j] = 0;
    }
    out.add_term(f, c);
  }
  return {out, static_cast<int>(M)};
}

QPoly to_coordinates(const QPoly& p, const dihedral::InvariantBundle& bundle) {
  const int d = bundle.d;
  const RingPtr& R = dihedral::coordinate_ring();
  std::map<std::string, QPoly> binding{{"q", bundle.q}, {"Q", bundle.Q}, {"e", bundle.e}, {"delta", bundle.delta}};
  for (int i = 0; i <= d; ++i) {
    binding.emplace("a" + std::to_string(i), bundle.a[i]);
    binding.emplace("beta" + std::to_string(i), bundle.beta[i]);
  }
  return substitute(change_ring(p, ambient_ring(d)), binding, R);
}

QPoly cleared_coordinates(const QPoly& p, const dihedral::InvariantBundle& bundle, int* exponent) {
  Cleared c = clear_delta(p, bundle.d);
  if (exponent) *exponent = c.exponent;
  return to_coordinates(c.poly, bundle);
}

}  // namespace symsing::varieties
