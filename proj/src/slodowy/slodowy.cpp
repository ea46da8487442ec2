#include "symsing/slodowy/slodowy.hpp"

#include <algorithm>
#include <stdexcept>

namespace symsing::slodowy {

namespace {

std::vector<int> check_parts(int d) {
  if (d < 4) throw std::invalid_argument("slodowy: d must be at least 4");
  return {d - 2, 2};
}

std::vector<int> transpose_partition(std::vector<int> parts) {
  std::sort(parts.rbegin(), parts.rend());
  std::vector<int> t;
  for (int k = 1; k <= (parts.empty() ? 0 : parts.front()); ++k) {
    int c = 0;
    for (int p : parts)
      if (p >= k) ++c;
    t.push_back(c);
  }
  return t;
}

Rational evaluate(const QPoly& p, const std::vector<Rational>& z) {
  Rational s(0);
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= z[i];
    s += t;
  }
  return s;
}

QMatrix power(const QMatrix& m, int k) {
  QMatrix r = QMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

SL2Triple build_triple(int d) {
  const auto parts = check_parts(d);
  const std::size_t n = static_cast<std::size_t>(d);
  SL2Triple t{QMatrix(n, n), QMatrix(n, n), QMatrix(n, n)};
  std::size_t offset = 0;
  for (int s : parts) {
    for (int i = 0; i < s; ++i) t.h(offset + i, offset + i) = s - 1 - 2 * i;
    for (int i = 0; i + 1 < s; ++i) {
      t.e(offset + i, offset + i + 1) = 1;
      t.f(offset + i + 1, offset + i) = (i + 1) * (s - 1 - i);
    }
    offset += static_cast<std::size_t>(s);
  }
  return t;
}

VerificationReport verify_triple(int d, const SL2Triple& t) {
  const auto parts = check_parts(d);
  VerificationReport rep;
  const Json params = {{"d", d}};
  Json bad = nullptr;
  QMatrix r1 = commutator(t.h, t.e) - Rational(2) * t.e;
  QMatrix r2 = commutator(t.h, t.f) + Rational(2) * t.f;
  QMatrix r3 = commutator(t.e, t.f) - t.h;
  if (!r1.is_zero()) bad = {{"relation", "[h,e] - 2e"}, {"residual", r1.to_string()}};
  else if (!r2.is_zero()) bad = {{"relation", "[h,f] + 2f"}, {"residual", r2.to_string()}};
  else if (!r3.is_zero()) bad = {{"relation", "[e,f] - h"}, {"residual", r3.to_string()}};
  rep.add(make_check("slodowy.triple_relations", params, bad.is_null(), bad));

  bool traceless = t.e.trace() == 0 && t.h.trace() == 0 && t.f.trace() == 0;
  rep.add(make_check("slodowy.triple_traceless", params, traceless, nullptr));

  // Jordan type of e from the ranks of its powers
  std::vector<std::size_t> ranks, want;
  for (int k = 1; k <= d; ++k) {
    ranks.push_back(exact_rank(power(t.e, k)));
    std::size_t w = 0;
    for (int p : parts) w += static_cast<std::size_t>(std::max(0, p - k));
    want.push_back(w);
  }
  rep.add(make_check("slodowy.triple_jordan_type", params, ranks == want,
                     {{"power_ranks", ranks}, {"expected", want}, {"partition", parts}}));
  return rep;
}

std::vector<QPoly> SlicePresentation::equations() const {
  return {char_coefficients.begin() + 1, char_coefficients.end()};
}

Json SlicePresentation::to_json() const {
  Json basis_json = Json::array();
  for (const auto& b : basis) basis_json.push_back(b.to_string());
  Json eqs = Json::array();
  const auto eq = equations();
  for (std::size_t k = 0; k < eq.size(); ++k) eqs.push_back({{"k", k + 2}, {"p", eq[k].to_string()}});
  return {{"d", d},
          {"e", triple.e.to_string()},
          {"h", triple.h.to_string()},
          {"f", triple.f.to_string()},
          {"slice_basis", basis_json},
          {"equations", eqs}};
}

SlicePresentation slice_equations(int d) {
  return slice_equations(build_triple(d));
}

SlicePresentation slice_equations(const SL2Triple& triple) {
  const std::size_t n = triple.e.rows();
  SlicePresentation s;
  s.d = static_cast<int>(n);
  s.triple = triple;

  // [f, X] = 0 and tr X = 0, X row-major
  QMatrix sys(n * n + 1, n * n);
  const QMatrix& f = triple.f;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        sys(a * n + b, k * n + b) += f(a, k);
        sys(a * n + b, a * n + k) -= f(k, b);
      }
  for (std::size_t i = 0; i < n; ++i) sys(n * n, i * n + i) = 1;
  for (const auto& v : nullspace(sys)) s.basis.emplace_back(n, n, v);

  std::vector<Variable> vars;
  for (std::size_t i = 1; i <= s.basis.size(); ++i) vars.push_back({"z" + std::to_string(i), 1});
  s.ring = PolyRing::make(vars);
  s.generic.assign(n * n, QPoly(s.ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QPoly entry(s.ring, triple.e(i, j));
      for (std::size_t k = 0; k < s.basis.size(); ++k)
        if (s.basis[k](i, j) != 0) entry += s.basis[k](i, j) * QPoly::variable(s.ring, k);
      s.generic[i * n + j] = std::move(entry);
    }

  // Faddeev-LeVerrier: N_1 = I; c_k = -tr(M N_k)/k; N_{k+1} = M N_k + c_k I
  auto mul = [&](const std::vector<QPoly>& a, const std::vector<QPoly>& b) {
    std::vector<QPoly> r(n * n, QPoly(s.ring));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const QPoly& x = a[i * n + k];
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!b[k * n + j].is_zero()) r[i * n + j] += x * b[k * n + j];
      }
    return r;
  };
  std::vector<QPoly> N(n * n, QPoly(s.ring));
  for (std::size_t i = 0; i < n; ++i) N[i * n + i] = QPoly(s.ring, Rational(1));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<QPoly> MN = mul(s.generic, N);
    QPoly tr(s.ring);
    for (std::size_t i = 0; i < n; ++i) tr += MN[i * n + i];
    QPoly c = Rational(-1, static_cast<long>(k)) * tr;
    s.char_coefficients.push_back(c);
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) MN[i * n + i] += c;
      N = std::move(MN);
    }
  }
  return s;
}

QMatrix slice_point(const SlicePresentation& slice, const std::vector<Rational>& z) {
  QMatrix m = slice.triple.e;
  for (std::size_t k = 0; k < slice.basis.size(); ++k)
    if (z[k] != 0) m = m + z[k] * slice.basis[k];
  return m;
}

std::size_t jacobian_rank(const SlicePresentation& slice, const std::vector<Rational>& z) {
  const auto eqs = slice.equations();
  QMatrix J(eqs.size(), slice.basis.size());
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (std::size_t c = 0; c < slice.basis.size(); ++c) J(r, c) = evaluate(eqs[r].derivative(c), z);
  return exact_rank(J);
}

bool is_regular_nilpotent(const QMatrix& m) {
  const std::size_t n = m.rows();
  QMatrix p = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * m;
    if (exact_rank(p) != n - k) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> find_regular_point(const SlicePresentation& slice, std::size_t max_candidates) {
  const std::size_t dim = slice.basis.size();
  const std::vector<int> values{1, -1, 2, -2};
  std::size_t tried = 0;
  std::vector<Rational> z(dim, Rational(0));
  auto attempt = [&]() {
    ++tried;
    return is_regular_nilpotent(slice_point(slice, z));
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (int a : values) {
      if (tried >= max_candidates) return std::nullopt;
      z[i] = a;
      if (attempt()) return z;
      z[i] = 0;
    }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (int a : values)
        for (int b : values) {
          if (tried >= max_candidates) return std::nullopt;
          z[i] = a, z[j] = b;
          if (attempt()) return z;
          z[i] = 0, z[j] = 0;
        }
  return std::nullopt;
}

VerificationReport verify_slice_geometry(int d, std::size_t max_candidates) {
  VerificationReport rep = verify_triple(d, build_triple(d));
  rep.add(verify_slice_geometry(slice_equations(d), max_candidates));
  return rep;
}

VerificationReport verify_slice_geometry(const SlicePresentation& slice, std::size_t max_candidates) {
  const int d = slice.d;
  const auto parts = check_parts(d);
  VerificationReport rep;
  const Json params = {{"d", d}};

  int expected_dim = -1;
  for (int c : transpose_partition(parts)) expected_dim += c * c;
  rep.add(make_check("slodowy.slice_dimension", params,
                     slice.basis.size() == static_cast<std::size_t>(expected_dim) && expected_dim == d + 3,
                     {{"dimension", slice.basis.size()}, {"expected", expected_dim}}));

  // basis really lies in ker(ad f) and is traceless
  bool in_kernel = true;
  for (const auto& b : slice.basis) in_kernel = in_kernel && commutator(slice.triple.f, b).is_zero() && b.trace() == 0;
  rep.add(make_check("slodowy.slice_basis", params, in_kernel, nullptr));

  const auto eqs = slice.equations();
  rep.add(make_check("slodowy.equation_count", params, eqs.size() == static_cast<std::size_t>(d - 1),
                     {{"count", eqs.size()}}));

  const std::size_t n = static_cast<std::size_t>(d);
  QPoly trace(slice.ring);
  for (std::size_t i = 0; i < n; ++i) trace += slice.generic[i * n + i];
  rep.add(make_check("slodowy.trace_zero", params, trace.is_zero() && slice.char_coefficients[0].is_zero(),
                     trace.is_zero() ? Json(nullptr) : Json(trace.to_string())));

  Json deg_bad = nullptr;
  Json terms = Json::array();
  for (std::size_t k = 0; k < eqs.size(); ++k) {
    long deg = eqs[k].max_degree();
    terms.push_back(eqs[k].num_terms());
    if (deg_bad.is_null() && (deg > static_cast<long>(k + 2) || eqs[k].constant_term() != 0))
      deg_bad = {{"k", k + 2}, {"degree", deg}, {"constant", to_string(eqs[k].constant_term())}};
  }
  rep.add(make_check("slodowy.equation_degrees", params, deg_bad.is_null(),
                     deg_bad.is_null() ? Json{{"terms", terms}} : deg_bad));

  const std::vector<Rational> origin(slice.basis.size(), Rational(0));
  std::size_t r0 = jacobian_rank(slice, origin);
  rep.add(make_check("slodowy.singular_at_e", params, r0 < static_cast<std::size_t>(d - 1),
                     {{"jacobian_rank", r0}, {"equations", d - 1}}));

  auto z = find_regular_point(slice, max_candidates);
  if (!z) {
    rep.add(skipped("slodowy.regular_point", params, "no regular nilpotent slice point among the searched candidates"));
    return rep;
  }
  Json point = Json::array();
  for (const auto& x : *z) point.push_back(to_string(x));
  bool on_variety = true;
  for (const auto& p : eqs) on_variety = on_variety && evaluate(p, *z) == 0;
  std::size_t r1 = jacobian_rank(slice, *z);
  rep.add(make_check("slodowy.regular_point", params, on_variety && r1 == static_cast<std::size_t>(d - 1),
                     {{"z", point},
                      {"equations_vanish", on_variety},
                      {"jacobian_rank", r1},
                      {"local_dimension", static_cast<long>(slice.basis.size()) - static_cast<long>(r1)}}));
  return rep;
}

}  // namespace symsing::slodowy
