#include "symsing/hilbert/hilbert.hpp"

#include <map>
#include <stdexcept>

#include "symsing/core/groebner.hpp"
#include "symsing/core/matrix.hpp"
#include "symsing/dihedral/dihedral.hpp"

namespace symsing::hilbert {

namespace {

// Exponent tuples (i_q, i_Q, i_e, k_0..k_d) of weighted degree n.
void enumerate(int d, int n, std::vector<int>& cur, std::size_t pos, std::vector<std::vector<int>>& out) {
  const std::size_t nvars = static_cast<std::size_t>(d) + 4;
  if (pos == nvars) {
    if (n == 0) out.push_back(cur);
    return;
  }
  const int w = pos < 3 ? 2 : d - 2;
  for (int k = 0; k * w <= n; ++k) {
    cur[pos] = k;
    enumerate(d, n - k * w, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

std::vector<std::vector<int>> monomials(int d, int n) {
  std::vector<std::vector<int>> out;
  if (n < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(d) + 4, 0);
  enumerate(d, n, cur, 0, out);
  return out;
}

class PowerCache {
 public:
  explicit PowerCache(const QPoly& base) : pows_{QPoly(base.ring(), Rational(1)), base} {}
  const QPoly& operator()(int k) {
    while (static_cast<int>(pows_.size()) <= k) pows_.push_back(pows_.back() * pows_[1]);
    return pows_[k];
  }

 private:
  std::vector<QPoly> pows_;
};

}  // namespace

std::size_t monomial_count(int d, int n) { return monomials(d, n).size(); }

std::size_t graded_dimension(int d, int n, const GradedDimOptions& options) {
  if (d < 3) throw std::invalid_argument("graded_dimension: d must be at least 3");
  if (n < 0) return 0;
  const auto monos = monomials(d, n);
  if (monos.empty()) return 0;
  const auto inv = dihedral::invariants(d);
  PowerCache pq(inv.q), pQ(inv.Q), pe(inv.e), pdelta(inv.delta);
  std::vector<PowerCache> pbeta;
  for (int j = 0; j <= d; ++j) pbeta.emplace_back(inv.beta[j]);

  // torus weight: q -2, Q +2, e 0, b_j 2j - d
  std::map<long, std::vector<const std::vector<int>*>> blocks;
  for (const auto& m : monos) {
    long w = -2L * m[0] + 2L * m[1];
    for (int j = 0; j <= d; ++j) w += long(m[3 + j]) * (2 * j - d);
    blocks[options.split_by_torus ? w : 0].push_back(&m);
  }

  std::size_t total = 0;
  for (const auto& [weight, cols] : blocks) {
    auto bdeg = [d](const std::vector<int>& m) {
      int s = 0;
      for (int j = 0; j <= d; ++j) s += m[3 + j];
      return s;
    };
    int M = 0;
    for (const auto* m : cols) M = std::max(M, bdeg(*m));
    M += options.extra_clearing;
    std::vector<QPoly> images;
    std::map<Exponents, std::size_t> row_of;
    for (const auto* mp : cols) {
      const auto& m = *mp;
      QPoly p = pq(m[0]) * pQ(m[1]) * pe(m[2]) * pdelta(M - bdeg(m));
      for (int j = 0; j <= d; ++j)
        if (m[3 + j]) p = p * pbeta[j](m[3 + j]);
      for (const auto& [e, c] : p.terms()) row_of.emplace(e, 0);
      images.push_back(std::move(p));
    }
    std::size_t r = 0;
    for (auto& [e, idx] : row_of) idx = r++;
    ZMatrix A(row_of.size(), images.size());
    for (std::size_t j = 0; j < images.size(); ++j)
      for (const auto& [e, c] : images[j].terms()) A(row_of[e], j) = c.get_num();  // integer coefficients
    total += exact_rank(A);
  }
  return total;
}

std::vector<Integer> hilbert_numerator(int d) {
  std::vector<Integer> num(static_cast<std::size_t>(2 * d - 3), 0);
  for (int k = 0; k <= 2 * d - 4; k += 2) num[k] += 1;
  num[d - 2] += d - 1;
  return num;
}

std::vector<Integer> hilbert_denominator(int d) {
  auto mul = [](const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  std::vector<Integer> one_minus_t2{1, 0, -1};
  std::vector<Integer> one_minus_tk(static_cast<std::size_t>(d - 1), 0);
  one_minus_tk[0] = 1;
  one_minus_tk[d - 2] = -1;
  return mul(mul(one_minus_t2, one_minus_t2), mul(one_minus_tk, one_minus_tk));
}

std::vector<Integer> series_quotient(const std::vector<Integer>& numerator, const std::vector<Integer>& denominator,
                                     int N) {
  if (denominator.empty() || denominator[0] != 1) throw std::invalid_argument("series_quotient: denominator(0) must be 1");
  std::vector<Integer> s(static_cast<std::size_t>(N) + 1, 0);
  for (int n = 0; n <= N; ++n) {
    Integer acc = n < static_cast<int>(numerator.size()) ? numerator[n] : Integer(0);
    for (int k = 1; k <= n && k < static_cast<int>(denominator.size()); ++k) acc -= denominator[k] * s[n - k];
    s[n] = acc;
  }
  return s;
}

std::vector<Integer> series_coefficients(int d, int N) {
  return series_quotient(hilbert_numerator(d), hilbert_denominator(d), N);
}

VerificationReport verify_hilbert_against(int d, const std::vector<Integer>& expected) {
  VerificationReport rep;
  const int N = static_cast<int>(expected.size()) - 1;
  Json table = Json::array();
  Json first_mismatch = nullptr;
  bool bound_ok = true;
  for (int n = 0; n <= N; ++n) {
    std::size_t dim = graded_dimension(d, n);
    std::size_t count = monomial_count(d, n);
    if (dim > count) bound_ok = false;
    table.push_back({{"n", n}, {"dimension", dim}, {"series", expected[n].get_str()}, {"monomials", count}});
    if (first_mismatch.is_null() && Integer(static_cast<unsigned long>(dim)) != expected[n])
      first_mismatch = {{"n", n}, {"dimension", dim}, {"series", expected[n].get_str()}};
  }
  Json witness = {{"table", table}};
  if (!first_mismatch.is_null()) witness["first_mismatch"] = first_mismatch;
  rep.add(make_check("hilbert.graded_dimensions", {{"d", d}, {"N", N}}, first_mismatch.is_null(), witness));
  rep.add(make_check("hilbert.monomial_bound", {{"d", d}, {"N", N}}, bound_ok, nullptr));
  return rep;
}

VerificationReport verify_hilbert(int d, int N) {
  if (N < 2 * d) throw std::invalid_argument("verify_hilbert: N must be at least 2d");
  const auto coeffs = series_coefficients(d, N);
  VerificationReport rep = verify_hilbert_against(d, coeffs);

  // numerator == denominator * series through t^N
  const auto num = hilbert_numerator(d), den = hilbert_denominator(d);
  Json bad = nullptr;
  for (int n = 0; n <= N && bad.is_null(); ++n) {
    Integer acc = 0;
    for (int k = 0; k <= n && k < static_cast<int>(den.size()); ++k) acc += den[k] * coeffs[n - k];
    Integer want = n < static_cast<int>(num.size()) ? num[n] : Integer(0);
    if (acc != want) bad = {{"n", n}, {"product", acc.get_str()}, {"numerator", want.get_str()}};
  }
  rep.add(make_check("hilbert.series_identity", {{"d", d}, {"N", N}}, bad.is_null(), bad));

  // the uniform clearing exponent does not matter
  const int probe = std::min(N, 2 * d - 2);
  std::size_t base = graded_dimension(d, probe), doubled = graded_dimension(d, probe, {true, 2}),
              unsplit = graded_dimension(d, probe, {false, 0});
  rep.add(make_check("hilbert.clearing_independence", {{"d", d}, {"n", probe}}, base == doubled && base == unsplit,
                     {{"dimension", base}, {"extra_clearing", doubled}, {"single_block", unsplit}}));
  return rep;
}

VerificationReport verify_fiber_algebra(int d) {
  if (d < 4) throw std::invalid_argument("verify_fiber_algebra: d must be at least 4");
  VerificationReport rep;
  std::vector<Variable> vars{{"E", 1}};
  for (int j = 1; j <= d - 1; ++j) vars.push_back({"b" + std::to_string(j), 1});
  const RingPtr R = PolyRing::make(vars);
  const QPoly E = QPoly::variable(R, "E");
  auto b = [&](int j) { return QPoly::variable(R, "b" + std::to_string(j)); };
  std::vector<QPoly> rel;
  for (int j = 1; j <= d - 1; ++j) rel.push_back(E * b(j));
  for (int j = 1; j <= d - 1; ++j)
    for (int k = j; k <= d - 1; ++k) rel.push_back(j + k == d ? b(j) * b(k) + E.pow(d - 2) : b(j) * b(k));
  try {
    auto dim = quotient_dimension(rel);
    bool ok = dim && *dim == static_cast<std::size_t>(2 * d - 2);
    rep.add(make_check("hilbert.fiber_quotient_dimension", {{"d", d}}, ok,
                       {{"dimension", dim ? Json(*dim) : Json("infinite")}, {"expected", 2 * d - 2}}));
  } catch (const BudgetExceeded& ex) {
    rep.add(skipped("hilbert.fiber_quotient_dimension", {{"d", d}}, ex.what()));
  }

  const std::size_t n = static_cast<std::size_t>(2 * d - 2);
  // E_{k,l}: 1 in row k, column l (1-based)
  auto unit = [n](std::size_t k, std::size_t l) {
    QMatrix m(n, n);
    m(k - 1, l - 1) = 1;
    return m;
  };
  QMatrix Ebar(n, n);
  for (std::size_t i = 1; i <= static_cast<std::size_t>(d - 2); ++i) Ebar = Ebar + unit(i + 1, i);
  std::vector<QMatrix> B(static_cast<std::size_t>(d));
  for (int j = 1; j <= d - 1; ++j)
    B[j] = unit(static_cast<std::size_t>(d - 1 + j), 1) - unit(static_cast<std::size_t>(d - 1), static_cast<std::size_t>(2 * d - j - 1));

  std::vector<QMatrix> Epow{QMatrix::identity(n)};
  for (int k = 1; k <= d - 1; ++k) Epow.push_back(Epow.back() * Ebar);
  const QMatrix zero(n, n);
  Json bad = nullptr;
  for (int j = 1; j <= d - 1 && bad.is_null(); ++j) {
    if (Ebar * B[j] != zero || B[j] * Ebar != zero) bad = {{"relation", "E*b" + std::to_string(j)}};
    for (int k = 1; k <= d - 1 && bad.is_null(); ++k) {
      QMatrix want = j + k == d ? Rational(-1) * Epow[d - 2] : zero;
      if (B[j] * B[k] != want)
        bad = {{"relation", "b" + std::to_string(j) + "*b" + std::to_string(k)},
               {"residual", (B[j] * B[k] - want).to_string()}};
    }
  }
  rep.add(make_check("hilbert.fiber_matrix_relations", {{"d", d}}, bad.is_null(), bad));
  rep.add(make_check("hilbert.fiber_E_nilpotent", {{"d", d}}, Epow[d - 1] == zero && Epow[d - 2] != zero,
                     {{"order", d - 1}}));

  QMatrix family(n, n * n);
  std::size_t row = 0;
  auto put = [&](const QMatrix& m) {
    for (std::size_t i = 0; i < n * n; ++i) family(row, i) = m(i / n, i % n);
    ++row;
  };
  for (int k = 0; k <= d - 2; ++k) put(Epow[k]);
  for (int j = 1; j <= d - 1; ++j) put(B[j]);
  std::size_t rank = exact_rank(family);
  rep.add(make_check("hilbert.fiber_matrix_independence", {{"d", d}}, rank == n, {{"rank", rank}, {"expected", n}}));
  return rep;
}

}  // namespace symsing::hilbert
