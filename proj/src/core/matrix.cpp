#include "symsing/core/matrix.hpp"

#include <algorithm>

#include "symsing/kernels/modp.hpp"

namespace symsing {

std::size_t rank_bareiss(ZMatrix m) {
  const std::size_t R = m.rows(), C = m.cols();
  Integer prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && m(piv, col) == 0) ++piv;
    if (piv == R) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(rank, j));
    const Integer pv = m(rank, col);
    for (std::size_t i = rank + 1; i < R; ++i) {
      const Integer f = m(i, col);
      for (std::size_t j = col + 1; j < C; ++j) {
        Integer v = pv * m(i, j) - f * m(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, col) = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

Integer determinant(ZMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// With the mod-p pivots fixed, builds one kernel vector per non-pivot column from the pivot rows
// and checks each against every row of m.  Success proves rank(m) <= r; the nonzero pivot minor
// mod p already proves rank(m) >= r.
bool certify_upper_bound(const ZMatrix& m, const kernels::ModpElimination& e) {
  const std::size_t r = e.rank, C = m.cols();
  QMatrix s(r, C);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < C; ++j) s(k, j) = Rational(m(e.pivot_rows[k], j));
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t pc = e.pivot_cols[k];
    if (s(k, pc) == 0) {
      // the reduced pivot row had a nonzero entry mod p, so the pivot cannot vanish over Q
      // unless a swap is needed; look for a later row to exchange with
      std::size_t alt = k + 1;
      while (alt < r && s(alt, pc) == 0) ++alt;
      if (alt == r) return false;
      for (std::size_t j = 0; j < C; ++j) std::swap(s(k, j), s(alt, j));
    }
    Rational inv = inverse(s(k, pc));
    for (std::size_t j = 0; j < C; ++j)
      if (s(k, j) != 0) s(k, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == k || s(i, pc) == 0) continue;
      Rational f = s(i, pc);
      for (std::size_t j = 0; j < C; ++j)
        if (s(k, j) != 0) s(i, j) -= f * s(k, j);
    }
  }
  std::vector<bool> is_pivot(C, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Integer> v(C);
  for (std::size_t c = 0; c < C; ++c) {
    if (is_pivot[c]) continue;
    // integer kernel vector: scale by the lcm of denominators in column c
    Integer den(1);
    for (std::size_t k = 0; k < r; ++k) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s(k, c).get_den_mpz_t());
    std::fill(v.begin(), v.end(), Integer(0));
    v[c] = den;
    for (std::size_t k = 0; k < r; ++k) {
      Rational x = -s(k, c) * Rational(den);
      v[e.pivot_cols[k]] = x.get_num();
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer acc(0);
      for (std::size_t j = 0; j < C; ++j)
        if (v[j] != 0 && m(i, j) != 0) acc += m(i, j) * v[j];
      if (acc != 0) return false;
    }
  }
  return true;
}

}  // namespace

std::size_t certified_rank(const ZMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  if (R == 0 || C == 0) return 0;
  const auto& kern = kernels::active_kernels();
  const auto& primes = kernels::modular_primes(4);
  std::vector<double> a(R * C);
  for (std::size_t attempt = 0; attempt < primes.size(); ++attempt) {
    const std::uint32_t p = primes[attempt];
    for (std::size_t i = 0; i < R * C; ++i) a[i] = static_cast<double>(mpz_fdiv_ui(m.data()[i].get_mpz_t(), p));
    auto e = kernels::eliminate_modp(a, R, C, p, kern);
    if (e.rank == std::min(R, C)) return e.rank;
    if (certify_upper_bound(m, e)) return e.rank;
  }
  return rank_bareiss(m);
}

std::size_t exact_rank(const ZMatrix& m) {
  if (std::min(m.rows(), m.cols()) <= 12) return rank_bareiss(m);
  return certified_rank(m);
}

ZMatrix clear_denominators(const QMatrix& m) {
  ZMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational x = m(i, j) * Rational(l);
      z(i, j) = x.get_num();
    }
  }
  return z;
}

std::size_t exact_rank(const QMatrix& m) { return exact_rank(clear_denominators(m)); }
std::size_t exact_rank(const Matrix<Cyclo>& m) { return rank_field(m); }
std::size_t exact_rank(const Matrix<QSqrt2>& m) { return rank_field(m); }

std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

}  // namespace symsing
