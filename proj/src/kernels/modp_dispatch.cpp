#include <cstdlib>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "symsing/kernels/modp.hpp"

namespace symsing::kernels {

#ifndef SYMSING_HAVE_AVX2
const ModpKernels* avx2_kernels() { return nullptr; }
#endif

bool cpu_supports_avx2_fma() {
#if defined(SYMSING_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const ModpKernels& active_kernels() {
  static const ModpKernels* chosen = [] {
    const char* isa = std::getenv("SYMSING_ISA");
    if (isa && std::strcmp(isa, "scalar") == 0) return &scalar_kernels();
    if (avx2_kernels() && cpu_supports_avx2_fma()) return avx2_kernels();
    return &scalar_kernels();
  }();
  return *chosen;
}

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

const std::vector<std::uint32_t>& modular_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<std::uint32_t> primes;
  std::lock_guard<std::mutex> lock(mu);
  std::uint32_t n = primes.empty() ? (1u << 26) - 1 : primes.back() - 1;
  while (primes.size() < count) {
    if (is_prime(n)) primes.push_back(n);
    --n;
  }
  return primes;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw std::domain_error("inverse_mod: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

ModpElimination eliminate_modp(std::vector<double>& a, std::size_t rows, std::size_t cols, std::uint32_t p,
                               const ModpKernels& k) {
  ModpElimination out;
  const double dp = p, pinv = 1.0 / dp;
  std::vector<std::size_t> order(rows);
  for (std::size_t i = 0; i < rows; ++i) order[i] = i;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv * cols + col] == 0.0) ++piv;
    if (piv == rows) continue;
    if (piv != row) {
      for (std::size_t j = col; j < cols; ++j) std::swap(a[piv * cols + j], a[row * cols + j]);
      std::swap(order[piv], order[row]);
    }
    double* prow = &a[row * cols];
    double inv = static_cast<double>(inverse_mod(static_cast<std::uint64_t>(prow[col]), p));
    k.scale(prow + col, inv, dp, pinv, cols - col);
    for (std::size_t i = row + 1; i < rows; ++i) {
      double f = a[i * cols + col];
      if (f == 0.0) continue;
      k.axpy(&a[i * cols + col], prow + col, f, dp, pinv, cols - col);
    }
    out.pivot_rows.push_back(order[row]);
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

}  // namespace symsing::kernels
