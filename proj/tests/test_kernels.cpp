#include <doctest.h>

#include <cmath>
#include <random>

#include "symsing/kernels/modp.hpp"

using namespace symsing::kernels;

namespace {

std::vector<double> residues(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels match integer arithmetic") {
  const std::uint32_t p = modular_primes(1)[0];
  const double pinv = 1.0 / p;
  std::mt19937_64 rng(11);
  const auto& k = scalar_kernels();
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 33u}) {
    auto dst = residues(rng, n, p), src = residues(rng, n, p);
    const double factor = residues(rng, 1, p)[0];
    auto want = dst;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t prod = static_cast<std::uint64_t>(factor) * static_cast<std::uint64_t>(src[i]) % p;
      want[i] = static_cast<double>((static_cast<std::uint64_t>(dst[i]) + p - prod) % p);
    }
    k.axpy(dst.data(), src.data(), factor, p, pinv, n);
    CHECK(dst == want);
  }
}

TEST_CASE("vector kernels agree with scalar kernels bit for bit") {
  const auto* vec = avx2_kernels();
  if (!vec || !cpu_supports_avx2_fma()) {
    MESSAGE("AVX2 path unavailable; only the scalar path is exercised");
    return;
  }
  std::mt19937_64 rng(12);
  for (std::uint32_t p : modular_primes(3)) {
    const double pinv = 1.0 / p;
    for (std::size_t n = 0; n <= 67; ++n) {
      auto dst = residues(rng, n, p), src = residues(rng, n, p);
      const double factor = residues(rng, 1, p)[0];
      auto a = dst, b = dst;
      scalar_kernels().axpy(a.data(), src.data(), factor, p, pinv, n);
      vec->axpy(b.data(), src.data(), factor, p, pinv, n);
      CHECK(a == b);
      auto c = src, e = src;
      scalar_kernels().scale(c.data(), factor, p, pinv, n);
      vec->scale(e.data(), factor, p, pinv, n);
      CHECK(c == e);
    }
  }
}

TEST_CASE("elimination gives the same pivots on both paths") {
  const auto* vec = avx2_kernels();
  std::mt19937_64 rng(13);
  const std::uint32_t p = modular_primes(1)[0];
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 5 + trial % 7, cols = 9 + trial % 5;
    auto m = residues(rng, rows * cols, p);
    // force a dependent row
    for (std::size_t j = 0; j < cols; ++j) m[(rows - 1) * cols + j] = m[j];
    auto a = m;
    auto ra = eliminate_modp(a, rows, cols, p, scalar_kernels());
    CHECK(ra.rank < rows);
    if (vec && cpu_supports_avx2_fma()) {
      auto b = m;
      auto rb = eliminate_modp(b, rows, cols, p, *vec);
      CHECK(ra.rank == rb.rank);
      CHECK(ra.pivot_rows == rb.pivot_rows);
      CHECK(ra.pivot_cols == rb.pivot_cols);
      CHECK(a == b);
    }
  }
}

TEST_CASE("inverse mod p") {
  for (std::uint32_t p : modular_primes(2))
    for (std::uint64_t a : std::vector<std::uint64_t>{1, 2, 12345, p - 1u})
      CHECK(a * inverse_mod(a, p) % p == 1);
}
