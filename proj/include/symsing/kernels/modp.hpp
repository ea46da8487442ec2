#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace symsing::kernels {

// Residues mod p < 2^26 held in doubles.  Every product of two residues is below 2^52, so the
// fma/floor reduction below is exact and the scalar and vector paths agree bit for bit.

using AxpyFn = void (*)(double* dst, const double* src, double factor, double p, double pinv, std::size_t n);
using ScaleFn = void (*)(double* row, double factor, double p, double pinv, std::size_t n);

struct ModpKernels {
  const char* name;
  /// dst[i] = (dst[i] - factor * src[i]) mod p, all operands reduced.
  AxpyFn axpy;
  /// row[i] = (row[i] * factor) mod p.
  ScaleFn scale;
};

const ModpKernels& scalar_kernels();
/// nullptr when the vector path was not compiled in.
const ModpKernels* avx2_kernels();
bool cpu_supports_avx2_fma();

/// Kernels picked at first use: AVX2 when the CPU has avx2 and fma, unless SYMSING_ISA=scalar.
const ModpKernels& active_kernels();

/// Largest primes below 2^26, in decreasing order.
const std::vector<std::uint32_t>& modular_primes(std::size_t count);

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

struct ModpElimination {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // original row index, in elimination order
  std::vector<std::size_t> pivot_cols;
};

/// Row echelon elimination of a dense row-major matrix of residues, destroying it.
ModpElimination eliminate_modp(std::vector<double>& a, std::size_t rows, std::size_t cols, std::uint32_t p,
                               const ModpKernels& k);

}  // namespace symsing::kernels
