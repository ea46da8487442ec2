#include <immintrin.h>

#include <cmath>

#include "symsing/kernels/modp.hpp"

namespace symsing::kernels {

namespace {

inline __m256d reduce4(__m256d t, __m256d vp, __m256d vpinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vpinv));
  __m256d r = _mm256_fnmadd_pd(q, vp, t);
  // r in [-p, 2p): fold back with two masked corrections
  __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, vp));
  __m256d big = _mm256_cmp_pd(r, vp, _CMP_GE_OQ);
  r = _mm256_sub_pd(r, _mm256_and_pd(big, vp));
  return r;
}

inline double reduce1(double t, double p, double pinv) {
  double q = std::floor(t * pinv);
  double r = t - q * p;
  if (r < 0) r += p;
  if (r >= p) r -= p;
  return r;
}

void axpy_avx2(double* dst, const double* src, double factor, double p, double pinv, std::size_t n) {
  const __m256d vp = _mm256_set1_pd(p), vpinv = _mm256_set1_pd(pinv), vf = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_loadu_pd(dst + i);
    __m256d s = _mm256_loadu_pd(src + i);
    __m256d t = _mm256_fnmadd_pd(vf, s, d);
    _mm256_storeu_pd(dst + i, reduce4(t, vp, vpinv));
  }
  for (; i < n; ++i) dst[i] = reduce1(dst[i] - factor * src[i], p, pinv);
}

void scale_avx2(double* row, double factor, double p, double pinv, std::size_t n) {
  const __m256d vp = _mm256_set1_pd(p), vpinv = _mm256_set1_pd(pinv), vf = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_mul_pd(_mm256_loadu_pd(row + i), vf);
    _mm256_storeu_pd(row + i, reduce4(t, vp, vpinv));
  }
  for (; i < n; ++i) row[i] = reduce1(row[i] * factor, p, pinv);
}

}  // namespace

const ModpKernels* avx2_kernels() {
  static const ModpKernels k{"avx2", axpy_avx2, scale_avx2};
  return &k;
}

}  // namespace symsing::kernels
