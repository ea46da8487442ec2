#include <cmath>

#include "symsing/kernels/modp.hpp"

namespace symsing::kernels {

namespace {

inline double reduce(double t, double p, double pinv) {
  double q = std::floor(t * pinv);
  double r = t - q * p;
  if (r < 0) r += p;
  if (r >= p) r -= p;
  return r;
}

void axpy_scalar(double* dst, const double* src, double factor, double p, double pinv, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = reduce(dst[i] - factor * src[i], p, pinv);
}

void scale_scalar(double* row, double factor, double p, double pinv, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) row[i] = reduce(row[i] * factor, p, pinv);
}

}  // namespace

const ModpKernels& scalar_kernels() {
  static const ModpKernels k{"scalar", axpy_scalar, scale_scalar};
  return k;
}

}  // namespace symsing::kernels
