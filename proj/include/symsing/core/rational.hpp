#pragma once

#include <gmpxx.h>

#include <string>

namespace symsing {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

inline Rational inverse(const Rational& r) { return Rational(1) / r; }

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Exact square root of a nonnegative rational, if it is a perfect square.
inline bool rational_sqrt(const Rational& r, Rational& out) {
  if (sgn(r) < 0) return false;
  Integer num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  out = Rational(sn, sd);
  out.canonicalize();
  return true;
}

}  // namespace symsing
