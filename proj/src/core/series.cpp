#include "symsing/core/series.hpp"

#include <stdexcept>

namespace symsing {

TruncatedSeries::TruncatedSeries(const QPoly& p, long order, std::vector<int> weights)
    : poly_(p.ring()), order_(order), weights_(std::move(weights)) {
  if (weights_.empty())
    for (const auto& v : p.ring()->variables()) weights_.push_back(v.weight);
  if (weights_.size() != p.ring()->size()) throw std::invalid_argument("TruncatedSeries: weight count mismatch");
  for (int w : weights_)
    if (w < 0) throw std::invalid_argument("TruncatedSeries: negative truncation weight");
  poly_ = p.truncate(order_, weights_);
}

long TruncatedSeries::degree(const Exponents& e) const {
  long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += long(e[i]) * weights_[i];
  return d;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (order_ != o.order_ || weights_ != o.weights_)
    throw std::invalid_argument("TruncatedSeries: order or weights differ");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_compatible(o);
  return TruncatedSeries(poly_ + o.poly_, order_, weights_);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_compatible(o);
  return TruncatedSeries(poly_ - o.poly_, order_, weights_);
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const {
  return TruncatedSeries(poly_ * s, order_, weights_);
}

TruncatedSeries TruncatedSeries::times(const QPoly& p) const {
  QPoly r(poly_.ring());
  Exponents e;
  for (const auto& [ea, ca] : poly_.terms()) {
    long da = degree(ea);
    for (const auto& [eb, cb] : p.terms()) {
      if (da + degree(eb) > order_) continue;
      e.resize(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  TruncatedSeries out(*this);
  out.poly_ = std::move(r);
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_compatible(o);
  return times(o.poly_);
}

TruncatedSeries TruncatedSeries::pow(unsigned k) const {
  TruncatedSeries r(QPoly(poly_.ring(), Rational(1)), order_, weights_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

TruncatedSeries series_inv_sqrt(const QPoly& f, long order, const std::vector<int>& weights) {
  Rational c = f.constant_term();
  if (c == 0) throw std::domain_error("series_inv_sqrt: constant term is zero");
  Rational root;
  if (sgn(c) < 0 || !rational_sqrt(c, root))
    throw std::domain_error("series_inv_sqrt: constant term " + c.get_str() + " is not a rational square");
  TruncatedSeries one(QPoly(f.ring(), Rational(1)), order, weights);
  // f = c (1 + g) with g free of constant term
  TruncatedSeries g(f * inverse(c) - QPoly(f.ring(), Rational(1)), order, weights);
  long min_deg = -1;
  for (const auto& [e, coeff] : g.poly().terms()) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += long(e[i]) * g.weights()[i];
    if (d == 0) throw std::domain_error("series_inv_sqrt: nonconstant term of truncation weight zero");
    if (min_deg < 0 || d < min_deg) min_deg = d;
  }
  TruncatedSeries sum = one;
  if (min_deg > 0) {
    TruncatedSeries gk = one;
    Rational binom(1);
    for (long k = 1; k * min_deg <= order; ++k) {
      binom *= Rational(-1, 2) - Rational(k - 1);
      binom /= Rational(k);
      gk = gk * g;
      if (gk.is_zero()) break;
      sum = sum + gk * binom;
    }
  }
  return sum * inverse(root);
}

}  // namespace symsing
