#include "symsing/core/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace symsing {

namespace {

// Exact division of integer polynomials; the divisor is monic.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t n = num.size(), m = den.size();
  IntPoly quot(n - m + 1);
  for (std::size_t top = n; top >= m; --top) {
    const std::size_t shift = top - m;
    Integer c = num[top - 1];
    quot[shift] = c;
    if (c != 0)
      for (std::size_t j = 0; j < m; ++j) num[shift + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw std::logic_error("cyclotomic division left a remainder");
  return quot;
}

}  // namespace

IntPoly cyclotomic_polynomial(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: d must be >= 1");
  IntPoly p(static_cast<std::size_t>(d) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (int k = 1; k < d; ++k)
    if (d % k == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(k));
  return p;
}

CyclotomicField::CyclotomicField(int d) : d_(d), modulus_(cyclotomic_polynomial(d)) {}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int d) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CyclotomicField>(d);
  cache.emplace(d, f);
  return f;
}

void CyclotomicField::reduce(std::vector<Rational>& c) const {
  const std::size_t deg = static_cast<std::size_t>(degree());
  for (std::size_t i = c.size(); i-- > deg;) {
    if (c[i] == 0) continue;
    Rational lead = c[i];
    for (std::size_t j = 0; j <= deg; ++j) c[i - deg + j] -= lead * Rational(modulus_[j]);
  }
  if (c.size() > deg) c.resize(deg);
}

Cyclo::Cyclo(const Rational& v) {
  if (v != 0) coeffs_.push_back(v);
}

Cyclo::Cyclo(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (field_) field_->reduce(coeffs_);
  trim();
}

Cyclo Cyclo::zeta_power(const FieldPtr& field, long k) {
  const long d = field->order();
  long e = ((k % d) + d) % d;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
  c[static_cast<std::size_t>(e)] = 1;
  return Cyclo(field, std::move(c));
}

void Cyclo::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldPtr Cyclo::common_field(const Cyclo& a, const Cyclo& b) {
  if (!a.field_) return b.field_;
  if (!b.field_) return a.field_;
  if (a.field_ != b.field_ && a.field_->order() != b.field_->order())
    throw std::domain_error("coefficient-field mismatch: Q(zeta_" + std::to_string(a.field_->order()) +
                            ") vs Q(zeta_" + std::to_string(b.field_->order()) + ")");
  return a.field_;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  field_ = common_field(*this, o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  field_ = common_field(*this, o);
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  if (field_) field_->reduce(prod);
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.coeffs_.size() > 1 && b.coeffs_.size() > 1) Cyclo::common_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclo::inverse of zero");
  if (is_rational()) return Cyclo(Rational(1) / coeffs_[0]);
  // Extended Euclid in Q[z]: find s with s * a == 1 mod Phi_d.
  using QPoly = std::vector<Rational>;
  auto trimq = [](QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  auto sub_mul = [&](QPoly a, const QPoly& b, const QPoly& q) {
    QPoly prod(b.size() + q.size() - 1);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) prod[i + j] += b[i] * q[j];
    if (a.size() < prod.size()) a.resize(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) a[i] -= prod[i];
    trimq(a);
    return a;
  };
  QPoly r0(field_->modulus().begin(), field_->modulus().end());
  QPoly r1 = coeffs_;
  QPoly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    // q = r0 div r1
    QPoly rem = r0, q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1);
    while (rem.size() >= r1.size() && !rem.empty()) {
      std::size_t shift = rem.size() - r1.size();
      Rational c = rem.back() / r1.back();
      q[shift] += c;
      for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
      trimq(rem);
    }
    trimq(q);
    QPoly s2 = s1.empty() || q.empty() ? s0 : sub_mul(s0, s1, q);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw std::logic_error("Cyclo::inverse: element shares a factor with Phi_d");
  }
  Rational inv = Rational(1) / r1[0];
  for (auto& c : s1) c *= inv;
  return Cyclo(field_, std::move(s1));
}

std::string Cyclo::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    std::string c = coeffs_[i].get_str();
    if (!out.empty()) out += (c[0] == '-') ? " " : " + ";
    if (i == 0) {
      out += c;
    } else {
      if (c == "1") c.clear();
      else if (c == "-1") c = "-";
      else c += "*";
      out += c + "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return "(" + out + ")";
}

}  // namespace symsing
