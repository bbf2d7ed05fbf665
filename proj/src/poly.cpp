#include "interp/poly.hpp"

#include <algorithm>
#include <utility>

#include "interp/errors.hpp"

namespace interp {

Poly::Poly(Rat constant) {
  if (!interp::is_zero(constant)) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs, std::string param)
    : coeffs_(std::move(coeffs)), param_(std::move(param)) {
  normalize();
}

Poly Poly::monomial(const Rat& c, int degree, std::string param) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v), std::move(param));
}

void Poly::normalize() {
  while (!coeffs_.empty() && interp::is_zero(coeffs_.back())) coeffs_.pop_back();
}

std::string Poly::merge_param(const Poly& a, const Poly& b) {
  if (a.param_.empty()) return b.param_;
  if (b.param_.empty() || a.param_ == b.param_) return a.param_;
  if (a.is_constant() || b.is_constant())
    return a.is_constant() ? b.param_ : a.param_;
  throw RingMismatch("polynomials in '" + a.param_ + "' and '" + b.param_ +
                     "' cannot be combined");
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat Poly::operator()(const Rat& u) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(coeffs_[k] * static_cast<long>(k));
  return Poly(std::move(d), param_);
}

Poly Poly::shifted(const Rat& lambda) const {
  // Horner in (u + lambda).
  Poly acc;
  acc.param_ = param_;
  const Poly lin(std::vector<Rat>{lambda, Rat(1)}, param_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= lin;
    acc += Poly(*it);
  }
  acc.param_ = param_;
  return acc;
}

Poly Poly::truncated(int max_degree) const {
  if (max_degree >= degree()) return *this;
  std::vector<Rat> v(coeffs_.begin(),
                     coeffs_.begin() + std::max(0, max_degree + 1));
  return Poly(std::move(v), param_);
}

Poly Poly::with_param(std::string param) const {
  Poly p = *this;
  p.param_ = std::move(param);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  param_ = merge_param(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  param_ = merge_param(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  param_ = merge_param(*this, o);
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (interp::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Rat& q) {
  if (interp::is_zero(q)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Poly& Poly::operator/=(const Rat& q) {
  if (interp::is_zero(q)) throw DomainError("division by zero");
  for (auto& c : coeffs_) c /= q;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.coeffs_ != b.coeffs_) return false;
  return a.is_constant() || a.param_.empty() || b.param_.empty() || a.param_ == b.param_;
}

Poly unit_inverse(const Poly& p) {
  if (p.degree() != 0) throw DomainError("polynomial " + to_string(p) + " is not a unit");
  return Poly(Rat(1) / p.coeff(0));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  const std::string var = p.param().empty() ? "u" : p.param();
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rat& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    std::string mag = to_string(abs(c));
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys,
                 const std::string& param) {
  if (xs.size() != ys.size()) throw ValidationError("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rat> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rat gap = xs[i] - xs[i - level];
      if (is_zero(gap)) throw DomainError("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  // Horner on the Newton form.
  Poly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc *= Poly(std::vector<Rat>{-xs[i], Rat(1)}, param);
    acc += Poly(dd[i]);
  }
  return acc.with_param(param);
}

}  // namespace interp
