#pragma once

#include <span>
#include <string>
#include <vector>

#include "interp/rational.hpp"

namespace interp {

/// Univariate polynomial over Q in a named parameter ("s", "t", "u", ...).
///
/// Constants carry an empty parameter name and combine with any
/// polynomial; two non-constant polynomials in different parameters
/// cannot be mixed (RingMismatch). The coefficient list never ends in
/// a zero.
class Poly {
 public:
  Poly() = default;
  Poly(Rat constant);  // NOLINT: implicit, constants embed into every Poly ring
  Poly(int constant) : Poly(Rat(constant)) {}
  Poly(std::vector<Rat> coeffs, std::string param);

  static Poly monomial(const Rat& c, int degree, std::string param);

  const std::string& param() const { return param_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int k) const;

  Rat operator()(const Rat& u) const;
  Poly derivative() const;
  /// u -> u + lambda.
  Poly shifted(const Rat& lambda) const;
  /// Drops every term of degree > max_degree.
  Poly truncated(int max_degree) const;
  Poly with_param(std::string param) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& q);
  Poly& operator/=(const Rat& q);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& q) { return a *= q; }
  friend Poly operator*(const Rat& q, Poly a) { return a *= q; }
  friend Poly operator/(Poly a, const Rat& q) { return a /= q; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize();
  static std::string merge_param(const Poly& a, const Poly& b);

  std::vector<Rat> coeffs_;
  std::string param_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }
/// Inverse of a nonzero constant polynomial; anything else is not a unit.
Poly unit_inverse(const Poly& p);
std::string to_string(const Poly& p);

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys,
                 const std::string& param);

}  // namespace interp
