#pragma once

#include "interp/series.hpp"

namespace interp {

/// (A, alpha) in the interpolation group: A a unit, alpha = a1 x + ...,
/// a1 != 0. Both components are cut to a shared order.
class GroupElem {
 public:
  GroupElem(SeriesQ a, SeriesQ alpha);

  static GroupElem identity(int order);

  const SeriesQ& A() const { return a_; }
  const SeriesQ& alpha() const { return alpha_; }
  int order() const { return a_.order(); }
  /// A in 1 + m and alpha in x + m^2.
  bool is_special() const;

  friend bool operator==(const GroupElem&, const GroupElem&) = default;

 private:
  SeriesQ a_;
  SeriesQ alpha_;
};

/// (A, alpha)(B, beta) = (A (B o alpha), beta o alpha)
GroupElem gmul(const GroupElem& g, const GroupElem& h);

/// (A, alpha)^-1 = (1 / (A o alpha^<-1>), alpha^<-1>)
GroupElem ginv(const GroupElem& g);

/// (A^kappa (alpha/x)^lambda (alpha')^mu, alpha). Fractional exponents
/// need a special element; a factor with exponent 0 is skipped, and any
/// factor built from alpha costs one order.
GroupElem phi(const GroupElem& g, const Rat& kappa, const Rat& lambda, const Rat& mu);

struct PhiExponents {
  Rat kappa, lambda, mu;
};

/// Exponents of the two-sided inverse of phi_{kappa,lambda,mu}:
/// (1/kappa, -lambda/kappa, -mu/kappa).
PhiExponents phi_inverse_exponents(const Rat& kappa, const Rat& lambda, const Rat& mu);

enum class InterpVariant { G, Gprime };

/// G:      1 / (A o (x A^tau)^<-1>)
/// Gprime: 1 / (A o (int_0 A^tau)^<-1>)
/// for A in 1 + m; tau = 0 gives 1/A, tau = 1 the reversion-type end.
SeriesQ interp_inverse(const SeriesQ& a, const Rat& tau, InterpVariant variant);

/// a^e for rational e: integer powers for any unit, fractional ones only
/// for constant term 1.
SeriesQ rational_power(const SeriesQ& a, const Rat& e);

}  // namespace interp
