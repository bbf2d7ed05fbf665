#include "interp/group.hpp"

#include <algorithm>

namespace interp {

GroupElem::GroupElem(SeriesQ a, SeriesQ alpha) {
  const int n = std::min(a.order(), alpha.order());
  a_ = a.truncated(n);
  alpha_ = alpha.truncated(n);
  if (n < 1) throw ValidationError("group element needs order >= 1");
  if (a_.valuation() != 0) throw ValidationError("group element: A must have a nonzero constant term");
  if (alpha_.valuation() != 1) throw ValidationError("group element: alpha must have valuation exactly 1");
}

GroupElem GroupElem::identity(int order) { return {presets::one(order), presets::id(order)}; }

bool GroupElem::is_special() const { return a_.coef(0) == 1 && alpha_.coef(1) == 1; }

GroupElem gmul(const GroupElem& g, const GroupElem& h) {
  if (g.order() != h.order()) throw ValidationError("gmul: order mismatch");
  return {g.A() * compose(h.A(), g.alpha()), compose(h.alpha(), g.alpha())};
}

GroupElem ginv(const GroupElem& g) {
  SeriesQ r = reversion(g.alpha());
  return {reciprocal(compose(g.A(), r)), r};
}

SeriesQ rational_power(const SeriesQ& a, const Rat& e) {
  if (e.get_den() == 1) return pow_int(a, static_cast<int>(e.get_num().get_si()));
  if (a.coef(0) != 1) throw DomainError("fractional power of a series whose constant term is not 1");
  return powq(a, e);
}

GroupElem phi(const GroupElem& g, const Rat& kappa, const Rat& lambda, const Rat& mu) {
  const bool fractional = kappa.get_den() != 1 || lambda.get_den() != 1 || mu.get_den() != 1;
  if (fractional && !g.is_special())
    throw DomainError("phi: fractional exponents need A in 1+m and alpha in x+m^2");
  SeriesQ r = is_zero(kappa) ? SeriesQ::constant(1, g.order()) : rational_power(g.A(), kappa);
  if (!is_zero(lambda)) r = r * rational_power(shift(g.alpha(), -1), lambda);
  if (!is_zero(mu)) r = r * rational_power(derive(g.alpha()), mu);
  return {r, g.alpha()};
}

PhiExponents phi_inverse_exponents(const Rat& kappa, const Rat& lambda, const Rat& mu) {
  if (is_zero(kappa)) throw DomainError("phi with kappa = 0 is not invertible");
  return {Rat(1) / kappa, -lambda / kappa, -mu / kappa};
}

SeriesQ interp_inverse(const SeriesQ& a, const Rat& tau, InterpVariant variant) {
  if (a.val() < 0 || a.coef(0) != 1) throw DomainError("interp_inverse: A must lie in 1+m");
  const SeriesQ p = powq(a, tau);
  const SeriesQ d = variant == InterpVariant::G ? shift(p, 1) : integrate0(p);
  return reciprocal(compose(a, reversion(d)));
}

}  // namespace interp
