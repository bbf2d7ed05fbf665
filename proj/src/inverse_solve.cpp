#include "interp/inverse_solve.hpp"

#include "interp/riordan.hpp"

namespace interp {

Poly pn_poly(int n) {
  if (n < 1) throw DomainError("pn_poly: n must be >= 1");
  std::vector<Rat> c;
  Rat npow = 1;
  for (int k = 1; k <= n; ++k) {
    c.push_back(npow / factorial(k));
    npow *= n;
  }
  return Poly(std::move(c), "u");
}

namespace {

void require_gamma(const SeriesQ& gamma, const char* what) {
  if (gamma.val() < 0 || gamma.coef(0) != 1) throw DomainError(std::string(what) + ": gamma must have constant term 1");
}

template <class ExpOf>
SeriesQ bootstrap(const SeriesQ& gamma, const Rat& beta0, int n, ExpOf exp_of) {
  if (gamma.order() < n) throw ValidationError("gamma known to order " + std::to_string(gamma.order()) + " < " + std::to_string(n));
  SeriesQ sol = SeriesQ::zero(n);
  for (int k = 1; k <= n; ++k) {
    const Rat err = gamma.coef(k) - exp_of(sol).coef(k);
    if (is_zero(err)) continue;
    const Rat pk = pn_poly(k)(beta0);
    sol = sol + SeriesQ::monomial(err / pk, k, n);
  }
  return sol;
}

}  // namespace

SeriesQ solve_alpha(const SeriesQ& beta, const SeriesQ& gamma, int n) {
  require_gamma(gamma, "solve_alpha");
  if (beta.val() < 0 || !is_zero(beta.coef(0))) throw DomainError("solve_alpha: beta must have zero constant term");
  if (beta.order() < n) throw ValidationError("solve_alpha: beta known to too low an order");
  return bootstrap(gamma, beta.coef(0), n, [&](const SeriesQ& a) { return Exp_strict(a, beta, n); });
}

SeriesQ solve_beta(const SeriesQ& gamma, int n) {
  require_gamma(gamma, "solve_beta");
  return bootstrap(gamma, 0, n, [&](const SeriesQ& b) { return Exp_strict(b, b, n); });
}

LieElem group_log(const GroupElem& g) {
  if (!g.is_special()) throw DomainError("group_log: element must be special (A in 1+m, alpha in x+m^2)");
  const int n = g.order();
  const TriMatQ m = mlog_unipotent(rho(g, n + 1));
  std::vector<Rat> a, b;
  for (int k = 0; k <= n; ++k) a.push_back(m.at(k, 0));
  for (int k = 0; k < n; ++k) b.push_back(m.at(k + 1, 1) - a[static_cast<std::size_t>(k)]);
  for (int i = 0; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      if (m.at(i, j) != a[static_cast<std::size_t>(i - j)] + j * b[static_cast<std::size_t>(i - j)])
        throw ConsistencyError("group_log: logarithm is not of the form u_a + d_b at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
  return {SeriesQ(0, std::move(a)), SeriesQ(0, std::move(b))};
}

bool pn_roots_guard(const Rat& beta0, int n_max) {
  if (abs(beta0) >= 2) return true;
  for (int k = 1; k <= n_max; ++k)
    if (is_zero(pn_poly(k)(beta0))) return false;
  return true;
}

}  // namespace interp
