#pragma once

#include "interp/group.hpp"
#include "interp/lie_exp.hpp"
#include "interp/poly.hpp"
#include "interp/series.hpp"

namespace interp {

/// P_n(u) = sum_{k=1}^{n} (n u)^{k-1} / k!
Poly pn_poly(int n);

/// alpha in m with Exp(alpha; beta) = gamma through x^n, one coefficient
/// per step: alpha_k += E_k / P_k(beta_0) where E_k is the current error
/// at x^k. Needs beta in m and gamma_0 = 1.
SeriesQ solve_alpha(const SeriesQ& beta, const SeriesQ& gamma, int n);

/// beta in m with Exp(beta; beta) = gamma through x^n; gamma_0 = 1.
SeriesQ solve_beta(const SeriesQ& gamma, int n);

/// (alpha, beta) with exp_group(alpha, beta) = g, read off the matrix
/// logarithm of rho(g). beta comes out one order short of g.
LieElem group_log(const GroupElem& g);

/// True iff P_k(beta0) != 0 for every k <= n_max; |beta0| >= 2 is
/// accepted without evaluation since all roots lie in |z| < 2.
bool pn_roots_guard(const Rat& beta0, int n_max);

}  // namespace interp
