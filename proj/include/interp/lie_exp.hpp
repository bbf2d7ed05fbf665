#pragma once

#include <utility>
#include <vector>

#include "interp/group.hpp"
#include "interp/riordan.hpp"
#include "interp/series.hpp"

namespace interp {

/// u_a + d_b, with (u_a)_{i,j} = a_{i-j} and (d_b)_{i,j} = j b_{i-j}.
class LieElem {
 public:
  LieElem(SeriesQ a, SeriesQ b);

  const SeriesQ& a() const { return a_; }
  const SeriesQ& b() const { return b_; }
  int order() const { return a_.order(); }
  /// Both parts in m.
  bool is_strict() const;

  friend LieElem operator+(const LieElem& x, const LieElem& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend LieElem operator-(const LieElem& x, const LieElem& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend LieElem operator*(const LieElem& x, const Rat& c) { return {x.a_ * c, x.b_ * c}; }
  friend bool operator==(const LieElem&, const LieElem&) = default;

 private:
  SeriesQ a_;
  SeriesQ b_;
};

/// Entry (i, j) = a_{i-j} + j b_{i-j}; n <= order + 1.
TriMatQ lie_to_matrix(const LieElem& l, int n);

/// [u_a1 + d_b1, u_a2 + d_b2] = u_{x(b1 a2' - b2 a1')} + d_{x(b1 b2' - b1' b2)}
LieElem bracket(const LieElem& l1, const LieElem& l2);

/// sum M^k/k! for strictly lower-triangular M (at most n terms).
TriMatQ mexp_strict(const TriMatQ& m);
/// sum (-1)^{k+1} (M - 1)^k / k for unipotent M.
TriMatQ mlog_unipotent(const TriMatQ& m);

/// g_0 = 1, g_{n+1} = alpha g_n + x beta g_n'.
std::vector<SeriesQ> exp_g_sequence(const SeriesQ& alpha, const SeriesQ& beta, int count);

/// Exp(alpha; beta) = sum_{n<=N} g_n/n! for alpha, beta in m, known
/// through x^N (less if the inputs are known to less).
SeriesQ Exp_strict(const SeriesQ& alpha, const SeriesQ& beta, int n);

/// s-jet of Exp(s alpha; s beta) = sum_{k<=M} g_k s^k/k!, coefficients
/// polynomials in s of degree <= M. No condition on constant terms.
SeriesP Exp_spoly(const SeriesQ& alpha, const SeriesQ& beta, int n, int m);

/// (Exp(alpha; beta), x Exp(beta; beta)) at the shared input order.
GroupElem exp_group(const SeriesQ& alpha, const SeriesQ& beta);

/// x beta y' - y (alpha o (xz) - alpha) and x beta z' - z (beta o (xz) - beta)
/// for y = Exp(alpha; beta), z = Exp(beta; beta), alpha, beta in m.
std::pair<SeriesQ, SeriesQ> ode_residual_main(const SeriesQ& alpha, const SeriesQ& beta, int n);

/// The same system for y = Exp(s alpha; s beta), z = Exp(s beta; s beta)
/// as s-jets of degree <= m.
std::pair<SeriesP, SeriesP> ode_residual_spoly(const SeriesQ& alpha, const SeriesQ& beta, int n, int m);

/// F(x Exp(s beta; s beta)) - F(x) - s with F' = 1/(x beta), through
/// x^n and s^m. A nonzero residue of 1/(x beta) is rejected.
SeriesP f_invariant_residual(const SeriesQ& beta, int n, int m);

/// One term c * Z^e of a polynomial relation in Z.
struct RelationTerm {
  SeriesP coeff;
  int exponent;
};

/// sum c_i Z^{e_i} by Horner. A nonnegative max_sdeg drops parameter
/// powers above it along the way.
SeriesP algebraic_residual(const std::vector<RelationTerm>& relation, const SeriesP& z, int max_sdeg = -1);

/// x^2 y^2 - (1 - s x + x^2) y + 1, satisfied by y = Exp(s beta; s beta)
/// for beta = x/(1 - x^2).
std::vector<RelationTerm> quadratic_relation(int order);

/// x(1+x^2)(1 + (k+1)Z^2 + Z^4) - (1 - s x + (k+1)x^2 - s x^3 + x^4) Z (1 + Z^2)
std::vector<RelationTerm> quartic_relation(int k, int order);

/// x(1+x^2)^k / (1 - x^{2(k+1)})
SeriesQ beta_family(int k, int order);

/// G_0 = 1, G_{n+1} = (u^a G_n)' with u = K/(1-Kx); G_0..G_count-1 known
/// through x^n.
std::vector<SeriesQ> holom_g_recursion(const Rat& k, int a, int count, int n);

/// prod_{j=1}^{m} (j(a+1) - 1) u^{m(a+1)} through x^n.
SeriesQ holom_g_product(const Rat& k, int a, int m, int n);

/// sum_{m<=M} G_m s^m/m! from the recursion, through x^n.
SeriesP holom_family_sum(const Rat& k, int a, int n, int m);

/// (1 - s(a+1)u^{a+1})^{-a/(a+1)} as an s-jet of degree m through x^n.
SeriesP holom_closed_form(const Rat& k, int a, int n, int m);

/// Reads a series in one variable with polynomial coefficients in
/// another as a series in the second variable, through `order`.
SeriesP transpose(const SeriesP& a, const std::string& new_param, int order);

}  // namespace interp
