#include "interp/lie_exp.hpp"

#include <algorithm>
#include <map>

namespace interp {

namespace {

SeriesP s_monomial(const Rat& c, int s_power, int x_power, int order) {
  return SeriesP::monomial(Poly::monomial(c, s_power, "s"), x_power, order);
}

SeriesQ poly_series(std::vector<Rat> c, int order) { return SeriesQ(0, std::move(c), order).truncated(order); }

void require_m(const SeriesQ& a, const char* what) {
  if (a.val() < 0 || (a.order() >= 0 && !is_zero(a.coef(0))))
    throw DomainError(std::string(what) + ": argument must have zero constant term");
}

}  // namespace

LieElem::LieElem(SeriesQ a, SeriesQ b) {
  const int n = std::min(a.order(), b.order());
  a_ = a.truncated(n);
  b_ = b.truncated(n);
  if (a_.valuation() < 0 || b_.valuation() < 0) throw ValidationError("Lie element parts must be power series");
}

bool LieElem::is_strict() const { return a_.valuation() >= 1 && b_.valuation() >= 1; }

TriMatQ lie_to_matrix(const LieElem& l, int n) {
  if (n > l.order() + 1) throw ValidationError("lie_to_matrix: dimension exceeds order + 1");
  TriMatQ m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m.set(i, j, l.a().coef(i - j) + j * l.b().coef(i - j));
  return m;
}

LieElem bracket(const LieElem& l1, const LieElem& l2) {
  if (l1.order() != l2.order()) throw ValidationError("bracket: order mismatch");
  const SeriesQ& a1 = l1.a();
  const SeriesQ& b1 = l1.b();
  const SeriesQ& a2 = l2.a();
  const SeriesQ& b2 = l2.b();
  const SeriesQ a = shift(b1 * derive(a2) - b2 * derive(a1), 1);
  const SeriesQ b = shift(b1 * derive(b2) - derive(b1) * b2, 1);
  const int n = l1.order();
  return {a.truncated(n), b.truncated(n)};
}

TriMatQ mexp_strict(const TriMatQ& m) {
  if (!m.is_strict()) throw DomainError("mexp_strict: matrix is not strictly lower triangular");
  TriMatQ sum = TriMatQ::identity(m.n());
  TriMatQ term = sum;
  for (int k = 1; k < m.n(); ++k) {
    term = term * m * (Rat(1) / k);
    sum = sum + term;
  }
  return sum;
}

TriMatQ mlog_unipotent(const TriMatQ& m) {
  if (!m.is_unipotent()) throw DomainError("mlog_unipotent: matrix is not unipotent");
  const TriMatQ nil = m - TriMatQ::identity(m.n());
  TriMatQ sum(m.n());
  TriMatQ power = TriMatQ::identity(m.n());
  for (int k = 1; k < m.n(); ++k) {
    power = power * nil;
    sum = sum + power * ratio(k % 2 == 1 ? 1 : -1, k);
  }
  return sum;
}

std::vector<SeriesQ> exp_g_sequence(const SeriesQ& alpha, const SeriesQ& beta, int count) {
  const int n = std::min(alpha.order(), beta.order());
  const SeriesQ xb = shift(beta, 1);
  std::vector<SeriesQ> g{SeriesQ::constant(1, n)};
  for (int k = 1; k < count; ++k) {
    const SeriesQ& prev = g.back();
    g.push_back((alpha * prev + xb * derive(prev)).truncated(n));
  }
  return g;
}

SeriesQ Exp_strict(const SeriesQ& alpha, const SeriesQ& beta, int n) {
  require_m(alpha, "Exp_strict");
  require_m(beta, "Exp_strict");
  const auto g = exp_g_sequence(alpha.truncated(n), beta.truncated(n), n + 1);
  SeriesQ sum = SeriesQ::zero(n);
  Rat inv_fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) inv_fact /= k;
    sum = sum + g[static_cast<std::size_t>(k)] * inv_fact;
  }
  return sum;
}

SeriesP Exp_spoly(const SeriesQ& alpha, const SeriesQ& beta, int n, int m) {
  const auto g = exp_g_sequence(alpha.truncated(n), beta.truncated(n), m + 1);
  const int order = g.front().order();
  std::vector<std::vector<Rat>> coeffs(static_cast<std::size_t>(order + 1));
  Rat inv_fact = 1;
  for (int k = 0; k <= m; ++k) {
    if (k > 0) inv_fact /= k;
    const SeriesQ& gk = g[static_cast<std::size_t>(k)];
    for (int i = 0; i <= order; ++i) coeffs[static_cast<std::size_t>(i)].push_back(gk.coef(i) * inv_fact);
  }
  std::vector<Poly> c;
  for (auto& v : coeffs) c.emplace_back(std::move(v), "s");
  return SeriesP(0, std::move(c), order);
}

GroupElem exp_group(const SeriesQ& alpha, const SeriesQ& beta) {
  const int n = std::min(alpha.order(), beta.order());
  return {Exp_strict(alpha, beta, n), shift(Exp_strict(beta, beta, n), 1)};
}

std::pair<SeriesQ, SeriesQ> ode_residual_main(const SeriesQ& alpha, const SeriesQ& beta, int n) {
  const SeriesQ y = Exp_strict(alpha, beta, n);
  const SeriesQ z = Exp_strict(beta, beta, n);
  const SeriesQ xz = shift(z, 1);
  const SeriesQ xb = shift(beta, 1);
  SeriesQ ry = xb * derive(y) - y * (compose(alpha, xz) - alpha);
  SeriesQ rz = xb * derive(z) - z * (compose(beta, xz) - beta);
  return {ry.truncated(n), rz.truncated(n)};
}

std::pair<SeriesP, SeriesP> ode_residual_spoly(const SeriesQ& alpha, const SeriesQ& beta, int n, int m) {
  const SeriesP y = Exp_spoly(alpha, beta, n, m);
  const SeriesP z = Exp_spoly(beta, beta, n, m);
  const SeriesP a = promote(alpha, "s");
  const SeriesP b = promote(beta, "s");
  const SeriesP xz = shift(z, 1);
  const SeriesP xb = shift(b, 1);
  SeriesP ry = truncate_param(xb * derive(y) - y * truncate_param(compose(a, xz) - a, m), m);
  SeriesP rz = truncate_param(xb * derive(z) - z * truncate_param(compose(b, xz) - b, m), m);
  return {ry.truncated(n), rz.truncated(n)};
}

SeriesP f_invariant_residual(const SeriesQ& beta, int n, int m) {
  if (beta.valuation() > beta.order()) throw DomainError("f_invariant_residual: beta vanishes through its order");
  const auto prim = laurent_primitive(reciprocal(shift(beta, 1)));
  if (!is_zero(prim.residue)) throw DomainError("f_invariant_residual: 1/(x beta) has nonzero residue " + to_string(prim.residue));
  const SeriesP f = promote(prim.primitive, "s");
  const SeriesP z = shift(Exp_spoly(beta, beta, beta.order(), m), 1);
  SeriesP r = truncate_param(compose(f, z), m) - f - SeriesP::constant(Poly({0, 1}, "s"), f.order());
  if (r.order() < n)
    throw ValidationError("f_invariant_residual: beta known to order " + std::to_string(beta.order()) +
                          " only reaches x^" + std::to_string(r.order()));
  return r.truncated(n);
}

SeriesP algebraic_residual(const std::vector<RelationTerm>& relation, const SeriesP& z, int max_sdeg) {
  if (relation.empty()) return SeriesP::zero(z.order());
  std::map<int, SeriesP, std::greater<>> by_exp;
  for (const auto& t : relation) {
    if (t.exponent < 0) throw ValidationError("algebraic_residual: negative exponent");
    auto it = by_exp.find(t.exponent);
    if (it == by_exp.end())
      by_exp.emplace(t.exponent, t.coeff);
    else
      it->second = it->second + t.coeff;
  }
  auto cut = [&](const SeriesP& s) { return max_sdeg >= 0 ? truncate_param(s, max_sdeg) : s; };
  int e = by_exp.begin()->first;
  SeriesP acc = by_exp.begin()->second;
  for (auto it = std::next(by_exp.begin()); it != by_exp.end(); ++it) {
    for (; e > it->first; --e) acc = cut(acc * z);
    acc = acc + it->second;
  }
  for (; e > 0; --e) acc = cut(acc * z);
  return acc;
}

std::vector<RelationTerm> quadratic_relation(int order) {
  return {
      {SeriesP::monomial(Poly(1), 2, order), 2},
      {SeriesP::constant(Poly(-1), order) + s_monomial(1, 1, 1, order) - SeriesP::monomial(Poly(1), 2, order), 1},
      {SeriesP::constant(Poly(1), order), 0},
  };
}

std::vector<RelationTerm> quartic_relation(int k, int order) {
  const SeriesP p = promote(poly_series({0, 1, 0, 1}, order), "s");
  const SeriesP q = SeriesP::constant(Poly(1), order) - s_monomial(1, 1, 1, order) +
                    SeriesP::monomial(Poly(k + 1), 2, order) - s_monomial(1, 1, 3, order) +
                    SeriesP::monomial(Poly(1), 4, order);
  return {{p, 0}, {p * Rat(k + 1), 2}, {p, 4}, {-q, 1}, {-q, 3}};
}

SeriesQ beta_family(int k, int order) {
  if (k < 0) throw ValidationError("beta_family: k must be >= 0");
  SeriesQ num = shift(pow_int(poly_series({1, 0, 1}, order), k), 1).truncated(order);
  std::vector<Rat> den(static_cast<std::size_t>(order + 1), 0);
  den[0] = 1;
  if (2 * (k + 1) <= order) den[static_cast<std::size_t>(2 * (k + 1))] = -1;
  return (num * reciprocal(SeriesQ(0, std::move(den)))).truncated(order);
}

namespace {

SeriesQ holom_u(const Rat& k, int n) {
  std::vector<Rat> c;
  Rat p = k;
  for (int i = 0; i <= n; ++i, p *= k) c.push_back(p);
  return SeriesQ(0, std::move(c));
}

void require_a(int a) {
  if (a < 1) throw DomainError("holomorphic family needs an integer a >= 1");
}

}  // namespace

std::vector<SeriesQ> holom_g_recursion(const Rat& k, int a, int count, int n) {
  require_a(a);
  const SeriesQ ua = pow_int(holom_u(k, n + count), a);
  std::vector<SeriesQ> g{SeriesQ::constant(1, n + count)};
  for (int i = 1; i < count; ++i) g.push_back(derive(ua * g.back()));
  for (auto& s : g) s = s.truncated(n);
  return g;
}

SeriesQ holom_g_product(const Rat& k, int a, int m, int n) {
  require_a(a);
  Rat c = 1;
  for (int j = 1; j <= m; ++j) c *= j * (a + 1) - 1;
  return pow_int(holom_u(k, n), m * (a + 1)) * c;
}

SeriesP holom_family_sum(const Rat& k, int a, int n, int m) {
  const auto g = holom_g_recursion(k, a, m + 1, n);
  std::vector<std::vector<Rat>> coeffs(static_cast<std::size_t>(n + 1));
  Rat inv_fact = 1;
  for (int j = 0; j <= m; ++j) {
    if (j > 0) inv_fact /= j;
    for (int i = 0; i <= n; ++i)
      coeffs[static_cast<std::size_t>(i)].push_back(g[static_cast<std::size_t>(j)].coef(i) * inv_fact);
  }
  std::vector<Poly> c;
  for (auto& v : coeffs) c.emplace_back(std::move(v), "s");
  return SeriesP(0, std::move(c), n);
}

SeriesP holom_closed_form(const Rat& k, int a, int n, int m) {
  require_a(a);
  // As a series in s whose coefficients are polynomials in x.
  const SeriesQ w = pow_int(holom_u(k, n), a + 1) * Rat(-(a + 1));
  std::vector<Rat> wc;
  for (int i = 0; i <= n; ++i) wc.push_back(w.coef(i));
  SeriesP base(0, {Poly(1), Poly(std::move(wc), "x")}, m);
  SeriesP in_s = truncate_param(powq(base, ratio(-a, a + 1)), n);
  return transpose(in_s, "s", n);
}

SeriesP transpose(const SeriesP& a, const std::string& new_param, int order) {
  if (a.val() < 0) throw DomainError("transpose: Laurent input");
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(order + 1));
  for (int k = 0; k <= a.order(); ++k) {
    const Poly& c = a.coef(k);
    for (int j = 0; j <= order; ++j) {
      auto& row = rows[static_cast<std::size_t>(j)];
      row.resize(static_cast<std::size_t>(k + 1), 0);
      row[static_cast<std::size_t>(k)] = c.coeff(j);
    }
  }
  std::vector<Poly> out;
  for (auto& r : rows) out.emplace_back(std::move(r), new_param);
  return SeriesP(0, std::move(out), order);
}

}  // namespace interp
