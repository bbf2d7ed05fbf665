#include "interp/riordan.hpp"

namespace interp {

TriMatQ rho(const GroupElem& g, int n) {
  if (n < 0) throw ValidationError("rho: negative dimension");
  if (g.order() < n - 1)
    throw ValidationError("rho: element known to order " + std::to_string(g.order()) + ", dimension " +
                          std::to_string(n) + " needs " + std::to_string(n - 1));
  TriMatQ m(n);
  SeriesQ col = g.A().truncated(n - 1);
  const SeriesQ alpha = g.alpha().truncated(n - 1);
  for (int j = 0; j < n; ++j) {
    for (int i = j; i < n; ++i) m.set(i, j, col.coef(i));
    if (j + 1 < n) col = (col * alpha).truncated(n - 1);
  }
  return m;
}

SeriesQ column_series(const TriMatQ& m, int j) {
  std::vector<Rat> c;
  for (int i = 0; i < m.n(); ++i) c.push_back(m.at(i, j));
  return SeriesQ(0, std::move(c), m.n() - 1);
}

namespace {

Rat aget(const std::vector<Rat>& a, int j) {
  return j < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(j)] : Rat(0);
}

}  // namespace

std::optional<std::pair<int, int>> aseq_violation(const TriMatQ& m, const std::vector<Rat>& a) {
  for (int n = 0; n + 1 < m.n(); ++n)
    for (int k = 0; k <= n; ++k) {
      Rat s = 0;
      for (int j = 0; j <= n - k; ++j) s += aget(a, j) * m.at(n, k + j);
      if (s != m.at(n + 1, k + 1)) return std::pair{n, k};
    }
  return std::nullopt;
}

std::vector<Rat> aseq_extract(const TriMatQ& m) {
  std::vector<Rat> a;
  for (int n = 0; n + 1 < m.n(); ++n) {
    if (is_zero(m.at(n, n))) throw DomainError("aseq_extract: zero diagonal entry at " + std::to_string(n));
    Rat s = m.at(n + 1, 1);
    for (int j = 0; j < n; ++j) s -= a[static_cast<std::size_t>(j)] * m.at(n, j);
    a.push_back(s / m.at(n, n));
  }
  if (!a.empty() && is_zero(a[0])) throw DomainError("aseq_extract: a_0 = 0, not a Riordan matrix");
  if (auto bad = aseq_violation(m, a))
    throw DomainError("not a Riordan matrix: recurrence fails at (n,k) = (" + std::to_string(bad->first) + "," +
                      std::to_string(bad->second) + ")");
  return a;
}

SeriesQ aseq_formula(const SeriesQ& beta) { return reciprocal(shift(reversion(beta), -1)); }

TriMatQ rogers_reconstruct(const SeriesQ& col0, const std::vector<Rat>& a, int n) {
  if (a.empty() || is_zero(a[0])) throw DomainError("rogers_reconstruct: a_0 must be nonzero");
  if (col0.order() < n - 1) throw ValidationError("rogers_reconstruct: column 0 known to too low an order");
  TriMatQ m(n);
  for (int i = 0; i < n; ++i) m.set(i, 0, col0.coef(i));
  for (int i = 1; i < n; ++i)
    for (int k = 1; k <= i; ++k) {
      Rat s = 0;
      for (int j = 0; j <= i - k; ++j) s += aget(a, j) * m.at(i - 1, k - 1 + j);
      m.set(i, k, s);
    }
  return m;
}

std::vector<SeriesQ> toeplitz_d(const std::vector<Rat>& a, int count) {
  std::vector<SeriesQ> d{SeriesQ::constant(1, count)};
  for (int m = 0; m < count; ++m) {
    SeriesQ next = SeriesQ::zero(count);
    for (int j = 0; j <= m; ++j) {
      const Rat aj = aget(a, j);
      if (is_zero(aj)) continue;
      next = next + shift(d[static_cast<std::size_t>(m - j)], j).truncated(count) * aj;
    }
    d.push_back(next);
  }
  return d;
}

TriMatQ toeplitz_matrix(const std::vector<SeriesQ>& d, int n) {
  if (static_cast<int>(d.size()) < n + 1) throw ValidationError("toeplitz_matrix: not enough determinants");
  TriMatQ m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m.set(i, j, d[static_cast<std::size_t>(i + 1)].coef(i - j));
  return m;
}

}  // namespace interp
