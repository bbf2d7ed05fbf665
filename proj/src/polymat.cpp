#include "interp/polymat.hpp"

#include <algorithm>
#include <limits>

#include "interp/lie_exp.hpp"

namespace interp {

namespace {

constexpr int kNoDegree = std::numeric_limits<int>::min() / 4;
constexpr int kExtraChecks = 3;

int deg_or_none(const Poly& p) { return p.is_zero() ? kNoDegree : p.degree(); }

void same_cutoff(const PolyMat& a, const PolyMat& b) {
  if (a.K() != b.K()) throw ValidationError("PolyMat cutoff mismatch: " + std::to_string(a.K()) + " vs " + std::to_string(b.K()));
}

// Fits a polynomial of degree <= bound through value(0..bound) and checks
// it against value at the next kExtraChecks columns.
template <class Value>
Poly fit_diagonal(int k, int bound, Value value) {
  const int pts = std::max(bound, -1) + 1;
  std::vector<Rat> xs, ys;
  for (int l = 0; l < pts; ++l) {
    xs.emplace_back(l);
    ys.push_back(value(l));
  }
  Poly c = pts > 0 ? interpolate(xs, ys, "u") : Poly();
  for (int l = pts; l < pts + kExtraChecks; ++l)
    if (c(l) != value(l))
      throw ConsistencyError("diagonal " + std::to_string(k) + " is not a polynomial of degree <= " +
                             std::to_string(std::max(bound, 0)) + " (mismatch at column " + std::to_string(l) + ")");
  return c.with_param("u");
}

std::vector<int> product_bound(const PolyMat& a, const PolyMat& b) {
  std::vector<int> d;
  for (int k = 0; k <= a.K(); ++k) {
    int best = kNoDegree;
    for (int h = 0; h <= k; ++h) best = std::max(best, deg_or_none(a.p(h)) + deg_or_none(b.p(k - h)));
    d.push_back(best < 0 ? -1 : best);
  }
  return d;
}

}  // namespace

PolyMat::PolyMat(std::vector<Poly> polys) : polys_(std::move(polys)) {
  if (polys_.empty()) throw ValidationError("PolyMat needs at least p_0");
  for (auto& p : polys_) {
    if (!p.is_constant() && !p.param().empty() && p.param() != "u")
      throw RingMismatch("PolyMat diagonals are polynomials in u, got '" + p.param() + "'");
    p = p.with_param("u");
  }
}

PolyMat PolyMat::identity(int k) {
  std::vector<Poly> p(static_cast<std::size_t>(k + 1));
  p[0] = Poly(1);
  return PolyMat(std::move(p));
}

PolyMat PolyMat::zero(int k) { return PolyMat(std::vector<Poly>(static_cast<std::size_t>(k + 1))); }

PolyMat operator+(const PolyMat& a, const PolyMat& b) {
  same_cutoff(a, b);
  std::vector<Poly> c;
  for (int k = 0; k <= a.K(); ++k) c.push_back(a.p(k) + b.p(k));
  return PolyMat(std::move(c));
}

PolyMat operator-(const PolyMat& a, const PolyMat& b) {
  same_cutoff(a, b);
  std::vector<Poly> c;
  for (int k = 0; k <= a.K(); ++k) c.push_back(a.p(k) - b.p(k));
  return PolyMat(std::move(c));
}

PolyMat operator*(const PolyMat& a, const Rat& c) {
  std::vector<Poly> r;
  for (const auto& p : a.polys()) r.push_back(p * c);
  return PolyMat(std::move(r));
}

TriMatQ pm_eval(const PolyMat& p, int n) {
  if (n - 1 > p.K())
    throw ValidationError("pm_eval: dimension " + std::to_string(n) + " needs diagonals beyond K = " + std::to_string(p.K()));
  TriMatQ m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m.set(i, j, p.p(i - j)(j));
  return m;
}

PolyMat pm_mul(const PolyMat& a, const PolyMat& b) {
  same_cutoff(a, b);
  const auto bound = product_bound(a, b);
  std::vector<Poly> c;
  for (int k = 0; k <= a.K(); ++k) {
    c.push_back(fit_diagonal(k, bound[static_cast<std::size_t>(k)], [&](int l) {
      // (AB)_{l+k, l} = sum_h A_{l+k, l+k-h} B_{l+k-h, l}
      Rat s = 0;
      for (int h = 0; h <= k; ++h) s += a.p(h)(l + k - h) * b.p(k - h)(l);
      return s;
    }));
  }
  return PolyMat(std::move(c));
}

PolyMat pm_bracket(const PolyMat& a, const PolyMat& b) {
  const PolyMat c = pm_mul(a, b) - pm_mul(b, a);
  const auto bound = product_bound(a, b);
  for (int k = 0; k <= c.K(); ++k) {
    const int d = bound[static_cast<std::size_t>(k)];
    if (!c.p(k).is_zero() && c.p(k).degree() >= d)
      throw ConsistencyError("pm_bracket: diagonal " + std::to_string(k) + " has degree " +
                             std::to_string(c.p(k).degree()) + ", expected < " + std::to_string(d));
  }
  return c;
}

PolyMat tau_lambda(const PolyMat& p, const Rat& lambda) {
  std::vector<Poly> r;
  for (const auto& q : p.polys()) r.push_back(q.shifted(lambda));
  return PolyMat(std::move(r));
}

std::vector<SeriesQ> pm_to_pd(const PolyMat& p) {
  int maxdeg = 0;
  for (const auto& q : p.polys()) maxdeg = std::max(maxdeg, q.degree());
  std::vector<SeriesQ> out;
  for (int n = 0; n <= maxdeg; ++n) {
    std::vector<Rat> c;
    for (int k = 0; k <= p.K(); ++k) c.push_back(p.p(k).coeff(n));
    out.emplace_back(0, std::move(c));
  }
  return out;
}

PolyMat pd_to_pm(const std::vector<SeriesQ>& alpha, int k) {
  std::vector<Poly> polys;
  for (int d = 0; d <= k; ++d) {
    std::vector<Rat> c;
    for (const auto& a : alpha) c.push_back(a.coef(d));
    polys.emplace_back(std::move(c), "u");
  }
  return PolyMat(std::move(polys));
}

TriMatQ pd_eval(const std::vector<SeriesQ>& alpha, int n) {
  TriMatQ sum(n);
  TriMatQ dpow = TriMatQ::identity(n);
  TriMatQ d(n);
  for (int i = 0; i < n; ++i) d.set(i, i, i);
  for (const auto& a : alpha) {
    sum = sum + lie_to_matrix(LieElem(a, SeriesQ::zero(a.order())), n) * dpow;
    dpow = dpow * d;
  }
  return sum;
}

std::vector<int> pm_series_degree_bound(const PolyMat& p) {
  std::vector<int> best(static_cast<std::size_t>(p.K() + 1), kNoDegree);
  best[0] = 0;
  for (int k = 1; k <= p.K(); ++k)
    for (int h = 1; h <= k; ++h)
      best[static_cast<std::size_t>(k)] =
          std::max(best[static_cast<std::size_t>(k)], deg_or_none(p.p(h)) + best[static_cast<std::size_t>(k - h)]);
  for (auto& b : best) b = std::max(b, -1);
  return best;
}

namespace {

template <class MatFn>
PolyMat fit_block_function(const PolyMat& p, MatFn fn) {
  const int kk = p.K();
  const auto bound = pm_series_degree_bound(p);
  const int max_pts = *std::max_element(bound.begin(), bound.end()) + 1 + kExtraChecks;
  // Column 0 of fn(block at l) holds diagonals 0..K at column l.
  std::vector<std::vector<Rat>> at_point;
  for (int l = 0; l < max_pts; ++l) {
    TriMatQ block(kk + 1);
    for (int i = 0; i <= kk; ++i)
      for (int j = 0; j <= i; ++j) block.set(i, j, p.p(i - j)(l + j));
    const TriMatQ r = fn(block);
    std::vector<Rat> col;
    for (int i = 0; i <= kk; ++i) col.push_back(r.at(i, 0));
    at_point.push_back(std::move(col));
  }
  std::vector<Poly> c;
  for (int k = 0; k <= kk; ++k)
    c.push_back(fit_diagonal(k, bound[static_cast<std::size_t>(k)],
                             [&](int l) { return at_point[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)]; }));
  return PolyMat(std::move(c));
}

}  // namespace

PolyMat pm_exp(const PolyMat& p) {
  if (!p.p(0).is_zero()) throw DomainError("pm_exp: p_0 must be 0");
  return fit_block_function(p, mexp_strict);
}

PolyMat pm_log(const PolyMat& p) {
  if (!(p.p(0) == Poly(1)) || !p.p(0).is_constant()) throw DomainError("pm_log: p_0 must be the constant 1");
  return fit_block_function(p, mlog_unipotent);
}

bool degree_profile_ok(const PolyMat& p, const std::function<int(int)>& bound) {
  for (int k = 0; k <= p.K(); ++k)
    if (p.p(k).degree() > bound(k)) return false;
  return true;
}

std::string to_string(const PolyMat& p) {
  std::string out;
  for (int k = 0; k <= p.K(); ++k) out += "p" + std::to_string(k) + " = " + to_string(p.p(k)) + "\n";
  return out;
}

}  // namespace interp
