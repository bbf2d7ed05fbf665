#include "interp/comb.hpp"

namespace interp {

std::vector<int> AdmissibleFun::preimage_sizes() const {
  std::vector<int> sizes(f.size(), 0);
  for (int v : f) ++sizes[static_cast<std::size_t>(v - 1)];
  return sizes;
}

bool AdmissibleFun::is_valid() const {
  for (int k = 1; k <= n(); ++k)
    if ((*this)(k) < 1 || (*this)(k) > k) return false;
  return true;
}

std::vector<int> RootedTree::child_counts() const {
  std::vector<int> c(static_cast<std::size_t>(n_vertices), 0);
  for (int p : parent) ++c[static_cast<std::size_t>(p)];
  return c;
}

namespace {

struct Walker {
  int n;
  PreimageFilter filter;
  const std::function<void(const AdmissibleFun&)>& visit;
  AdmissibleFun cur;
  std::vector<int> sizes;
  int odd = 0;

  void run(int k) {
    if (k > n) {
      if (!filter.even_only || odd == 0) visit(cur);
      return;
    }
    for (int v = 1; v <= k; ++v) {
      int& sz = sizes[static_cast<std::size_t>(v - 1)];
      if (filter.max_size >= 0 && sz + 1 > filter.max_size) continue;
      ++sz;
      odd += (sz % 2 == 1) ? 1 : -1;
      cur.f[static_cast<std::size_t>(k - 1)] = v;
      // Each remaining assignment can fix at most one odd preimage.
      if (!filter.even_only || odd <= n - k) run(k + 1);
      odd -= (sz % 2 == 1) ? 1 : -1;
      --sz;
    }
  }
};

}  // namespace

void for_each_admissible(int n, const PreimageFilter& filter, const std::function<void(const AdmissibleFun&)>& visit) {
  if (n < 0) throw ValidationError("admissible functions: negative size");
  Walker w{n, filter, visit, AdmissibleFun{std::vector<int>(static_cast<std::size_t>(n), 0)},
           std::vector<int>(static_cast<std::size_t>(n), 0)};
  w.run(1);
}

void for_each_admissible(int n, const std::function<void(const AdmissibleFun&)>& visit) {
  for_each_admissible(n, PreimageFilter{}, visit);
}

std::uint64_t admissible_rank(const AdmissibleFun& f) {
  std::uint64_t r = 0, fact = 1;
  for (int k = 1; k <= f.n(); ++k) {
    if (k > 1) fact *= static_cast<std::uint64_t>(k - 1);
    r += static_cast<std::uint64_t>(f(k) - 1) * fact;
  }
  return r;
}

AdmissibleFun admissible_unrank(int n, std::uint64_t rank) {
  AdmissibleFun f{std::vector<int>(static_cast<std::size_t>(n), 1)};
  for (int k = 1; k <= n; ++k) {
    f.f[static_cast<std::size_t>(k - 1)] = static_cast<int>(rank % static_cast<std::uint64_t>(k)) + 1;
    rank /= static_cast<std::uint64_t>(k);
  }
  if (rank != 0) throw DomainError("admissible_unrank: rank out of range");
  return f;
}

RootedTree tree_from_admissible(const AdmissibleFun& f) {
  RootedTree t{f.n() + 1, {}};
  for (int j = 1; j <= f.n(); ++j) t.parent.push_back(f(j) - 1);
  return t;
}

AdmissibleFun admissible_from_tree(const RootedTree& t) {
  AdmissibleFun f;
  for (int j = 1; j < t.n_vertices; ++j) {
    const int p = t.parent[static_cast<std::size_t>(j - 1)];
    if (p < 0 || p >= j) throw ValidationError("tree is not increasingly labelled");
    f.f.push_back(p + 1);
  }
  return f;
}

std::map<int, int> degrees_histogram(const RootedTree& t) {
  std::map<int, int> h;
  for (int c : t.child_counts()) ++h[c];
  return h;
}

std::pair<Rat, Rat> derivative_identity_check(std::span<const Rat> w, int n) {
  if (n > 7) throw ValidationError("derivative_identity_check: n^n enumeration limited to n <= 7");
  if (static_cast<int>(w.size()) < n + 1) throw ValidationError("derivative_identity_check: W needs n+1 weights");
  Rat lhs = 0;
  std::vector<int> f(static_cast<std::size_t>(n), 1);
  while (true) {
    std::vector<int> sizes(static_cast<std::size_t>(n), 0);
    for (int v : f) ++sizes[static_cast<std::size_t>(v - 1)];
    Rat e = 1;
    for (int s : sizes) e *= w[static_cast<std::size_t>(s)];
    lhs += e;
    int i = 0;
    while (i < n && f[static_cast<std::size_t>(i)] == n) f[static_cast<std::size_t>(i++)] = 1;
    if (i == n) break;
    ++f[static_cast<std::size_t>(i)];
  }
  const SeriesQ ws = series_from_egf(w.first(static_cast<std::size_t>(n + 1)));
  const Rat rhs = pow_int(ws, n).coef(n) * factorial(n);
  return {lhs, rhs};
}

SeriesQ u_ode_residual(std::span<const Rat> w, int m) {
  const SeriesQ z0 = z0_series(w, m);
  const Rat& w0 = w[0];
  if (is_zero(w0)) {
    const Rat w1 = w.size() > 1 ? w[1] : Rat(0);
    return z0 - exps(SeriesQ::monomial(w1, 1, m));
  }
  const SeriesQ u = integrate0(z0);
  const SeriesQ ws = series_from_egf(w.first(static_cast<std::size_t>(m + 1)));
  return (derive(u) * w0 - compose(ws, u * w0)).truncated(m);
}

Poly andre_poly(int n) {
  if (n < 0) throw ValidationError("andre_poly: negative index");
  const Poly t({0, 1}, "t");
  const Poly factor = Poly(1) - t * t * ratio(1, 2);
  Poly a(1);
  for (int k = 0; k < n; ++k) a = factor * a.derivative() + t * a * ratio(k + 2, 2);
  return a.with_param("t");
}

Poly andre_bruteforce(int n) {
  std::vector<Rat> c(static_cast<std::size_t>(n + 1), 0);
  for_each_admissible(n, PreimageFilter{2, false}, [&](const AdmissibleFun& f) {
    int singles = 0;
    for (int s : f.preimage_sizes()) singles += s == 1;
    c[static_cast<std::size_t>(singles)] += 1;
  });
  return Poly(std::move(c), "t");
}

namespace {

void require_small(int vertices) {
  if (vertices < 1 || vertices > 11) throw ValidationError("tree counts are enumerated for 1..11 vertices only");
}

}  // namespace

std::int64_t count_S(int vertices, int leaves) {
  require_small(vertices);
  std::int64_t count = 0;
  for_each_admissible(vertices - 1, PreimageFilter{2, false}, [&](const AdmissibleFun& f) {
    int unhit = 0;
    for (int s : f.preimage_sizes()) unhit += s == 0;
    if (1 + unhit == leaves) ++count;
  });
  return count;
}

std::int64_t count_E(int vertices, int interior) {
  require_small(vertices);
  std::int64_t count = 0;
  for_each_admissible(vertices - 1, PreimageFilter{-1, true}, [&](const AdmissibleFun& f) {
    int inner = 0;
    for (int s : f.preimage_sizes()) inner += s >= 2;
    if (inner == interior) ++count;
  });
  return count;
}

bool idcomben_check(int n) {
  if (n < 0 || 2 * n > 10) throw ValidationError("idcomben_check: needs 0 <= 2n <= 10");
  if (n == 0) return true;
  for (int k = 0; k <= 2 * n + 1; ++k)
    if (count_S(2 * n, k) != count_E(2 * n + 1, k)) return false;
  return true;
}

SeriesP even_family_z0(int m) {
  const Poly t({0, 1}, "t");
  std::vector<Poly> w;
  for (int k = 0; k <= m; ++k) w.push_back(k == 0 ? Poly(1) : (k % 2 == 0 ? t : Poly()));
  return z0_series<Poly>(w, m);
}

SeriesP andre_z0(int m) {
  std::vector<Poly> w{Poly(1), Poly({0, 1}, "t"), Poly(1)};
  w.resize(static_cast<std::size_t>(std::max(m + 1, 3)));
  return z0_series<Poly>(w, m);
}

bool idcomben_substitution_check(const Rat& t0, int m) {
  if (is_zero(t0)) throw DomainError("idcomben_substitution_check: t must be nonzero");
  const SeriesP even = even_family_z0(m + 1);
  const SeriesP andre = andre_z0(m);
  const Rat inv_t2 = 1 / (t0 * t0);
  Rat tk = t0 * t0;  // t^2 * t^k
  for (int k = 0; k <= m; ++k, tk *= t0) {
    const Rat lhs = even.coef(k + 1)(inv_t2) * (k + 1) * tk;
    const Rat rhs = k % 2 == 1 ? andre.coef(k)(t0) : Rat(0);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace interp
