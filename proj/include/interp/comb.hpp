#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "interp/poly.hpp"
#include "interp/series.hpp"

namespace interp {

/// f : {1..n} -> {1..n} with f(k) <= k; f[k-1] holds f(k).
struct AdmissibleFun {
  std::vector<int> f;

  int n() const { return static_cast<int>(f.size()); }
  int operator()(int k) const { return f[static_cast<std::size_t>(k - 1)]; }
  /// #f^{-1}(k) for k = 1..n, stored at index k-1.
  std::vector<int> preimage_sizes() const;
  bool is_valid() const;
};

/// Increasing tree on vertices 0..n; parent[j-1] is the parent of j.
struct RootedTree {
  int n_vertices = 1;
  std::vector<int> parent;

  std::vector<int> child_counts() const;
  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

/// Visits every admissible function on {1..n} in lexicographic order.
void for_each_admissible(int n, const std::function<void(const AdmissibleFun&)>& visit);

/// Same, restricted to functions whose final preimage sizes all satisfy
/// `size_ok`. Partial assignments that can no longer succeed are pruned
/// when `max_size` (largest admissible preimage) or `even_only` says so.
struct PreimageFilter {
  int max_size = -1;
  bool even_only = false;
};
void for_each_admissible(int n, const PreimageFilter& filter, const std::function<void(const AdmissibleFun&)>& visit);

/// sum_k (f(k) - 1)(k - 1)!, a bijection onto 0..n!-1.
std::uint64_t admissible_rank(const AdmissibleFun& f);
AdmissibleFun admissible_unrank(int n, std::uint64_t rank);

/// Parent of j is f(j) - 1.
RootedTree tree_from_admissible(const AdmissibleFun& f);
AdmissibleFun admissible_from_tree(const RootedTree& t);
/// Number of vertices with each child count.
std::map<int, int> degrees_histogram(const RootedTree& t);

/// EGF weights W_n of W = sum W_n X^n/n!, from an ordinary series.
template <CoefRing R>
std::vector<R> egf_from_series(const Series<R>& w) {
  std::vector<R> out;
  for (int k = 0; k <= w.order(); ++k) out.push_back(R(w.coef(k) * factorial(k)));
  return out;
}

template <CoefRing R>
Series<R> series_from_egf(std::span<const R> w) {
  std::vector<R> c;
  for (std::size_t k = 0; k < w.size(); ++k) c.push_back(R(w[k] / factorial(static_cast<int>(k))));
  return Series<R>(0, std::move(c));
}

/// prod_{k=1}^{n} W_{#f^{-1}(k)}
template <CoefRing R>
R energy(std::span<const R> w, const AdmissibleFun& f) {
  R e(Rat(1));
  for (int size : f.preimage_sizes()) {
    if (size >= static_cast<int>(w.size())) throw ValidationError("energy: weight index beyond the given W");
    e = R(e * w[static_cast<std::size_t>(size)]);
  }
  return e;
}

/// Z_0 = sum_n [X^0]G_n s^n/n!, G_0 = 1, G_{n+1} = (W G_n)', through s^m.
/// Needs W_0..W_m.
template <CoefRing R>
Series<R> z0_series(std::span<const R> w, int m) {
  if (static_cast<int>(w.size()) < m + 1)
    throw ValidationError("z0_series: W needs " + std::to_string(m + 1) + " weights for s-order " + std::to_string(m));
  const Series<R> ws = series_from_egf(w.first(static_cast<std::size_t>(m + 1)));
  Series<R> g = Series<R>::constant(R(Rat(1)), m);
  std::vector<R> z{R(Rat(1))};
  for (int n = 1; n <= m; ++n) {
    g = derive(ws * g);
    z.push_back(R(g.coef(0) / factorial(n)));
  }
  return Series<R>(0, std::move(z), m);
}

/// sum over the n! admissible functions of e_W(f); n <= 9.
template <CoefRing R>
R z0_bruteforce(std::span<const R> w, int n) {
  if (n > 9) throw ValidationError("z0_bruteforce: n! enumeration limited to n <= 9");
  if (n < 0) throw ValidationError("z0_bruteforce: negative size");
  R sum{};
  for_each_admissible(n, [&](const AdmissibleFun& f) { sum = R(sum + energy(w, f)); });
  return sum;
}

/// Both sides of sum_{f : {n} -> {n}} e_W(f) = [X^0] d^n/dX^n W^n; n <= 7.
std::pair<Rat, Rat> derivative_identity_check(std::span<const Rat> w, int n);

/// W_0 U' - W o (W_0 U) with U the primitive of Z_0, through s^m. For
/// W_0 = 0 the residual is Z_0 - e^{W_1 s} instead.
SeriesQ u_ode_residual(std::span<const Rat> w, int m);

/// A_0 = 1, A_{n+1} = (1 - t^2/2) A_n' + t (n+2)/2 A_n.
Poly andre_poly(int n);

/// [t^k] counts admissible f on {n} with preimages of size <= 2 and k
/// singleton preimages.
Poly andre_bruteforce(int n);

/// Increasing trees on 2n vertices with every vertex of degree <= 2 and
/// k leaves; vertex count <= 11.
std::int64_t count_S(int vertices, int leaves);
/// Increasing trees on 2n+1 vertices with all degrees even and k
/// interior vertices; vertex count <= 11.
std::int64_t count_E(int vertices, int interior);

/// count_S(2n, k) = count_E(2n+1, k) for all k; 2n <= 10.
bool idcomben_check(int n);

/// Z_0 for W = 1 - t + t cosh X, through s^m, coefficients in t.
SeriesP even_family_z0(int m);

/// Z_0 for W = 1 + tX + X^2/2, through s^m, coefficients in t.
SeriesP andre_z0(int m);

/// At t = t0 (nonzero), checks through s^m that
/// t^2 d/ds Z_even(s t)|_{t -> 1/t^2} equals the odd part of the Andre Z_0.
bool idcomben_substitution_check(const Rat& t0, int m);

}  // namespace interp
