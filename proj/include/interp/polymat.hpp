#pragma once

#include <functional>
#include <vector>

#include "interp/poly.hpp"
#include "interp/riordan.hpp"
#include "interp/series.hpp"

namespace interp {

/// Lower-triangular matrix with M_{i,j} = p_{i-j}(j), known through its
/// first K+1 diagonals p_0..p_K (polynomials in u).
class PolyMat {
 public:
  explicit PolyMat(std::vector<Poly> polys);

  static PolyMat identity(int k);
  static PolyMat zero(int k);

  int K() const { return static_cast<int>(polys_.size()) - 1; }
  const Poly& p(int k) const { return polys_[static_cast<std::size_t>(k)]; }
  const std::vector<Poly>& polys() const { return polys_; }

  friend PolyMat operator+(const PolyMat& a, const PolyMat& b);
  friend PolyMat operator-(const PolyMat& a, const PolyMat& b);
  friend PolyMat operator*(const PolyMat& a, const Rat& c);
  friend bool operator==(const PolyMat&, const PolyMat&) = default;

 private:
  std::vector<Poly> polys_;
};

/// n x n evaluation; needs n - 1 <= K.
TriMatQ pm_eval(const PolyMat& p, int n);

/// Product by fitting each diagonal of the numeric product at the
/// integer columns 0..D_k, D_k = max_h deg a_h + deg b_{k-h}, and checking
/// three further columns. A failed check throws ConsistencyError.
PolyMat pm_mul(const PolyMat& a, const PolyMat& b);

/// ab - ba; each diagonal must drop strictly below D_k (ConsistencyError
/// otherwise).
PolyMat pm_bracket(const PolyMat& a, const PolyMat& b);

/// p_k(u) -> p_k(u + lambda)
PolyMat tau_lambda(const PolyMat& p, const Rat& lambda);

/// alpha(n)_k = [u^n] p_k, for n = 0..max degree; each a series through x^K.
std::vector<SeriesQ> pm_to_pd(const PolyMat& p);
PolyMat pd_to_pm(const std::vector<SeriesQ>& alpha, int k);

/// sum_n P_{alpha(n)} D^n evaluated at dimension n (D = diag(0, 1, 2, ...)).
TriMatQ pd_eval(const std::vector<SeriesQ>& alpha, int n);

/// A-priori degree bounds for the diagonals of exp(M(p)) (p_0 = 0) or
/// log(M(p)) (p_0 = 1): the largest total degree over compositions of k.
std::vector<int> pm_series_degree_bound(const PolyMat& p);

/// exp of a strict PolyMat (p_0 = 0), diagonals fitted and verified.
PolyMat pm_exp(const PolyMat& p);
/// log of a unipotent PolyMat (p_0 = 1), diagonals fitted and verified.
PolyMat pm_log(const PolyMat& p);

/// deg p_k <= bound(k) for every k <= K.
bool degree_profile_ok(const PolyMat& p, const std::function<int(int)>& bound);

std::string to_string(const PolyMat& p);

}  // namespace interp
