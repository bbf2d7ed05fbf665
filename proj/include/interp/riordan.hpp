#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "interp/group.hpp"
#include "interp/series.hpp"

namespace interp {

/// n x n lower-triangular matrix; row i stores entries 0..i.
template <CoefRing R>
class TriMat {
 public:
  TriMat() = default;
  explicit TriMat(int n) : n_(n), rows_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) rows_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i + 1));
  }

  static TriMat identity(int n) {
    TriMat m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, R(Rat(1)));
    return m;
  }

  /// Rows given as ragged lists; row i must have at most i+1 entries.
  static TriMat from_rows(std::vector<std::vector<R>> rows) {
    TriMat m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
      auto& row = rows[static_cast<std::size_t>(i)];
      if (static_cast<int>(row.size()) > i + 1)
        throw ValidationError("matrix row " + std::to_string(i) + " has entries above the diagonal");
      for (int j = 0; j < static_cast<int>(row.size()); ++j) m.set(i, j, row[static_cast<std::size_t>(j)]);
    }
    return m;
  }

  int n() const { return n_; }

  R at(int i, int j) const {
    if (j > i) return R{};
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  void set(int i, int j, R v) {
    if (j > i) throw ValidationError("write above the diagonal of a lower-triangular matrix");
    rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(v);
  }

  /// Leading principal block of size m.
  TriMat leading(int m) const {
    TriMat r(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j) r.set(i, j, at(i, j));
    return r;
  }

  /// Drops the first `count` rows and columns.
  TriMat drop_leading(int count) const {
    TriMat r(n_ - count);
    for (int i = 0; i < r.n_; ++i)
      for (int j = 0; j <= i; ++j) r.set(i, j, at(i + count, j + count));
    return r;
  }

  bool is_strict() const {
    for (int i = 0; i < n_; ++i)
      if (!is_zero(at(i, i))) return false;
    return true;
  }
  bool is_unipotent() const {
    for (int i = 0; i < n_; ++i)
      if (!(at(i, i) == R(Rat(1)))) return false;
    return true;
  }

  friend TriMat operator+(const TriMat& a, const TriMat& b) { return zip(a, b, [](const R& x, const R& y) { return R(x + y); }); }
  friend TriMat operator-(const TriMat& a, const TriMat& b) { return zip(a, b, [](const R& x, const R& y) { return R(x - y); }); }
  friend TriMat operator*(TriMat a, const Rat& q) {
    for (auto& row : a.rows_)
      for (auto& v : row) v = R(v * q);
    return a;
  }

  friend TriMat operator*(const TriMat& a, const TriMat& b) {
    check_dims(a, b);
    TriMat r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k <= i; ++k) {
        const R& aik = a.rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        if (is_zero(aik)) continue;
        for (int j = 0; j <= k; ++j) {
          R& slot = r.rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          slot = R(slot + aik * b.rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
        }
      }
    return r;
  }

  friend bool operator==(const TriMat&, const TriMat&) = default;

  const std::vector<std::vector<R>>& rows() const { return rows_; }

 private:
  static void check_dims(const TriMat& a, const TriMat& b) {
    if (a.n_ != b.n_)
      throw ValidationError("matrix dimension mismatch: " + std::to_string(a.n_) + " vs " + std::to_string(b.n_));
  }
  template <class Op>
  static TriMat zip(const TriMat& a, const TriMat& b, Op op) {
    check_dims(a, b);
    TriMat r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j <= i; ++j) r.set(i, j, op(a.at(i, j), b.at(i, j)));
    return r;
  }

  int n_ = 0;
  std::vector<std::vector<R>> rows_;
};

using TriMatQ = TriMat<Rat>;

template <CoefRing R>
TriMat<R> mat_mul(const TriMat<R>& a, const TriMat<R>& b) {
  return a * b;
}

/// Inverse of a unipotent matrix by forward substitution.
template <CoefRing R>
TriMat<R> mat_inv_unipotent(const TriMat<R>& a) {
  if (!a.is_unipotent()) throw DomainError("mat_inv_unipotent: diagonal must be all ones");
  const int n = a.n();
  TriMat<R> r = TriMat<R>::identity(n);
  for (int j = 0; j < n; ++j)
    for (int i = j + 1; i < n; ++i) {
      R acc{};
      for (int k = j; k < i; ++k) acc = R(acc + a.at(i, k) * r.at(k, j));
      r.set(i, j, R(-acc));
    }
  return r;
}

template <CoefRing R>
std::string to_string(const TriMat<R>& m) {
  std::string out;
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j <= i; ++j) {
      if (j > 0) out += ' ';
      out += to_string(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

template <CoefRing R>
std::ostream& operator<<(std::ostream& os, const TriMat<R>& m) {
  return os << '\n' << to_string(m);
}

/// rho(A, alpha)_{i,j} = [x^i] A alpha^j, for i, j < n.
TriMatQ rho(const GroupElem& g, int n);

/// Column j of m as a series known through x^{n-1}.
SeriesQ column_series(const TriMatQ& m, int j);

/// a_0..a_{n-2} solved from the k = 0 recurrences, then checked against
/// every (n, k). Throws DomainError naming the first failing (n, k).
std::vector<Rat> aseq_extract(const TriMatQ& m);

/// First (n, k) where M_{n+1,k+1} != sum_j a_j M_{n,k+j}, if any.
/// Missing a_j read as zero.
std::optional<std::pair<int, int>> aseq_violation(const TriMatQ& m, const std::vector<Rat>& a);

/// x / beta^<-1>
SeriesQ aseq_formula(const SeriesQ& beta);

/// Column 0 from col0, further columns from the A-sequence recurrence.
TriMatQ rogers_reconstruct(const SeriesQ& col0, const std::vector<Rat>& a, int n);

/// d_0 = 1, d_{m+1} = sum_{j<=m} a_j d_{m-j} x^j, for m < count. Each d_m
/// is a polynomial, returned exactly as a series known through x^count.
std::vector<SeriesQ> toeplitz_d(const std::vector<Rat>& a, int count);

/// M_{i,j} = [x^{i-j}] d_{i+1} for i, j < n (needs n + 1 determinants).
/// This is rho(A, xA) for A = sum a_j x^j.
TriMatQ toeplitz_matrix(const std::vector<SeriesQ>& d, int n);

}  // namespace interp
