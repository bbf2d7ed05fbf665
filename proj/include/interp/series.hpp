#pragma once

#include <algorithm>
#include <concepts>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "interp/errors.hpp"
#include "interp/poly.hpp"
#include "interp/rational.hpp"

namespace interp {

/// Coefficient rings a Series can be built over: Rat, and Poly for jets
/// carrying one formal parameter.
template <class R>
concept CoefRing = std::regular<R> && requires(R a, const R& b, const Rat& q) {
  { R(a + b) };
  { R(a - b) };
  { R(a * b) };
  { R(-a) };
  { R(a * q) };
  { R(a / q) };
  { is_zero(b) } -> std::same_as<bool>;
  { R(unit_inverse(b)) };
  { to_string(b) } -> std::convertible_to<std::string>;
};

/// Truncated formal Laurent series sum_{k=val}^{order} c_k x^k + O(x^{order+1}).
///
/// Coefficients at exponents <= order are exact; nothing beyond is known
/// and no operation reads past it. The stored lowest exponent is
/// min(0, valuation), so ordinary power series always start at x^0 and a
/// Laurent jet starts at its first nonzero coefficient.
template <CoefRing R>
class Series {
 public:
  /// Zero, known through x^0.
  Series() : val_(0), order_(0), c_(1) {}

  /// Coefficients for exponents val, val+1, ...; known through
  /// val + coeffs.size() - 1.
  Series(int val, std::vector<R> coeffs)
      : val_(val), order_(val + static_cast<int>(coeffs.size()) - 1), c_(std::move(coeffs)) {
    normalize();
  }

  /// Coefficients for exponents val, val+1, ..., padded with exact zeros
  /// up to `order`.
  Series(int val, std::vector<R> coeffs, int order) : val_(val), order_(order), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) > order - val + 1)
      throw ValidationError("series: more coefficients than the truncation order allows");
    c_.resize(static_cast<std::size_t>(std::max(0, order - val + 1)));
    normalize();
  }

  static Series zero(int order) { return Series(0, {}, order); }
  static Series constant(R c, int order) { return Series(0, {std::move(c)}, order); }
  static Series monomial(R c, int exponent, int order) {
    if (exponent > order) return zero(order);
    return Series(exponent, {std::move(c)}, order);
  }

  int order() const { return order_; }
  /// Lowest stored exponent (never positive).
  int val() const { return val_; }

  /// First exponent with a nonzero coefficient, or order()+1 when every
  /// known coefficient vanishes.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!is_zero(c_[i])) return val_ + static_cast<int>(i);
    return order_ + 1;
  }

  /// [x^k]; exponents below val() read as zero, exponents beyond the
  /// truncation order are an error.
  R coef(int k) const {
    if (k > order_)
      throw DomainError("coefficient x^" + std::to_string(k) + " is beyond truncation order " +
                        std::to_string(order_));
    if (k < val_) return R{};
    return c_[static_cast<std::size_t>(k - val_)];
  }

  /// Coefficients for exponents val()..order().
  const std::vector<R>& coeffs() const { return c_; }

  /// Forgets everything above x^n. Asking for more than is known keeps
  /// the current order: precision is never invented.
  Series truncated(int n) const {
    if (n >= order_) return *this;
    Series r = *this;
    r.order_ = n;
    r.c_.resize(static_cast<std::size_t>(std::max(0, n - val_ + 1)));
    r.normalize();
    return r;
  }

  Series& operator+=(const Series& o) { return *this = combine(*this, o, std::plus<>{}); }
  Series& operator-=(const Series& o) { return *this = combine(*this, o, std::minus<>{}); }

  friend Series operator+(const Series& a, const Series& b) { return combine(a, b, std::plus<>{}); }
  friend Series operator-(const Series& a, const Series& b) { return combine(a, b, std::minus<>{}); }
  friend Series operator-(Series a) {
    for (auto& c : a.c_) c = R(-c);
    return a;
  }

  friend Series operator*(const Series& a, const Series& b) {
    const int va = a.valuation();
    const int vb = b.valuation();
    const int order = std::min(a.order_ + vb, b.order_ + va);
    const int lo = a.val_ + b.val_;
    std::vector<R> r(static_cast<std::size_t>(std::max(0, order - lo + 1)));
    for (int i = std::max(a.val_, va); i <= a.order_; ++i) {
      const R& ai = a.c_[static_cast<std::size_t>(i - a.val_)];
      if (is_zero(ai)) continue;
      for (int j = std::max(b.val_, vb); j <= b.order_ && i + j <= order; ++j) {
        const R& bj = b.c_[static_cast<std::size_t>(j - b.val_)];
        if (is_zero(bj)) continue;
        R& slot = r[static_cast<std::size_t>(i + j - lo)];
        slot = R(slot + ai * bj);
      }
    }
    return Series(lo, std::move(r), order);
  }

  /// Coefficient-wise scaling.
  friend Series operator*(Series a, const Rat& q) {
    for (auto& c : a.c_) c = R(c * q);
    a.normalize();
    return a;
  }
  friend Series operator*(const Rat& q, Series a) { return std::move(a) * q; }
  friend Series operator/(Series a, const Rat& q) {
    if (is_zero(q)) throw DomainError("division by zero");
    for (auto& c : a.c_) c = R(c / q);
    return a;
  }

  /// Same truncation order and identical known coefficients.
  friend bool operator==(const Series& a, const Series& b) {
    if (a.order_ != b.order_) return false;
    for (int k = std::min(a.val_, b.val_); k <= a.order_; ++k)
      if (!(a.coef(k) == b.coef(k))) return false;
    return true;
  }

  /// Maps every coefficient through f; the truncation is kept.
  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Series<S>(val_, std::move(out), order_);
  }

 private:
  template <class Op>
  static Series combine(const Series& a, const Series& b, Op op) {
    const int order = std::min(a.order_, b.order_);
    const int lo = std::min(a.val_, b.val_);
    std::vector<R> r;
    r.reserve(static_cast<std::size_t>(std::max(0, order - lo + 1)));
    for (int k = lo; k <= order; ++k) r.push_back(R(op(a.coef(k), b.coef(k))));
    return Series(lo, std::move(r), order);
  }

  void normalize() {
    if (val_ > 0) {
      c_.insert(c_.begin(), static_cast<std::size_t>(val_), R{});
      val_ = 0;
      c_.resize(static_cast<std::size_t>(std::max(0, order_ + 1)));
    }
    std::size_t drop = 0;
    while (val_ + static_cast<int>(drop) < 0 && drop < c_.size() && is_zero(c_[drop])) ++drop;
    if (drop == c_.size() && val_ < 0) {
      // Entirely zero Laurent jet: keep the x^0 anchor when it is known.
      c_.clear();
      val_ = 0;
      c_.resize(static_cast<std::size_t>(std::max(0, order_ + 1)));
      return;
    }
    if (drop > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(drop));
      val_ += static_cast<int>(drop);
    }
  }

  int val_;
  int order_;
  std::vector<R> c_;
};

using SeriesQ = Series<Rat>;
using SeriesP = Series<Poly>;

namespace detail {
template <CoefRing R>
R one() {
  return R(Rat(1));
}
}  // namespace detail

/// x^d * a.
template <CoefRing R>
Series<R> shift(const Series<R>& a, int d) {
  std::vector<R> c;
  for (int k = a.val(); k <= a.order(); ++k) c.push_back(a.coef(k));
  return Series<R>(a.val() + d, std::move(c), a.order() + d);
}

template <CoefRing R>
Series<R> scale(Series<R> a, const R& c) {
  return a.map([&](const R& x) { return R(x * c); });
}

template <CoefRing R>
bool agree_through(const Series<R>& a, const Series<R>& b, int n) {
  if (a.order() < n || b.order() < n) return false;
  return a.truncated(n) == b.truncated(n);
}

template <CoefRing R>
Series<R> derive(const Series<R>& a) {
  std::vector<R> c;
  const int lo = a.val() - 1;
  for (int k = lo; k <= a.order() - 1; ++k) c.push_back(R(a.coef(k + 1) * Rat(k + 1)));
  return Series<R>(lo, std::move(c), a.order() - 1);
}

/// Primitive with zero constant term. The result is known one order
/// further than the input.
template <CoefRing R>
Series<R> integrate0(const Series<R>& a) {
  if (a.valuation() < 0) throw DomainError("integrate0: Laurent input (use laurent_primitive)");
  std::vector<R> c{R{}};
  for (int k = 0; k <= a.order(); ++k) c.push_back(R(a.coef(k) / Rat(k + 1)));
  return Series<R>(0, std::move(c), a.order() + 1);
}

template <CoefRing R>
struct LaurentPrimitive {
  Series<R> primitive;
  R residue;
};

/// F with F' = f - residue/x and zero constant term.
template <CoefRing R>
LaurentPrimitive<R> laurent_primitive(const Series<R>& f) {
  std::vector<R> c;
  const int lo = std::min(0, f.val() + 1);
  R residue{};
  for (int k = lo; k <= f.order() + 1; ++k) {
    if (k == 0) {
      c.push_back(R{});
      residue = f.order() >= -1 ? f.coef(-1) : R{};
      continue;
    }
    c.push_back(R(f.coef(k - 1) / Rat(k)));
  }
  return {Series<R>(lo, std::move(c), f.order() + 1), std::move(residue)};
}

/// 1/a for a = x^v * unit.
template <CoefRing R>
Series<R> reciprocal(const Series<R>& a) {
  const int v = a.valuation();
  if (v > a.order()) throw DomainError("reciprocal of a series that vanishes through its order");
  const Series<R> u = shift(a, -v);
  const int n = u.order();
  const R inv0 = unit_inverse(u.coef(0));
  std::vector<R> w;
  w.reserve(static_cast<std::size_t>(n + 1));
  w.push_back(inv0);
  for (int k = 1; k <= n; ++k) {
    R acc{};
    for (int j = 1; j <= k; ++j) acc = R(acc + u.coef(j) * w[static_cast<std::size_t>(k - j)]);
    w.push_back(R(-(acc * inv0)));
  }
  return shift(Series<R>(0, std::move(w), n), -v);
}

/// a^k for any integer k (negative k needs an invertible leading term).
template <CoefRing R>
Series<R> pow_int(const Series<R>& a, int k) {
  if (k < 0) return pow_int(reciprocal(a), -k);
  if (k == 0) return Series<R>::constant(detail::one<R>(), a.order() - std::min(0, a.valuation()));
  Series<R> result = a;
  bool started = false;
  Series<R> base = a;
  while (k > 0) {
    if (k & 1) {
      result = started ? result * base : base;
      started = true;
    }
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

/// outer(inner). inner must have zero constant term; a Laurent outer also
/// needs inner = x^v * unit.
template <CoefRing R>
Series<R> compose(const Series<R>& outer, const Series<R>& inner) {
  const int vi = inner.valuation();
  if (vi < 1) throw DomainError("compose: inner series has a nonzero constant term or a pole");
  const int no = outer.order();
  const int ni = inner.order();
  int target = vi * (no + 1) - 1;
  int kmin = 0;
  int kpos = 0;
  for (int k = outer.val(); k <= no; ++k) {
    if (k == 0 || is_zero(outer.coef(k))) continue;
    if (k < 0 && kmin == 0) kmin = k;
    if (k > 0 && kpos == 0) kpos = k;
  }
  if (kpos > 0) target = std::min(target, ni + (kpos - 1) * vi);
  if (kmin < 0) {
    if (vi > ni) throw DomainError("compose: Laurent outer needs an inner series with invertible leading term");
    target = std::min(target, ni + (kmin - 1) * vi);
  }

  Series<R> acc = Series<R>::constant(R{}, target);
  for (int k = no; k >= 1; --k) acc = (acc + Series<R>::constant(outer.coef(k), target)) * inner;
  acc = acc + Series<R>::constant(outer.coef(0), target);
  if (kmin < 0) {
    const Series<R> inv = reciprocal(inner);
    Series<R> neg = Series<R>::constant(R{}, target - kmin * vi);
    for (int k = kmin; k <= -1; ++k) neg = (neg + Series<R>::constant(outer.coef(k), target - kmin * vi)) * inv;
    acc = acc + neg;
  }
  return acc.truncated(target);
}

/// Compositional inverse of a = a_1 x + ..., a_1 a unit (Lagrange inversion).
template <CoefRing R>
Series<R> reversion(const Series<R>& a) {
  if (a.valuation() != 1 || a.order() < 1) throw DomainError("reversion: series must have valuation exactly 1");
  const int n = a.order();
  const Series<R> phi = reciprocal(shift(a, -1));  // x / a, known through n-1
  std::vector<R> r{R{}};
  Series<R> p = phi;
  for (int k = 1; k <= n; ++k) {
    r.push_back(R(p.coef(k - 1) / Rat(k)));
    if (k < n) p = (p * phi).truncated(n - 1);
  }
  return Series<R>(0, std::move(r), n);
}

template <CoefRing R>
void require_unit_constant(const Series<R>& a, const char* what) {
  if (a.val() < 0 || a.order() < 0 || !(a.coef(0) == detail::one<R>()))
    throw DomainError(std::string(what) + ": constant term must be exactly 1");
}

/// Principal logarithm of a series with constant term 1.
template <CoefRing R>
Series<R> log1p(const Series<R>& a) {
  require_unit_constant(a, "log1p");
  return integrate0(derive(a) * reciprocal(a));
}

/// e^a for a with zero constant term.
template <CoefRing R>
Series<R> exps(const Series<R>& a) {
  if (a.valuation() < 1) throw DomainError("exps: argument must have zero constant term");
  const int n = a.order();
  std::vector<R> e{detail::one<R>()};
  for (int k = 1; k <= n; ++k) {
    R acc{};
    for (int j = 1; j <= k; ++j) acc = R(acc + a.coef(j) * e[static_cast<std::size_t>(k - j)] * Rat(j));
    e.push_back(R(acc / Rat(k)));
  }
  return Series<R>(0, std::move(e), n);
}

/// a^kappa = e^{kappa log a} for a with constant term 1.
template <CoefRing R>
Series<R> powq(const Series<R>& a, const Rat& kappa) {
  require_unit_constant(a, "powq");
  return exps(log1p(a) * kappa);
}

/// Human-readable form "1 - x + 1/2*x^2 + O(x^3)". Poly coefficients are
/// parenthesised.
template <CoefRing R>
std::string to_string(const Series<R>& a) {
  std::string out;
  for (int k = a.val(); k <= a.order(); ++k) {
    const R c = a.coef(k);
    if (is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    std::string cs = to_string(c);
    const bool compound = cs.find_first_of(" ") != std::string::npos;
    if (compound) cs = "(" + cs + ")";
    if (k == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += "x";
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(x^" + std::to_string(a.order() + 1) + ")";
}

template <CoefRing R>
std::ostream& operator<<(std::ostream& os, const Series<R>& a) {
  return os << to_string(a);
}

/// Series over Q read as a series over Q[param].
inline SeriesP promote(const SeriesQ& a, const std::string& param = "") {
  return a.map([&](const Rat& q) { return Poly(q).with_param(param); });
}

/// Specialises the formal parameter of every coefficient at `value`.
inline SeriesQ eval_param(const SeriesP& a, const Rat& value) {
  return a.map([&](const Poly& p) { return p(value); });
}

/// Drops parameter powers above max_degree in every coefficient.
inline SeriesP truncate_param(const SeriesP& a, int max_degree) {
  return a.map([&](const Poly& p) { return p.truncated(max_degree); });
}

/// Parameter name shared by the coefficients ("" if all constant).
std::string param_of(const SeriesP& a);

namespace presets {
SeriesQ one(int order);
SeriesQ id(int order);
/// 1/(1-x)
SeriesQ geom(int order);
/// sum x^n/n!
SeriesQ expx(int order);
/// x/(1-x)
SeriesQ xe(int order);
/// x + x^2
SeriesQ xsq(int order);
}  // namespace presets

}  // namespace interp
