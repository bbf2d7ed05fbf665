#pragma once

#include <initializer_list>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "interp/series.hpp"

namespace interp {
inline void PrintTo(const Poly& p, std::ostream* os) { *os << to_string(p); }
}  // namespace interp

namespace interp::testing {

inline Rat q(const char* text) { return parse_rat(text); }

inline SeriesQ ser(std::initializer_list<Rat> coeffs, int val = 0) {
  return SeriesQ(val, std::vector<Rat>(coeffs));
}

inline SeriesQ ser_to(std::initializer_list<Rat> coeffs, int order, int val = 0) {
  return SeriesQ(val, std::vector<Rat>(coeffs), order);
}

inline std::vector<Rat> coeff_range(const SeriesQ& a, int from, int to) {
  std::vector<Rat> out;
  for (int k = from; k <= to; ++k) out.push_back(a.coef(k));
  return out;
}

inline std::vector<Rat> rats(std::initializer_list<const char*> texts) {
  std::vector<Rat> out;
  for (auto* t : texts) out.push_back(parse_rat(t));
  return out;
}

// Small random rationals and series with a fixed seed per test.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rat rat(int max_num = 4, int max_den = 3) {
    Rat r(integer(-max_num, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Rat nonzero_rat(int max_num = 4, int max_den = 3) {
    Rat r;
    do r = rat(max_num, max_den);
    while (is_zero(r));
    return r;
  }

  // Coefficients at exponents val..order, every one drawn at random.
  SeriesQ series(int order, int val = 0) {
    std::vector<Rat> c;
    for (int k = val; k <= order; ++k) c.push_back(rat());
    return SeriesQ(val, std::move(c), order);
  }

  // 1 + m
  SeriesQ unipotent(int order) {
    SeriesQ s = series(order, 1);
    return s + SeriesQ::constant(Rat(1), order);
  }

  // valuation exactly 1 with leading coefficient `lead` (random nonzero if 0)
  SeriesQ diffeo(int order, Rat lead = 0) {
    SeriesQ s = series(order, 2);
    if (is_zero(lead)) lead = nonzero_rat();
    return s + SeriesQ::monomial(lead, 1, order);
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace interp::testing
