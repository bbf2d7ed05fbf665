#include <gtest/gtest.h>

#include <set>

#include "interp/comb.hpp"
#include "interp/errors.hpp"
#include "support.hpp"

using namespace interp;
using interp::testing::Gen;
using interp::testing::q;
using interp::testing::rats;

namespace {

Rat fact(int n) {
  Rat f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<Rat> random_weights(Gen& gen, int count, bool nonzero_w0) {
  std::vector<Rat> w;
  for (int k = 0; k < count; ++k) w.push_back(k == 0 && nonzero_w0 ? gen.nonzero_rat() : gen.rat());
  return w;
}

// Increasing trees with child-count weights phi(y) = sum_k c_k y^k / k!:
// y' = phi(y), y(0) = 0; v![x^v] y counts trees on v vertices.
SeriesP increasing_tree_egf(const std::vector<Poly>& c, int order) {
  SeriesP y = SeriesP::zero(order);
  for (int it = 0; it <= order; ++it) {
    SeriesP phi = SeriesP::zero(order);
    SeriesP pw = SeriesP::constant(Poly(1), order);
    for (std::size_t k = 0; k < c.size(); ++k) {
      phi = phi + pw * SeriesP::constant(c[k] * (1 / fact(static_cast<int>(k))), order);
      pw = pw * y;
    }
    y = integrate0(phi).truncated(order);
  }
  return y;
}

const std::vector<long> kEuler{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};

}  // namespace

TEST(Admissible, EnumerationCountsAndOrder) {
  for (int n = 0; n <= 7; ++n) {
    long count = 0;
    std::vector<int> prev;
    for_each_admissible(n, [&](const AdmissibleFun& f) {
      EXPECT_TRUE(f.is_valid());
      if (count > 0) EXPECT_LT(prev, f.f);
      prev = f.f;
      ++count;
    });
    EXPECT_EQ(Rat(count), fact(n));
  }
}

TEST(Admissible, Validity) {
  EXPECT_TRUE((AdmissibleFun{{1, 2, 1}}).is_valid());
  EXPECT_FALSE((AdmissibleFun{{1, 3, 1}}).is_valid());
  EXPECT_FALSE((AdmissibleFun{{0}}).is_valid());
}

TEST(Admissible, RankIsBijection) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::uint64_t> seen;
    for_each_admissible(n, [&](const AdmissibleFun& f) {
      const auto r = admissible_rank(f);
      seen.insert(r);
      EXPECT_EQ(admissible_unrank(n, r).f, f.f);
    });
    EXPECT_EQ(Rat(static_cast<long>(seen.size())), fact(n));
    EXPECT_EQ(*seen.begin(), 0u);
    EXPECT_EQ(Rat(static_cast<long>(*seen.rbegin()) + 1), fact(n));
  }
  EXPECT_THROW(admissible_unrank(3, 6), DomainError);
}

TEST(Admissible, FullFactorialWeightsAreInjectiveButNotOnto) {
  // sum (f(k) - 1) k! misses part of 0..n!-1 once n >= 2
  for (int n = 1; n <= 6; ++n) {
    std::set<long> seen;
    long max_value = 0;
    for_each_admissible(n, [&](const AdmissibleFun& f) {
      long r = 0, kf = 1;
      for (int k = 1; k <= n; ++k) {
        kf *= k;
        r += (f(k) - 1) * kf;
      }
      seen.insert(r);
      max_value = std::max(max_value, r);
    });
    EXPECT_EQ(Rat(static_cast<long>(seen.size())), fact(n));
    if (n >= 2) EXPECT_GE(Rat(max_value), fact(n));
  }
}

TEST(Energy, Examples) {
  const std::vector<Rat> w = rats({"2", "3", "5", "7"});
  EXPECT_EQ(energy<Rat>(std::vector<Rat>{1, 1}, AdmissibleFun{{1}}), Rat(1));
  EXPECT_EQ(energy<Rat>(w, AdmissibleFun{{1, 1}}), Rat(5 * 2));
  EXPECT_EQ(energy<Rat>(w, AdmissibleFun{{1, 2}}), Rat(9));
  EXPECT_EQ(energy<Rat>(w, AdmissibleFun{{1, 1, 1}}), Rat(7 * 2 * 2));
  EXPECT_THROW(energy<Rat>(std::vector<Rat>{1, 1}, AdmissibleFun{{1, 1}}), ValidationError);
}

TEST(Z0Series, ExponentialWeights) {
  std::vector<Rat> w(13, Rat(1));
  EXPECT_EQ(z0_series<Rat>(w, 12), presets::geom(12));
}

TEST(Z0Series, EulerNumbersAtTOne) {
  std::vector<Rat> w{1, 1, 1, 0, 0, 0};
  SeriesQ z = z0_series<Rat>(w, 5);
  const std::vector<long> euler{1, 1, 2, 5, 16, 61};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(z.coef(n) * fact(n), Rat(euler[static_cast<std::size_t>(n)]));
}

TEST(Z0Series, ZeroWeights) {
  std::vector<Rat> w(7, Rat(0));
  EXPECT_EQ(z0_series<Rat>(w, 6), presets::one(6));
}

TEST(Z0Series, NeedsEnoughWeights) {
  std::vector<Rat> w{1, 1, 1};
  EXPECT_THROW(z0_series<Rat>(w, 3), ValidationError);
}

TEST(Z0Series, EgfConversionRoundTrip) {
  Gen gen(51);
  SeriesQ s = gen.series(8);
  std::vector<Rat> w = egf_from_series(s);
  EXPECT_EQ(series_from_egf<Rat>(w), s);
}

TEST(Z0Bruteforce, Examples) {
  std::vector<Rat> ones(10, Rat(1));
  EXPECT_EQ(z0_bruteforce<Rat>(ones, 3), Rat(6));
  EXPECT_EQ(z0_bruteforce<Rat>(ones, 0), Rat(1));
  EXPECT_EQ(z0_bruteforce<Rat>(std::vector<Rat>{1, 1, 1, 0, 0}, 4), Rat(16));
  EXPECT_THROW(z0_bruteforce<Rat>(ones, 10), ValidationError);
}

TEST(Z0Bruteforce, MatchesSeries) {
  Gen gen(52);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rat> w = random_weights(gen, 8, false);
    SeriesQ z = z0_series<Rat>(w, 7);
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(z.coef(n) * fact(n), z0_bruteforce<Rat>(w, n)) << trial << " " << n;
  }
}

TEST(DerivativeIdentity, Examples) {
  Gen gen(53);
  std::vector<Rat> w = random_weights(gen, 8, true);
  auto [l1, r1] = derivative_identity_check(w, 1);
  EXPECT_EQ(l1, w[1]);
  EXPECT_EQ(r1, w[1]);
  auto [l2, r2] = derivative_identity_check(std::vector<Rat>{1, 1, 1}, 2);
  EXPECT_EQ(l2, Rat(4));
  EXPECT_EQ(r2, Rat(4));
  std::vector<Rat> ones(8, Rat(1));
  for (int n = 1; n <= 6; ++n) {
    auto [l, r] = derivative_identity_check(ones, n);
    Rat nn = 1;
    for (int k = 0; k < n; ++k) nn *= n;
    EXPECT_EQ(l, nn);
    EXPECT_EQ(r, nn);
  }
  EXPECT_THROW(derivative_identity_check(ones, 8), ValidationError);
}

TEST(DerivativeIdentity, RandomWeights) {
  Gen gen(54);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Rat> w = random_weights(gen, 8, false);
    for (int n = 0; n <= 6; ++n) {
      auto [l, r] = derivative_identity_check(w, n);
      EXPECT_EQ(l, r) << n;
    }
  }
}

TEST(Trees, Examples) {
  RootedTree path = tree_from_admissible(AdmissibleFun{{1, 2, 3}});
  EXPECT_EQ(path, (RootedTree{4, {0, 1, 2}}));
  RootedTree star = tree_from_admissible(AdmissibleFun{{1, 1, 1}});
  EXPECT_EQ(star, (RootedTree{4, {0, 0, 0}}));
  EXPECT_EQ(star.child_counts(), (std::vector<int>{3, 0, 0, 0}));
  EXPECT_EQ(tree_from_admissible(AdmissibleFun{{1}}), (RootedTree{2, {0}}));
  EXPECT_THROW(admissible_from_tree(RootedTree{3, {0, 2}}), ValidationError);
}

TEST(Trees, BijectionAndDegrees) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> parents;
    for_each_admissible(n, [&](const AdmissibleFun& f) {
      RootedTree t = tree_from_admissible(f);
      parents.insert(t.parent);
      EXPECT_EQ(admissible_from_tree(t).f, f.f);
      const auto sizes = f.preimage_sizes();
      auto h = degrees_histogram(t);
      std::map<int, int> from_f;
      for (int s : sizes) ++from_f[s];
      for (int k = 1; k <= n; ++k) EXPECT_EQ(h[k], from_f[k]);
      int unhit = 0;
      for (int s : sizes) unhit += s == 0;
      EXPECT_EQ(h[0], 1 + unhit);
    });
    EXPECT_EQ(Rat(static_cast<long>(parents.size())), fact(n));
  }
}

TEST(Andre, SmallPolynomials) {
  EXPECT_EQ(andre_poly(0), Poly(1).with_param("t"));
  EXPECT_EQ(andre_poly(2), Poly({1, 0, 1}, "t"));
  EXPECT_EQ(andre_poly(3), Poly({0, 4, 0, 1}, "t"));
}

TEST(Andre, RecurrenceMatchesBruteForce) {
  for (int n = 0; n <= 7; ++n) {
    Poly a = andre_poly(n);
    EXPECT_EQ(a, andre_bruteforce(n)) << n;
    for (int k = 0; k <= a.degree(); ++k) {
      EXPECT_GE(a.coeff(k), 0);
      EXPECT_EQ(a.coeff(k).get_den(), 1);
    }
  }
}

TEST(Andre, EulerNumbersAtOne) {
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(andre_poly(n)(1), Rat(kEuler[static_cast<std::size_t>(n + 1)]));
  SeriesP z = andre_z0(6);
  const std::vector<long> euler{1, 1, 2, 5, 16, 61};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(z.coef(n)(1) * fact(n), Rat(euler[static_cast<std::size_t>(n)]));
}

TEST(Andre, ZeroTSeries) {
  SeriesP z = andre_z0(8);
  const std::vector<long> expected{1, 1, 4, 34, 496};
  for (int j = 0; j <= 4; ++j) {
    EXPECT_EQ(z.coef(2 * j)(0) * fact(2 * j), Rat(expected[static_cast<std::size_t>(j)]));
    if (j < 4) EXPECT_EQ(z.coef(2 * j + 1)(0), Rat(0));
  }
}

TEST(Andre, Z0CoefficientsArePolynomials) {
  SeriesP z = andre_z0(8);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(z.coef(n) * fact(n), andre_poly(n)) << n;
}

TEST(TreeCounts, Examples) {
  EXPECT_EQ(count_S(2, 1), 1);
  EXPECT_EQ(count_E(3, 1), 1);
  EXPECT_EQ(count_E(3, 0), 0);
  EXPECT_THROW(count_S(12, 1), ValidationError);
  EXPECT_THROW(count_E(0, 1), ValidationError);
}

TEST(TreeCounts, TotalsAreEulerNumbers) {
  for (int v = 1; v <= 10; ++v) {
    long total = 0;
    for (int k = 0; k <= v; ++k) total += count_S(v, k);
    EXPECT_EQ(total, kEuler[static_cast<std::size_t>(v)]) << v;
  }
}

TEST(TreeCounts, MatchDifferentialEquationOracle) {
  const int order = 11;
  const Poly t({0, 1}, "t");
  // children <= 2, t marks leaves
  SeriesP ys = increasing_tree_egf({t, Poly(1), Poly(1)}, order);
  // even child counts, t marks interior vertices
  std::vector<Poly> even{Poly(1)};
  for (int k = 1; k <= order; ++k) even.push_back(k % 2 == 0 ? t : Poly());
  SeriesP ye = increasing_tree_egf(even, order);
  for (int v = 1; v <= order; ++v) {
    Poly ps = ys.coef(v) * fact(v), pe = ye.coef(v) * fact(v);
    for (int k = 0; k <= v; ++k) {
      EXPECT_EQ(Rat(count_S(v, k)), ps.coeff(k)) << v << " " << k;
      EXPECT_EQ(Rat(count_E(v, k)), pe.coeff(k)) << v << " " << k;
    }
  }
}

TEST(TreeCounts, IdcombenHolds) {
  for (int n = 0; n <= 5; ++n) EXPECT_TRUE(idcomben_check(n)) << n;
  EXPECT_THROW(idcomben_check(6), ValidationError);
}

TEST(EvenFamily, LowTerms) {
  SeriesP z = even_family_z0(6);
  EXPECT_EQ(z.coef(0), Poly(1));
  EXPECT_EQ(z.coef(1), Poly(0));
}

TEST(EvenFamily, AtOneIsCosh) {
  std::vector<Rat> cosh;
  for (int k = 0; k <= 9; ++k) cosh.push_back(k % 2 == 0 ? 1 : 0);
  EXPECT_EQ(eval_param(even_family_z0(9), 1), z0_series<Rat>(cosh, 9));
}

TEST(EvenFamily, SubstitutionIdentity) {
  for (const Rat& t0 : {Rat(1), Rat(2), q("1/2"), Rat(-3)}) EXPECT_TRUE(idcomben_substitution_check(t0, 10)) << t0;
  EXPECT_THROW(idcomben_substitution_check(0, 4), DomainError);
}

TEST(UOde, RandomWeights) {
  Gen gen(55);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> w = random_weights(gen, 11, true);
    EXPECT_EQ(u_ode_residual(w, 10), SeriesQ::zero(10)) << trial;
  }
}

TEST(UOde, Exponential) {
  std::vector<Rat> w(11, Rat(1));
  EXPECT_EQ(u_ode_residual(w, 10), SeriesQ::zero(10));
  // U = -log(1 - s)
  EXPECT_EQ(integrate0(z0_series<Rat>(w, 10)), log1p(presets::one(11) - presets::id(11)) * Rat(-1));
}

TEST(UOde, ConstantWeight) {
  std::vector<Rat> w{1, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(u_ode_residual(w, 6), SeriesQ::zero(6));
  EXPECT_EQ(integrate0(z0_series<Rat>(w, 6)), presets::id(7));
}

TEST(UOde, ReciprocalOfLinear) {
  // W = 1/(1 + X): U + U^2/2 = s
  const int m = 10;
  std::vector<Rat> w;
  for (int k = 0; k <= m; ++k) w.push_back(fact(k) * (k % 2 == 0 ? 1 : -1));
  EXPECT_EQ(u_ode_residual(w, m), SeriesQ::zero(m));
  SeriesQ u = integrate0(z0_series<Rat>(w, m));
  EXPECT_EQ(u + u * u / Rat(2), presets::id(m + 1));
  EXPECT_EQ(z0_series<Rat>(w, m), powq(interp::testing::ser_to({1, 2}, m), q("-1/2")));
}

TEST(UOde, ZeroConstantWeight) {
  Gen gen(56);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Rat> w = random_weights(gen, 9, false);
    w[0] = 0;
    EXPECT_EQ(u_ode_residual(w, 8), SeriesQ::zero(8));
    SeriesQ z = z0_series<Rat>(w, 8);
    Rat p = 1;
    for (int n = 0; n <= 8; ++n, p *= w[1]) EXPECT_EQ(z.coef(n), p / fact(n));
  }
}
