#include <gtest/gtest.h>

#include "interp/errors.hpp"
#include "interp/series.hpp"
#include "support.hpp"

using namespace interp;
using interp::testing::Gen;
using interp::testing::q;
using interp::testing::ser;
using interp::testing::ser_to;

namespace {

// Direct convolution, no shared code with operator*.
std::vector<Rat> convolve(const std::vector<Rat>& a, const std::vector<Rat>& b, std::size_t n) {
  std::vector<Rat> c(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

SeriesQ x_series(int order) { return presets::id(order); }

}  // namespace

TEST(Series, ProductOfConjugates) {
  EXPECT_EQ(ser({1, 1}) * ser({1, -1}), ser({1, 0, -1}).truncated(1));
  EXPECT_EQ(ser_to({1, 1}, 4) * ser_to({1, -1}, 4), ser_to({1, 0, -1}, 4));
}

TEST(Series, LaurentProduct) {
  SeriesQ inv_x = ser_to({1}, 3, -1);
  SeriesQ x = ser_to({0, 1}, 5);
  SeriesQ p = inv_x * x;
  EXPECT_EQ(p.coef(0), 1);
  EXPECT_EQ(p.valuation(), 0);
  for (int k = 1; k <= p.order(); ++k) EXPECT_EQ(p.coef(k), 0);
}

TEST(Series, GeometricTimesOneMinusX) {
  SeriesQ g = presets::geom(8);
  SeriesQ p = g * ser_to({1, -1}, 8);
  auto direct = convolve(g.coeffs(), {Rat(1), Rat(-1)}, 9);
  ASSERT_EQ(p.order(), 8);
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(p.coef(k), direct[static_cast<std::size_t>(k)]);
  EXPECT_EQ(p, SeriesQ::constant(1, 8));
}

TEST(Series, OrderPropagation) {
  // x^2 known to 5 times 1 known to 3 is known to 5.
  SeriesQ a = ser_to({0, 0, 1}, 5);
  SeriesQ b = ser_to({1}, 3);
  EXPECT_EQ((a * b).order(), 5);
  EXPECT_EQ((a + b).order(), 3);
}

TEST(Series, ReadingBeyondOrderIsAnError) {
  EXPECT_THROW(ser({1, 2}).coef(2), DomainError);
}

TEST(Series, DeriveAndIntegrate) {
  EXPECT_EQ(derive(ser_to({0, 0, 0, 1}, 6)), ser_to({0, 0, 3}, 5));
  SeriesQ one = SeriesQ::constant(1, 0);
  EXPECT_EQ(integrate0(one), ser({0, 1}));
  EXPECT_EQ(integrate0(ser({1, 2, 3})), ser({0, 1, 1, 1}));
  EXPECT_THROW(integrate0(ser({1}, -1)), DomainError);
}

TEST(Series, ComposeSubstitution) {
  SeriesQ g = presets::geom(8);
  SeriesQ sq = ser_to({0, 0, 1}, 8);
  SeriesQ c = compose(g, sq);
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(c.coef(k), k % 2 == 0 ? 1 : 0);
  EXPECT_EQ(c.order(), 8);
}

TEST(Series, ComposeLaurentOuter) {
  // 1/(x(1+x)) = sum (-1)^(k+1) x^k from k = -1
  SeriesQ outer = ser_to({1}, 8, -1);
  SeriesQ inner = presets::xsq(10);
  SeriesQ c = compose(outer, inner);
  EXPECT_GE(c.order(), 7);
  for (int k = -1; k <= c.order(); ++k) EXPECT_EQ(c.coef(k), (k + 1) % 2 == 0 ? 1 : -1) << k;
}

TEST(Series, ComposeWithIdentity) {
  Gen gen(1);
  SeriesQ a = gen.series(10);
  EXPECT_EQ(compose(a, x_series(10)), a);
}

TEST(Series, ComposeRejectsConstantInner) {
  EXPECT_THROW(compose(presets::geom(4), presets::geom(4)), DomainError);
}

TEST(Series, ReversionOfGeometricShift) {
  SeriesQ a = presets::xe(10);
  SeriesQ r = reversion(a);
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(r.coef(k), k % 2 == 1 ? 1 : -1);
  EXPECT_EQ(compose(a, r), x_series(10));
  EXPECT_EQ(compose(r, a), x_series(10));
}

TEST(Series, ReversionOfXPlusXSquared) {
  SeriesQ r = reversion(presets::xsq(7));
  EXPECT_EQ(interp::testing::coeff_range(r, 1, 6), (std::vector<Rat>{1, -1, 2, -5, 14, -42}));
  EXPECT_EQ(reversion(x_series(5)), x_series(5));
}

TEST(Series, ReversionRejects) {
  EXPECT_THROW(reversion(ser({1, 1})), DomainError);
  EXPECT_THROW(reversion(ser({0, 0, 1})), DomainError);
}

TEST(Series, Mercator) {
  SeriesQ l = log1p(ser_to({1, 1}, 8));
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(l.coef(k), Rat(k % 2 == 1 ? 1 : -1, k));
  EXPECT_EQ(l.coef(0), 0);
}

TEST(Series, ExpOfX) {
  EXPECT_EQ(exps(x_series(9)), presets::expx(9));
}

TEST(Series, SquareRootSquared) {
  SeriesQ a = ser_to({1, 1}, 12);
  SeriesQ r = powq(a, Rat(1, 2));
  EXPECT_EQ(r * r, a);
}

TEST(Series, ConstantTermPreconditions) {
  EXPECT_THROW(log1p(ser({2, 1})), DomainError);
  EXPECT_THROW(powq(ser({2, 1}), Rat(1, 2)), DomainError);
  EXPECT_THROW(exps(ser({1, 1})), DomainError);
}

TEST(Series, LaurentPrimitive) {
  // (1 - x^2)/x^2 -> F = -1/x - x
  auto p = laurent_primitive(ser_to({1, 0, -1}, 6, -2));
  EXPECT_EQ(p.residue, 0);
  EXPECT_EQ(p.primitive.coef(-1), -1);
  EXPECT_EQ(p.primitive.coef(1), -1);
  for (int k = 2; k <= p.primitive.order(); ++k) EXPECT_EQ(p.primitive.coef(k), 0);

  auto r = laurent_primitive(ser_to({1}, 4, -1));
  EXPECT_EQ(r.residue, 1);
  EXPECT_EQ(r.primitive.valuation(), r.primitive.order() + 1);

  // (1-x)/x^2 = x^-2 - x^-1
  auto s = laurent_primitive(ser_to({1, -1}, 4, -2));
  EXPECT_EQ(s.residue, -1);
  EXPECT_EQ(s.primitive.coef(-1), -1);
  for (int k = 0; k <= s.primitive.order(); ++k) EXPECT_EQ(s.primitive.coef(k), 0);
}

TEST(Series, ReciprocalOfLaurent) {
  SeriesQ a = ser_to({0, 1, 1}, 8);  // x + x^2
  SeriesQ r = reciprocal(a);
  EXPECT_EQ(r.val(), -1);
  EXPECT_EQ(r.order(), 6);
  SeriesQ one = r * a;
  EXPECT_EQ(one.truncated(6), SeriesQ::constant(1, 6));
}

TEST(Series, PolyCoefficients) {
  SeriesP a = promote(presets::geom(5));
  SeriesP s = SeriesP::constant(Poly({0, 1}, "s"), 5);
  SeriesP p = a * s;
  EXPECT_EQ(param_of(p), "s");
  EXPECT_EQ(eval_param(p, 3), presets::geom(5) * Rat(3));
  SeriesP t = SeriesP::constant(Poly({0, 1}, "t"), 5);
  EXPECT_THROW(p + t, RingMismatch);
}

// Properties on random data.

TEST(SeriesProperties, RingAxioms) {
  Gen gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = gen.integer(0, 16);
    SeriesQ a = gen.series(n), b = gen.series(n), c = gen.series(n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
  }
}

TEST(SeriesProperties, LaurentRingAxioms) {
  Gen gen(12);
  for (int trial = 0; trial < 20; ++trial) {
    SeriesQ a = gen.series(8, -2), b = gen.series(9, -1), c = gen.series(7, -3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(SeriesProperties, ComposeAssociative) {
  Gen gen(13);
  for (int trial = 0; trial < 15; ++trial) {
    int n = gen.integer(1, 12);
    SeriesQ a = gen.series(n), b = gen.diffeo(n), c = gen.diffeo(n);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(SeriesProperties, ReversionInvolution) {
  Gen gen(14);
  for (int trial = 0; trial < 15; ++trial) {
    SeriesQ a = gen.diffeo(gen.integer(1, 12));
    SeriesQ r = reversion(a);
    EXPECT_EQ(reversion(r), a);
    EXPECT_EQ(compose(a, r), x_series(a.order()));
  }
}

TEST(SeriesProperties, PowqLaws) {
  Gen gen(15);
  for (int trial = 0; trial < 15; ++trial) {
    SeriesQ a = gen.unipotent(10);
    Rat k = gen.rat(3, 4), l = gen.rat(3, 4);
    EXPECT_EQ(powq(a, k) * powq(a, l), powq(a, k + l));
    EXPECT_EQ(powq(a, 3), pow_int(a, 3));
    EXPECT_EQ(pow_int(powq(a, Rat(2, 3)), 3), pow_int(a, 2));
    EXPECT_EQ(exps(log1p(a)), a);
  }
}

TEST(SeriesProperties, DeriveIsDerivation) {
  Gen gen(16);
  for (int trial = 0; trial < 20; ++trial) {
    SeriesQ a = gen.series(12), b = gen.series(12);
    EXPECT_EQ(derive(a * b), derive(a) * b + a * derive(b));
    EXPECT_EQ(derive(integrate0(a)), a);
  }
}

TEST(SeriesProperties, ReciprocalIsInverse) {
  Gen gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    SeriesQ a = gen.series(10) + SeriesQ::constant(gen.nonzero_rat(), 10);
    EXPECT_EQ(a * reciprocal(a), SeriesQ::constant(1, 10));
  }
}
