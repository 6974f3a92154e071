#include <gtest/gtest.h>

#include <cmath>

#include "finfiber/fibration.hpp"
#include "oracles.hpp"

using namespace finfiber;
using finfiber::oracle::Gen;
using finfiber::oracle::Rational;
using finfiber::oracle::rel_err;

TEST(ProjectNatural, ReturnsTime) {
  EXPECT_EQ(project_natural({2, 121}), 2.0);
  EXPECT_EQ(project_natural({0, 0}), 0.0);
  EXPECT_EQ(project_natural({-3.5, 7}), -3.5);
}

TEST(ProjectCompound, PresentValueOfTwoYearEvent) {
  // 121 / (11/10)^2, exactly.
  const Rational expected = Rational(121) / oracle::rational_pow(Rational(11, 10), 2);
  ASSERT_EQ(expected, Rational(100));
  EXPECT_LE(rel_err(project_compound({2, 121}, Rate(0.1)), 100.0), 1e-14);
}

TEST(ProjectCompound, TimeZeroAndZeroRateAreIdentity) {
  Gen gen(1);
  for (int n = 0; n < 100; ++n) {
    const auto e = gen.event();
    EXPECT_EQ(project_compound({0.0, e.capital}, gen.rate()), e.capital);
    // pi_0 = pr_2
    EXPECT_EQ(project_compound(e, Rate(0.0)), e.capital);
  }
}

TEST(ProjectCompound, OverflowIsRangeError) {
  EXPECT_THROW(project_compound({-1e6, 1.0}, Rate(0.5)), RangeError);
  EXPECT_EQ(project_compound({-1e6, 0.0}, Rate(0.5)), 0.0);
}

TEST(ProjectGeneral, SimpleLawBothBranches) {
  const auto f = simple_law(1.0);
  EXPECT_EQ(project_general({1, 10}, f), 5.0);
  EXPECT_EQ(project_general({-1, 10}, f), 20.0);
  EXPECT_EQ(project_general({0, 42}, f), 42.0);
}

TEST(ProjectGeneral, NonPositiveFactorIsInvalidLaw) {
  const CapitalizationLaw f([](double t) { return 1.0 - t; });
  EXPECT_THROW(project_general({2, 1}, f), InvalidLawError);
  EXPECT_THROW(project_general({-1.5, 1}, f), InvalidLawError);
}

TEST(ProjectGeneral, AgreesWithCompoundForCompoundFactor) {
  Gen gen(7);
  for (int n = 0; n < 200; ++n) {
    const Rate rate = gen.rate();
    const auto f = compound_law(rate);
    for (const double t : linspace(-5.0, 5.0, 40)) {
      const FinancialEvent e{t, gen.uniform(-1000, 1000)};
      EXPECT_LE(rel_err(project_general(e, f), project_compound(e, rate)), 1e-9);
    }
  }
}

TEST(GluingCheck, SimpleLaw) {
  const auto f = simple_law(0.1);
  const auto s = gluing_slopes(f);
  EXPECT_NEAR(s.right, -0.1, 1e-7);
  EXPECT_NEAR(s.left, -0.1, 1e-9);
  EXPECT_TRUE(general_gluing_check(f));
}

TEST(GluingCheck, CompoundLaw) {
  const auto s = gluing_slopes(compound_law(Rate(0.1)));
  const double ln = static_cast<double>(oracle::ln_series(1.1L));
  EXPECT_NEAR(s.expected, -ln, 1e-15);
  EXPECT_NEAR(s.right, -ln, 1e-7);
  EXPECT_NEAR(s.left, -ln, 1e-7);
  EXPECT_TRUE(general_gluing_check(compound_law(Rate(0.1))));
}

TEST(GluingCheck, ConstantLaw) {
  const CapitalizationLaw one([](double) { return 1.0; });
  const auto s = gluing_slopes(one);
  EXPECT_EQ(s.right, 0.0);
  EXPECT_EQ(s.left, 0.0);
  EXPECT_TRUE(general_gluing_check(one));
}

TEST(GluingCheck, FactorWithWrongValueAtZeroFails) {
  // f(0) = 2 breaks g>'(0) = -f'(0) (it becomes -f'(0)/4).
  const CapitalizationLaw f([](double t) { return 2.0 + 0.5 * t; },
                            [](double) { return 0.5; });
  EXPECT_FALSE(general_gluing_check(f));
}

TEST(Equivalence, Examples) {
  EXPECT_TRUE(equivalent({0, 100}, {2, 121}, Rate(0.1)));
  EXPECT_TRUE(equivalent({3, -4}, {3, -4}, Rate(0.7)));
  EXPECT_FALSE(equivalent({0, 100}, {0, 101}, Rate(0.1)));
  EXPECT_FALSE(equivalent({0, 100}, {0, 101}, Rate(-0.5)));
}

TEST(Equivalence, IsAnEquivalenceRelation) {
  Gen gen(3);
  for (int n = 0; n < 500; ++n) {
    const Rate rate = gen.rate();
    const auto a = gen.event();
    // b and c on a's fiber half the time, so transitivity is exercised.
    const Fiber fa = fiber_of(a, rate);
    const auto b = gen.coin() ? fiber_event(fa, gen.uniform(-20, 20)) : gen.event();
    const auto c = gen.coin() ? fiber_event(fa, gen.uniform(-20, 20)) : gen.event();
    EXPECT_TRUE(equivalent(a, a, rate));
    EXPECT_EQ(equivalent(a, b, rate), equivalent(b, a, rate));
    if (equivalent(a, b, rate) && equivalent(b, c, rate)) {
      EXPECT_TRUE(equivalent(a, c, rate));
    }
  }
}

TEST(Fiber, OfEvent) {
  const Fiber f = fiber_of({2, 121}, Rate(0.1));
  EXPECT_EQ(f.rate, Rate(0.1));
  EXPECT_NEAR(f.base_capital, 100.0, 1e-12);
  EXPECT_EQ(fiber_of({0, 17.5}, Rate(0.3)).base_capital, 17.5);
  EXPECT_EQ(fiber_of({5, 0}, Rate(0.3)).base_capital, 0.0);
}

TEST(Fiber, Eval) {
  const Rational expected = Rational(100) * oracle::rational_pow(Rational(11, 10), 2);
  ASSERT_EQ(expected, Rational(121));
  EXPECT_LE(rel_err(fiber_eval({Rate(0.1), 100}, 2.0), 121.0), 1e-14);
  EXPECT_EQ(fiber_eval({Rate(0.4), 33}, 0.0), 33.0);
  EXPECT_EQ(fiber_eval({Rate(0.0), 33}, 17.0), 33.0);
  EXPECT_THROW(fiber_eval({Rate(0.5), 1}, 1e6), RangeError);
}

TEST(Fiber, RoundTripThroughProjection) {
  Gen gen(5);
  for (int n = 0; n < 10000; ++n) {
    const auto e = gen.event();
    const Rate rate = gen.rate();
    const Fiber f = fiber_of(e, rate);
    ASSERT_LE(rel_err(fiber_eval(f, e.time), e.capital), 1e-9);
    // Every point of the fiber projects back to its base capital.
    const double t = gen.uniform(-30, 30);
    ASSERT_LE(rel_err(project_compound(fiber_event(f, t), rate), f.base_capital), 1e-9);
  }
}

TEST(FiberCompare, Examples) {
  const Rate r(0.1);
  EXPECT_EQ(fiber_compare({r, 100}, {r, 100}), std::weak_ordering::equivalent);
  EXPECT_EQ(fiber_compare(fiber_of({0, 100}, r), fiber_of({2, 121}, r)),
            std::weak_ordering::equivalent);
  EXPECT_EQ(fiber_compare({r, 100}, {r, 200}), std::weak_ordering::less);
  EXPECT_EQ(fiber_compare({r, 200}, {r, 100}), std::weak_ordering::greater);
  EXPECT_THROW(fiber_compare({r, 1}, {Rate(0.2), 1}), IncomparableError);
}

TEST(FiberCompare, IsTotalPreorder) {
  Gen gen(9);
  const Rate r(0.05);
  for (int n = 0; n < 1000; ++n) {
    const Fiber a{r, gen.uniform(-100, 100)};
    const Fiber b{r, gen.coin() ? a.base_capital : gen.uniform(-100, 100)};
    const Fiber c{r, gen.uniform(-100, 100)};
    EXPECT_EQ(fiber_compare(a, a), std::weak_ordering::equivalent);
    // total: exactly one of <=, >= fails only when both hold (equivalent)
    EXPECT_TRUE(fiber_compare(a, b) <= 0 || fiber_compare(a, b) >= 0);
    EXPECT_EQ(fiber_compare(a, b) < 0, fiber_compare(b, a) > 0);
    if (fiber_compare(a, b) <= 0 && fiber_compare(b, c) <= 0) {
      EXPECT_TRUE(fiber_compare(a, c) <= 0);
    }
  }
}
