#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hvc/app/corpus.hpp"
#include "hvc/closed_form.hpp"
#include "hvc/core.hpp"

using namespace hvc;

namespace {

AnalyticFunction1D fn(std::function<double(double)> f, std::function<double(double)> df = {}) {
  AnalyticFunction1D g;
  g.eval = std::move(f);
  g.classical_derivative = std::move(df);
  return g;
}

// Midpoint Riemann sum of mu * f(t) t^(mu-1) over [a, b] in t, with no
// change of variables.
double riemann_fractal_integral(const std::function<double(double)>& f, double mu, double a,
                                double b, long steps) {
  const double h = (b - a) / static_cast<double>(steps);
  double s = 0.0;
  for (long i = 0; i < steps; ++i) {
    const double t = a + (static_cast<double>(i) + 0.5) * h;
    s += f(t) * mu * std::pow(t, mu - 1.0);
  }
  return s * h;
}

}  // namespace

TEST(FractalDimension, RejectsValuesOutsideUnitInterval) {
  for (double bad : {0.0, -0.5, 1.0000001, std::nan("")}) {
    try {
      FractalDimension mu(bad);
      FAIL() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_STREQ(e.what(), "fractal dimension must lie in (0, 1]");
    }
  }
  EXPECT_NO_THROW(FractalDimension(1e-9));
  EXPECT_NO_THROW(FractalDimension(1.0));
}

TEST(FractalDimension, MapAndUnmapAreInverse) {
  for (double m : {0.1, 0.3, 0.5, 0.8, 1.0}) {
    const FractalDimension mu(m);
    for (double t = 1e-6; t <= 1e6; t *= 3.7) {
      EXPECT_NEAR(mu.unmap(mu.map(t)), t, 1e-14 * t) << "mu=" << m << " t=" << t;
    }
  }
}

TEST(ChenDerivative, PowerLawHasUnitDerivative) {
  const FractalDimension mu(0.5);
  const auto f = fn([](double t) { return std::sqrt(t); });
  EXPECT_NEAR(chen_derivative(f, mu, 2.0), 1.0, 1e-8);
}

TEST(ChenDerivative, ClassicalAtUnitDimension) {
  const auto f = fn([](double t) { return t * t; });
  EXPECT_NEAR(chen_derivative(f, FractalDimension(1.0), 3.0), 6.0, 1e-8);
}

TEST(ChenDerivative, SineMatchesPrefactoredClassicalDerivative) {
  const FractalDimension mu(0.5);
  const auto f = fn([](double t) { return std::sin(t); });
  // t^(1-mu)/mu cos t at t = 1 is 2 cos 1.
  const double expected = 1.0806046117362794;
  EXPECT_NEAR(chen_derivative(f, mu, 1.0), expected, 1e-6);
  EXPECT_NEAR(chen_derivative(f, mu, 1.0, DerivativeMethod::direct_formula), expected, 1e-6);
}

TEST(ChenDerivative, BothMethodsMatchPrefactoredClassicalDerivative) {
  const FractalDimension mu(0.7);
  const auto f = fn([](double t) { return std::exp(0.3 * t) * std::cos(t); });
  for (double t : {0.5, 1.0, 2.5}) {
    const double df = std::exp(0.3 * t) * (0.3 * std::cos(t) - std::sin(t));
    const double exact = std::pow(t, 0.3) / 0.7 * df;
    EXPECT_NEAR(chen_derivative(f, mu, t), exact, 1e-8) << "t=" << t;
    EXPECT_NEAR(chen_derivative(f, mu, t, DerivativeMethod::direct_formula), exact, 1e-8) << "t=" << t;
  }
}

TEST(ChenDerivative, Errors) {
  const FractalDimension mu(0.5);
  auto f = fn([](double t) { return t; });
  f.lo = 1.0;
  f.hi = 2.0;
  try {
    chen_derivative(f, mu, 3.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "point outside domain");
  }
  try {
    chen_derivative(f, mu, 1.0, DerivativeMethod::mapped_stencil, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "point outside domain");
  }
  const auto g = fn([](double t) { return t; });
  try {
    chen_derivative(g, mu, 0.0, DerivativeMethod::direct_formula);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "singular prefactor at origin");
  }
}

TEST(ChenIntegral, ConstantGivesMappedLength) {
  const auto one = fn([](double) { return 1.0; });
  EXPECT_NEAR(chen_integral(one, FractalDimension(0.5), 0.0, 4.0), 2.0, 1e-12);
}

TEST(ChenIntegral, ClassicalAtUnitDimension) {
  const auto id = fn([](double t) { return t; });
  EXPECT_NEAR(chen_integral(id, FractalDimension(1.0), 0.0, 1.0), 0.5, 1e-12);
}

TEST(ChenIntegral, SineAgreesWithRiemannSum) {
  const auto s = fn([](double t) { return std::sin(t); });
  const double oracle = riemann_fractal_integral([](double t) { return std::sin(t); }, 0.5, 1.0, 2.0,
                                                 10'000'000);
  const double value = chen_integral(s, FractalDimension(0.5), 1.0, 2.0);
  EXPECT_NEAR(value, oracle, 1e-8);
  // Integral of sin(w^2) over [1, sqrt 2].
  EXPECT_NEAR(value, 0.39515818962731503, 1e-13);
}

TEST(ChenIntegral, Errors) {
  const auto one = fn([](double) { return 1.0; });
  const FractalDimension mu(0.5);
  try {
    chen_integral(one, mu, 2.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "empty or reversed interval");
  }
  try {
    chen_integral(one, mu, -1.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "negative abscissa");
  }
}

TEST(ChenIntegral, PanelHalvingConvergesAtGaussRate) {
  const FractalDimension mu(0.6);
  const auto f = fn([](double t) { return std::sin(3.0 * t) * std::exp(-t); });
  const double ref = chen_integral(f, mu, 0.2, 3.0, QuadratureSpec{32, 64});
  for (int k : {4, 8}) {
    double prev = std::abs(chen_integral(f, mu, 0.2, 3.0, QuadratureSpec{k, 1}) - ref);
    for (int panels = 2; panels <= 16; panels *= 2) {
      const double err = std::abs(chen_integral(f, mu, 0.2, 3.0, QuadratureSpec{k, panels}) - ref);
      if (prev < 1e-13 || err < 1e-13) break;
      EXPECT_GE(prev / err, std::pow(2.0, 2 * k - 1)) << "k=" << k << " panels=" << panels;
      prev = err;
    }
  }
}

TEST(ChenOperators, AreLinear) {
  app::Rng rng(7);
  const FractalDimension mu(0.4);
  const auto f = fn([](double t) { return std::cos(t); });
  const auto g = fn([](double t) { return t * t * t; });
  for (int i = 0; i < 5; ++i) {
    const double a = rng.uniform(-2, 2);
    const double b = rng.uniform(-2, 2);
    const auto h = fn([&, a, b](double t) { return a * std::cos(t) + b * t * t * t; });
    const double t = rng.uniform(0.5, 2.0);
    EXPECT_NEAR(chen_derivative(h, mu, t), a * chen_derivative(f, mu, t) + b * chen_derivative(g, mu, t),
                1e-10);
    EXPECT_NEAR(chen_integral(h, mu, 0.1, 2.0),
                a * chen_integral(f, mu, 0.1, 2.0) + b * chen_integral(g, mu, 0.1, 2.0), 1e-10);
  }
}

TEST(Kww, ClosedFormSeriesAndLimits) {
  EXPECT_NEAR(kww(1.0, FractalDimension(0.5), 4.0), 7.3890560989306502, 1e-12);
  for (double beta : {-3.0, 0.5, 2.0}) EXPECT_EQ(kww(beta, FractalDimension(0.3), 0.0), 1.0);
  const double series = kww(2.0, FractalDimension(0.5), 1.0, KwwMode::series, 50);
  EXPECT_LE(std::abs(series - kww(2.0, FractalDimension(0.5), 1.0)), 1e-13);
  for (double t : {0.1, 2.0, 5.0}) {
    const double c = kww(-1.5, FractalDimension(0.7), t);
    EXPECT_NEAR(kww(-1.5, FractalDimension(0.7), t, KwwMode::series), c, 1e-12 * std::max(1.0, c));
  }
  try {
    kww(1000.0, FractalDimension(1.0), 1.0, KwwMode::series);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "magnitude overflow");
  }
}

TEST(Rules, ProductOfPowerLaws) {
  const FractalDimension mu(0.5);
  const auto p = fn([](double t) { return std::sqrt(t); });
  const std::vector<double> s{1.0, 2.0, 3.0};
  const RuleCheck r = check_rule(Rule::product, p, p, mu, s);
  EXPECT_LE(r.max_residual, 1e-6);
  // D(t^mu t^mu) = 2 t^mu.
  for (double t : s) {
    const auto sq = fn([](double x) { return x; });
    EXPECT_NEAR(chen_derivative(sq, mu, t), 2.0 * std::sqrt(t), 1e-6);
  }
}

TEST(Rules, SumIsExactClassically) {
  const auto f1 = fn([](double t) { return std::sin(t); });
  const auto f2 = fn([](double t) { return std::exp(t); });
  const std::vector<double> s{0.5, 1.5, 2.5};
  EXPECT_LE(check_rule(Rule::sum, f1, f2, FractalDimension(1.0), s).max_residual, 1e-8);
}

TEST(Rules, IntegrationByParts) {
  const FractalDimension mu(0.5);
  const auto f1 = fn([](double t) { return std::sqrt(t); });
  const auto f2 = fn([](double t) { return std::exp(std::sqrt(t)); });
  const std::vector<double> s{1.0, 1.5, 2.0};
  const RuleCheck r = check_rule(Rule::parts, f1, f2, mu, s);
  EXPECT_LE(r.max_residual, 1e-8);
  // Left side is the integral of e^w over [1, sqrt 2].
  EXPECT_NEAR(r.lhs, std::exp(std::sqrt(2.0)) - std::numbers::e, 1e-10);
}

TEST(Rules, AllRulesHoldOnSeededCorpus) {
  for (double m : {0.3, 0.5, 0.8, 1.0}) {
    const FractalDimension mu(m);
    const auto c = app::corpus_1d(11, mu, 8);
    const std::vector<double> s{mu.unmap(0.6), mu.unmap(1.0), mu.unmap(1.4)};
    for (Rule rule : {Rule::sum, Rule::const_mul, Rule::product, Rule::quotient, Rule::chain}) {
      EXPECT_LE(check_rule(rule, c[1].f, c[2].f, mu, s).max_residual, 1e-6) << to_string(rule);
    }
    EXPECT_LE(check_rule(Rule::parts, c[0].f, c[6].f, mu, s).max_residual, 1e-8);
  }
}

TEST(Rules, QuotientRejectsVanishingDenominator) {
  const auto f1 = fn([](double) { return 1.0; });
  const auto f2 = fn([](double t) { return t - 1.0; });
  const std::vector<double> s{1.0};
  try {
    check_rule(Rule::quotient, f1, f2, FractalDimension(0.5), s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "division by near-zero");
  }
}

TEST(Fundamental, FirstTheoremOnSquaredPowerLaw) {
  const FractalDimension mu(0.5);
  const auto xi = fn([](double t) { return t; });  // t^(2 mu) = w^2
  EXPECT_LE(fundamental_theorem_residuals(xi, mu, 1.0, 4.0).first, 1e-8);
}

TEST(Fundamental, SecondTheoremFromOrigin) {
  const FractalDimension mu(0.5);
  const auto one = fn([](double) { return 1.0; });
  for (double t : {0.5, 2.0, 7.0}) {
    EXPECT_LE(fundamental_theorem_residuals(one, mu, 0.0, t).second, 1e-8);
  }
}

TEST(Fundamental, ClassicalCosine) {
  const auto c = fn([](double t) { return std::cos(t); });
  const auto r = fundamental_theorem_residuals(c, FractalDimension(1.0), 0.0, 2.0);
  EXPECT_LE(r.first, 1e-8);
  EXPECT_LE(r.second, 1e-8);
}

TEST(Fundamental, NetChangeIsFirstTheoremAtEndpoint) {
  for (double m : {0.3, 0.5, 0.8, 1.0}) {
    const FractalDimension mu(m);
    for (const auto& f : app::corpus_1d(5, mu, 4)) {
      EXPECT_EQ(net_change_residual(f.f, mu, mu.unmap(0.4), mu.unmap(1.7)),
                fundamental_theorem_residuals(f.f, mu, mu.unmap(0.4), mu.unmap(1.7)).first);
    }
  }
}

TEST(MeanValue, PowerLawMidpoint) {
  const FractalDimension mu(0.5);
  const auto f = fn([](double t) { return std::sqrt(t); });
  // l^mu = (t^mu + a^mu) / 2 = 1.
  EXPECT_NEAR(mean_value_point(f, mu, 0.0, 4.0), 1.0, 1e-8);
}

TEST(MeanValue, ConstantAndLinear) {
  const FractalDimension mu(0.5);
  const auto c = fn([](double) { return 3.0; });
  const double l = mean_value_point(c, mu, 1.0, 2.0);
  EXPECT_GT(l, 1.0);
  EXPECT_LE(l, 2.0);
  EXPECT_NEAR(chen_integral(c, mu, 1.0, 2.0), c(l) * (mu.map(2.0) - mu.map(1.0)), 1e-10);

  const auto id = fn([](double t) { return t; });
  EXPECT_NEAR(mean_value_point(id, FractalDimension(1.0), 0.0, 2.0), 1.0, 1e-8);
}

TEST(MeanValue, ResidualBoundOnMonotoneCorpus) {
  const FractalDimension mu(0.6);
  const auto f = fn([](double t) { return std::exp(0.5 * t); });
  const double l = mean_value_point(f, mu, 0.3, 2.5);
  EXPECT_LE(std::abs(chen_integral(f, mu, 0.3, 2.5) - f(l) * (mu.map(2.5) - mu.map(0.3))), 1e-10);
}

TEST(MeanValue, NonMonotoneIsNotBracketed) {
  // (t - 1)^2 on [0, 2] equals 1 at both ends and averages 1/3.
  const auto f = fn([](double t) { return (t - 1.0) * (t - 1.0); });
  try {
    mean_value_point(f, FractalDimension(1.0), 0.0, 2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "mean value point not bracketed");
  }
}

TEST(ClosedForms, ExponentialRowAgainstStatedValue) {
  const FractalDimension mu(0.5);
  const std::vector<double> t{1.0};
  EXPECT_LE(closed_form_table_check({ClosedFormId::d_kww, 2.0}, mu, t), 1e-6);
  // D e^(2 t^mu) at t = 1 is 2 e^2.
  const auto g = fn([](double s) { return std::exp(2.0 * std::sqrt(s)); });
  EXPECT_NEAR(chen_derivative(g, mu, 1.0), 14.778112197861300, 1e-6);
}

TEST(ClosedForms, ConstantRowIsExact) {
  const std::vector<double> t{0.3, 1.0, 2.0};
  EXPECT_EQ(closed_form_table_check({ClosedFormId::d_constant}, FractalDimension(0.5), t), 0.0);
}

TEST(ClosedForms, EveryRowHoldsExceptPrintedExponentialIntegral) {
  for (double m : {0.5, 1.0}) {
    const FractalDimension mu(m);
    std::vector<double> t;
    for (double w = 0.5; w <= 1.5; w += 0.1) t.push_back(mu.unmap(w));
    for (ClosedFormId id : kAllClosedForms) {
      const double r = closed_form_table_check({id}, mu, t);
      if (info(id).errata) {
        EXPECT_GT(r, 1.0) << info(id).name;
      } else {
        EXPECT_LE(r, m == 1.0 ? 1e-8 : 1e-6) << info(id).name << " mu=" << m;
      }
    }
  }
}

TEST(ClosedForms, PrintedExponentialIntegralGap) {
  const FractalDimension mu(0.5);
  for (double t : {0.5, 1.0, 2.0}) {
    const std::vector<double> s{t};
    const double gap = std::abs(2.0 - 0.5) * std::exp(2.0 * std::sqrt(t));
    EXPECT_NEAR(closed_form_table_check({ClosedFormId::i_kww_literal, 2.0}, mu, s), gap, 1e-9 * gap);
  }
}

TEST(ClosedForms, InvalidParameters) {
  const std::vector<double> t{1.0};
  for (ClosedFormCase c : {ClosedFormCase{ClosedFormId::d_exp_base, 2.0, 1.0},
                           ClosedFormCase{ClosedFormId::i_log_base, 2.0, -2.0},
                           ClosedFormCase{ClosedFormId::i_kww, 0.0}}) {
    try {
      closed_form_table_check(c, FractalDimension(0.5), t);
      FAIL() << info(c.id).name;
    } catch (const Error& e) {
      EXPECT_STREQ(e.what(), "invalid case parameters");
    }
  }
}
