#pragma once

// One-dimensional Chen Hausdorff derivative and integral.
//
// All numerics run in the mapped coordinate w = t^mu, where
//   D f(t) = (t^(1-mu)/mu) f'(t) = d/dw f(w^(1/mu))
//   I_a^b f = mu * int_a^b f(t) t^(mu-1) dt = int_{a^mu}^{b^mu} f(w^(1/mu)) dw.
// The direct prefactor formula is kept only to cross-check the stencil.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hvc/error.hpp"
#include "hvc/fractal_dimension.hpp"
#include "hvc/quadrature.hpp"

namespace hvc {

/// A real function of t >= 0 on [lo, hi], optionally with its exact classical
/// derivative for oracle use.
struct AnalyticFunction1D {
  std::function<double(double)> eval;
  std::function<double(double)> classical_derivative;
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  double operator()(double t) const { return eval(t); }
  bool has_classical_derivative() const { return static_cast<bool>(classical_derivative); }
  bool contains(double t) const { return t >= lo && t <= hi; }
};

enum class DerivativeMethod { mapped_stencil, direct_formula };

/// Default central-difference step in the mapped coordinate.
inline double default_step(double w) { return 1e-5 * std::max(1.0, std::abs(w)); }

namespace detail {

// Shrinks a default step so the stencil stays inside [lo, hi]. Explicit steps
// are never adjusted.
inline double fit_step(double centre, double step, double lo, double hi, bool adjustable) {
  if (centre < lo || centre > hi) throw Error("point outside domain");
  if (!adjustable) {
    if (centre - step < lo || centre + step > hi) throw Error("point outside domain");
    return step;
  }
  const double room = std::min(centre - lo, hi - centre);
  if (!(room > 0.0)) throw Error("point outside domain");
  return std::min(step, 0.5 * room);
}

}  // namespace detail

/// Chen Hausdorff derivative (t^(1-mu)/mu) f'(t) by a central difference.
///
/// `mapped_stencil` differentiates g(w) = f(w^(1/mu)) at w = t^mu with step
/// in w; `direct_formula` applies the prefactor to a central difference of f
/// in t. When `step` is omitted the default step is used and shrunk near the
/// domain ends.
inline double chen_derivative(const AnalyticFunction1D& f, FractalDimension mu, double t,
                              DerivativeMethod method = DerivativeMethod::mapped_stencil,
                              std::optional<double> step = std::nullopt) {
  if (step && !(*step > 0.0)) throw Error("derivative step must be positive");
  if (!f.contains(t)) throw Error("point outside domain");
  if (method == DerivativeMethod::direct_formula) {
    if (t == 0.0 && !mu.classical()) throw Error("singular prefactor at origin");
    const double h = detail::fit_step(t, step.value_or(default_step(t)), f.lo, f.hi, !step);
    const double df = (f(t + h) - f(t - h)) / (2.0 * h);
    return mu.classical() ? df : std::pow(t, 1.0 - mu.value()) / mu.value() * df;
  }
  const double w = mu.map(t);
  const double wlo = mu.map(f.lo);
  const double whi = std::isinf(f.hi) ? f.hi : mu.map(f.hi);
  const double h = detail::fit_step(w, step.value_or(default_step(w)), wlo, whi, !step);
  return (f(mu.unmap(w + h)) - f(mu.unmap(w - h))) / (2.0 * h);
}

/// The Chen derivative of f as a new function on f's domain.
inline AnalyticFunction1D chen_derivative_function(const AnalyticFunction1D& f,
                                                   FractalDimension mu) {
  AnalyticFunction1D d;
  d.eval = [f, mu](double t) { return chen_derivative(f, mu, t); };
  d.lo = f.lo;
  d.hi = f.hi;
  return d;
}

/// Chen Hausdorff integral over [a, b] by composite Gauss-Legendre in w.
inline double chen_integral(const AnalyticFunction1D& f, FractalDimension mu, double a, double b,
                            const QuadratureSpec& quad) {
  if (a < 0.0) throw Error("negative abscissa");
  if (!(a < b)) throw Error("empty or reversed interval");
  return integrate([&](double w) { return f(mu.unmap(w)); }, Interval{mu.map(a), mu.map(b)},
                   quad);
}

inline double chen_integral(const AnalyticFunction1D& f, FractalDimension mu, double a, double b,
                            int panels = kDefaultQuadrature.panels) {
  if (panels < 1) throw Error("panels per axis must be >= 1");
  QuadratureSpec q = kDefaultQuadrature;
  q.panels = panels;
  return chen_integral(f, mu, a, b, q);
}

// ---------------------------------------------------------------------------
// Kohlrausch-Williams-Watts function e^(beta t^mu)

enum class KwwMode { closed_form, series };

/// e^(beta t^mu). Series mode sums beta^n t^(n mu)/n! for at most `nterms`
/// terms, stopping once |term| < 1e-16 |partial sum|.
inline double kww(double beta, FractalDimension mu, double t, KwwMode mode = KwwMode::closed_form,
                  int nterms = 200) {
  if (t < 0.0) throw Error("negative abscissa");
  const double x = beta * mu.map(t);
  if (mode == KwwMode::closed_form) {
    if (x > 700.0) throw Error("magnitude overflow");
    return std::exp(x);
  }
  if (nterms < 1) throw Error("series needs at least one term");
  if (std::abs(x) > 700.0) throw Error("magnitude overflow");
  double sum = 1.0;
  double term = 1.0;
  for (int n = 1; n < nterms; ++n) {
    term *= x / n;
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) break;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Algebraic rules

enum class Rule { sum, const_mul, product, quotient, chain, parts };

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::sum: return "sum";
    case Rule::const_mul: return "const_mul";
    case Rule::product: return "product";
    case Rule::quotient: return "quotient";
    case Rule::chain: return "chain";
    case Rule::parts: return "parts";
  }
  return "?";
}

struct RuleOptions {
  double alpha = 1.75;  // constant for const_mul
  QuadratureSpec quad = kDefaultQuadrature;
};

/// Worst residual of one rule over the samples, with both sides at that sample.
struct RuleCheck {
  double max_residual = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

namespace detail {

inline AnalyticFunction1D combine(const AnalyticFunction1D& f1, const AnalyticFunction1D& f2,
                                  std::function<double(double, double)> op) {
  AnalyticFunction1D g;
  g.eval = [f1, f2, op = std::move(op)](double t) { return op(f1(t), f2(t)); };
  g.lo = std::max(f1.lo, f2.lo);
  g.hi = std::min(f1.hi, f2.hi);
  return g;
}

inline double classical_slope(const AnalyticFunction1D& f, double x) {
  if (f.has_classical_derivative()) return f.classical_derivative(x);
  const double h = 1e-5 * std::max(1.0, std::abs(x));
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace detail

/// Evaluates both sides of a derivative rule (sum, constant multiple,
/// product, quotient, chain) at each sample, or of integration by parts over
/// [min sample, max sample], and reports the largest absolute residual.
///
/// For `chain`, f1 is the outer function and f2 the inner one.
inline RuleCheck check_rule(Rule rule, const AnalyticFunction1D& f1, const AnalyticFunction1D& f2,
                            FractalDimension mu, std::span<const double> samples,
                            const RuleOptions& opts = {}) {
  if (samples.empty()) throw Error("no sample points");
  for (double t : samples) {
    if (!(t > std::max(f1.lo, f2.lo) && t < std::min(f1.hi, f2.hi))) {
      throw Error("point outside domain");
    }
  }
  auto D = [&](const AnalyticFunction1D& g, double t) { return chen_derivative(g, mu, t); };

  RuleCheck out;
  auto record = [&](double lhs, double rhs) {
    const double r = std::abs(lhs - rhs);
    if (r >= out.max_residual) out = {r, lhs, rhs};
  };

  if (rule == Rule::parts) {
    const auto [a_it, b_it] = std::minmax_element(samples.begin(), samples.end());
    const double a = *a_it;
    const double b = *b_it;
    const auto f1_df2 = [&] {
      AnalyticFunction1D d2 = chen_derivative_function(f2, mu);
      return detail::combine(f1, d2, [](double p, double q) { return p * q; });
    }();
    const auto f2_df1 = [&] {
      AnalyticFunction1D d1 = chen_derivative_function(f1, mu);
      return detail::combine(f2, d1, [](double p, double q) { return p * q; });
    }();
    const double lhs = chen_integral(f2_df1, mu, a, b, opts.quad);
    const double rhs = (f1(b) * f2(b) - f1(a) * f2(a)) - chen_integral(f1_df2, mu, a, b, opts.quad);
    record(lhs, rhs);
    return out;
  }

  for (double t : samples) {
    switch (rule) {
      case Rule::sum: {
        const auto plus = detail::combine(f1, f2, std::plus<>{});
        const auto minus = detail::combine(f1, f2, std::minus<>{});
        const double d1 = D(f1, t);
        const double d2 = D(f2, t);
        record(D(plus, t), d1 + d2);
        record(D(minus, t), d1 - d2);
        break;
      }
      case Rule::const_mul: {
        AnalyticFunction1D scaled = f1;
        scaled.eval = [f1, alpha = opts.alpha](double s) { return alpha * f1(s); };
        record(D(scaled, t), opts.alpha * D(f1, t));
        break;
      }
      case Rule::product: {
        const auto prod = detail::combine(f1, f2, std::multiplies<>{});
        record(D(prod, t), f2(t) * D(f1, t) + f1(t) * D(f2, t));
        break;
      }
      case Rule::quotient: {
        const double den = f2(t);
        if (std::abs(den) < 1e-12) throw Error("division by near-zero");
        const auto quot = detail::combine(f1, f2, std::divides<>{});
        record(D(quot, t), (den * D(f1, t) - f1(t) * D(f2, t)) / (den * den));
        break;
      }
      case Rule::chain: {
        AnalyticFunction1D composite = f2;
        composite.eval = [f1, f2](double s) { return f1(f2(s)); };
        record(D(composite, t), detail::classical_slope(f1, f2(t)) * D(f2, t));
        break;
      }
      case Rule::parts: break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fundamental theorems, mean value point

struct FundamentalResiduals {
  double first = 0.0;   // |F(t) - F(a) - I_a^t(D F)|
  double second = 0.0;  // |f(t) - D(I_a^. f)(t)|
};

inline FundamentalResiduals fundamental_theorem_residuals(
    const AnalyticFunction1D& f, FractalDimension mu, double a, double t,
    const QuadratureSpec& quad = kDefaultQuadrature) {
  if (a < 0.0) throw Error("negative abscissa");
  if (!(a < t)) throw Error("empty or reversed interval");
  FundamentalResiduals r;
  r.first = std::abs(f(t) - f(a) - chen_integral(chen_derivative_function(f, mu), mu, a, t, quad));

  AnalyticFunction1D running;
  running.eval = [f, mu, a, quad](double s) {
    return s == a ? 0.0 : chen_integral(f, mu, a, s, quad);
  };
  running.lo = a;
  r.second = std::abs(f(t) - chen_derivative(running, mu, t));
  return r;
}

/// Net change over [a, b]: the first fundamental residual at t = b.
inline double net_change_residual(const AnalyticFunction1D& f, FractalDimension mu, double a,
                                  double b, const QuadratureSpec& quad = kDefaultQuadrature) {
  return fundamental_theorem_residuals(f, mu, a, b, quad).first;
}

/// Finds l in (a, t] with I_a^t f = f(l) (t^mu - a^mu) by bisection. The
/// caller declares f continuous and monotone on [a, t].
inline double mean_value_point(const AnalyticFunction1D& f, FractalDimension mu, double a,
                               double t, const QuadratureSpec& quad = kDefaultQuadrature) {
  const double integral = chen_integral(f, mu, a, t, quad);
  const double span = mu.map(t) - mu.map(a);
  const double target = integral / span;
  auto residual = [&](double l) { return f(l) - target; };

  const double scale = std::max(1.0, std::abs(target));
  double lo = a;
  double hi = t;
  double r_lo = residual(lo);
  const double r_hi = residual(hi);
  if (std::abs(r_hi) <= 1e-14 * scale) return t;
  if (std::abs(r_lo) > 1e-14 * scale && (r_lo > 0.0) == (r_hi > 0.0)) {
    throw Error("mean value point not bracketed");
  }
  for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double r_mid = residual(mid);
    if (r_mid == 0.0) return mid;
    if ((r_mid > 0.0) == (r_lo > 0.0)) {
      lo = mid;
      r_lo = r_mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

}  // namespace hvc
