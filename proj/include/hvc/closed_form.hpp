#pragma once

// Closed-form Chen derivative and antiderivative tables as executable checks.
//
// Functions are written in terms of w = t^mu. Cases that involve a generic
// inner function use Xi(w) = 0.5 + w + w^2/2, whose Chen derivative is 1 + w.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <string>

#include "hvc/core.hpp"

namespace hvc {

enum class ClosedFormId {
  d_constant,            // D 1 = 0
  d_power_law,           // D t^mu = 1
  d_power,               // D (t^mu)^n = n t^(mu(n-1))
  d_kww,                 // D e^(beta t^mu) = beta e^(beta t^mu)
  d_log,                 // D ln(t^mu) = 1/t^mu
  d_exp_base,            // D s^(t^mu) = ln s s^(t^mu)
  d_log_base,            // D log_s(t^mu) = 1/(t^mu ln s)
  d_exp_composite,       // D e^Xi = e^Xi D Xi
  d_log_base_composite,  // D log_s Xi = D Xi / (Xi ln s)
  d_log_composite,       // D ln Xi = D Xi / Xi
  d_exp_base_composite,  // D s^Xi = ln s s^Xi D Xi
  i_constant,            // I 1 = t^mu
  i_power,               // I n (t^mu)^(n-1) = (t^mu)^n
  i_log_base_composite,  // I (1/ln s) D Xi / Xi = log_s Xi
  i_reciprocal,          // I 1/t^mu = ln t^mu
  i_log_base,            // I 1/(t^mu ln s) = log_s t^mu
  i_exp_base,            // I ln s s^(t^mu) = s^(t^mu)
  i_exp_composite,       // I e^Xi D Xi = e^Xi
  i_abs_composite,       // I Xi/|Xi| D Xi = |Xi|
  i_log_composite,       // I D Xi / Xi = ln Xi
  i_kww,                 // I e^(beta t^mu) = e^(beta t^mu)/beta  (corrected)
  i_kww_literal,         // I e^(beta t^mu) = beta e^(beta t^mu)  (as printed)
  i_exp_base_composite,  // I ln s s^Xi D Xi = s^Xi
};

inline constexpr std::array<ClosedFormId, 23> kAllClosedForms = {
    ClosedFormId::d_constant,           ClosedFormId::d_power_law,
    ClosedFormId::d_power,              ClosedFormId::d_kww,
    ClosedFormId::d_log,                ClosedFormId::d_exp_base,
    ClosedFormId::d_log_base,           ClosedFormId::d_exp_composite,
    ClosedFormId::d_log_base_composite, ClosedFormId::d_log_composite,
    ClosedFormId::d_exp_base_composite, ClosedFormId::i_constant,
    ClosedFormId::i_power,              ClosedFormId::i_log_base_composite,
    ClosedFormId::i_reciprocal,         ClosedFormId::i_log_base,
    ClosedFormId::i_exp_base,           ClosedFormId::i_exp_composite,
    ClosedFormId::i_abs_composite,      ClosedFormId::i_log_composite,
    ClosedFormId::i_kww,                ClosedFormId::i_kww_literal,
    ClosedFormId::i_exp_base_composite};

struct ClosedFormInfo {
  const char* name;
  int row;  // 1-based position within its table
  bool integral;
  bool corrected;  // adopted reading differs from the printed one
  bool errata;     // printed form, expected to fail
};

inline ClosedFormInfo info(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::d_constant: return {"d_constant", 1, false, false, false};
    case ClosedFormId::d_power_law: return {"d_power_law", 2, false, false, false};
    case ClosedFormId::d_power: return {"d_power", 3, false, false, false};
    case ClosedFormId::d_kww: return {"d_kww", 4, false, false, false};
    case ClosedFormId::d_log: return {"d_log", 5, false, false, false};
    case ClosedFormId::d_exp_base: return {"d_exp_base", 6, false, false, false};
    case ClosedFormId::d_log_base: return {"d_log_base", 7, false, false, false};
    case ClosedFormId::d_exp_composite: return {"d_exp_composite", 8, false, false, false};
    case ClosedFormId::d_log_base_composite: return {"d_log_base_composite", 9, false, false, false};
    case ClosedFormId::d_log_composite: return {"d_log_composite", 10, false, false, false};
    case ClosedFormId::d_exp_base_composite: return {"d_exp_base_composite", 11, false, false, false};
    case ClosedFormId::i_constant: return {"i_constant", 1, true, false, false};
    case ClosedFormId::i_power: return {"i_power", 2, true, false, false};
    case ClosedFormId::i_log_base_composite: return {"i_log_base_composite", 3, true, false, false};
    case ClosedFormId::i_reciprocal: return {"i_reciprocal", 4, true, false, false};
    case ClosedFormId::i_log_base: return {"i_log_base", 5, true, false, false};
    case ClosedFormId::i_exp_base: return {"i_exp_base", 6, true, false, false};
    case ClosedFormId::i_exp_composite: return {"i_exp_composite", 7, true, false, false};
    case ClosedFormId::i_abs_composite: return {"i_abs_composite", 8, true, false, false};
    case ClosedFormId::i_log_composite: return {"i_log_composite", 9, true, false, false};
    case ClosedFormId::i_kww: return {"i_kww", 10, true, true, false};
    case ClosedFormId::i_kww_literal: return {"i_kww_literal", 10, true, false, true};
    case ClosedFormId::i_exp_base_composite: return {"i_exp_base_composite", 11, true, false, false};
  }
  return {"?", 0, false, false, false};
}

struct ClosedFormCase {
  ClosedFormId id = ClosedFormId::d_constant;
  double beta = 2.0;
  double s = 3.0;
  int n = 3;
};

namespace detail {

inline double inner_xi(double w) { return 0.5 + w + 0.5 * w * w; }
inline double inner_dxi(double w) { return 1.0 + w; }

inline bool uses_base(ClosedFormId id) {
  switch (id) {
    case ClosedFormId::d_exp_base:
    case ClosedFormId::d_log_base:
    case ClosedFormId::d_log_base_composite:
    case ClosedFormId::d_exp_base_composite:
    case ClosedFormId::i_log_base_composite:
    case ClosedFormId::i_log_base:
    case ClosedFormId::i_exp_base:
    case ClosedFormId::i_exp_base_composite: return true;
    default: return false;
  }
}

inline void validate(const ClosedFormCase& c) {
  bool ok = std::isfinite(c.beta) && std::isfinite(c.s);
  if (uses_base(c.id)) ok = ok && c.s > 0.0 && c.s != 1.0;
  if (c.id == ClosedFormId::d_power || c.id == ClosedFormId::i_power) ok = ok && c.n >= 1;
  if (c.id == ClosedFormId::i_kww || c.id == ClosedFormId::i_kww_literal) ok = ok && c.beta != 0.0;
  if (!ok) throw Error("invalid case parameters");
}

}  // namespace detail

/// The function whose Chen derivative is checked (the table's left side for
/// derivative rows, the stated antiderivative for integral rows), together
/// with the value it should produce. Both are functions of w = t^mu.
struct ClosedFormPair {
  std::function<double(double)> differentiated;
  std::function<double(double)> expected;
};

inline ClosedFormPair closed_form_pair(const ClosedFormCase& c) {
  detail::validate(c);
  using detail::inner_dxi;
  using detail::inner_xi;
  const double beta = c.beta;
  const double s = c.s;
  const double ls = std::log(s);
  const int n = c.n;
  switch (c.id) {
    case ClosedFormId::d_constant: return {[](double) { return 1.0; }, [](double) { return 0.0; }};
    case ClosedFormId::d_power_law: return {[](double w) { return w; }, [](double) { return 1.0; }};
    case ClosedFormId::d_power:
      return {[n](double w) { return std::pow(w, n); },
              [n](double w) { return n * std::pow(w, n - 1); }};
    case ClosedFormId::d_kww:
      return {[beta](double w) { return std::exp(beta * w); },
              [beta](double w) { return beta * std::exp(beta * w); }};
    case ClosedFormId::d_log:
      return {[](double w) { return std::log(w); }, [](double w) { return 1.0 / w; }};
    case ClosedFormId::d_exp_base:
      return {[s](double w) { return std::pow(s, w); },
              [s, ls](double w) { return ls * std::pow(s, w); }};
    case ClosedFormId::d_log_base:
      return {[ls](double w) { return std::log(w) / ls; },
              [ls](double w) { return 1.0 / (w * ls); }};
    case ClosedFormId::d_exp_composite:
      return {[](double w) { return std::exp(inner_xi(w)); },
              [](double w) { return std::exp(inner_xi(w)) * inner_dxi(w); }};
    case ClosedFormId::d_log_base_composite:
      return {[ls](double w) { return std::log(inner_xi(w)) / ls; },
              [ls](double w) { return inner_dxi(w) / (inner_xi(w) * ls); }};
    case ClosedFormId::d_log_composite:
      return {[](double w) { return std::log(inner_xi(w)); },
              [](double w) { return inner_dxi(w) / inner_xi(w); }};
    case ClosedFormId::d_exp_base_composite:
      return {[s](double w) { return std::pow(s, inner_xi(w)); },
              [s, ls](double w) { return ls * std::pow(s, inner_xi(w)) * inner_dxi(w); }};
    case ClosedFormId::i_constant: return {[](double w) { return w; }, [](double) { return 1.0; }};
    case ClosedFormId::i_power:
      return {[n](double w) { return std::pow(w, n); },
              [n](double w) { return n * std::pow(w, n - 1); }};
    case ClosedFormId::i_log_base_composite:
      return {[ls](double w) { return std::log(inner_xi(w)) / ls; },
              [ls](double w) { return inner_dxi(w) / inner_xi(w) / ls; }};
    case ClosedFormId::i_reciprocal:
      return {[](double w) { return std::log(w); }, [](double w) { return 1.0 / w; }};
    case ClosedFormId::i_log_base:
      return {[ls](double w) { return std::log(w) / ls; },
              [ls](double w) { return 1.0 / (ls * w); }};
    case ClosedFormId::i_exp_base:
      return {[s](double w) { return std::pow(s, w); },
              [s, ls](double w) { return ls * std::pow(s, w); }};
    case ClosedFormId::i_exp_composite:
      return {[](double w) { return std::exp(inner_xi(w)); },
              [](double w) { return std::exp(inner_xi(w)) * inner_dxi(w); }};
    case ClosedFormId::i_abs_composite:
      // Xi is taken negative here so the sign factor Xi/|Xi| is exercised.
      return {[](double w) { return std::abs(-inner_xi(w)); },
              [](double w) {
                const double xi = -inner_xi(w);
                return xi / std::abs(xi) * (-inner_dxi(w));
              }};
    case ClosedFormId::i_log_composite:
      return {[](double w) { return std::log(inner_xi(w)); },
              [](double w) { return inner_dxi(w) / inner_xi(w); }};
    case ClosedFormId::i_kww:
      return {[beta](double w) { return std::exp(beta * w) / beta; },
              [beta](double w) { return std::exp(beta * w); }};
    case ClosedFormId::i_kww_literal:
      return {[beta](double w) { return beta * std::exp(beta * w); },
              [beta](double w) { return std::exp(beta * w); }};
    case ClosedFormId::i_exp_base_composite:
      return {[s](double w) { return std::pow(s, inner_xi(w)); },
              [s, ls](double w) { return ls * std::pow(s, inner_xi(w)) * inner_dxi(w); }};
  }
  throw Error("invalid case parameters");
}

/// Max absolute residual of one table identity over positive samples.
///
/// Derivative rows compare the Chen derivative of the left side with the
/// stated right side; integral rows compare the Chen derivative of the
/// stated antiderivative with the integrand. The printed KWW antiderivative row
/// instead reports its gap to the corrected antiderivative,
/// |beta - 1/beta| e^(beta t^mu).
inline double closed_form_table_check(const ClosedFormCase& c, FractalDimension mu,
                                      std::span<const double> samples) {
  if (samples.empty()) throw Error("no sample points");
  const ClosedFormPair pair = closed_form_pair(c);
  double worst = 0.0;
  for (double t : samples) {
    if (!(t > 0.0)) throw Error("point outside domain");
    const double w = mu.map(t);
    double r = 0.0;
    if (c.id == ClosedFormId::i_kww_literal) {
      r = std::abs(pair.differentiated(w) - std::exp(c.beta * w) / c.beta);
    } else {
      AnalyticFunction1D g;
      g.eval = [mu, f = pair.differentiated](double tt) { return f(mu.map(tt)); };
      // Richardson combination of two central differences: fourth order.
      const double h = 1e-3 * std::max(1.0, w);
      const double d1 = chen_derivative(g, mu, t, DerivativeMethod::mapped_stencil, h);
      const double d2 = chen_derivative(g, mu, t, DerivativeMethod::mapped_stencil, 0.5 * h);
      r = std::abs((4.0 * d2 - d1) / 3.0 - pair.expected(w));
    }
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace hvc
