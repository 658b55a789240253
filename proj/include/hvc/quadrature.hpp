#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "hvc/error.hpp"

namespace hvc {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double width() const { return hi - lo; }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

// Newton iteration on P_n started from the Tricomi-type initial guess.
inline GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15) break;
    }
    // Recompute P_n' at the converged root for the weight.
    double p1 = 1.0;
    double p2 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
    }
    pp = n * (z * p1 - p2) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace detail

inline bool supported_gauss_points(int n) { return n == 4 || n == 8 || n == 16 || n == 32; }

/// Cached rule for n in {4, 8, 16, 32}.
inline const GaussRule& gauss_legendre(int n) {
  static const std::array<GaussRule, 4> rules = {
      detail::compute_gauss_legendre(4), detail::compute_gauss_legendre(8),
      detail::compute_gauss_legendre(16), detail::compute_gauss_legendre(32)};
  switch (n) {
    case 4: return rules[0];
    case 8: return rules[1];
    case 16: return rules[2];
    case 32: return rules[3];
    default: throw Error("unsupported Gauss-Legendre order " + std::to_string(n));
  }
}

/// Composite fixed-order Gauss-Legendre: `points` nodes on each of `panels`
/// equal panels per axis.
struct QuadratureSpec {
  int points = 16;
  int panels = 8;
  double budget = 1e8;

  void validate() const {
    if (!supported_gauss_points(points)) {
      throw Error("points per panel must be one of 4, 8, 16, 32");
    }
    if (panels < 1) throw Error("panels per axis must be >= 1");
  }

  QuadratureSpec refined(int factor = 2) const {
    QuadratureSpec q = *this;
    q.panels *= factor;
    return q;
  }

  /// Throws when (points*panels)^dimension exceeds the budget.
  void check_budget(int dimension) const {
    validate();
    const double count = std::pow(static_cast<double>(points) * panels, dimension);
    if (count > budget) {
      throw Error("quadrature budget exceeded: " + std::to_string(static_cast<long long>(count)) +
                  " evaluations requested");
    }
  }
};

/// Default for 1-D integrals.
inline constexpr QuadratureSpec kDefaultQuadrature{16, 8, 1e8};
/// Default for surface/volume integrals and the theorem suites.
inline constexpr QuadratureSpec kTheoremQuadrature{8, 2, 1e8};

/// Flattened composite nodes/weights on an interval, in increasing order.
inline std::pair<std::vector<double>, std::vector<double>> composite_nodes(Interval iv,
                                                                           const QuadratureSpec& q) {
  q.validate();
  const GaussRule& rule = gauss_legendre(q.points);
  std::vector<double> x;
  std::vector<double> w;
  x.reserve(static_cast<std::size_t>(q.points) * q.panels);
  w.reserve(x.capacity());
  const double h = iv.width() / q.panels;
  for (int p = 0; p < q.panels; ++p) {
    const double mid = iv.lo + (p + 0.5) * h;
    for (int k = 0; k < q.points; ++k) {
      x.push_back(mid + 0.5 * h * rule.nodes[k]);
      w.push_back(0.5 * h * rule.weights[k]);
    }
  }
  return {std::move(x), std::move(w)};
}

template <class F>
double integrate(F&& f, Interval iv, const QuadratureSpec& q = kDefaultQuadrature) {
  q.check_budget(1);
  const auto [x, w] = composite_nodes(iv, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += w[i] * f(x[i]);
  return sum;
}

/// f(a0, a1) over iv0 x iv1. `outer` names the axis (0 or 1) of the outer loop.
template <class F>
double integrate_2d(F&& f, Interval iv0, Interval iv1, const QuadratureSpec& q, int outer = 1) {
  q.check_budget(2);
  const auto [x0, w0] = composite_nodes(iv0, q);
  const auto [x1, w1] = composite_nodes(iv1, q);
  double sum = 0.0;
  if (outer == 1) {
    for (std::size_t j = 0; j < x1.size(); ++j) {
      double inner = 0.0;
      for (std::size_t i = 0; i < x0.size(); ++i) inner += w0[i] * f(x0[i], x1[j]);
      sum += w1[j] * inner;
    }
  } else {
    for (std::size_t i = 0; i < x0.size(); ++i) {
      double inner = 0.0;
      for (std::size_t j = 0; j < x1.size(); ++j) inner += w1[j] * f(x0[i], x1[j]);
      sum += w0[i] * inner;
    }
  }
  return sum;
}

/// f(a0, a1, a2) over a product of intervals. `order` lists the axes from the
/// outermost loop to the innermost.
template <class F>
double integrate_3d(F&& f, const std::array<Interval, 3>& ivs, const QuadratureSpec& q,
                    std::array<int, 3> order = {2, 1, 0}) {
  q.check_budget(3);
  std::array<std::vector<double>, 3> xs;
  std::array<std::vector<double>, 3> ws;
  for (int a = 0; a < 3; ++a) {
    auto [x, w] = composite_nodes(ivs[a], q);
    xs[a] = std::move(x);
    ws[a] = std::move(w);
  }
  const int A = order[0];
  const int B = order[1];
  const int C = order[2];
  std::array<double, 3> pt{};
  double sum = 0.0;
  for (std::size_t i = 0; i < xs[A].size(); ++i) {
    pt[A] = xs[A][i];
    double mid = 0.0;
    for (std::size_t j = 0; j < xs[B].size(); ++j) {
      pt[B] = xs[B][j];
      double inner = 0.0;
      for (std::size_t k = 0; k < xs[C].size(); ++k) {
        pt[C] = xs[C][k];
        inner += ws[C][k] * f(pt[0], pt[1], pt[2]);
      }
      mid += ws[B][j] * inner;
    }
    sum += ws[A][i] * mid;
  }
  return sum;
}

}  // namespace hvc
