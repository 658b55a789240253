#pragma once

// Explicit solvers for the 1-D anomalous diffusion and fractal Burgers
// equations on a uniform grid in the mapped coordinate u = x^mu:
//
//   d_t v = k(x) d_uu v + s(t, x)                       (diffusion)
//   d_t v + v p(x) d_u v = k(x) d_uu v + s(t, x)        (Burgers)
//
// with p(x) = mu x^(mu-1) and k(x) = theta p(x)^2. Second-order central
// differences in space, classical RK4 in time.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hvc/core.hpp"
#include "hvc/error.hpp"
#include "hvc/fractal_dimension.hpp"

namespace hvc {

struct Dirichlet {
  std::function<double(double)> left;
  std::function<double(double)> right;
};

/// Zero-flux ends via a mirrored ghost node.
struct Reflective {};

using Boundary1D = std::variant<Dirichlet, Reflective>;

/// Source term s(t, x).
using Source1D = std::function<double(double, double)>;

enum class Equation1D { anomalous_diffusion, fractal_burgers };

inline const char* to_string(Equation1D e) {
  return e == Equation1D::anomalous_diffusion ? "diffusion" : "burgers";
}

struct SolverParams {
  FractalDimension mu{1.0};
  double a = 0.0;
  double b = 1.0;
  int nodes = 201;
  double theta = 1.0;
  double t_end = 0.1;
  /// Fixed step; empty selects the largest certified step each step.
  std::optional<double> dt;
  double safety = 0.4;
  std::vector<double> snapshot_times;
};

struct CflCertificate {
  double diffusive_limit = 0.0;   // du^2 / (2 max k)
  double advective_limit = 0.0;   // du / max |v p|, infinite without advection
  double safety = 0.4;
  double largest_step = 0.0;      // largest dt actually taken
  double tightest_bound = 0.0;    // smallest safety * min(limits) seen over the run
};

struct Snapshot {
  double t = 0.0;
  std::vector<double> values;
};

struct Grid1DSolution {
  FractalDimension mu{1.0};
  double a = 0.0;
  double b = 1.0;
  double du = 0.0;
  std::vector<double> x;
  std::vector<double> u;
  std::vector<Snapshot> snapshots;
  CflCertificate cfl;
  long steps = 0;

  int nodes() const { return static_cast<int>(x.size()); }
  const std::vector<double>& final_values() const { return snapshots.back().values; }
};

namespace detail {

class Solver1D {
 public:
  Solver1D(Equation1D eq, const AnalyticFunction1D& initial, const Boundary1D& boundary,
           const SolverParams& prm, const std::optional<Source1D>& source)
      : eq_(eq), boundary_(boundary), prm_(prm), source_(source) {
    validate(initial);
    const FractalDimension mu = prm.mu;
    const int n = prm.nodes;
    const double u0 = mu.map(prm.a);
    const double u1 = mu.map(prm.b);
    sol_.mu = mu;
    sol_.a = prm.a;
    sol_.b = prm.b;
    sol_.du = (u1 - u0) / (n - 1);
    sol_.u.resize(n);
    sol_.x.resize(n);
    p_.resize(n);
    k_.resize(n);
    v_.resize(n);
    for (int i = 0; i < n; ++i) {
      sol_.u[i] = i == n - 1 ? u1 : u0 + i * sol_.du;
      sol_.x[i] = i == 0 ? prm.a : (i == n - 1 ? prm.b : mu.unmap(sol_.u[i]));
      p_[i] = mu.density(sol_.x[i]);
      k_[i] = prm.theta * p_[i] * p_[i];
      v_[i] = initial(sol_.x[i]);
    }
    sol_.cfl.safety = prm.safety;
    sol_.cfl.tightest_bound = std::numeric_limits<double>::infinity();
    impose_boundary(v_, 0.0);
  }

  Grid1DSolution run() {
    std::vector<double> targets = prm_.snapshot_times;
    if (targets.empty() || targets.back() < prm_.t_end) targets.push_back(prm_.t_end);
    double t = 0.0;
    for (double target : targets) {
      while (t < target) {
        const double bound = stability_bound(v_);
        double dt = prm_.dt ? *prm_.dt : bound;
        if (prm_.dt && *prm_.dt > bound * (1.0 + 1e-12)) {
          throw Error("time step exceeds stability bound");
        }
        // Accumulated rounding in t scales with the target, not the remainder.
        const double remaining = target - t;
        const bool last = dt >= remaining - 1e-12 * std::max(target, dt);
        if (last) dt = remaining;
        step(t, dt);
        t = last ? target : t + dt;
        sol_.cfl.largest_step = std::max(sol_.cfl.largest_step, dt);
        ++sol_.steps;
      }
      sol_.snapshots.push_back({target, v_});
    }
    return std::move(sol_);
  }

 private:
  void validate(const AnalyticFunction1D& initial) const {
    if (!(prm_.a >= 0.0 && prm_.a < prm_.b)) throw Error("empty or reversed interval");
    if (prm_.a == 0.0 && !prm_.mu.classical()) {
      throw Error("singular diffusion coefficient at origin");
    }
    if (prm_.nodes < 5) throw Error("at least 5 grid nodes are required");
    if (!(prm_.theta > 0.0)) throw Error("diffusivity must be positive");
    if (!(prm_.t_end >= 0.0)) throw Error("final time must be non-negative");
    if (!(prm_.safety > 0.0 && prm_.safety <= 1.0)) throw Error("safety factor must lie in (0, 1]");
    if (prm_.dt && !(*prm_.dt > 0.0)) throw Error("time step must be positive");
    if (!initial.eval) throw Error("initial condition is missing");
    double last = 0.0;
    for (double s : prm_.snapshot_times) {
      if (s < last || s > prm_.t_end) throw Error("snapshot times must be sorted within [0, t_end]");
      last = s;
    }
    if (const auto* d = std::get_if<Dirichlet>(&boundary_); d && (!d->left || !d->right)) {
      throw Error("Dirichlet boundary values are missing");
    }
  }

  bool reflective() const { return std::holds_alternative<Reflective>(boundary_); }

  void impose_boundary(std::vector<double>& v, double t) const {
    if (const auto* d = std::get_if<Dirichlet>(&boundary_)) {
      v.front() = d->left(t);
      v.back() = d->right(t);
    }
  }

  double stability_bound(const std::vector<double>& v) {
    const double du = sol_.du;
    double kmax = 0.0;
    double amax = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      kmax = std::max(kmax, k_[i]);
      if (eq_ == Equation1D::fractal_burgers) amax = std::max(amax, std::abs(v[i] * p_[i]));
    }
    const double diff = du * du / (2.0 * kmax);
    const double adv = amax > 0.0 ? du / amax : std::numeric_limits<double>::infinity();
    sol_.cfl.diffusive_limit = diff;
    sol_.cfl.advective_limit = adv;
    const double bound = prm_.safety * std::min(diff, adv);
    sol_.cfl.tightest_bound = std::min(sol_.cfl.tightest_bound, bound);
    return bound;
  }

  // Value at index j with mirrored ghosts at reflective ends.
  double value(const std::vector<double>& v, int j) const {
    const int n = static_cast<int>(v.size());
    if (j < 0) return v[-j];
    if (j >= n) return v[2 * (n - 1) - j];
    return v[j];
  }

  double advection_slope(const std::vector<double>& v, int i, double speed) const {
    const int n = static_cast<int>(v.size());
    const double du = sol_.du;
    const bool room_left = reflective() || i - 2 >= 0;
    const bool room_right = reflective() || i + 2 <= n - 1;
    if (speed > 0.0 && room_left) {
      return (3.0 * v[i] - 4.0 * value(v, i - 1) + value(v, i - 2)) / (2.0 * du);
    }
    if (speed < 0.0 && room_right) {
      return (-3.0 * v[i] + 4.0 * value(v, i + 1) - value(v, i + 2)) / (2.0 * du);
    }
    return (value(v, i + 1) - value(v, i - 1)) / (2.0 * du);
  }

  void rhs(const std::vector<double>& v, double t, std::vector<double>& out) const {
    const int n = static_cast<int>(v.size());
    const double du2 = sol_.du * sol_.du;
    const int first = reflective() ? 0 : 1;
    const int last = reflective() ? n - 1 : n - 2;
    std::fill(out.begin(), out.end(), 0.0);
    for (int i = first; i <= last; ++i) {
      double r = k_[i] * (value(v, i + 1) - 2.0 * v[i] + value(v, i - 1)) / du2;
      if (eq_ == Equation1D::fractal_burgers) {
        const double speed = v[i] * p_[i];
        r -= speed * advection_slope(v, i, speed);
      }
      if (source_) r += (*source_)(t, sol_.x[i]);
      out[i] = r;
    }
  }

  void step(double t, double dt) {
    const std::size_t n = v_.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), stage(n);
    auto at_stage = [&](const std::vector<double>& kprev, double frac, double ts) {
      for (std::size_t i = 0; i < n; ++i) stage[i] = v_[i] + frac * dt * kprev[i];
      impose_boundary(stage, ts);
    };
    rhs(v_, t, k1);
    at_stage(k1, 0.5, t + 0.5 * dt);
    rhs(stage, t + 0.5 * dt, k2);
    at_stage(k2, 0.5, t + 0.5 * dt);
    rhs(stage, t + 0.5 * dt, k3);
    at_stage(k3, 1.0, t + dt);
    rhs(stage, t + dt, k4);
    for (std::size_t i = 0; i < n; ++i) {
      v_[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(v_[i]) || std::abs(v_[i]) > 1e6) {
        throw Error("solution magnitude overflow");
      }
    }
    impose_boundary(v_, t + dt);
  }

  Equation1D eq_;
  Boundary1D boundary_;
  SolverParams prm_;
  std::optional<Source1D> source_;
  Grid1DSolution sol_;
  std::vector<double> p_;
  std::vector<double> k_;
  std::vector<double> v_;
};

}  // namespace detail

inline Grid1DSolution solve_1d(Equation1D eq, const AnalyticFunction1D& initial,
                               const Boundary1D& boundary, const SolverParams& params,
                               const std::optional<Source1D>& source = std::nullopt) {
  return detail::Solver1D(eq, initial, boundary, params, source).run();
}

inline Grid1DSolution solve_anomalous_diffusion(const AnalyticFunction1D& initial,
                                                const Boundary1D& boundary,
                                                const SolverParams& params,
                                                const std::optional<Source1D>& source = std::nullopt) {
  return solve_1d(Equation1D::anomalous_diffusion, initial, boundary, params, source);
}

inline Grid1DSolution solve_fractal_burgers(const AnalyticFunction1D& initial,
                                            const Boundary1D& boundary, const SolverParams& params,
                                            const std::optional<Source1D>& source = std::nullopt) {
  return solve_1d(Equation1D::fractal_burgers, initial, boundary, params, source);
}

namespace detail {

// Trapezoid rule over the mapped grid.
template <class F>
double mapped_trapezoid(const Grid1DSolution& s, F&& f) {
  const int n = s.nodes();
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += (i == 0 || i == n - 1 ? 0.5 : 1.0) * f(i);
  return sum * s.du;
}

}  // namespace detail

/// Discrete L2 norm (in u) of the difference to `exact` at snapshot `k`.
inline double l2_error(const Grid1DSolution& s, std::size_t k,
                       const std::function<double(double, double)>& exact) {
  const Snapshot& snap = s.snapshots.at(k);
  return std::sqrt(detail::mapped_trapezoid(s, [&](int i) {
    const double e = snap.values[i] - exact(snap.t, s.x[i]);
    return e * e;
  }));
}

/// mu * integral of v x^(mu-1) dx, i.e. the integral of v du.
inline double fractal_mass(const Grid1DSolution& s, const std::vector<double>& v) {
  return detail::mapped_trapezoid(s, [&](int i) { return v[i]; });
}

/// Integral of v x^(2-2mu) du, the quantity conserved by source-free
/// diffusion with reflective ends. Equal to fractal_mass at mu = 1.
inline double weighted_mass(const Grid1DSolution& s, const std::vector<double>& v) {
  const double e = 2.0 - 2.0 * s.mu.value();
  return detail::mapped_trapezoid(s, [&](int i) {
    return v[i] * (e == 0.0 ? 1.0 : std::pow(s.x[i], e));
  });
}

}  // namespace hvc
