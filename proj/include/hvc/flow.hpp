#pragma once

// Pointwise residual evaluators for the fractal power-law flow equations:
// material derivative, transport kernel, mass conservation, stress tensor and
// the momentum system. There is no 3-D time integrator.

#include <array>
#include <cmath>
#include <functional>
#include <string>

#include "hvc/theorems.hpp"
#include "hvc/vecops.hpp"

namespace hvc {

using SpaceTimeScalar = std::function<double(const Vec3&, double)>;
using SpaceTimeVector = std::function<Vec3(const Vec3&, double)>;

/// Frozen-time slice of a space-time field.
inline ScalarField3D at(const SpaceTimeScalar& f, double t) {
  return {[f, t](const Vec3& p) { return f(p, t); }, {}};
}

inline VectorField3D at(const SpaceTimeVector& f, double t) {
  return {[f, t](const Vec3& p) { return f(p, t); }, {}};
}

namespace detail {

inline double time_step(double t) { return 1e-3 * std::max(1.0, std::abs(t)); }

template <class F>
auto time_derivative(F&& f, double t) {
  const double h = time_step(t);
  return (1.0 / (12.0 * h)) * (f(t - 2.0 * h) - 8.0 * f(t - h) + 8.0 * f(t + h) - f(t + 2.0 * h));
}

}  // namespace detail

/// d phi/dt + upsilon . grad phi. The default convention multiplies each
/// Chen partial by mu x^(mu-1).
inline double material_derivative(const SpaceTimeScalar& phi, const SpaceTimeVector& upsilon,
                                  const Vec3& p, double t, FractalDimension mu,
                                  Convention conv = Convention::paper_literal,
                                  const StencilOptions& opts = {}) {
  const double dt = detail::time_derivative([&](double s) { return phi(p, s); }, t);
  return dt + dot(upsilon(p, t), gradient(at(phi, t), p, mu, conv, opts));
}

/// Volume integral of upsilon . grad G against the flux of G upsilon. The
/// identity needs a divergence-free velocity; otherwise a note is recorded.
inline TheoremReport transport_identity_check(const ScalarField3D& G, const VectorField3D& upsilon,
                                              const BoxDomain& box, Convention conv,
                                              const QuadratureSpec& quad = kTheoremQuadrature,
                                              const StencilOptions& opts = {}) {
  const FractalDimension mu = box.mu();
  const ScalarField3D advect{[&](const Vec3& p) {
                               return dot(upsilon(p), gradient(G, p, mu, conv, opts));
                             },
                             {}};
  const VectorField3D carried{[&](const Vec3& p) { return G(p) * upsilon(p); }, {}};
  TheoremReport r = make_report("transport_kernel", conv, mu, volume_integral(advect, box, quad),
                                flux_closed(carried, box, quad));

  double div_max = 0.0;
  double scale = 1.0;
  for (double fx : {0.25, 0.75}) {
    for (double fy : {0.25, 0.75}) {
      for (double fz : {0.25, 0.75}) {
        Vec3 q;
        for (int i = 0; i < 3; ++i) {
          const double f = i == 0 ? fx : (i == 1 ? fy : fz);
          q[i] = box.lo()[i] + f * (box.hi()[i] - box.lo()[i]);
        }
        div_max = std::max(div_max, std::abs(divergence(upsilon, q, mu, conv, opts)));
        scale = std::max(scale, max_abs(upsilon(q)));
      }
    }
  }
  if (div_max > 1e-6 * scale) {
    r.notes.push_back("velocity is not divergence-free on the box (max |div| = " +
                      std::to_string(div_max) + "); the identity is not expected to hold");
  }
  return r;
}

namespace detail {

// True when upsilon takes the same value at every stencil and time probe
// used around (p, t).
inline bool probes_constant(const SpaceTimeVector& upsilon, const Vec3& p, double t,
                            FractalDimension mu, const StencilOptions& opts) {
  const Vec3 v0 = upsilon(p, t);
  const double h = time_step(t);
  for (double s : {t - 2 * h, t - h, t + h, t + 2 * h}) {
    if (!(upsilon(p, s) == v0)) return false;
  }
  for (Axis a : kAxes) {
    const double w = mu.map(p[a]);
    const double hw = mapped_step(w, mu, opts);
    for (int k : {-2, -1, 1, 2}) {
      Vec3 q = p;
      q[a] = mu.unmap(w + k * hw);
      if (!(upsilon(q, t) == v0)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// d rho/dt + upsilon . grad rho. For a constant velocity the divergence
/// form d rho/dt + div(rho upsilon) is evaluated too and must agree.
inline double continuity_residual(const SpaceTimeScalar& rho, const SpaceTimeVector& upsilon,
                                  const Vec3& p, double t, FractalDimension mu,
                                  Convention conv = Convention::paper_literal,
                                  const StencilOptions& opts = {}) {
  const double advective = material_derivative(rho, upsilon, p, t, mu, conv, opts);
  if (detail::probes_constant(upsilon, p, t, mu, opts)) {
    const double dt = detail::time_derivative([&](double s) { return rho(p, s); }, t);
    const VectorField3D flux{[&](const Vec3& q) { return rho(q, t) * upsilon(q, t); }, {}};
    const double conservative = dt + divergence(flux, p, mu, conv, opts);
    if (std::abs(conservative - advective) > 1e-8 * std::max(1.0, std::abs(advective))) {
      throw Error("advective and divergence forms of mass conservation disagree");
    }
  }
  return advective;
}

inline Mat3 transpose(const Mat3& m) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

/// eta = (G + G^T)/2 with G[i][j] = D_i upsilon_j.
inline Mat3 strain_tensor(const VectorField3D& upsilon, const Vec3& p, FractalDimension mu,
                          Convention conv, const StencilOptions& opts = {}) {
  const Mat3 g = gradient_tensor(upsilon, p, mu, conv, opts);
  const Mat3 gt = transpose(g);
  Mat3 eta{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) eta[i][j] = 0.5 * (g[i][j] + gt[i][j]);
  return eta;
}

/// H = -p I + 2 epsilon eta.
inline Mat3 stress_tensor(const VectorField3D& upsilon, const ScalarField3D& pressure,
                          double epsilon, const Vec3& p, FractalDimension mu, Convention conv,
                          const StencilOptions& opts = {}) {
  if (!(epsilon >= 0.0)) throw Error("shear modulus must be non-negative");
  Mat3 h = strain_tensor(upsilon, p, mu, conv, opts);
  const double pr = pressure(p);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) h[i][j] *= 2.0 * epsilon;
    h[i][i] -= pr;
  }
  return h;
}

struct FlowState {
  SpaceTimeScalar density;
  SpaceTimeVector velocity;
  SpaceTimeScalar pressure;
  SpaceTimeVector body_force;
  double shear_modulus = 0.0;
  double diffusivity = 1.0;

  /// Diffusivity set to epsilon / rho_ref.
  static FlowState from_reference_density(SpaceTimeScalar density, SpaceTimeVector velocity,
                                          SpaceTimeScalar pressure, SpaceTimeVector body_force,
                                          double epsilon, double rho_ref) {
    if (!(epsilon >= 0.0)) throw Error("shear modulus must be non-negative");
    if (!(rho_ref > 0.0)) throw Error("density must be positive");
    return {std::move(density), std::move(velocity), std::move(pressure), std::move(body_force),
            epsilon, epsilon / rho_ref};
  }
};

struct MomentumResidual {
  Vec3 momentum;
  double incompressibility = 0.0;
};

/// rho (d upsilon/dt + (upsilon . grad) upsilon) + grad p - epsilon lap upsilon - b,
/// componentwise, together with div upsilon.
inline MomentumResidual momentum_residual(const FlowState& s, const Vec3& p, double t,
                                          FractalDimension mu, Convention conv,
                                          LaplacianForm form = LaplacianForm::composed,
                                          const StencilOptions& opts = {}) {
  const double rho = s.density(p, t);
  if (!(rho > 0.0)) throw Error("density must be positive");
  const VectorField3D v = at(s.velocity, t);
  const Vec3 vp = v(p);
  const Vec3 dvdt = detail::time_derivative([&](double r) { return s.velocity(p, r); }, t);
  const Mat3 g = gradient_tensor(v, p, mu, conv, opts);
  const Vec3 grad_p = gradient(at(s.pressure, t), p, mu, conv, opts);
  const Vec3 b = s.body_force ? s.body_force(p, t) : Vec3{};

  MomentumResidual r;
  for (Axis j : kAxes) {
    double convective = 0.0;
    for (Axis i : kAxes) convective += vp[i] * g[index(i)][index(j)];
    const double lap = laplace_chen(v.component(j), p, mu, form, conv, opts);
    r.momentum[j] = rho * (dvdt[j] + convective) + grad_p[j] - s.shear_modulus * lap - b[j];
  }
  r.incompressibility = g[0][0] + g[1][1] + g[2][2];
  return r;
}

}  // namespace hvc
