#pragma once

// Fractal differential operators under two conventions.
//
// Both conventions build each operator component from the bare Chen partial
// d/d(x_i^mu). paper_literal multiplies it by mu x_i^(mu-1), which makes every
// component the classical partial in physical coordinates. mapped_consistent
// uses the bare Chen partial, i.e. classical operators in mapped coordinates;
// this is the reading under which the limit definitions and the integral
// theorems hold for mu < 1.

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "hvc/fields.hpp"

namespace hvc {

enum class Convention { paper_literal, mapped_consistent };

inline const char* to_string(Convention c) {
  return c == Convention::paper_literal ? "paper" : "mapped";
}

enum class LaplacianForm { composed, paper_second_order };

namespace detail {

inline double prefactor(double c, FractalDimension mu, Convention conv) {
  if (conv == Convention::mapped_consistent) return 1.0;
  if (c == 0.0 && !mu.classical()) throw Error("singular prefactor at origin");
  return mu.density(c);
}

inline void check_point(const Vec3& p, FractalDimension mu) {
  for (int i = 0; i < 3; ++i) {
    if (p[i] < 0.0) throw Error("point outside domain");
    if (p[i] == 0.0 && !mu.classical()) throw Error("singular prefactor at origin");
  }
}

}  // namespace detail

/// One component operator applied to a scalar function g: the Chen partial,
/// times mu x_i^(mu-1) under paper_literal.
template <class G>
double apply_component(G&& g, Axis axis, const Vec3& p, FractalDimension mu, Convention conv,
                       const StencilOptions& opts = {}) {
  return detail::prefactor(p[axis], mu, conv) * mapped_partial(g, axis, p, mu, opts);
}

inline double component_operator(const ScalarField3D& f, Axis axis, const Vec3& p,
                                 FractalDimension mu, Convention conv,
                                 const StencilOptions& opts = {}) {
  return detail::prefactor(p[axis], mu, conv) * chen_partial(f, axis, p, mu, opts);
}

inline Vec3 gradient(const ScalarField3D& f, const Vec3& p, FractalDimension mu, Convention conv,
                     const StencilOptions& opts = {}) {
  detail::check_point(p, mu);
  Vec3 g;
  for (Axis a : kAxes) g[a] = component_operator(f, a, p, mu, conv, opts);
  return g;
}

inline double divergence(const VectorField3D& W, const Vec3& p, FractalDimension mu,
                         Convention conv, const StencilOptions& opts = {}) {
  detail::check_point(p, mu);
  double d = 0.0;
  for (Axis a : kAxes) d += component_operator(W.component(a), a, p, mu, conv, opts);
  return d;
}

/// Determinant expansion with rows (D_x, D_y, D_z) of the convention.
inline Vec3 curl(const VectorField3D& W, const Vec3& p, FractalDimension mu, Convention conv,
                 const StencilOptions& opts = {}) {
  detail::check_point(p, mu);
  const ScalarField3D Wx = W.component(Axis::x);
  const ScalarField3D Wy = W.component(Axis::y);
  const ScalarField3D Wz = W.component(Axis::z);
  auto D = [&](const ScalarField3D& f, Axis a) { return component_operator(f, a, p, mu, conv, opts); };
  return {D(Wz, Axis::y) - D(Wy, Axis::z), D(Wx, Axis::z) - D(Wz, Axis::x),
          D(Wy, Axis::x) - D(Wx, Axis::y)};
}

/// Velocity-gradient-style tensor G[i][j] = D_i W_j.
inline Mat3 gradient_tensor(const VectorField3D& W, const Vec3& p, FractalDimension mu,
                            Convention conv, const StencilOptions& opts = {}) {
  detail::check_point(p, mu);
  Mat3 g{};
  for (Axis j : kAxes) {
    const ScalarField3D wj = W.component(j);
    for (Axis i : kAxes) g[index(i)][index(j)] = component_operator(wj, i, p, mu, conv, opts);
  }
  return g;
}

// Operator results as fields, for composition and integration.

inline VectorField3D gradient_field(const ScalarField3D& f, FractalDimension mu, Convention conv,
                                    const StencilOptions& opts = {}) {
  return {[f, mu, conv, opts](const Vec3& p) { return gradient(f, p, mu, conv, opts); }, {}};
}

inline ScalarField3D divergence_field(const VectorField3D& W, FractalDimension mu, Convention conv,
                                      const StencilOptions& opts = {}) {
  return {[W, mu, conv, opts](const Vec3& p) { return divergence(W, p, mu, conv, opts); }, {}};
}

inline VectorField3D curl_field(const VectorField3D& W, FractalDimension mu, Convention conv,
                                const StencilOptions& opts = {}) {
  return {[W, mu, conv, opts](const Vec3& p) { return curl(W, p, mu, conv, opts); }, {}};
}

/// Laplace-Chen operator. `composed` is the convention's divergence of the
/// convention's gradient. `paper_second_order` is the pure second-order
/// operator sum_i p_i^2 d^2 f / d(x_i^mu)^2 with p_i the convention
/// prefactor; under paper_literal it differs from `composed` by first-order
/// terms when mu < 1.
inline double laplace_chen(const ScalarField3D& f, const Vec3& p, FractalDimension mu,
                           LaplacianForm form, Convention conv, const StencilOptions& opts = {}) {
  detail::check_point(p, mu);
  if (form == LaplacianForm::composed) {
    return divergence(gradient_field(f, mu, conv, opts), p, mu, conv, opts);
  }
  double sum = 0.0;
  for (Axis a : kAxes) {
    const double pf = detail::prefactor(p[a], mu, conv);
    sum += pf * pf * mapped_second_partial(f.eval, a, p, mu, opts);
  }
  return sum;
}

inline ScalarField3D laplace_field(const ScalarField3D& f, FractalDimension mu, LaplacianForm form,
                                   Convention conv, const StencilOptions& opts = {}) {
  return {[f, mu, form, conv, opts](const Vec3& p) {
            return laplace_chen(f, p, mu, form, conv, opts);
          },
          {}};
}

inline double directional_derivative(const ScalarField3D& f, const Vec3& p, const Vec3& n,
                                     FractalDimension mu, Convention conv,
                                     const StencilOptions& opts = {}) {
  if (std::abs(norm(n) - 1.0) > 1e-12) throw Error("normal not normalized");
  return dot(gradient(f, p, mu, conv, opts), n);
}

struct ProductIdentityResiduals {
  double gradient_product = 0.0;     // grad(psi theta) = psi grad theta + theta grad psi
  double divergence_product = 0.0;   // div(theta grad psi) = theta lap psi + grad psi . grad theta
  double max() const { return std::max(gradient_product, divergence_product); }
};

/// Max residuals of the two product identities over the samples. The
/// Laplacian is the composed form.
inline ProductIdentityResiduals product_identities_check(const ScalarField3D& psi,
                                                         const ScalarField3D& theta,
                                                         FractalDimension mu, Convention conv,
                                                         std::span<const Vec3> samples,
                                                         const StencilOptions& opts = {}) {
  if (samples.empty()) throw Error("no sample points");
  ScalarField3D prod{[psi, theta](const Vec3& p) { return psi(p) * theta(p); }, {}};
  VectorField3D theta_grad_psi{[psi, theta, mu, conv, opts](const Vec3& p) {
                                 return theta(p) * gradient(psi, p, mu, conv, opts);
                               },
                               {}};
  ProductIdentityResiduals r;
  for (const Vec3& p : samples) {
    const Vec3 gpsi = gradient(psi, p, mu, conv, opts);
    const Vec3 gtheta = gradient(theta, p, mu, conv, opts);
    const Vec3 grad_lhs = gradient(prod, p, mu, conv, opts);
    const Vec3 grad_rhs = psi(p) * gtheta + theta(p) * gpsi;
    r.gradient_product = std::max(r.gradient_product, max_abs(grad_lhs - grad_rhs));

    const double div_lhs = divergence(theta_grad_psi, p, mu, conv, opts);
    const double div_rhs =
        theta(p) * laplace_chen(psi, p, mu, LaplacianForm::composed, conv, opts) + dot(gpsi, gtheta);
    r.divergence_product = std::max(r.divergence_product, std::abs(div_lhs - div_rhs));
  }
  return r;
}

}  // namespace hvc
