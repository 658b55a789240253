#pragma once

// Both sides of the fractal integral theorems, with residuals and an
// optional observed convergence order, plus the limit-definition estimators
// for divergence and curl.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hvc/integrals.hpp"
#include "hvc/vecops.hpp"

namespace hvc {

struct TheoremReport {
  std::string identity;
  Convention convention = Convention::mapped_consistent;
  double mu = 1.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  std::optional<double> convergence_order;
  std::vector<std::string> notes;
};

inline TheoremReport make_report(std::string identity, Convention conv, FractalDimension mu,
                                 double lhs, double rhs) {
  TheoremReport r;
  r.identity = std::move(identity);
  r.convention = conv;
  r.mu = mu.value();
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_residual = std::abs(lhs - rhs);
  r.rel_residual = r.abs_residual / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return r;
}

/// Observed order from three successive halvings of the panel width, using
/// the differences of (lhs - rhs). Empty when the sequence has already
/// stagnated at rounding level.
inline std::optional<double> observed_order(double d_coarse, double d_mid, double d_fine) {
  const double a = std::abs(d_coarse - d_mid);
  const double b = std::abs(d_mid - d_fine);
  if (!(a > 0.0) || !(b > 0.0)) return std::nullopt;
  return std::log2(a / b);
}

/// Runs `run` at panels p, 2p, 4p and returns the finest report carrying the
/// observed convergence order.
inline TheoremReport with_convergence_order(
    const std::function<TheoremReport(const QuadratureSpec&)>& run, const QuadratureSpec& base) {
  const TheoremReport r1 = run(base);
  const TheoremReport r2 = run(base.refined(2));
  TheoremReport r3 = run(base.refined(4));
  r3.convergence_order =
      observed_order(r1.lhs - r1.rhs, r2.lhs - r2.rhs, r3.lhs - r3.rhs);
  return r3;
}

/// Volume integral of the divergence against the closed-surface flux.
inline TheoremReport gauss_like(const VectorField3D& W, const BoxDomain& box, Convention conv,
                                const QuadratureSpec& quad = kTheoremQuadrature,
                                const StencilOptions& opts = {}) {
  const FractalDimension mu = box.mu();
  const double lhs = volume_integral(divergence_field(W, mu, conv, opts), box, quad);
  const double rhs = flux_closed(W, box, quad);
  return make_report("gauss_like", conv, mu, lhs, rhs);
}

/// Flux of the curl through a rectangle against the circulation along its
/// positively oriented boundary.
inline TheoremReport stokes_like(const VectorField3D& W, const RectangleRegion& surface,
                                 Convention conv, const QuadratureSpec& quad = kTheoremQuadrature,
                                 const StencilOptions& opts = {}) {
  const FractalDimension mu = surface.mu();
  const double lhs = surface_integral(curl_field(W, mu, conv, opts), surface, quad);
  const double rhs = line_integral(W, surface.boundary(), quad);
  return make_report("stokes_like", conv, mu, lhs, rhs);
}

/// Planar circulation of T = (T_x, T_y, 0) against the area integral of
/// D_x T_y - D_y T_x over an xy-plane rectangle.
inline TheoremReport green_like(const VectorField3D& T, const RectangleRegion& region,
                                Convention conv, const QuadratureSpec& quad = kTheoremQuadrature,
                                const StencilOptions& opts = {}) {
  if (region.plane() != Plane::xy) throw Error("green_like requires an xy-plane region");
  const Interval f = region.first();
  const Interval s = region.second();
  for (double a : {f.lo, 0.5 * (f.lo + f.hi), f.hi}) {
    for (double b : {s.lo, 0.5 * (s.lo + s.hi), s.hi}) {
      if (T(region.point(a, b)).z != 0.0) {
        throw Error("green_like requires a field with zero z-component");
      }
    }
  }
  const FractalDimension mu = region.mu();
  const double lhs = line_integral(T, region.boundary(), quad);
  const ScalarField3D Tx = T.component(Axis::x);
  const ScalarField3D Ty = T.component(Axis::y);
  const ScalarField3D rot{[&, mu, conv, opts](const Vec3& p) {
                            return component_operator(Ty, Axis::x, p, mu, conv, opts) -
                                   component_operator(Tx, Axis::y, p, mu, conv, opts);
                          },
                          {}};
  const double rhs = region.orientation() * double_integral(rot, region, quad);
  return make_report("green_like", conv, mu, lhs, rhs);
}

enum class GreenKind { first, second };

/// First identity:  volume integral of (Theta lap psi + grad psi . grad Theta)
///                  against the flux of Theta grad psi.
/// Second identity: volume integral of (Theta lap psi - psi lap Theta)
///                  against the flux of (Theta grad psi - psi grad Theta).
/// The Laplacian is the composed form.
inline TheoremReport green_identity(GreenKind kind, const ScalarField3D& psi,
                                    const ScalarField3D& theta, const BoxDomain& box,
                                    Convention conv,
                                    const QuadratureSpec& quad = kTheoremQuadrature,
                                    const StencilOptions& opts = {}) {
  const FractalDimension mu = box.mu();
  auto lap = [&, mu, conv, opts](const ScalarField3D& f, const Vec3& p) {
    return laplace_chen(f, p, mu, LaplacianForm::composed, conv, opts);
  };
  auto grad = [&, mu, conv, opts](const ScalarField3D& f, const Vec3& p) {
    return gradient(f, p, mu, conv, opts);
  };
  if (kind == GreenKind::first) {
    const ScalarField3D volume{[&](const Vec3& p) {
                                 return theta(p) * lap(psi, p) + dot(grad(psi, p), grad(theta, p));
                               },
                               {}};
    const VectorField3D flux{[&](const Vec3& p) { return theta(p) * grad(psi, p); }, {}};
    return make_report("green_first", conv, mu, volume_integral(volume, box, quad),
                       flux_closed(flux, box, quad));
  }
  const ScalarField3D volume{[&](const Vec3& p) {
                               return theta(p) * lap(psi, p) - psi(p) * lap(theta, p);
                             },
                             {}};
  const VectorField3D flux{[&](const Vec3& p) {
                             return theta(p) * grad(psi, p) - psi(p) * grad(theta, p);
                           },
                           {}};
  return make_report("green_second", conv, mu, volume_integral(volume, box, quad),
                     flux_closed(flux, box, quad));
}

namespace detail {

inline BoxDomain mapped_cube(const Vec3& centre, double half, FractalDimension mu) {
  Vec3 lo;
  Vec3 hi;
  for (int i = 0; i < 3; ++i) {
    const double w = mu.map(centre[i]);
    if (!(w - half > 0.0)) throw Error("box leaves the positive orthant");
    lo[i] = mu.unmap(w - half);
    hi[i] = mu.unmap(w + half);
  }
  return BoxDomain(lo, hi, mu);
}

}  // namespace detail

/// Closed-surface flux over fractal volume for cubes of the given mapped
/// half-widths centred at `point`.
inline std::vector<double> divergence_flux_quotient(const VectorField3D& W, const Vec3& point,
                                                    FractalDimension mu,
                                                    std::span<const double> half_widths,
                                                    const QuadratureSpec& quad = {8, 1, 1e8}) {
  std::vector<double> out;
  out.reserve(half_widths.size());
  for (double h : half_widths) {
    if (!(h > 0.0)) throw Error("half-width must be positive");
    const BoxDomain cube = detail::mapped_cube(point, h, mu);
    out.push_back(flux_closed(W, cube, quad) / cube.mapped_volume());
  }
  return out;
}

/// Circulation over fractal area for squares normal to each axis, centred at
/// `point`, one estimate of the curl per half-width.
inline std::vector<Vec3> curl_circulation_quotient(const VectorField3D& W, const Vec3& point,
                                                   FractalDimension mu,
                                                   std::span<const double> half_widths,
                                                   const QuadratureSpec& quad = {8, 1, 1e8}) {
  std::vector<Vec3> out;
  out.reserve(half_widths.size());
  for (double h : half_widths) {
    if (!(h > 0.0)) throw Error("half-width must be positive");
    const BoxDomain cube = detail::mapped_cube(point, h, mu);
    const Vec3& lo = cube.lo();
    const Vec3& hi = cube.hi();
    const double area = 4.0 * h * h;
    const RectangleRegion sx(Plane::yz, {lo.y, hi.y}, {lo.z, hi.z}, point.x, 1, mu);
    const RectangleRegion sy(Plane::xz, {lo.x, hi.x}, {lo.z, hi.z}, point.y, 1, mu);
    const RectangleRegion sz(Plane::xy, {lo.x, hi.x}, {lo.y, hi.y}, point.z, 1, mu);
    out.push_back({line_integral(W, sx.boundary(), quad) / area,
                   line_integral(W, sy.boundary(), quad) / area,
                   line_integral(W, sz.boundary(), quad) / area});
  }
  return out;
}

}  // namespace hvc
