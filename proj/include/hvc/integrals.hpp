#pragma once

// Fractal-measure integrals. Every integral is evaluated by the exact change
// of variables u = x^mu (per axis), after which the fractal weight disappears
// and plain composite Gauss-Legendre applies.

#include <array>

#include "hvc/fields.hpp"
#include "hvc/quadrature.hpp"

namespace hvc {

/// Line integral of T . dl, dl = mu (x^(mu-1) dx, y^(mu-1) dy, z^(mu-1) dz),
/// by quadrature in the curve parameter.
inline double line_integral(const VectorField3D& T, const ParametricCurve& curve,
                            const QuadratureSpec& quad = kDefaultQuadrature) {
  curve.validate();
  return integrate(
      [&](double t) { return dot(T(curve.position(t)), detail::fractal_tangent(curve, t)); },
      Interval{curve.t0, curve.t1}, quad);
}

inline double line_integral(const VectorField3D& T, const Contour& contour,
                            const QuadratureSpec& quad = kDefaultQuadrature) {
  double sum = 0.0;
  for (const auto& piece : contour.pieces) sum += line_integral(T, piece, quad);
  return sum;
}

/// Which in-plane axis the outer quadrature loop runs over.
enum class PlaneOrder { second_outer, first_outer };

/// Double integral of M dS over a rectangle (unsigned; orientation ignored).
inline double double_integral(const ScalarField3D& M, const RectangleRegion& region,
                              const QuadratureSpec& quad = kTheoremQuadrature,
                              PlaneOrder order = PlaneOrder::second_outer) {
  const FractalDimension mu = region.mu();
  return integrate_2d(
      [&](double u, double v) { return M(region.point(mu.unmap(u), mu.unmap(v))); },
      region.mapped_first(), region.mapped_second(), quad,
      order == PlaneOrder::second_outer ? 1 : 0);
}

/// Volume integral of N dV. `order` lists axes from the outer loop inward.
inline double volume_integral(const ScalarField3D& N, const BoxDomain& box,
                              const QuadratureSpec& quad = kTheoremQuadrature,
                              std::array<Axis, 3> order = {Axis::z, Axis::y, Axis::x}) {
  const FractalDimension mu = box.mu();
  return integrate_3d(
      [&](double u, double v, double w) { return N(Vec3{mu.unmap(u), mu.unmap(v), mu.unmap(w)}); },
      box.mapped_intervals(), quad, {index(order[0]), index(order[1]), index(order[2])});
}

/// Flux of W through an oriented rectangle, dS per the vector surface
/// element: only the normal component contributes, weighted by the fractal
/// density of the two in-plane coordinates.
inline double surface_integral(const VectorField3D& W, const RectangleRegion& region,
                               const QuadratureSpec& quad = kTheoremQuadrature) {
  const FractalDimension mu = region.mu();
  const Axis n = region.normal_axis();
  const double sign = region.orientation();
  return sign * integrate_2d(
                    [&](double u, double v) {
                      return W(region.point(mu.unmap(u), mu.unmap(v)))[n];
                    },
                    region.mapped_first(), region.mapped_second(), quad);
}

/// Closed-surface flux over the six outward-oriented faces of a box.
inline double flux_closed(const VectorField3D& W, const BoxDomain& box,
                          const QuadratureSpec& quad = kTheoremQuadrature) {
  double sum = 0.0;
  for (const auto& face : box_faces(box)) sum += surface_integral(W, face, quad);
  return sum;
}

inline double surface_integral(const VectorField3D& W, const BoxDomain& box_boundary,
                               const QuadratureSpec& quad = kTheoremQuadrature) {
  return flux_closed(W, box_boundary, quad);
}

}  // namespace hvc
