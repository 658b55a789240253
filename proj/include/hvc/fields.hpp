#pragma once

// Geometric supports (boxes, coordinate-plane rectangles, parametric curves),
// scalar/vector fields over them, Chen partial derivatives and the fractal
// measure densities of dl, dS and dV.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "hvc/error.hpp"
#include "hvc/fractal_dimension.hpp"
#include "hvc/quadrature.hpp"

namespace hvc {

enum class Axis : int { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::x, Axis::y, Axis::z};

inline int index(Axis a) { return static_cast<int>(a); }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](Axis a) { return (*this)[index(a)]; }
  double operator[](Axis a) const { return (*this)[index(a)]; }

  friend Vec3 operator+(Vec3 a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend Vec3 operator*(Vec3 a, double s) { return s * a; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double max_abs(const Vec3& a) {
  return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z)});
}

/// Row i, column j.
using Mat3 = std::array<std::array<double, 3>, 3>;

inline Vec3 unit(Axis a) {
  Vec3 e;
  e[a] = 1.0;
  return e;
}

/// Scalar field with optional exact classical gradient (physical coordinates).
struct ScalarField3D {
  std::function<double(const Vec3&)> eval;
  std::function<Vec3(const Vec3&)> classical_gradient;

  double operator()(const Vec3& p) const { return eval(p); }
};

/// Vector field with optional exact classical Jacobian J[i][j] = dW_i/dx_j.
struct VectorField3D {
  std::function<Vec3(const Vec3&)> eval;
  std::function<Mat3(const Vec3&)> classical_jacobian;

  Vec3 operator()(const Vec3& p) const { return eval(p); }

  ScalarField3D component(Axis a) const {
    ScalarField3D s;
    s.eval = [f = eval, i = index(a)](const Vec3& p) { return f(p)[i]; };
    if (classical_jacobian) {
      s.classical_gradient = [J = classical_jacobian, i = index(a)](const Vec3& p) {
        const Mat3 m = J(p);
        return Vec3{m[i][0], m[i][1], m[i][2]};
      };
    }
    return s;
  }
};

inline ScalarField3D constant_field(double c) {
  return {[c](const Vec3&) { return c; }, [](const Vec3&) { return Vec3{}; }};
}

// ---------------------------------------------------------------------------
// Mapped-coordinate stencils

/// Finite-difference settings for the 3-D operators. The step in the mapped
/// coordinate w is rel_step * max(1, w), shrunk to w/4 near the origin when
/// mu < 1. With use_exact, fields carrying classical partials use them
/// (chain-ruled to mapped partials) instead of the stencil.
struct StencilOptions {
  double rel_step = 1e-3;
  bool use_exact = false;
};

namespace detail {

inline double mapped_step(double w, FractalDimension mu, const StencilOptions& opts) {
  double h = opts.rel_step * std::max(1.0, std::abs(w));
  if (!mu.classical()) {
    if (w < 0.0) throw Error("point outside domain");
    if (w == 0.0) throw Error("singular prefactor at origin");
    h = std::min(h, 0.25 * w);
  }
  return h;
}

// Samples g at the stencil offsets -2h..2h in the mapped coordinate of `axis`.
template <class G>
std::array<double, 5> stencil_values(G&& g, Axis axis, const Vec3& p, FractalDimension mu,
                                     double w, double h) {
  std::array<double, 5> v{};
  for (int k = -2; k <= 2; ++k) {
    Vec3 q = p;
    q[axis] = k == 0 ? p[axis] : mu.unmap(w + k * h);
    v[k + 2] = g(q);
  }
  return v;
}

}  // namespace detail

/// d g / d(axis^mu) by a fourth-order central stencil in the mapped coordinate.
template <class G>
double mapped_partial(G&& g, Axis axis, const Vec3& p, FractalDimension mu,
                      const StencilOptions& opts = {}) {
  const double w = mu.map(p[axis]);
  const double h = detail::mapped_step(w, mu, opts);
  const auto v = detail::stencil_values(g, axis, p, mu, w, h);
  return (-v[4] + 8.0 * v[3] - 8.0 * v[1] + v[0]) / (12.0 * h);
}

/// d^2 g / d(axis^mu)^2 by a fourth-order central stencil.
template <class G>
double mapped_second_partial(G&& g, Axis axis, const Vec3& p, FractalDimension mu,
                             const StencilOptions& opts = {}) {
  const double w = mu.map(p[axis]);
  const double h = detail::mapped_step(w, mu, opts);
  const auto v = detail::stencil_values(g, axis, p, mu, w, h);
  return (-v[4] + 16.0 * v[3] - 30.0 * v[2] + 16.0 * v[1] - v[0]) / (12.0 * h * h);
}

/// Chen partial derivative d f / d(axis^mu) = (x^(1-mu)/mu) d f/dx.
inline double chen_partial(const ScalarField3D& f, Axis axis, const Vec3& p, FractalDimension mu,
                           const StencilOptions& opts = {}) {
  const double c = p[axis];
  if (c < 0.0) throw Error("point outside domain");
  if (c == 0.0 && !mu.classical()) throw Error("singular prefactor at origin");
  if (opts.use_exact && f.classical_gradient) {
    return f.classical_gradient(p)[axis] / mu.density(c);
  }
  return mapped_partial(f.eval, axis, p, mu, opts);
}

// ---------------------------------------------------------------------------
// Geometry

/// Axis-aligned box [lo, hi] in physical coordinates (all bounds >= 0).
class BoxDomain {
 public:
  BoxDomain(Vec3 lo, Vec3 hi, FractalDimension mu) : lo_(lo), hi_(hi), mu_(mu) {
    for (int i = 0; i < 3; ++i) {
      if (!(lo[i] >= 0.0) || !(lo[i] < hi[i])) throw Error("invalid box bounds");
      if (!(mu.map(lo[i]) < mu.map(hi[i]))) throw Error("invalid box bounds");
    }
  }

  const Vec3& lo() const { return lo_; }
  const Vec3& hi() const { return hi_; }
  FractalDimension mu() const { return mu_; }

  Interval interval(Axis a) const { return {lo_[a], hi_[a]}; }
  Interval mapped_interval(Axis a) const { return {mu_.map(lo_[a]), mu_.map(hi_[a])}; }
  std::array<Interval, 3> mapped_intervals() const {
    return {mapped_interval(Axis::x), mapped_interval(Axis::y), mapped_interval(Axis::z)};
  }
  /// Classical volume of the mapped box, equal to the fractal measure of the box.
  double mapped_volume() const {
    double v = 1.0;
    for (Axis a : kAxes) v *= mapped_interval(a).width();
    return v;
  }
  bool contains(const Vec3& p) const {
    for (int i = 0; i < 3; ++i) {
      if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
    }
    return true;
  }

 private:
  Vec3 lo_;
  Vec3 hi_;
  FractalDimension mu_;
};

enum class Plane { xy, yz, xz };

/// A smooth parametric curve t -> r(t) on [t0, t1] with its velocity.
struct ParametricCurve {
  std::function<Vec3(double)> position;
  std::function<Vec3(double)> velocity;
  double t0 = 0.0;
  double t1 = 1.0;
  bool closed = false;
  FractalDimension mu{1.0};

  void validate() const {
    if (!(t0 < t1)) throw Error("empty or reversed interval");
    if (closed && norm(position(t0) - position(t1)) > 1e-12) {
      throw Error("closed curve endpoints do not coincide");
    }
  }
};

/// The curve traversed backwards.
inline ParametricCurve reversed(const ParametricCurve& c) {
  ParametricCurve r = c;
  r.position = [pos = c.position, s = c.t0 + c.t1](double t) { return pos(s - t); };
  r.velocity = [vel = c.velocity, s = c.t0 + c.t1](double t) { return -1.0 * vel(s - t); };
  return r;
}

/// Straight segment from `from` to `to` in the mapped coordinates, i.e. the
/// physical curve x_i(s) = (m_i(s))^(1/mu) with m linear in s in [0, 1].
/// Axis-aligned segments are straight in physical space as well.
inline ParametricCurve mapped_segment(const Vec3& from, const Vec3& to, FractalDimension mu) {
  const Vec3 ma{mu.map(from.x), mu.map(from.y), mu.map(from.z)};
  const Vec3 mb{mu.map(to.x), mu.map(to.y), mu.map(to.z)};
  ParametricCurve c;
  c.mu = mu;
  c.t0 = 0.0;
  c.t1 = 1.0;
  c.position = [ma, mb, mu](double s) {
    Vec3 p;
    for (int i = 0; i < 3; ++i) p[i] = mu.unmap(ma[i] + s * (mb[i] - ma[i]));
    return p;
  };
  c.velocity = [ma, mb, mu](double s) {
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
      const double dm = mb[i] - ma[i];
      if (dm == 0.0) continue;
      const double m = ma[i] + s * dm;
      v[i] = mu.classical() ? dm : std::pow(m, 1.0 / mu.value() - 1.0) / mu.value() * dm;
    }
    return v;
  };
  return c;
}

/// A closed piecewise-smooth curve.
struct Contour {
  std::vector<ParametricCurve> pieces;
};

/// Axis-aligned rectangle in a coordinate plane. `first` and `second` are
/// the in-plane bounds in axis order (x,y), (y,z) or (x,z); `fixed` is the
/// coordinate along the normal axis. orientation = +1 points the normal
/// along +axis, -1 along -axis.
class RectangleRegion {
 public:
  RectangleRegion(Plane plane, Interval first, Interval second, double fixed, int orientation,
                  FractalDimension mu)
      : plane_(plane), first_(first), second_(second), fixed_(fixed), orientation_(orientation),
        mu_(mu) {
    if (!(first.lo >= 0.0 && first.lo < first.hi && second.lo >= 0.0 && second.lo < second.hi)) {
      throw Error("invalid rectangle bounds");
    }
    if (!(fixed >= 0.0)) throw Error("invalid rectangle bounds");
    if (orientation != 1 && orientation != -1) throw Error("orientation must be +1 or -1");
  }

  Plane plane() const { return plane_; }
  FractalDimension mu() const { return mu_; }
  int orientation() const { return orientation_; }
  double fixed() const { return fixed_; }
  Interval first() const { return first_; }
  Interval second() const { return second_; }

  std::pair<Axis, Axis> in_plane_axes() const {
    switch (plane_) {
      case Plane::xy: return {Axis::x, Axis::y};
      case Plane::yz: return {Axis::y, Axis::z};
      case Plane::xz: return {Axis::x, Axis::z};
    }
    return {Axis::x, Axis::y};
  }
  Axis normal_axis() const {
    switch (plane_) {
      case Plane::xy: return Axis::z;
      case Plane::yz: return Axis::x;
      case Plane::xz: return Axis::y;
    }
    return Axis::z;
  }
  Vec3 normal() const { return static_cast<double>(orientation_) * unit(normal_axis()); }

  Interval mapped_first() const { return {mu_.map(first_.lo), mu_.map(first_.hi)}; }
  Interval mapped_second() const { return {mu_.map(second_.lo), mu_.map(second_.hi)}; }

  /// Physical point with in-plane coordinates (a, b).
  Vec3 point(double a, double b) const {
    const auto [p, q] = in_plane_axes();
    Vec3 r;
    r[p] = a;
    r[q] = b;
    r[normal_axis()] = fixed_;
    return r;
  }

  RectangleRegion flipped() const {
    return RectangleRegion(plane_, first_, second_, fixed_, -orientation_, mu_);
  }

  /// Boundary traversed positively with respect to normal() (right-hand rule).
  Contour boundary() const {
    // (p, q, n) is an even permutation of (x, y, z) except for the xz plane.
    const int handed = plane_ == Plane::xz ? -1 : 1;
    const Vec3 c00 = point(first_.lo, second_.lo);
    const Vec3 c10 = point(first_.hi, second_.lo);
    const Vec3 c11 = point(first_.hi, second_.hi);
    const Vec3 c01 = point(first_.lo, second_.hi);
    std::array<Vec3, 5> loop = {c00, c10, c11, c01, c00};
    if (handed * orientation_ < 0) loop = {c00, c01, c11, c10, c00};
    Contour c;
    for (int i = 0; i < 4; ++i) c.pieces.push_back(mapped_segment(loop[i], loop[i + 1], mu_));
    return c;
  }

 private:
  Plane plane_;
  Interval first_;
  Interval second_;
  double fixed_;
  int orientation_;
  FractalDimension mu_;
};

/// The six faces of a box, oriented outward.
inline std::array<RectangleRegion, 6> box_faces(const BoxDomain& box) {
  const Vec3& lo = box.lo();
  const Vec3& hi = box.hi();
  const FractalDimension mu = box.mu();
  return {RectangleRegion(Plane::yz, {lo.y, hi.y}, {lo.z, hi.z}, lo.x, -1, mu),
          RectangleRegion(Plane::yz, {lo.y, hi.y}, {lo.z, hi.z}, hi.x, +1, mu),
          RectangleRegion(Plane::xz, {lo.x, hi.x}, {lo.z, hi.z}, lo.y, -1, mu),
          RectangleRegion(Plane::xz, {lo.x, hi.x}, {lo.z, hi.z}, hi.y, +1, mu),
          RectangleRegion(Plane::xy, {lo.x, hi.x}, {lo.y, hi.y}, lo.z, -1, mu),
          RectangleRegion(Plane::xy, {lo.x, hi.x}, {lo.y, hi.y}, hi.z, +1, mu)};
}

// ---------------------------------------------------------------------------
// Measure densities and arc length

namespace detail {

inline double power_density(double c, FractalDimension mu) {
  if (c < 0.0) throw Error("point outside domain");
  if (c == 0.0 && !mu.classical()) throw Error("singular measure density");
  return mu.density(c);
}

}  // namespace detail

/// dV / (dx dy dz) = mu^3 (xyz)^(mu-1).
inline double measure_density(const BoxDomain& box, const Vec3& p) {
  if (!box.contains(p)) throw Error("point outside domain");
  double d = 1.0;
  for (Axis a : kAxes) d *= detail::power_density(p[a], box.mu());
  return d;
}

/// dS / (da db) = mu^2 a^(mu-1) b^(mu-1) for the in-plane coordinates.
inline double measure_density(const RectangleRegion& r, const Vec3& p) {
  const auto [pa, qa] = r.in_plane_axes();
  const Interval f = r.first();
  const Interval s = r.second();
  if (p[pa] < f.lo || p[pa] > f.hi || p[qa] < s.lo || p[qa] > s.hi) {
    throw Error("point outside domain");
  }
  return detail::power_density(p[pa], r.mu()) * detail::power_density(p[qa], r.mu());
}

/// |dl/dt| / |dr/dt| at parameter t.
inline double measure_density(const ParametricCurve& c, double t) {
  if (t < c.t0 || t > c.t1) throw Error("point outside domain");
  const Vec3 r = c.position(t);
  const Vec3 v = c.velocity(t);
  const double speed = norm(v);
  if (!(speed > 0.0)) throw Error("singular measure density");
  double s2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (v[i] == 0.0) continue;
    const double d = detail::power_density(r[i], c.mu) * v[i];
    s2 += d * d;
  }
  return std::sqrt(s2) / speed;
}

namespace detail {

// dl/dt = mu (x^(mu-1) x', y^(mu-1) y', z^(mu-1) z'); components with zero
// velocity contribute nothing even on a coordinate plane.
inline Vec3 fractal_tangent(const ParametricCurve& c, double t) {
  const Vec3 r = c.position(t);
  const Vec3 v = c.velocity(t);
  Vec3 dl;
  for (int i = 0; i < 3; ++i) {
    if (v[i] == 0.0) continue;
    dl[i] = c.mu.density(r[i]) * v[i];
    if (!std::isfinite(dl[i]) || r[i] < 0.0) throw Error("singular curve point");
  }
  return dl;
}

}  // namespace detail

/// Hausdorff arc length: integral of |dl| along the curve.
inline double arc_length(const ParametricCurve& c, const QuadratureSpec& quad = kDefaultQuadrature) {
  c.validate();
  return integrate([&](double t) { return norm(detail::fractal_tangent(c, t)); },
                   Interval{c.t0, c.t1}, quad);
}

inline double arc_length(const Contour& c, const QuadratureSpec& quad = kDefaultQuadrature) {
  double sum = 0.0;
  for (const auto& piece : c.pieces) sum += arc_length(piece, quad);
  return sum;
}

}  // namespace hvc
