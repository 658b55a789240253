#pragma once

// Seeded test-field families. Every member is written in the mapped
// coordinates (w = t^mu in 1-D, (u, v, w) in 3-D), so the same seed yields
// the same mapped-coordinate functions for every mu.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hvc/core.hpp"
#include "hvc/fields.hpp"

namespace hvc::app {

/// mt19937_64 with a fixed bits-to-double conversion, so sequences do not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 gen_;
};

struct Function1D {
  std::string name;
  AnalyticFunction1D f;
};

namespace detail {

// g(w) and g'(w) lifted to t through w = t^mu, with the classical derivative
// g'(w) mu t^(mu-1).
template <class G, class DG>
AnalyticFunction1D lift(FractalDimension mu, G g, DG dg) {
  AnalyticFunction1D f;
  f.eval = [mu, g](double t) { return g(mu.map(t)); };
  f.classical_derivative = [mu, dg](double t) { return dg(mu.map(t)) * mu.density(t); };
  return f;
}

}  // namespace detail

/// `count` functions cycling through four families: cubic polynomials,
/// shifted sines, exponentials and linear-times-cosine.
inline std::vector<Function1D> corpus_1d(std::uint64_t seed, FractalDimension mu, int count = 20) {
  Rng rng(seed);
  std::vector<Function1D> out;
  for (int i = 0; i < count; ++i) {
    const std::string id = std::to_string(i);
    switch (i % 4) {
      case 0: {
        std::array<double, 4> c{};
        for (double& ci : c) ci = rng.uniform(-1.0, 1.0);
        out.push_back({"poly" + id, detail::lift(
                                        mu,
                                        [c](double w) { return c[0] + w * (c[1] + w * (c[2] + w * c[3])); },
                                        [c](double w) { return c[1] + w * (2.0 * c[2] + 3.0 * w * c[3]); })});
        break;
      }
      case 1: {
        const double a = rng.uniform(0.5, 2.0);
        const double b = rng.uniform(0.5, 2.0);
        const double c = rng.uniform(0.0, 3.0);
        out.push_back({"sin" + id,
                       detail::lift(
                           mu, [=](double w) { return a * std::sin(b * w + c); },
                           [=](double w) { return a * b * std::cos(b * w + c); })});
        break;
      }
      case 2: {
        const double a = rng.uniform(0.5, 1.5);
        const double b = rng.uniform(-1.0, 1.0);
        out.push_back({"exp" + id, detail::lift(
                                       mu, [=](double w) { return a * std::exp(b * w); },
                                       [=](double w) { return a * b * std::exp(b * w); })});
        break;
      }
      default: {
        const double c0 = rng.uniform(-1.0, 1.0);
        const double c1 = rng.uniform(-1.0, 1.0);
        const double b = rng.uniform(0.5, 2.0);
        out.push_back({"lincos" + id,
                       detail::lift(
                           mu, [=](double w) { return (c0 + c1 * w) * std::cos(b * w); },
                           [=](double w) {
                             return c1 * std::cos(b * w) - b * (c0 + c1 * w) * std::sin(b * w);
                           })});
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3-D families

enum class Family { polynomial, transcendental };

inline const char* to_string(Family f) {
  return f == Family::polynomial ? "polynomial" : "transcendental";
}

/// Sum of c_ijk u^i v^j w^k over i + j + k <= degree.
class MappedPolynomial {
 public:
  MappedPolynomial(Rng& rng, int degree, std::array<bool, 3> uses = {true, true, true}) {
    for (int i = 0; i <= degree; ++i)
      for (int j = 0; i + j <= degree; ++j)
        for (int k = 0; i + j + k <= degree; ++k) {
          if ((i > 0 && !uses[0]) || (j > 0 && !uses[1]) || (k > 0 && !uses[2])) continue;
          terms_.push_back({i, j, k, rng.uniform(-1.0, 1.0)});
        }
  }

  double operator()(double u, double v, double w) const {
    double s = 0.0;
    for (const Term& t : terms_) s += t.c * ipow(u, t.i) * ipow(v, t.j) * ipow(w, t.k);
    return s;
  }

 private:
  struct Term {
    int i, j, k;
    double c;
  };
  static double ipow(double x, int n) {
    double r = 1.0;
    for (int m = 0; m < n; ++m) r *= x;
    return r;
  }
  std::vector<Term> terms_;
};

/// a sin(b1 u + c) cos(b2 v) exp(b3 w).
struct Wave {
  double a, b1, b2, b3, c;

  explicit Wave(Rng& rng)
      : a(rng.uniform(0.5, 1.5)), b1(rng.uniform(0.5, 1.5)), b2(rng.uniform(0.5, 1.5)),
        b3(rng.uniform(-0.5, 0.5)), c(rng.uniform(0.0, 3.0)) {}

  double operator()(double u, double v, double w) const {
    return a * std::sin(b1 * u + c) * std::cos(b2 * v) * std::exp(b3 * w);
  }
};

namespace detail {

template <class G>
ScalarField3D in_mapped(FractalDimension mu, G g) {
  return {[mu, g](const Vec3& p) { return g(mu.map(p.x), mu.map(p.y), mu.map(p.z)); }, {}};
}

}  // namespace detail

struct NamedScalar {
  std::string name;
  ScalarField3D field;
};

struct NamedVector {
  std::string name;
  VectorField3D field;
};

inline std::vector<NamedScalar> scalar_corpus(std::uint64_t seed, FractalDimension mu,
                                              Family family, int count) {
  Rng rng(seed ^ (family == Family::polynomial ? 0x5ca1a7ULL : 0x7a4e5ULL));
  std::vector<NamedScalar> out;
  for (int i = 0; i < count; ++i) {
    const std::string name = std::string(to_string(family)) + "_s" + std::to_string(i);
    if (family == Family::polynomial) {
      out.push_back({name, detail::in_mapped(mu, MappedPolynomial(rng, 3))});
    } else {
      out.push_back({name, detail::in_mapped(mu, Wave(rng))});
    }
  }
  return out;
}

/// Vector fields with independent components from the family. With
/// `planar`, the z-component is identically zero and x, y components do not
/// depend on z.
inline std::vector<NamedVector> vector_corpus(std::uint64_t seed, FractalDimension mu,
                                              Family family, int count, bool planar = false) {
  Rng rng(seed ^ (family == Family::polynomial ? 0xf1e1dULL : 0xf1e1d2ULL) ^
          (planar ? 0x9ULL : 0x0ULL));
  std::vector<NamedVector> out;
  for (int i = 0; i < count; ++i) {
    const std::string name =
        std::string(to_string(family)) + (planar ? "_planar" : "_v") + std::to_string(i);
    if (family == Family::polynomial) {
      const std::array<bool, 3> uses = {true, true, !planar};
      const MappedPolynomial px(rng, 3, uses), py(rng, 3, uses), pz(rng, 3, uses);
      out.push_back({name, {[mu, px, py, pz, planar](const Vec3& p) {
                              const double u = mu.map(p.x), v = mu.map(p.y), w = mu.map(p.z);
                              return Vec3{px(u, v, w), py(u, v, w), planar ? 0.0 : pz(u, v, w)};
                            },
                            {}}});
    } else {
      Wave wx(rng), wy(rng), wz(rng);
      if (planar) wx.b3 = wy.b3 = 0.0;
      out.push_back({name, {[mu, wx, wy, wz, planar](const Vec3& p) {
                              const double u = mu.map(p.x), v = mu.map(p.y), w = mu.map(p.z);
                              return Vec3{wx(u, v, w), wy(v, w, u), planar ? 0.0 : wz(w, u, v)};
                            },
                            {}}});
    }
  }
  return out;
}

/// Velocity fields whose mapped-coordinate divergence vanishes identically:
/// each component is independent of its own coordinate.
inline std::vector<NamedVector> solenoidal_corpus(std::uint64_t seed, FractalDimension mu,
                                                  Family family, int count) {
  Rng rng(seed ^ (family == Family::polynomial ? 0x50e1ULL : 0x50e2ULL));
  std::vector<NamedVector> out;
  for (int i = 0; i < count; ++i) {
    const std::string name = std::string(to_string(family)) + "_solenoidal" + std::to_string(i);
    if (family == Family::polynomial) {
      const MappedPolynomial px(rng, 2, {false, true, true});
      const MappedPolynomial py(rng, 2, {true, false, true});
      const MappedPolynomial pz(rng, 2, {true, true, false});
      out.push_back({name, {[mu, px, py, pz](const Vec3& p) {
                              const double u = mu.map(p.x), v = mu.map(p.y), w = mu.map(p.z);
                              return Vec3{px(u, v, w), py(u, v, w), pz(u, v, w)};
                            },
                            {}}});
    } else {
      const double a = rng.uniform(0.5, 1.5), b = rng.uniform(0.5, 1.5), c = rng.uniform(0.5, 1.5);
      out.push_back({name, {[mu, a, b, c](const Vec3& p) {
                              const double u = mu.map(p.x), v = mu.map(p.y), w = mu.map(p.z);
                              return Vec3{a * std::sin(v) * std::cos(w), b * std::cos(u) * std::sin(w),
                                          c * std::sin(u + v)};
                            },
                            {}}});
    }
  }
  return out;
}

}  // namespace hvc::app
