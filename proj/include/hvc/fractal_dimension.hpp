#pragma once

#include <cmath>

#include "hvc/error.hpp"

namespace hvc {

/// The exponent mu in (0, 1] of the power-law measure t -> t^mu.
///
/// Every Chen operator becomes a classical one in the mapped coordinate
/// w = t^mu, so this type also owns the forward/backward transforms.
class FractalDimension {
 public:
  explicit FractalDimension(double mu) : mu_(mu) {
    if (!(mu > 0.0 && mu <= 1.0)) {
      throw Error("fractal dimension must lie in (0, 1]");
    }
  }

  double value() const noexcept { return mu_; }
  bool classical() const noexcept { return mu_ == 1.0; }

  /// t -> t^mu (t >= 0).
  double map(double t) const { return classical() ? t : std::pow(t, mu_); }
  /// w -> w^(1/mu) (w >= 0).
  double unmap(double w) const { return classical() ? w : std::pow(w, 1.0 / mu_); }

  /// mu * t^(mu-1): the density of d(t^mu) with respect to dt.
  double density(double t) const {
    return classical() ? 1.0 : mu_ * std::pow(t, mu_ - 1.0);
  }

  friend bool operator==(FractalDimension a, FractalDimension b) { return a.mu_ == b.mu_; }

 private:
  double mu_;
};

}  // namespace hvc
