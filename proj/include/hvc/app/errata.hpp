#pragma once

// The errata command: printed statements whose literal form fails
// numerically, each with the adopted reading and a reproducible witness.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "hvc/app/verify.hpp"
#include "hvc/closed_form.hpp"
#include "hvc/fields.hpp"
#include "hvc/flow.hpp"
#include "hvc/theorems.hpp"

namespace hvc::app {

struct ErrataItem {
  std::string id;
  std::string location;
  std::string literal;
  std::string adopted;
  double mu = 1.0;
  double witness = 0.0;
  std::optional<double> expected;  // analytic value of the witness
  bool vanishes_classically = false;
};

namespace detail {

// Integral of mu s^(1 - 1/mu) ds over [1, b].
inline double power_density_integral(FractalDimension mu, double b) {
  const double m = mu.value();
  const double e = 2.0 - 1.0 / m;
  if (std::abs(e) < 1e-15) return m * std::log(b);
  return m * (std::pow(b, e) - 1.0) / e;
}

}  // namespace detail

inline std::vector<ErrataItem> errata_items(FractalDimension mu) {
  const double m = mu.value();
  const Convention paper = Convention::paper_literal;
  std::vector<ErrataItem> items;

  {
    const ClosedFormCase cs{ClosedFormId::i_kww_literal};
    const double t = mu.unmap(1.0);
    const double w = closed_form_table_check(cs, mu, std::span<const double>(&t, 1));
    items.push_back({"kww_antiderivative", "closed-form integral table, stretched-exponential row",
                     "antiderivative of e^(beta t^mu) is beta e^(beta t^mu)",
                     "antiderivative is (1/beta) e^(beta t^mu); gap at t^mu = 1, beta = 2", m, w,
                     std::abs(cs.beta - 1.0 / cs.beta) * std::exp(cs.beta), false});
  }
  {
    const ScalarField3D f{[mu](const Vec3& p) { return mu.map(p.x) + 2.0 * mu.map(p.y); }, {}};
    const Vec3 p{1.5, 1.5, 1.5};
    const double as_printed = chen_partial(f, Axis::x, p, mu);
    const double adopted = chen_partial(f, Axis::y, p, mu);
    items.push_back({"partial_axes", "Chen partial derivatives, y and z components",
                     "all three components differentiate with respect to x^mu",
                     "components differentiate with respect to y^mu and z^mu; f = x^mu + 2 y^mu",
                     m, std::abs(adopted - as_printed), 1.0, false});
  }
  {
    const ScalarField3D f{[mu](const Vec3& p) { return mu.map(p.y); }, {}};
    const Vec3 p{1.0, 4.0, 1.0};
    const double adopted = gradient(f, p, mu, paper).y;
    const double as_printed = adopted / m;
    items.push_back({"gradient_prefactor", "Chen gradient in Cartesian coordinates",
                     "the factor mu multiplies only the x component",
                     "mu x_i^(mu-1) multiplies every component; f = y^mu at (1,4,1)", m,
                     std::abs(adopted - as_printed), (1.0 - m) * std::pow(4.0, m - 1.0), true});
  }
  {
    const ScalarField3D f{[mu](const Vec3& p) { return std::pow(p.x, 2.0 * mu.value()); }, {}};
    const Vec3 p{2.0, 1.0, 1.0};
    const double composed = laplace_chen(f, p, mu, LaplacianForm::composed, paper);
    const double second = laplace_chen(f, p, mu, LaplacianForm::paper_second_order, paper);
    items.push_back({"laplacian_forms", "Laplace-Chen operator, expanded second-order line",
                     "the composition div grad equals the pure second-order sum",
                     "both forms are shipped; composed is used by the identities; f = x^(2 mu) at x = 2",
                     m, std::abs(composed - second),
                     std::abs(2.0 * m * (2.0 * m - 1.0) - 2.0 * m * m) * std::pow(2.0, 2.0 * m - 2.0),
                     true});
  }
  {
    ParametricCurve seg;
    seg.mu = mu;
    seg.t0 = 1.0;
    seg.t1 = 4.0;
    seg.position = [](double t) { return Vec3{t, 1.0, 1.0}; };
    seg.velocity = [](double) { return Vec3{1.0, 0.0, 0.0}; };
    const double len = arc_length(seg);
    items.push_back({"arc_length_factor", "Hausdorff arc length formula",
                     "the overall factor mu of the line element is omitted",
                     "arc length integrates |dl| with the factor mu; segment x in [1,4]", m,
                     std::abs(len / m - len), (1.0 / m - 1.0) * (std::pow(4.0, m) - 1.0), true});
  }
  {
    const VectorField3D W{[mu](const Vec3& p) { return Vec3{-mu.map(p.y), mu.map(p.x), 0.0}; }, {}};
    const Vec3 p{1.0, 4.0, 1.0};
    const double adopted = curl(W, p, mu, paper).z;
    const double px = mu.density(p.x);
    const double as_printed = px * chen_partial(W.component(Axis::y), Axis::x, p, mu) -
                              px * chen_partial(W.component(Axis::x), Axis::y, p, mu);
    items.push_back({"curl_rows", "Hausdorff curl determinant, operator row",
                     "the prefactor mu x^(mu-1) appears in all three operator slots",
                     "slots carry mu x^(mu-1), mu y^(mu-1), mu z^(mu-1); W = (-y^mu, x^mu, 0) at (1,4,1)",
                     m, std::abs(adopted - as_printed),
                     m * std::abs(std::pow(1.0, m - 1.0) - std::pow(4.0, m - 1.0)), true});
  }
  {
    const BoxDomain box({1, 1, 1}, {16, 16, 16}, mu);
    const VectorField3D W{[mu](const Vec3& p) { return Vec3{mu.map(p.x), mu.map(p.y), mu.map(p.z)}; }, {}};
    const TheoremReport r = gauss_like(W, box, paper);
    const double L = std::pow(16.0, m) - 1.0;
    const double lhs = 3.0 * L * L * detail::power_density_integral(mu, std::pow(16.0, m));
    items.push_back({"gauss_pairing", "Gauss-like theorem",
                     "holds with the prefactored divergence and the fractal volume measure",
                     "holds with the bare mapped divergence; W = (x^mu, y^mu, z^mu) on [1,16]^3", m,
                     r.abs_residual, std::abs(lhs - 3.0 * L * L * L), true});
  }
  const RectangleRegion rect(Plane::xy, {1, 4}, {1, 9}, 1.0, 1, mu);
  const VectorField3D T{[mu](const Vec3& p) { return Vec3{0.0, mu.map(p.x), 0.0}; }, {}};
  const double Lx = std::pow(4.0, m) - 1.0;
  const double Ly = std::pow(9.0, m) - 1.0;
  const double planar_gap = std::abs(Ly * detail::power_density_integral(mu, std::pow(4.0, m)) - Lx * Ly);
  items.push_back({"stokes_pairing", "Stokes-like theorem",
                   "holds with the prefactored curl and the fractal surface measure",
                   "holds with the bare mapped curl; W = (0, x^mu, 0) on [1,4] x [1,9]", m,
                   stokes_like(T, rect, paper).abs_residual, planar_gap, true});
  items.push_back({"green_pairing", "Green-like theorem",
                   "holds with prefactored partials and the fractal area measure",
                   "holds with bare mapped partials; T = (0, x^mu) on [1,4] x [1,9]", m,
                   green_like(T, rect, paper).abs_residual, planar_gap, true});
  {
    const BoxDomain box({1, 1, 1}, {16, 16, 16}, mu);
    const VectorField3D v{[mu](const Vec3& p) { return Vec3{mu.map(p.x), 0.0, 0.0}; }, {}};
    const TheoremReport r = transport_identity_check(constant_field(1.0), v, box,
                                                     Convention::mapped_consistent);
    const double L = std::pow(16.0, m) - 1.0;
    items.push_back({"transport_hypothesis", "transport theorem kernel",
                     "stated for any velocity field",
                     "requires a divergence-free velocity; G = 1, v = (x^mu, 0, 0) on [1,16]^3", m,
                     r.abs_residual, L * L * L, false});
  }
  return items;
}

inline std::vector<ErrataItem> run_errata(const RunConfig& c) {
  std::vector<ErrataItem> out;
  for (double m : c.mu) {
    auto items = errata_items(FractalDimension(m));
    out.insert(out.end(), items.begin(), items.end());
  }
  std::stable_sort(out.begin(), out.end(), [](const ErrataItem& a, const ErrataItem& b) {
    return std::tie(a.id, a.mu) < std::tie(b.id, b.mu);
  });
  return out;
}

inline Json errata_json(const RunConfig& c, const std::vector<ErrataItem>& items) {
  Json doc;
  doc["manifest"] = manifest(c, "errata");
  Json reports = Json::array();
  for (const auto& e : items) {
    Json j;
    j["id"] = e.id;
    j["location"] = e.location;
    j["literal"] = e.literal;
    j["adopted"] = e.adopted;
    j["mu"] = e.mu;
    j["witness"] = json_number(e.witness);
    j["expected"] = json_number(e.expected);
    j["vanishes_classically"] = e.vanishes_classically;
    reports.push_back(j);
  }
  doc["reports"] = reports;
  return doc;
}

inline CsvTable errata_csv(const std::vector<ErrataItem>& items) {
  CsvTable t({"id", "location", "literal", "adopted", "mu", "witness", "expected",
              "vanishes_classically"});
  for (const auto& e : items) {
    t.add({e.id, e.location, e.literal, e.adopted, e.mu, e.witness,
           e.expected ? Cell(*e.expected) : Cell(std::string()), e.vanishes_classically});
  }
  return t;
}

}  // namespace hvc::app
