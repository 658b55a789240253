#pragma once

// The verify command: every identity suite over the seeded corpus, for each
// mu and convention. Rows under mapped_consistent, and all rows at mu = 1,
// are asserted; paper_literal rows at mu < 1 are reported only.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "hvc/app/config.hpp"
#include "hvc/app/corpus.hpp"
#include "hvc/app/report.hpp"
#include "hvc/core.hpp"
#include "hvc/flow.hpp"
#include "hvc/theorems.hpp"

#ifndef HVC_VERSION
#define HVC_VERSION "0.1.0"
#endif

namespace hvc::app {

struct SuiteRow {
  std::string field;
  TheoremReport report;
  bool relative = true;  // tolerance applies to rel_residual, else abs_residual
  double tolerance = 1e-8;
  bool asserted = true;
  bool passed = false;

  double metric() const { return relative ? report.rel_residual : report.abs_residual; }
};

inline std::vector<Convention> conventions(const std::string& selector) {
  if (selector == "paper") return {Convention::paper_literal};
  if (selector == "mapped") return {Convention::mapped_consistent};
  return {Convention::paper_literal, Convention::mapped_consistent};
}

inline std::string quad_string(const QuadratureSpec& q) {
  return std::to_string(q.points) + "x" + std::to_string(q.panels);
}

inline Json manifest(const RunConfig& c, const std::string& command) {
  Json m;
  m["tool"] = "hvc";
  m["version"] = HVC_VERSION;
  m["command"] = command;
  Json mus = Json::array();
  for (double mu : c.mu) mus.push_back(mu);
  m["mu"] = mus;
  m["convention"] = c.convention;
  m["quadrature"] = quad_string(c.quad);
  m["seed"] = c.seed;
  return m;
}

/// Box with mapped bounds [0.6,1.5] x [0.7,1.6] x [0.8,1.4] for every mu.
inline BoxDomain standard_box(FractalDimension mu) {
  return BoxDomain({mu.unmap(0.6), mu.unmap(0.7), mu.unmap(0.8)},
                   {mu.unmap(1.5), mu.unmap(1.6), mu.unmap(1.4)}, mu);
}

/// A rectangle in each coordinate plane, cut from the standard box.
inline std::array<RectangleRegion, 3> standard_rectangles(FractalDimension mu) {
  const BoxDomain b = standard_box(mu);
  const Vec3 lo = b.lo();
  const Vec3 hi = b.hi();
  return {RectangleRegion(Plane::xy, {lo.x, hi.x}, {lo.y, hi.y}, mu.unmap(1.1), 1, mu),
          RectangleRegion(Plane::yz, {lo.y, hi.y}, {lo.z, hi.z}, mu.unmap(0.9), 1, mu),
          RectangleRegion(Plane::xz, {lo.x, hi.x}, {lo.z, hi.z}, mu.unmap(1.2), 1, mu)};
}

inline const char* plane_name(Plane p) {
  switch (p) {
    case Plane::xy: return "xy";
    case Plane::yz: return "yz";
    case Plane::xz: return "xz";
  }
  return "?";
}

/// Interior sample points of the standard box, in physical coordinates.
inline std::vector<Vec3> standard_samples(FractalDimension mu, std::uint64_t seed, int count) {
  Rng rng(seed ^ 0x5a3b1eULL);
  std::vector<Vec3> out;
  for (int i = 0; i < count; ++i) {
    out.push_back({mu.unmap(rng.uniform(0.7, 1.4)), mu.unmap(rng.uniform(0.8, 1.5)),
                   mu.unmap(rng.uniform(0.9, 1.3))});
  }
  return out;
}

namespace detail {

inline SuiteRow finish(std::string field, TheoremReport r, bool relative, double tol,
                       bool asserted) {
  SuiteRow row{std::move(field), std::move(r), relative, tol, asserted, false};
  row.passed = row.metric() <= tol;
  return row;
}

// Pointwise identities have no integral sides: lhs holds the largest
// residual over the samples and rhs is zero.
inline TheoremReport pointwise(std::string identity, Convention conv, FractalDimension mu,
                               double residual) {
  TheoremReport r = make_report(std::move(identity), conv, mu, residual, 0.0);
  r.notes.push_back("lhs holds the largest pointwise residual");
  return r;
}

inline double tolerance_for(Family f, double polynomial_tol) {
  return f == Family::polynomial ? polynomial_tol : 1e-6;
}

}  // namespace detail

/// One-dimensional suites: algebraic rules and fundamental theorems. They
/// do not depend on the vector convention, and are repeated under each
/// selected convention so every (mu, convention) block is complete.
inline std::vector<SuiteRow> one_dimensional_rows(FractalDimension mu, Convention conv,
                                                  bool asserted, std::uint64_t seed) {
  std::vector<SuiteRow> rows;
  const auto corpus = corpus_1d(seed, mu, 20);
  const std::array<double, 3> samples = {mu.unmap(0.6), mu.unmap(1.0), mu.unmap(1.4)};

  for (Rule rule : {Rule::sum, Rule::const_mul, Rule::product, Rule::quotient, Rule::chain,
                    Rule::parts}) {
    double worst = 0.0;
    // Second operands come from the exponential family, which never
    // vanishes and stays positive (a valid inner function).
    for (int i = 0; i < 4; ++i) {
      const auto& f1 = corpus[static_cast<std::size_t>(4 * i + (i % 2 == 0 ? 0 : 1))];
      const auto& f2 = corpus[static_cast<std::size_t>(4 * i + 2)];
      worst = std::max(worst, check_rule(rule, f1.f, f2.f, mu, samples).max_residual);
    }
    const double tol = rule == Rule::parts ? 1e-8 : 1e-6;
    rows.push_back(detail::finish("corpus", detail::pointwise(std::string("rule_") + to_string(rule), conv, mu, worst),
                                  false, tol, asserted));
  }

  const double a = mu.unmap(0.4);
  const double t = mu.unmap(1.7);
  double first = 0.0;
  double second = 0.0;
  double net = 0.0;
  for (const auto& f : corpus) {
    const FundamentalResiduals r = fundamental_theorem_residuals(f.f, mu, a, t);
    first = std::max(first, r.first);
    second = std::max(second, r.second);
    net = std::max(net, net_change_residual(f.f, mu, a, t));
  }
  rows.push_back(detail::finish("corpus", detail::pointwise("fundamental_first", conv, mu, first), false, 1e-8, asserted));
  rows.push_back(detail::finish("corpus", detail::pointwise("fundamental_second", conv, mu, second), false, 1e-8, asserted));
  rows.push_back(detail::finish("corpus", detail::pointwise("net_change", conv, mu, net), false, 1e-8, asserted));
  return rows;
}

inline std::vector<SuiteRow> product_rows(FractalDimension mu, Convention conv, bool asserted,
                                          std::uint64_t seed) {
  std::vector<SuiteRow> rows;
  const auto samples = standard_samples(mu, seed, 4);
  for (Family fam : {Family::polynomial, Family::transcendental}) {
    const auto s = scalar_corpus(seed, mu, fam, 2);
    const ProductIdentityResiduals r =
        product_identities_check(s[0].field, s[1].field, mu, conv, samples);
    const std::string label = s[0].name + "*" + s[1].name;
    rows.push_back(detail::finish(label, detail::pointwise("product_gradient", conv, mu, r.gradient_product),
                                  false, 1e-6, asserted));
    rows.push_back(detail::finish(label, detail::pointwise("product_divergence", conv, mu, r.divergence_product),
                                  false, 1e-6, asserted));
  }
  return rows;
}

inline std::vector<SuiteRow> theorem_rows(FractalDimension mu, Convention conv, bool asserted,
                                          std::uint64_t seed, const QuadratureSpec& quad) {
  std::vector<SuiteRow> rows;
  const BoxDomain box = standard_box(mu);
  const auto rects = standard_rectangles(mu);
  for (Family fam : {Family::polynomial, Family::transcendental}) {
    const double tol = detail::tolerance_for(fam, 1e-8);
    for (const auto& v : vector_corpus(seed, mu, fam, 2)) {
      rows.push_back(detail::finish(v.name, gauss_like(v.field, box, conv, quad), true, tol, asserted));
    }
    const auto vs = vector_corpus(seed, mu, fam, 1);
    for (const auto& r : rects) {
      rows.push_back(detail::finish(vs[0].name + "@" + plane_name(r.plane()),
                                    stokes_like(vs[0].field, r, conv, quad), true, tol, asserted));
    }
    for (const auto& t : vector_corpus(seed, mu, fam, 1, true)) {
      rows.push_back(detail::finish(t.name, green_like(t.field, rects[0], conv, quad), true, tol, asserted));
    }
    const auto s = scalar_corpus(seed, mu, fam, 2);
    const std::string pair = s[0].name + "," + s[1].name;
    for (GreenKind kind : {GreenKind::first, GreenKind::second}) {
      rows.push_back(detail::finish(pair, green_identity(kind, s[0].field, s[1].field, box, conv, quad),
                                    true, tol, asserted));
    }
    const auto vel = solenoidal_corpus(seed, mu, fam, 1);
    rows.push_back(detail::finish(s[0].name + "|" + vel[0].name,
                                  transport_identity_check(s[0].field, vel[0].field, box, conv, quad),
                                  true, tol, asserted));
  }
  return rows;
}

inline bool row_less(const SuiteRow& a, const SuiteRow& b) {
  return std::tie(a.report.identity, a.report.mu, a.report.convention, a.field) <
         std::tie(b.report.identity, b.report.mu, b.report.convention, b.field);
}

inline std::vector<SuiteRow> run_verify(const RunConfig& c) {
  std::vector<SuiteRow> rows;
  for (double m : c.mu) {
    const FractalDimension mu(m);
    for (Convention conv : conventions(c.convention)) {
      const bool asserted = conv == Convention::mapped_consistent || mu.classical();
      for (auto* suite : {&one_dimensional_rows, &product_rows}) {
        auto part = (*suite)(mu, conv, asserted, c.seed);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      auto part = theorem_rows(mu, conv, asserted, c.seed, c.quad);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  }
  std::stable_sort(rows.begin(), rows.end(), row_less);
  return rows;
}

inline bool all_asserted_pass(const std::vector<SuiteRow>& rows) {
  return std::all_of(rows.begin(), rows.end(),
                     [](const SuiteRow& r) { return !r.asserted || r.passed; });
}

inline Json row_json(const SuiteRow& r) {
  Json j;
  j["identity"] = r.report.identity;
  j["field"] = r.field;
  j["mu"] = r.report.mu;
  j["convention"] = to_string(r.report.convention);
  j["lhs"] = json_number(r.report.lhs);
  j["rhs"] = json_number(r.report.rhs);
  j["abs_residual"] = json_number(r.report.abs_residual);
  j["rel_residual"] = json_number(r.report.rel_residual);
  j["convergence_order"] = json_number(r.report.convergence_order);
  j["metric"] = r.relative ? "rel_residual" : "abs_residual";
  j["tolerance"] = r.tolerance;
  j["asserted"] = r.asserted;
  j["passed"] = r.passed;
  j["notes"] = r.report.notes;
  return j;
}

inline Json verify_json(const RunConfig& c, const std::vector<SuiteRow>& rows) {
  Json doc;
  doc["manifest"] = manifest(c, "verify");
  Json reports = Json::array();
  for (const auto& r : rows) reports.push_back(row_json(r));
  doc["reports"] = reports;
  return doc;
}

inline CsvTable verify_csv(const std::vector<SuiteRow>& rows) {
  CsvTable t({"identity", "field", "mu", "convention", "lhs", "rhs", "abs_residual",
              "rel_residual", "convergence_order", "metric", "tolerance", "asserted", "passed"});
  for (const auto& r : rows) {
    t.add({r.report.identity, r.field, r.report.mu, std::string(to_string(r.report.convention)),
           r.report.lhs, r.report.rhs, r.report.abs_residual, r.report.rel_residual,
           r.report.convergence_order ? Cell(*r.report.convergence_order) : Cell(std::string()),
           std::string(r.relative ? "rel_residual" : "abs_residual"), r.tolerance, r.asserted,
           r.passed});
  }
  return t;
}

}  // namespace hvc::app
