#pragma once

// The solve command: builds a 1-D problem from the builtin initial-data
// families, runs it on one or more nested grids and reports errors against
// the exact solution where one is known.

#include <chrono>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hvc/app/config.hpp"
#include "hvc/app/report.hpp"
#include "hvc/app/verify.hpp"
#include "hvc/pde1d.hpp"

namespace hvc::app {

struct Problem1D {
  Equation1D equation = Equation1D::anomalous_diffusion;
  AnalyticFunction1D initial;
  Boundary1D boundary = Reflective{};
  std::optional<Source1D> source;
  std::function<double(double, double)> exact;  // empty when unknown
};

inline std::pair<double, double> default_domain(const SolveConfig& s, FractalDimension mu) {
  if (s.domain) return *s.domain;
  if (s.initial == "manufactured") return {1.0, 4.0};
  return {mu.classical() ? 0.0 : 0.1, 1.0};
}

/// The manufactured solution e^(-t) sin(x^mu) and the source that makes it
/// exact for the chosen equation.
inline Problem1D manufactured_problem(Equation1D eq, FractalDimension mu, double theta) {
  Problem1D p;
  p.equation = eq;
  p.exact = [mu](double t, double x) { return std::exp(-t) * std::sin(mu.map(x)); };
  p.initial.eval = [mu](double x) { return std::sin(mu.map(x)); };
  p.boundary = Dirichlet{};
  p.source = [eq, mu, theta](double t, double x) {
    const double u = mu.map(x);
    const double v = std::exp(-t) * std::sin(u);
    const double pref = mu.density(x);
    const double k = theta * pref * pref;
    double s = -v + k * v;
    if (eq == Equation1D::fractal_burgers) s += v * pref * std::exp(-t) * std::cos(u);
    return s;
  };
  return p;
}

inline Problem1D build_problem(const SolveConfig& s, FractalDimension mu) {
  const Equation1D eq =
      s.equation == "burgers" ? Equation1D::fractal_burgers : Equation1D::anomalous_diffusion;
  const auto [a, b] = default_domain(s, mu);
  Problem1D p;
  if (s.initial == "manufactured") {
    p = manufactured_problem(eq, mu, s.theta);
  } else if (s.initial == "constant") {
    p.equation = eq;
    p.initial.eval = [](double) { return 1.0; };
    p.exact = [](double, double) { return 1.0; };
  } else if (s.initial == "eigenmode") {
    p.equation = eq;
    const double ua = mu.map(a);
    const double L = mu.map(b) - ua;
    p.initial.eval = [mu, ua, L](double x) {
      return std::sin(std::numbers::pi * (mu.map(x) - ua) / L);
    };
    if (mu.classical() && eq == Equation1D::anomalous_diffusion) {
      const double rate = s.theta * std::numbers::pi * std::numbers::pi / (L * L);
      p.exact = [ua, L, rate](double t, double x) {
        return std::exp(-rate * t) * std::sin(std::numbers::pi * (x - ua) / L);
      };
    }
  } else {  // bump
    p.equation = eq;
    const double ua = mu.map(a);
    const double L = mu.map(b) - ua;
    p.initial.eval = [mu, ua, L](double x) {
      const double z = (mu.map(x) - ua - 0.5 * L) / (0.1 * L);
      return std::exp(-z * z);
    };
  }
  if (s.boundary == "reflective") {
    p.boundary = Reflective{};
  } else if (p.exact) {
    const auto exact = p.exact;
    p.boundary = Dirichlet{[exact, a](double t) { return exact(t, a); },
                           [exact, b](double t) { return exact(t, b); }};
  } else {
    const auto init = p.initial.eval;
    const double va = init(a);
    const double vb = init(b);
    p.boundary = Dirichlet{[va](double) { return va; }, [vb](double) { return vb; }};
  }
  return p;
}

struct SolveLevel {
  Grid1DSolution solution;
  std::optional<double> l2_error;
  double fractal_mass_initial = 0.0;
  double fractal_mass_final = 0.0;
  double weighted_mass_initial = 0.0;
  double weighted_mass_final = 0.0;
};

struct SolveRun {
  double mu = 1.0;
  std::vector<SolveLevel> levels;
  std::vector<double> observed_orders;  // log2 of successive error ratios
  double elapsed_seconds = 0.0;
};

inline SolveRun run_solve_mu(const SolveConfig& s, FractalDimension mu) {
  const auto start = std::chrono::steady_clock::now();
  const Problem1D prob = build_problem(s, mu);
  const auto [a, b] = default_domain(s, mu);
  SolveRun run;
  run.mu = mu.value();
  for (int level = 0; level < s.levels; ++level) {
    SolverParams prm;
    prm.mu = mu;
    prm.a = a;
    prm.b = b;
    prm.nodes = (s.nodes - 1) * (1 << level) + 1;
    prm.theta = s.theta;
    prm.t_end = s.t_end;
    prm.dt = s.dt;
    prm.snapshot_times = s.snapshots;
    if (prm.snapshot_times.empty() || prm.snapshot_times.front() > 0.0) {
      prm.snapshot_times.insert(prm.snapshot_times.begin(), 0.0);
    }
    SolveLevel lv;
    lv.solution = solve_1d(prob.equation, prob.initial, prob.boundary, prm, prob.source);
    const Grid1DSolution& g = lv.solution;
    if (prob.exact) lv.l2_error = l2_error(g, g.snapshots.size() - 1, prob.exact);
    lv.fractal_mass_initial = fractal_mass(g, g.snapshots.front().values);
    lv.fractal_mass_final = fractal_mass(g, g.final_values());
    lv.weighted_mass_initial = weighted_mass(g, g.snapshots.front().values);
    lv.weighted_mass_final = weighted_mass(g, g.final_values());
    run.levels.push_back(std::move(lv));
  }
  for (std::size_t k = 1; k < run.levels.size(); ++k) {
    const auto& e0 = run.levels[k - 1].l2_error;
    const auto& e1 = run.levels[k].l2_error;
    if (e0 && e1 && *e1 > 0.0) run.observed_orders.push_back(std::log2(*e0 / *e1));
  }
  run.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

inline std::vector<SolveRun> run_solve(const RunConfig& c) {
  std::vector<SolveRun> runs;
  for (double m : c.mu) runs.push_back(run_solve_mu(c.solve, FractalDimension(m)));
  return runs;
}

/// Run manifest. Wall-clock time sits under "timing" so payload comparisons
/// can drop it.
inline Json solve_json(const RunConfig& c, const std::vector<SolveRun>& runs) {
  const SolveConfig& s = c.solve;
  Json doc;
  Json m = manifest(c, "solve");
  m["equation"] = s.equation;
  m["initial"] = s.initial;
  m["boundary"] = s.boundary;
  m["theta"] = s.theta;
  m["t_end"] = s.t_end;
  m["dt"] = s.dt ? Json(*s.dt) : Json("auto");
  m["levels"] = s.levels;
  doc["manifest"] = m;
  Json reports = Json::array();
  Json timing = Json::array();
  for (const auto& r : runs) {
    Json jr;
    jr["mu"] = r.mu;
    Json levels = Json::array();
    for (const auto& lv : r.levels) {
      const Grid1DSolution& g = lv.solution;
      Json jl;
      jl["domain"] = {g.a, g.b};
      jl["nodes"] = g.nodes();
      jl["du"] = g.du;
      jl["steps"] = g.steps;
      jl["cfl"] = {{"safety", g.cfl.safety},
                   {"diffusive_limit", json_number(g.cfl.diffusive_limit)},
                   {"advective_limit", json_number(g.cfl.advective_limit)},
                   {"tightest_bound", json_number(g.cfl.tightest_bound)},
                   {"largest_step", g.cfl.largest_step}};
      jl["l2_error"] = json_number(lv.l2_error);
      jl["fractal_mass"] = {json_number(lv.fractal_mass_initial), json_number(lv.fractal_mass_final)};
      jl["weighted_mass"] = {json_number(lv.weighted_mass_initial), json_number(lv.weighted_mass_final)};
      levels.push_back(jl);
    }
    jr["levels"] = levels;
    Json orders = Json::array();
    for (double o : r.observed_orders) orders.push_back(json_number(o));
    jr["observed_orders"] = orders;
    reports.push_back(jr);
    timing.push_back({{"mu", r.mu}, {"elapsed_seconds", r.elapsed_seconds}});
  }
  doc["reports"] = reports;
  doc["timing"] = timing;
  return doc;
}

/// Snapshot table (t, x, u = x^mu, v) of one level.
inline CsvTable snapshot_csv(const Grid1DSolution& g) {
  CsvTable t({"t", "x", "u", "v"});
  for (const auto& snap : g.snapshots) {
    for (int i = 0; i < g.nodes(); ++i) t.add({snap.t, g.x[i], g.u[i], snap.values[i]});
  }
  return t;
}

}  // namespace hvc::app
