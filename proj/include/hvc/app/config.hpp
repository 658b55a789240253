#pragma once

// Run configuration: a flat key = value file with [run] and [solver]
// sections. Command-line flags use the same keys and override the file.
// Numbers are parsed with std::from_chars, so the process locale never
// matters.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hvc/error.hpp"
#include "hvc/fractal_dimension.hpp"
#include "hvc/quadrature.hpp"

namespace hvc::app {

/// Malformed configuration (exit status 2).
struct ConfigError : Error {
  using Error::Error;
};

struct SolveConfig {
  std::string equation = "diffusion";  // diffusion | burgers
  std::string initial = "eigenmode";   // eigenmode | constant | manufactured | bump
  std::string boundary = "dirichlet";  // dirichlet | reflective
  int nodes = 201;
  std::optional<double> dt;  // empty: automatic CFL step
  double t_end = 0.1;
  double theta = 1.0;
  std::optional<std::pair<double, double>> domain;
  int levels = 1;  // grids solved, each with twice the intervals of the previous
  std::vector<double> snapshots;
};

struct RunConfig {
  std::string command;
  std::vector<double> mu = {0.5, 1.0};
  std::string convention = "both";  // paper | mapped | both
  QuadratureSpec quad = kTheoremQuadrature;
  std::uint64_t seed = 20240601;
  std::string out;
  std::string format = "json";  // json | csv
  SolveConfig solve;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

inline double parse_double(std::string_view text, const std::string& what) {
  text = detail::trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(what + ": expected a decimal number, got '" + std::string(text) + "'");
  }
  return v;
}

template <class Int>
Int parse_integer(std::string_view text, const std::string& what) {
  text = detail::trim(text);
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(what + ": expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

inline std::vector<double> parse_list(std::string_view text, const std::string& what) {
  std::vector<double> out;
  for (auto item : detail::split(text, ',')) out.push_back(parse_double(item, what));
  return out;
}

/// "<points>x<panels>".
inline QuadratureSpec parse_quad(std::string_view text, const std::string& what) {
  const auto parts = detail::split(text, 'x');
  if (parts.size() != 2) throw ConfigError(what + ": expected <points>x<panels>");
  QuadratureSpec q;
  q.points = parse_integer<int>(parts[0], what);
  q.panels = parse_integer<int>(parts[1], what);
  try {
    q.validate();
  } catch (const Error& e) {
    throw ConfigError(what + ": " + e.what());
  }
  return q;
}

inline std::string choice(std::string_view text, std::initializer_list<std::string_view> allowed,
                          const std::string& what) {
  text = detail::trim(text);
  if (std::find(allowed.begin(), allowed.end(), text) == allowed.end()) {
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
    throw ConfigError(what + ": expected one of {" + list + "}, got '" + std::string(text) + "'");
  }
  return std::string(text);
}

/// Applies one key. `what` prefixes diagnostics (e.g. "line 4, key mu").
inline void apply_setting(RunConfig& c, std::string_view section, std::string_view key,
                          std::string_view value, const std::string& what) {
  SolveConfig& s = c.solve;
  if (section == "run") {
    if (key == "command") {
      c.command = choice(value, {"verify", "solve", "table", "errata"}, what);
    } else if (key == "mu") {
      c.mu = parse_list(value, what);
      for (double m : c.mu) {
        if (!(m > 0.0 && m <= 1.0)) throw ConfigError(what + ": fractal dimension must lie in (0, 1]");
      }
    } else if (key == "convention") {
      c.convention = choice(value, {"paper", "mapped", "both"}, what);
    } else if (key == "quad") {
      c.quad = parse_quad(value, what);
    } else if (key == "seed") {
      c.seed = parse_integer<std::uint64_t>(value, what);
    } else if (key == "out") {
      c.out = std::string(detail::trim(value));
    } else if (key == "format") {
      c.format = choice(value, {"csv", "json"}, what);
    } else {
      throw ConfigError(what + ": unknown key in section [run]");
    }
    return;
  }
  if (section == "solver") {
    if (key == "equation") {
      s.equation = choice(value, {"diffusion", "burgers"}, what);
    } else if (key == "initial") {
      s.initial = choice(value, {"eigenmode", "constant", "manufactured", "bump"}, what);
    } else if (key == "boundary") {
      s.boundary = choice(value, {"dirichlet", "reflective"}, what);
    } else if (key == "nodes") {
      s.nodes = parse_integer<int>(value, what);
      if (s.nodes < 5) throw ConfigError(what + ": at least 5 nodes are required");
    } else if (key == "dt") {
      const double dt = parse_double(value, what);
      if (!(dt > 0.0)) throw ConfigError(what + ": time step must be positive");
      s.dt = dt;
    } else if (key == "auto_cfl") {
      const std::string b = choice(value, {"true", "false"}, what);
      if (b == "true") s.dt.reset();
    } else if (key == "t_end") {
      s.t_end = parse_double(value, what);
      if (!(s.t_end >= 0.0)) throw ConfigError(what + ": final time must be non-negative");
    } else if (key == "theta") {
      s.theta = parse_double(value, what);
      if (!(s.theta > 0.0)) throw ConfigError(what + ": diffusivity must be positive");
    } else if (key == "domain") {
      const auto v = parse_list(value, what);
      if (v.size() != 2 || !(v[0] >= 0.0 && v[0] < v[1])) {
        throw ConfigError(what + ": expected a,b with 0 <= a < b");
      }
      s.domain = std::make_pair(v[0], v[1]);
    } else if (key == "levels") {
      s.levels = parse_integer<int>(value, what);
      if (s.levels < 1 || s.levels > 6) throw ConfigError(what + ": levels must lie in [1, 6]");
    } else if (key == "snapshots") {
      s.snapshots = parse_list(value, what);
    } else {
      throw ConfigError(what + ": unknown key in section [solver]");
    }
    return;
  }
  throw ConfigError(what + ": unknown section [" + std::string(section) + "]");
}

/// Parses the configuration file format:
///   # comment
///   [run]
///   mu = 0.5, 1.0
///   [solver]
///   nodes = 201
inline void parse_config_text(std::string_view text, RunConfig& c) {
  std::string section;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    const std::string where = "line " + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) throw ConfigError(where + ": malformed section header");
      section = std::string(detail::trim(line.substr(1, line.size() - 2)));
      if (section != "run" && section != "solver") {
        throw ConfigError(where + ": unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + ": expected key = value");
    const std::string_view key = detail::trim(line.substr(0, eq));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + ": missing key");
    if (section.empty()) throw ConfigError(where + ", key " + std::string(key) + ": key outside a section");
    apply_setting(c, section, key, value, where + ", key " + std::string(key));
  }
}

}  // namespace hvc::app
