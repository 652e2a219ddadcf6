#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gfc/triple.hpp"

namespace gfc {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Problem description read from a config file. Format: flat key-value lines
// with [section] headers, '#' comments, whitespace-insensitive. Sections:
// top level (dim, metric, seed, trials, point), [algebra], [connection],
// [momentum], [lagrangian]. See the README for the full grammar.
struct ProblemConfig {
  std::size_t dim = 0;
  Metric metric;
  AlgebraPtr algebra;
  std::string algebra_desc;            // "so3", "abelian(2)", "custom(dim n)"
  Connection connection;               // zero connection when absent
  std::optional<GForm> momentum;       // dual (m-2)-form
  LagrangianDensity lagrangian;        // defaults to the quadratic curvature density
  std::string lagrangian_type;         // "yang-mills" or "custom"
  std::vector<Rational> point;         // defaults to the origin
  std::uint64_t seed = 0;
  std::size_t trials = 25;
};

ProblemConfig parse_config_text(const std::string& text);
ProblemConfig parse_config_file(const std::string& path);

// Comma- or space-separated rationals (the --point flag syntax).
std::vector<Rational> parse_point(const std::string& text);

}  // namespace gfc
