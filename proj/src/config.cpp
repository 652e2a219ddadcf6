#include "gfc/config.hpp"

#include <fstream>
#include <sstream>

#include "gfc/yang_mills.hpp"

namespace gfc {

namespace {

struct Entry {
  std::size_t line;
  std::string key;
  std::string value;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ConfigError(line ? "line " + std::to_string(line) + ": " + msg : msg);
}

Int parse_int(std::size_t line, const std::string& raw) {
  const std::string s = trim(raw);
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
    fail(line, "bad integer: " + s);
  return Int(s);
}

Rational parse_rational(std::size_t line, const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) fail(line, "expected a rational number");
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(line, s));
  const Int num = parse_int(line, s.substr(0, slash));
  const Int den = parse_int(line, s.substr(slash + 1));
  if (den == 0) fail(line, "zero denominator");
  return Rational(num, den);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Rational> parse_rational_list(std::size_t line, const std::string& value) {
  std::vector<Rational> out;
  std::string norm = value;
  for (char& c : norm)
    if (c == ',') c = ' ';
  std::istringstream is(norm);
  std::string tok;
  while (is >> tok) out.push_back(parse_rational(line, tok));
  return out;
}

// Section contents keyed by section name ("" for the top level).
using Sections = std::map<std::string, std::vector<Entry>>;

Sections read_sections(const std::string& text) {
  Sections sections;
  std::string section;
  std::istringstream is(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "algebra" && section != "connection" && section != "momentum" &&
          section != "lagrangian")
        fail(lineno, "unknown section: [" + section + "]");
      sections[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, "expected key = value");
    Entry e{lineno, trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
    if (e.key.empty()) fail(lineno, "empty key");
    sections[section].push_back(std::move(e));
  }
  return sections;
}

const Entry* find_unique(const std::vector<Entry>& entries, const std::string& key) {
  const Entry* found = nullptr;
  for (const auto& e : entries) {
    if (e.key != key) continue;
    if (found) fail(e.line, "duplicate key: " + key);
    found = &e;
  }
  return found;
}

AlgebraPtr build_algebra(const std::vector<Entry>& entries, std::string& desc) {
  if (const Entry* b = find_unique(entries, "builtin")) {
    for (const auto& e : entries)
      if (e.key != "builtin") fail(e.line, "builtin algebras take no further keys");
    try {
      desc = b->value;
      return LieAlgebra::builtin(b->value);
    } catch (const std::invalid_argument& ex) {
      fail(b->line, ex.what());
    }
  }
  const Entry* dim_e = find_unique(entries, "dim");
  if (!dim_e) fail(entries.empty() ? 0 : entries.front().line,
                   "[algebra] needs either builtin or dim");
  std::size_t n = 0;
  try {
    n = std::stoul(dim_e->value);
  } catch (const std::exception&) {
    fail(dim_e->line, "bad algebra dimension: " + dim_e->value);
  }
  if (n == 0 || n > 16) fail(dim_e->line, "algebra dimension out of range");
  std::vector<Rational> c(n * n * n, 0);
  Mat pairing = mat_identity(n);
  for (const auto& e : entries) {
    if (e.key == "dim") continue;
    if (e.key == "c") {
      for (const std::string& chunk : split(e.value, ',')) {
        const std::vector<Rational> quad = parse_rational_list(e.line, chunk);
        if (quad.size() != 4)
          fail(e.line, "structure entry needs four numbers: a b c value");
        long idx[3];
        for (int i = 0; i < 3; ++i) {
          if (denominator(quad[i]) != 1) fail(e.line, "structure indices must be integers");
          idx[i] = numerator(quad[i]).convert_to<long>();
          if (idx[i] < 1 || static_cast<std::size_t>(idx[i]) > n)
            fail(e.line, "structure index out of range (1-based)");
        }
        c[((idx[0] - 1) * n + (idx[1] - 1)) * n + (idx[2] - 1)] = quad[3];
      }
    } else if (e.key == "K") {
      const std::vector<std::string> rows = split(e.value, ';');
      if (rows.size() != n) fail(e.line, "K needs " + std::to_string(n) + " rows");
      for (std::size_t i = 0; i < n; ++i) {
        pairing[i] = parse_rational_list(e.line, rows[i]);
        if (pairing[i].size() != n)
          fail(e.line, "K row " + std::to_string(i + 1) + " needs " + std::to_string(n) +
                           " entries");
      }
    } else {
      fail(e.line, "unknown [algebra] key: " + e.key);
    }
  }
  desc = "custom(dim " + std::to_string(n) + ")";
  return std::make_shared<LieAlgebra>(n, std::move(c), std::move(pairing));
}

// "e<a> = <tuple>: <poly>, <tuple>: <poly>"; tuple is a digit string or _.
void fill_components(GForm& form, const std::vector<Entry>& entries, std::size_t degree,
                     std::size_t dim) {
  std::vector<bool> seen(form.generators(), false);
  for (const auto& e : entries) {
    if (e.key.size() < 2 || e.key[0] != 'e' ||
        e.key.find_first_not_of("0123456789", 1) != std::string::npos)
      fail(e.line, "expected generator key e1..e" + std::to_string(form.generators()));
    const unsigned long a = std::stoul(e.key.substr(1));
    if (a < 1 || a > form.generators()) fail(e.line, "generator index out of range: " + e.key);
    if (seen[a - 1]) fail(e.line, "duplicate generator key: " + e.key);
    seen[a - 1] = true;
    for (const std::string& chunk : split(e.value, ',')) {
      const std::string item = trim(chunk);
      if (item.empty()) continue;
      const auto colon = item.find(':');
      if (colon == std::string::npos) fail(e.line, "component needs '<indices>: <polynomial>'");
      const std::string tup = trim(item.substr(0, colon));
      IndexTuple tuple;
      if (tup != "_") {
        for (char d : tup) {
          if (d < '0' || d > '9') fail(e.line, "bad index tuple: " + tup);
          tuple.push_back(static_cast<std::size_t>(d - '0'));
        }
      }
      if (tuple.size() != degree)
        fail(e.line, "index tuple " + (tup.empty() ? "_" : tup) + " has length " +
                         std::to_string(tuple.size()) + ", expected " + std::to_string(degree));
      for (std::size_t i : tuple)
        if (i >= dim) fail(e.line, "coordinate index out of range: " + std::to_string(i));
      try {
        form.comp(a - 1).add(tuple, parse_poly(trim(item.substr(colon + 1)), dim));
      } catch (const ParseError& pe) {
        fail(e.line, pe.what());
      }
    }
  }
}

}  // namespace

ProblemConfig parse_config_text(const std::string& text) {
  Sections sections = read_sections(text);
  const std::vector<Entry>& top = sections[""];
  for (const auto& e : top)
    if (e.key != "dim" && e.key != "metric" && e.key != "seed" && e.key != "trials" &&
        e.key != "point")
      fail(e.line, "unknown top-level key: " + e.key);

  ProblemConfig cfg;
  const Entry* metric_e = find_unique(top, "metric");
  const Entry* dim_e = find_unique(top, "dim");
  if (metric_e) {
    try {
      cfg.metric = Metric::parse(metric_e->value);
    } catch (const std::invalid_argument& ex) {
      fail(metric_e->line, ex.what());
    }
    cfg.dim = cfg.metric.dim;
    if (dim_e && std::to_string(cfg.dim) != trim(dim_e->value))
      fail(dim_e->line, "dim disagrees with the metric signature length");
  } else if (dim_e) {
    try {
      cfg.dim = std::stoul(dim_e->value);
    } catch (const std::exception&) {
      fail(dim_e->line, "bad dim: " + dim_e->value);
    }
    cfg.metric = Metric::euclidean(cfg.dim);
  } else {
    throw ConfigError("config needs dim or metric");
  }
  if (cfg.dim < 1 || cfg.dim > 9) throw ConfigError("chart dimension must be in [1, 9]");

  if (const Entry* e = find_unique(top, "seed")) {
    try {
      cfg.seed = std::stoull(e->value);
    } catch (const std::exception&) {
      fail(e->line, "bad seed: " + e->value);
    }
  }
  if (const Entry* e = find_unique(top, "trials")) {
    try {
      cfg.trials = std::stoul(e->value);
    } catch (const std::exception&) {
      fail(e->line, "bad trials: " + e->value);
    }
    if (cfg.trials == 0) fail(e->line, "trials must be positive");
  }
  if (const Entry* e = find_unique(top, "point")) {
    cfg.point = parse_rational_list(e->line, e->value);
    if (cfg.point.size() != cfg.dim) fail(e->line, "point dimension mismatch");
  } else {
    cfg.point.assign(cfg.dim, 0);
  }

  auto alg_it = sections.find("algebra");
  if (alg_it == sections.end()) throw ConfigError("config needs an [algebra] section");
  cfg.algebra = build_algebra(alg_it->second, cfg.algebra_desc);

  cfg.connection = zero_connection(cfg.algebra, cfg.dim);
  if (auto it = sections.find("connection"); it != sections.end())
    fill_components(cfg.connection, it->second, 1, cfg.dim);

  if (auto it = sections.find("momentum"); it != sections.end()) {
    if (cfg.dim < 2) throw ConfigError("momentum needs chart dimension >= 2");
    GForm p(cfg.algebra, Valence::dual, cfg.dim, cfg.dim - 2);
    fill_components(p, it->second, cfg.dim - 2, cfg.dim);
    cfg.momentum = std::move(p);
  }

  cfg.lagrangian_type = "yang-mills";
  std::string body;
  std::size_t body_line = 0;
  if (auto it = sections.find("lagrangian"); it != sections.end()) {
    for (const auto& e : it->second) {
      if (e.key == "type") cfg.lagrangian_type = e.value;
      else if (e.key == "body") { body = e.value; body_line = e.line; }
      else fail(e.line, "unknown [lagrangian] key: " + e.key);
    }
  }
  if (cfg.lagrangian_type == "yang-mills") {
    if (!body.empty()) fail(body_line, "yang-mills lagrangian takes no body");
    cfg.lagrangian = ym_density(cfg.algebra, cfg.metric);
  } else if (cfg.lagrangian_type == "custom") {
    if (body.empty()) throw ConfigError("custom lagrangian needs a body");
    try {
      cfg.lagrangian = LagrangianDensity::parse(cfg.algebra, cfg.metric, body);
    } catch (const ParseError& pe) {
      fail(body_line, pe.what());
    }
  } else {
    throw ConfigError("unknown lagrangian type: " + cfg.lagrangian_type);
  }
  return cfg;
}

ProblemConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::vector<Rational> parse_point(const std::string& text) {
  return parse_rational_list(0, text);
}

}  // namespace gfc
