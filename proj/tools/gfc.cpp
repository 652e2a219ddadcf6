// gfc: exact symbolic calculus for gauge fields on a flat chart.
// Exit codes: 0 identities hold / configuration on-shell, 1 an exact check
// failed / off-shell, 2 bad input (flags, config, polynomial syntax).

#include <CLI11.hpp>

#include <iostream>

#include "gfc/checks.hpp"
#include "gfc/jets.hpp"
#include "gfc/report.hpp"
#include "gfc/rng.hpp"
#include "gfc/yang_mills.hpp"

namespace {

constexpr const char* kEngine = "gfc 0.1.0";

struct Options {
  std::string config_path;
  bool json = false;
  bool on_shell = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string point;
};

gfc::Json report_head(const std::string& command, const gfc::ProblemConfig& cfg) {
  gfc::Json j = gfc::Json::object();
  j["engine"] = kEngine;
  j["command"] = command;
  j["algebra"] = cfg.algebra_desc;
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["conventions"] = gfc::conventions_json(cfg.metric);
  return j;
}

void print_head(const std::string& command, const gfc::ProblemConfig& cfg) {
  std::cout << command << " report (" << kEngine << ")\n"
            << "algebra: " << cfg.algebra_desc << "\n"
            << "seed: " << cfg.seed << ", trials: " << cfg.trials << "\n"
            << gfc::conventions_human(cfg.metric) << "\n";
}

std::string point_str(const std::vector<gfc::Rational>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + gfc::to_string(x[i]);
  return s + ")";
}

int cmd_check(const gfc::ProblemConfig& cfg, const Options& opt) {
  const auto outcomes = gfc::run_identity_suite(cfg);
  bool failed = false;
  gfc::Json checks = gfc::Json::array();
  for (const auto& c : outcomes) {
    const char* tag = c.status == gfc::CheckOutcome::Status::pass   ? "PASS"
                      : c.status == gfc::CheckOutcome::Status::fail ? "FAIL"
                                                                    : "SKIP";
    failed = failed || c.status == gfc::CheckOutcome::Status::fail;
    checks.push_back({{"name", c.name},
                      {"status", c.status == gfc::CheckOutcome::Status::pass   ? "pass"
                                 : c.status == gfc::CheckOutcome::Status::fail ? "fail"
                                                                               : "skipped"},
                      {"detail", c.detail}});
    if (!opt.json)
      std::cout << tag << " " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  if (opt.json) {
    gfc::Json j = report_head("check", cfg);
    j["checks"] = checks;
    j["status"] = failed ? "fail" : "pass";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "status: " << (failed ? "fail" : "pass") << "\n";
  }
  return failed ? 1 : 0;
}

int cmd_curvature(const gfc::ProblemConfig& cfg, const Options& opt) {
  const gfc::Curvature f = gfc::curvature(cfg.connection);
  if (opt.json) {
    gfc::Json j = report_head("curvature", cfg);
    j["connection"] = gfc::json_form(cfg.connection);
    j["curvature"] = gfc::json_form(f);
    j["status"] = "ok";
    std::cout << j.dump(2) << "\n";
  } else {
    print_head("curvature", cfg);
    std::cout << gfc::human_form(cfg.connection, "A") << gfc::human_form(f, "F")
              << "status: ok\n";
  }
  return 0;
}

int cmd_dynamics(const gfc::ProblemConfig& cfg, const Options& opt) {
  if (cfg.dim < 2) throw gfc::ConfigError("dynamics needs chart dimension >= 2");
  gfc::GForm p = gfc::GForm::zero(cfg.algebra, gfc::Valence::dual, cfg.dim, cfg.dim - 2);
  if (opt.on_shell) {
    p = gfc::legendre(cfg.lagrangian, cfg.connection, gfc::curvature(cfg.connection));
  } else if (cfg.momentum) {
    p = *cfg.momentum;
  } else {
    throw gfc::ConfigError("dynamics needs a [momentum] section or --on-shell");
  }
  const gfc::DynamicsResiduals res =
      gfc::dynamics_residuals(cfg.lagrangian, cfg.connection, p);
  const bool on_shell = res.momentum.is_zero() && res.field.is_zero();
  const char* inv = nullptr;
  switch (gfc::legendre_invertibility(cfg.lagrangian)) {
    case gfc::LegendreStatus::invertible: inv = "invertible"; break;
    case gfc::LegendreStatus::degenerate: inv = "degenerate"; break;
    case gfc::LegendreStatus::not_checked: inv = "not-checked (nonquadratic)"; break;
  }
  if (opt.json) {
    gfc::Json j = report_head("dynamics", cfg);
    j["lagrangian"] = cfg.lagrangian_type;
    j["legendre_invertible"] = inv;
    j["momentum_source"] = opt.on_shell ? "legendre" : "config";
    j["symmetric_sector"] = "discarded by the reduction (not represented)";
    j["momentum"] = gfc::json_form(p);
    j["residual_momentum"] = gfc::json_form(res.momentum);
    j["residual_field"] = gfc::json_form(res.field);
    j["status"] = on_shell ? "on-shell" : "off-shell";
    std::cout << j.dump(2) << "\n";
  } else {
    print_head("dynamics", cfg);
    std::cout << "lagrangian: " << cfg.lagrangian_type << "\n"
              << "legendre map: " << inv << "\n"
              << "momentum source: " << (opt.on_shell ? "legendre" : "config") << "\n"
              << "symmetric sector: discarded by the reduction (not represented)\n"
              << gfc::human_form(p, "p") << gfc::human_form(res.momentum, "res_momentum")
              << gfc::human_form(res.field, "res_field")
              << "status: " << (on_shell ? "on-shell" : "off-shell") << "\n";
  }
  return on_shell ? 0 : 1;
}

gfc::Json json_cube(const gfc::Cube<gfc::Rational>& c) {
  gfc::Json out = gfc::Json::array();
  for (const auto& grid : c) {
    gfc::Json g = gfc::Json::array();
    for (const auto& row : grid) {
      gfc::Json r = gfc::Json::array();
      for (const auto& v : row) r.push_back(gfc::to_string(v));
      g.push_back(r);
    }
    out.push_back(g);
  }
  return out;
}

gfc::Json json_grid(const gfc::Grid<gfc::Rational>& g) {
  gfc::Json out = gfc::Json::array();
  for (const auto& row : g) {
    gfc::Json r = gfc::Json::array();
    for (const auto& v : row) r.push_back(gfc::to_string(v));
    out.push_back(r);
  }
  return out;
}

void print_grid(const gfc::Grid<gfc::Rational>& g, const std::string& name) {
  bool any = false;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t mu = 0; mu < g[a].size(); ++mu) {
      if (gfc::is_zero(g[a][mu])) continue;
      std::cout << name << "[e" << a + 1 << "][" << mu << "] = " << gfc::to_string(g[a][mu])
                << "\n";
      any = true;
    }
  if (!any) std::cout << name << " = (zero)\n";
}

void print_cube(const gfc::Cube<gfc::Rational>& c, const std::string& name) {
  bool any = false;
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t mu = 0; mu < c[a].size(); ++mu)
      for (std::size_t lam = 0; lam < c[a][mu].size(); ++lam) {
        if (gfc::is_zero(c[a][mu][lam])) continue;
        std::cout << name << "[e" << a + 1 << "][" << mu << "][" << lam
                  << "] = " << gfc::to_string(c[a][mu][lam]) << "\n";
        any = true;
      }
  if (!any) std::cout << name << " = (zero)\n";
}

int cmd_jet(const gfc::ProblemConfig& cfg, const Options& opt) {
  const gfc::JetPoint j = gfc::jet_of(cfg.connection, cfg.point);
  const gfc::SplitJet s = gfc::split_jet(j);
  const gfc::Curvature f = gfc::curvature(cfg.connection);
  bool consistent = true;
  for (std::size_t a = 0; a < cfg.algebra->dim() && consistent; ++a)
    for (std::size_t mu = 0; mu < cfg.dim && consistent; ++mu)
      for (std::size_t nu = mu + 1; nu < cfg.dim && consistent; ++nu)
        consistent = s.F[a][mu][nu] == f.comp(a).component({mu, nu}).eval(cfg.point);
  const gfc::JetPoint back = gfc::reconstruct(s);
  const bool roundtrip = back.A == j.A && back.k == j.k && back.x == j.x;
  if (opt.json) {
    gfc::Json out = report_head("jet", cfg);
    gfc::Json pt = gfc::Json::array();
    for (const auto& v : cfg.point) pt.push_back(gfc::to_string(v));
    out["point"] = pt;
    out["A"] = json_grid(j.A);
    out["k"] = json_cube(j.k);
    out["S"] = json_cube(s.S);
    out["F"] = json_cube(s.F);
    out["curvature_cross_check"] = consistent ? "consistent" : "inconsistent";
    out["roundtrip"] = roundtrip ? "consistent" : "inconsistent";
    out["status"] = consistent && roundtrip ? "ok" : "fail";
    std::cout << out.dump(2) << "\n";
  } else {
    print_head("jet", cfg);
    std::cout << "point: " << point_str(cfg.point) << "\n";
    print_grid(j.A, "A");
    print_cube(j.k, "k");
    print_cube(s.S, "S");
    print_cube(s.F, "F");
    std::cout << "curvature cross-check: " << (consistent ? "consistent" : "inconsistent")
              << "\n"
              << "split/reconstruct roundtrip: " << (roundtrip ? "consistent" : "inconsistent")
              << "\n"
              << "status: " << (consistent && roundtrip ? "ok" : "fail") << "\n";
  }
  return consistent && roundtrip ? 0 : 1;
}

int cmd_ym(const gfc::ProblemConfig& cfg, const Options& opt) {
  if (cfg.dim < 2) throw gfc::ConfigError("the quadratic density needs chart dimension >= 2");
  const gfc::Curvature f = gfc::curvature(cfg.connection);
  const gfc::ScalarForm density = gfc::ym_lagrangian(f, cfg.metric);
  const gfc::GForm p = gfc::ym_momentum(cfg.connection, cfg.metric);
  const gfc::GForm residual = gfc::ym_residual(cfg.connection, cfg.metric);
  const gfc::TripleConsistency routes = gfc::triple_consistency(cfg.connection, cfg.metric);
  const bool abelian = cfg.algebra->is_abelian();
  std::optional<gfc::MaxwellCheck> maxwell;
  if (abelian) maxwell = gfc::maxwell_check(cfg.connection, cfg.metric);
  const bool on_shell = residual.is_zero();
  const std::string status = !routes.ok()                   ? "route-mismatch"
                             : maxwell && !maxwell->equal   ? "route-mismatch"
                             : on_shell                     ? "on-shell"
                                                            : "off-shell";
  if (opt.json) {
    gfc::Json j = report_head("ym", cfg);
    j["lagrangian"] = gfc::json_scalar_form(density);
    j["momentum"] = gfc::json_form(p);
    j["residual"] = gfc::json_form(residual);
    j["routes_consistent"] = routes.ok();
    if (maxwell) j["maxwell_matches"] = maxwell->equal;
    j["status"] = status;
    std::cout << j.dump(2) << "\n";
  } else {
    print_head("ym", cfg);
    std::cout << gfc::human_scalar_form(density, "L") << gfc::human_form(p, "p")
              << gfc::human_form(residual, "residual")
              << "routes (direct vs vertical-differential): "
              << (routes.ok() ? "consistent" : "MISMATCH") << "\n";
    if (maxwell)
      std::cout << "abelian residual equals K~(d*F): " << (maxwell->equal ? "yes" : "NO")
                << "\n";
    std::cout << "status: " << status << "\n";
  }
  return status == "on-shell" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic calculus for gauge fields (chart R^m, polynomial data)"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--config", opt.config_path, "problem description file")
      ->envname("GFC_CONFIG");
  app.add_flag("--json", opt.json, "emit the machine-readable report instead of text");
  std::uint64_t seed_val = 0;
  std::size_t trials_val = 0;
  auto* seed_opt = app.add_option("--seed", seed_val, "override the config seed");
  auto* trials_opt = app.add_option("--trials", trials_val, "override the config trials");
  app.add_option("--point", opt.point, "chart point r0,r1,... (overrides config)");

  CLI::App* c_check = app.add_subcommand("check", "run the exact identity suite");
  CLI::App* c_curv = app.add_subcommand("curvature", "curvature of the configured connection");
  CLI::App* c_dyn = app.add_subcommand("dynamics", "field-equation residuals");
  c_dyn->add_flag("--on-shell", opt.on_shell, "take the momentum from the legendre map");
  CLI::App* c_jet = app.add_subcommand("jet", "first jet and its curvature-adapted split");
  CLI::App* c_ym = app.add_subcommand("ym", "quadratic curvature density report");
  for (CLI::App* s : {c_check, c_curv, c_dyn, c_jet, c_ym}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (opt.config_path.empty())
      throw gfc::ConfigError("no config given (use --config or GFC_CONFIG)");
    gfc::ProblemConfig cfg = gfc::parse_config_file(opt.config_path);
    if (*seed_opt) cfg.seed = seed_val;
    if (*trials_opt) {
      if (trials_val == 0) throw gfc::ConfigError("trials must be positive");
      cfg.trials = trials_val;
    }
    if (!opt.point.empty()) {
      cfg.point = gfc::parse_point(opt.point);
      if (cfg.point.size() != cfg.dim)
        throw gfc::ConfigError("--point dimension mismatch");
    }
    if (c_check->parsed()) return cmd_check(cfg, opt);
    if (c_curv->parsed()) return cmd_curvature(cfg, opt);
    if (c_dyn->parsed()) return cmd_dynamics(cfg, opt);
    if (c_jet->parsed()) return cmd_jet(cfg, opt);
    if (c_ym->parsed()) return cmd_ym(cfg, opt);
    return 2;
  } catch (const gfc::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gfc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
