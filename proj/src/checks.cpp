#include "gfc/checks.hpp"

#include <sstream>

#include "gfc/jets.hpp"
#include "gfc/rng.hpp"
#include "gfc/yang_mills.hpp"

namespace gfc {

namespace {

std::string first_bad_component(const GForm& g) {
  for (std::size_t a = 0; a < g.generators(); ++a)
    for (const auto& [t, p] : g.comp(a).coeffs())
      return "e" + std::to_string(a + 1) + "[" + tuple_str(t) + "] = " + p.to_string();
  return "";
}

std::string rational_grid(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

CheckOutcome check_validate(const ProblemConfig& cfg) {
  const auto violations = cfg.algebra->validate();
  if (violations.empty()) return {"lie-algebra-validate", CheckOutcome::Status::pass, ""};
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size() && i < 3; ++i)
    os << (i ? "; " : "") << violations[i].format();
  if (violations.size() > 3) os << "; +" << violations.size() - 3 << " more";
  return {"lie-algebra-validate", CheckOutcome::Status::fail, os.str()};
}

CheckOutcome check_dd(const ProblemConfig& cfg, Rng& rng) {
  const std::size_t m = cfg.dim;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::size_t k = rng.next(std::min(m, std::size_t{2}) + 1);
    const ScalarForm f = rng.scalar_form(m, k, 3, 2);
    const ScalarForm dd = ext_d(ext_d(f));
    if (!dd.is_zero())
      return {"d-compose-d", CheckOutcome::Status::fail,
              "d(d(.)) != 0 on a random " + std::to_string(k) + "-form, trial " +
                  std::to_string(t)};
  }
  return {"d-compose-d", CheckOutcome::Status::pass, ""};
}

CheckOutcome check_bianchi(const ProblemConfig& cfg, Rng& rng) {
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const Connection a =
        t == 0 ? cfg.connection : rng.connection(cfg.algebra, cfg.dim, 3, 2);
    const GForm res = bianchi_residual(a);
    if (!res.is_zero())
      return {"bianchi", CheckOutcome::Status::fail,
              "trial " + std::to_string(t) + ": " + first_bad_component(res)};
  }
  return {"bianchi", CheckOutcome::Status::pass, ""};
}

CheckOutcome check_leibniz(const ProblemConfig& cfg, Rng& rng) {
  const std::size_t m = cfg.dim;
  if (m < 2)
    return {"leibniz-evaluation", CheckOutcome::Status::skipped,
            "needs chart dimension >= 2"};
  const Rational sign = m % 2 ? -1 : 1;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const Connection w = rng.connection(cfg.algebra, m, 2, 2);
    const GForm p = rng.gform(cfg.algebra, Valence::dual, m, m - 2, 2, 2);
    const GForm tau = rng.gform(cfg.algebra, Valence::algebra, m, 1, 2, 2);
    const ScalarForm lhs = ext_d(pair_forms(p, tau));
    const ScalarForm rhs =
        pair_forms(cov_d_star(w, p), tau) + pair_forms(p, cov_d(w, tau)) * sign;
    if (!(lhs == rhs))
      return {"leibniz-evaluation", CheckOutcome::Status::fail,
              "trial " + std::to_string(t)};
  }
  return {"leibniz-evaluation", CheckOutcome::Status::pass, ""};
}

CheckOutcome check_jet_split(const ProblemConfig& cfg, Rng& rng) {
  const std::size_t m = cfg.dim, n = cfg.algebra->dim();
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const Connection a =
        t == 0 ? cfg.connection : rng.connection(cfg.algebra, m, 3, 2);
    const std::vector<Rational> x = t == 0 ? cfg.point : rng.point(m);
    const Curvature f = curvature(a);
    const SplitJet s = split_jet(jet_of(a, x));
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t mu = 0; mu < m; ++mu)
        for (std::size_t nu = mu + 1; nu < m; ++nu) {
          if (s.F[g][mu][nu] != f.comp(g).component({mu, nu}).eval(x))
            return {"jet-split-consistency", CheckOutcome::Status::fail,
                    "curvature block mismatch at e" + std::to_string(g + 1) + "[" +
                        std::to_string(mu) + std::to_string(nu) + "], point (" +
                        rational_grid(x) + ")"};
          if (s.F[g][mu][nu] != -s.F[g][nu][mu])
            return {"jet-split-consistency", CheckOutcome::Status::fail,
                    "curvature block not antisymmetric"};
        }
    const JetPoint back = reconstruct(s);
    const JetPoint orig = jet_of(a, x);
    if (back.A != orig.A || back.k != orig.k || back.x != orig.x)
      return {"jet-split-consistency", CheckOutcome::Status::fail,
              "reconstruct does not invert split_jet, trial " + std::to_string(t)};
  }
  return {"jet-split-consistency", CheckOutcome::Status::pass, ""};
}

CheckOutcome check_beta(const ProblemConfig& cfg, Rng& rng) {
  const std::size_t m = cfg.dim;
  if (m < 2)
    return {"beta-composition", CheckOutcome::Status::skipped,
            "needs chart dimension >= 2"};
  const Rational sign = m % 2 ? -1 : 1;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const Connection w = rng.connection(cfg.algebra, m, 2, 2);
    const GForm p = rng.gform(cfg.algebra, Valence::dual, m, m - 2, 2, 2);
    const Tuple4 got = beta_bar(w, p);
    const Tuple4 expect{w, p * sign, cov_d_star(w, p), -curvature(w)};
    if (!(got == expect))
      return {"beta-composition", CheckOutcome::Status::fail, "trial " + std::to_string(t)};
  }
  return {"beta-composition", CheckOutcome::Status::pass, ""};
}

CheckOutcome check_sardanashvily(const ProblemConfig& cfg, Rng& rng) {
  if (cfg.algebra->is_abelian())
    return {"sardanashvily-counterexample", CheckOutcome::Status::skipped,
            "abelian algebra: the claimed symmetric part is genuinely symmetric"};
  const std::size_t m = cfg.dim, n = cfg.algebra->dim();
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    JetPoint j{cfg.algebra, m, rng.point(m),
               Grid<Rational>(n, std::vector<Rational>(m, 0)),
               Cube<Rational>(n, Grid<Rational>(m, std::vector<Rational>(m, 0)))};
    for (auto& row : j.A)
      for (auto& v : row) v = rng.rational();
    for (auto& grid : j.k)
      for (auto& row : grid)
        for (auto& v : row) v = rng.rational();
    if (const auto w = sardanashvily_check(j)) {
      std::ostringstream os;
      os << "witness: e" << w->generator << ", (mu,lambda) = (" << w->mu << "," << w->lambda
         << "), claimed symmetric values " << to_string(w->value_ml) << " vs "
         << to_string(w->value_lm);
      return {"sardanashvily-counterexample", CheckOutcome::Status::pass, os.str()};
    }
  }
  return {"sardanashvily-counterexample", CheckOutcome::Status::fail,
          "no asymmetry witness found on random jets"};
}

}  // namespace

std::vector<CheckOutcome> run_identity_suite(const ProblemConfig& cfg) {
  Rng rng(cfg.seed);
  std::vector<CheckOutcome> out;
  out.push_back(check_validate(cfg));
  out.push_back(check_dd(cfg, rng));
  out.push_back(check_bianchi(cfg, rng));
  out.push_back(check_leibniz(cfg, rng));
  out.push_back(check_jet_split(cfg, rng));
  out.push_back(check_beta(cfg, rng));
  out.push_back(check_sardanashvily(cfg, rng));
  return out;
}

}  // namespace gfc
