#include "gfc/yang_mills.hpp"

#include <stdexcept>

namespace gfc {

ScalarForm ym_lagrangian(const GForm& f, const Metric& g) {
  if (f.degree() != 2 || f.valence() != Valence::algebra)
    throw std::invalid_argument("curvature must be an algebra-valued 2-form");
  return pair_forms(k_sharp(f), hodge(f, g)) * Rational(1, 2);
}

LagrangianDensity ym_density(AlgebraPtr alg, Metric metric) {
  LagrangianDensity shape{alg, metric, Poly()};
  const std::size_t m = metric.dim, n = alg->dim();
  Poly body(shape.var_count());
  const Mat& k = alg->pairing();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (is_zero(k[a][b])) continue;
      for (std::size_t mu = 0; mu < m; ++mu)
        for (std::size_t nu = mu + 1; nu < m; ++nu) {
          Monomial e(shape.var_count(), 0);
          e[shape.f_var(a, mu, nu)] += 1;
          e[shape.f_var(b, mu, nu)] += 1;
          const Rational metric_factor = metric.signs[mu] * metric.signs[nu];
          body.add_term(e, k[a][b] * metric_factor / 2);
        }
    }
  return LagrangianDensity::make(std::move(alg), std::move(metric), std::move(body));
}

GForm ym_momentum(const Connection& a, const Metric& g) {
  return hodge(k_sharp(curvature(a)), g);
}

GForm ym_residual(const Connection& a, const Metric& g) {
  return cov_d_star(a, ym_momentum(a, g));
}

MaxwellCheck maxwell_check(const Connection& a, const Metric& g) {
  require_connection(a);
  if (!a.algebra()->is_abelian())
    throw std::invalid_argument("Maxwell comparison is abelian-only");
  MaxwellCheck out{ym_residual(a, g),
                   k_sharp(ext_d(hodge(curvature(a), g)), a.algebra()->pairing()), false};
  out.equal = out.residual == out.maxwell;
  return out;
}

TripleConsistency triple_consistency(const Connection& a, const Metric& g) {
  require_connection(a);
  const LagrangianDensity l = ym_density(a.algebra(), g);
  const Curvature f = curvature(a);
  TripleConsistency out{legendre(l, a, f),
                        ym_momentum(a, g),
                        GForm(),
                        ym_residual(a, g),
                        false,
                        false,
                        false};
  const DynamicsResiduals res = dynamics_residuals(l, a, out.momentum_triple);
  out.residual_triple = res.field;
  out.momentum_equal = out.momentum_triple == out.momentum_direct;
  out.momentum_residual_zero = res.momentum.is_zero();
  out.residual_equal = out.residual_triple == out.residual_direct;
  return out;
}

}  // namespace gfc
