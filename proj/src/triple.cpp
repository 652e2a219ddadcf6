#include "gfc/triple.hpp"

#include <stdexcept>

namespace gfc {

namespace {

std::size_t pairs_of(std::size_t m) { return m * (m - 1) / 2; }

// lexicographic rank of (mu, nu), mu < nu, among the C(m,2) pairs
std::size_t pair_rank(std::size_t m, std::size_t mu, std::size_t nu) {
  if (mu >= nu || nu >= m) throw std::invalid_argument("bad index pair");
  std::size_t r = 0;
  for (std::size_t i = 0; i < mu; ++i) r += m - 1 - i;
  return r + (nu - mu - 1);
}

IndexTuple full_tuple(std::size_t m) {
  IndexTuple t(m);
  for (std::size_t i = 0; i < m; ++i) t[i] = i;
  return t;
}

}  // namespace

std::size_t LagrangianDensity::q_var(std::size_t i) const {
  if (i >= dim()) throw std::invalid_argument("chart index out of range");
  return i;
}

std::size_t LagrangianDensity::a_var(std::size_t a, std::size_t mu) const {
  if (a >= gens() || mu >= dim()) throw std::invalid_argument("connection index out of range");
  return dim() + a * dim() + mu;
}

std::size_t LagrangianDensity::f_var(std::size_t a, std::size_t mu, std::size_t nu) const {
  if (a >= gens()) throw std::invalid_argument("curvature index out of range");
  return dim() + gens() * dim() + a * pairs_of(dim()) + pair_rank(dim(), mu, nu);
}

std::size_t LagrangianDensity::var_count() const {
  return dim() + gens() * dim() + gens() * pairs_of(dim());
}

std::map<std::string, std::size_t> LagrangianDensity::symbols() const {
  std::map<std::string, std::size_t> s;
  for (std::size_t i = 0; i < dim(); ++i) s.emplace("x" + std::to_string(i), q_var(i));
  for (std::size_t a = 0; a < gens(); ++a)
    for (std::size_t mu = 0; mu < dim(); ++mu)
      s.emplace("A" + std::to_string(a + 1) + "_" + std::to_string(mu), a_var(a, mu));
  for (std::size_t a = 0; a < gens(); ++a)
    for (std::size_t mu = 0; mu < dim(); ++mu)
      for (std::size_t nu = mu + 1; nu < dim(); ++nu)
        s.emplace("F" + std::to_string(a + 1) + "_" + std::to_string(mu) + std::to_string(nu),
                  f_var(a, mu, nu));
  return s;
}

LagrangianDensity LagrangianDensity::make(AlgebraPtr alg, Metric metric, Poly body) {
  LagrangianDensity l{std::move(alg), std::move(metric), std::move(body)};
  if (!l.alg) throw std::invalid_argument("null algebra");
  if (l.body.num_vars() != l.var_count())
    throw std::invalid_argument("density body has wrong variable count");
  return l;
}

LagrangianDensity LagrangianDensity::parse(AlgebraPtr alg, Metric metric,
                                           const std::string& body) {
  LagrangianDensity probe{alg, metric, Poly()};
  Poly parsed = parse_poly(body, probe.symbols(), probe.var_count());
  return make(std::move(alg), std::move(metric), std::move(parsed));
}

namespace {

void require_density_args(const LagrangianDensity& l, const Connection& omega,
                          const GForm& f) {
  require_connection(omega);
  if (!(*omega.algebra() == *l.alg) || !(*f.algebra() == *l.alg))
    throw std::invalid_argument("algebra mismatch");
  if (omega.dim() != l.dim() || f.dim() != l.dim())
    throw std::invalid_argument("chart dimension mismatch");
  if (f.degree() != 2 || f.valence() != Valence::algebra)
    throw std::invalid_argument("curvature slot must be an algebra-valued 2-form");
}

// substitution images sending the formal (q, A, F) variables to the actual
// component polynomials of (omega, f)
std::vector<Poly> density_images(const LagrangianDensity& l, const Connection& omega,
                                 const GForm& f) {
  const std::size_t m = l.dim();
  std::vector<Poly> images(l.var_count(), Poly(m));
  for (std::size_t i = 0; i < m; ++i) images[l.q_var(i)] = Poly::variable(m, i);
  for (std::size_t a = 0; a < l.gens(); ++a) {
    for (std::size_t mu = 0; mu < m; ++mu)
      images[l.a_var(a, mu)] = omega.comp(a).component({mu});
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::size_t nu = mu + 1; nu < m; ++nu)
        images[l.f_var(a, mu, nu)] = f.comp(a).component({mu, nu});
  }
  return images;
}

}  // namespace

ScalarForm lagrangian_form(const LagrangianDensity& l, const Connection& omega,
                           const GForm& f) {
  require_density_args(l, omega, f);
  ScalarForm top(l.dim(), l.dim());
  top.add(full_tuple(l.dim()), l.body.compose(density_images(l, omega, f)));
  return top;
}

PhaseTuple alpha_bar(const Connection& omega, const GForm& p) {
  require_connection(omega);
  const std::size_t m = omega.dim();
  if (m < 2) throw std::invalid_argument("chart dimension must be at least 2");
  if (p.valence() != Valence::dual || p.degree() != m - 2)
    throw std::invalid_argument("momentum must be a dual-valued (m-2)-form");
  const Rational sign = m % 2 ? -1 : 1;
  return PhaseTuple{omega, curvature(omega), cov_d_star(omega, p), p * sign};
}

Tuple4 r_bar(const Tuple4& t) { return Tuple4{t.s1, t.s4, t.s3, -t.s2}; }

Tuple4 beta_bar(const Connection& omega, const GForm& p) {
  return r_bar(alpha_bar(omega, p).as_tuple());
}

VerticalDiff vertical_diff(const LagrangianDensity& l, const Connection& omega,
                           const GForm& f) {
  require_density_args(l, omega, f);
  const std::size_t m = l.dim();
  const std::vector<Poly> images = density_images(l, omega, f);
  const Rational parity = m % 2 ? -1 : 1;  // (-1)^m

  GForm dA(l.alg, Valence::dual, m, m - 1);
  for (std::size_t a = 0; a < l.gens(); ++a)
    for (std::size_t mu = 0; mu < m; ++mu) {
      const Poly part = l.body.partial(l.a_var(a, mu)).compose(images);
      if (part.is_zero()) continue;
      IndexTuple comp;
      for (std::size_t i = 0; i < m; ++i)
        if (i != mu) comp.push_back(i);
      // (-1)^{m-1} * i_mu vol = (-1)^{m-1} (-1)^mu dq^{complement}
      const Rational s = ((m - 1 + mu) % 2) ? -1 : 1;
      dA.comp(a).add(comp, part * s);
    }

  GForm dF(l.alg, Valence::dual, m, m - 2);
  for (std::size_t a = 0; a < l.gens(); ++a)
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::size_t nu = mu + 1; nu < m; ++nu) {
        const Poly part = l.body.partial(l.f_var(a, mu, nu)).compose(images);
        if (part.is_zero()) continue;
        IndexTuple comp;
        for (std::size_t i = 0; i < m; ++i)
          if (i != mu && i != nu) comp.push_back(i);
        // i_nu i_mu vol = sign(mu, nu, complement) dq^{complement}
        std::vector<std::size_t> perm{mu, nu};
        perm.insert(perm.end(), comp.begin(), comp.end());
        const int s = sort_sign(perm);
        dF.comp(a).add(comp, part * (parity * s));
      }
  return VerticalDiff{std::move(dA), std::move(dF)};
}

GForm legendre(const LagrangianDensity& l, const Connection& omega, const GForm& f) {
  const Rational parity = l.dim() % 2 ? -1 : 1;
  return vertical_diff(l, omega, f).dF * parity;
}

DynamicsResiduals dynamics_residuals(const LagrangianDensity& l, const Connection& omega,
                                     const GForm& p) {
  const std::size_t m = l.dim();
  if (p.valence() != Valence::dual || p.degree() != m - 2)
    throw std::invalid_argument("momentum must be a dual-valued (m-2)-form");
  const Curvature f = curvature(omega);
  const VerticalDiff v = vertical_diff(l, omega, f);
  const Rational sign = m % 2 ? -1 : 1;
  return DynamicsResiduals{p * sign - v.dF, cov_d_star(omega, p) - v.dA};
}

ScalarForm hamiltonian(const LagrangianDensity& l, const Connection& omega,
                       const GForm& f, const GForm& p) {
  if (p.valence() != Valence::dual || p.degree() != l.dim() - 2)
    throw std::invalid_argument("momentum must be a dual-valued (m-2)-form");
  return lagrangian_form(l, omega, f) - pair_forms(p, f);
}

LegendreStatus legendre_invertibility(const LagrangianDensity& l) {
  const std::size_t m = l.dim();
  const std::size_t nf = l.gens() * pairs_of(m);
  const std::size_t base = l.var_count() - nf;
  Mat hess(nf, std::vector<Rational>(nf, 0));
  for (std::size_t i = 0; i < nf; ++i) {
    const Poly di = l.body.partial(base + i);
    for (std::size_t j = 0; j < nf; ++j) {
      const Poly dij = di.partial(base + j);
      if (dij.is_zero()) continue;
      if (dij.total_degree() > 0) return LegendreStatus::not_checked;
      hess[i][j] = dij.terms().begin()->second;
    }
  }
  return mat_rank(hess) == nf ? LegendreStatus::invertible : LegendreStatus::degenerate;
}

}  // namespace gfc
