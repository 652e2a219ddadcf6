#include "gfc/jets.hpp"

#include <stdexcept>

namespace gfc {

namespace {

Cube<Rational> zero_cube(std::size_t n, std::size_t m) {
  return Cube<Rational>(n, Grid<Rational>(m, std::vector<Rational>(m, 0)));
}

void require_jet_shape(const JetPoint& j) {
  if (!j.alg) throw std::invalid_argument("jet without algebra");
  const std::size_t n = j.alg->dim(), m = j.dim;
  if (j.x.size() != m || j.A.size() != n || j.k.size() != n)
    throw std::invalid_argument("jet shape mismatch");
  for (const auto& row : j.A)
    if (row.size() != m) throw std::invalid_argument("jet shape mismatch");
  for (const auto& grid : j.k) {
    if (grid.size() != m) throw std::invalid_argument("jet shape mismatch");
    for (const auto& row : grid)
      if (row.size() != m) throw std::invalid_argument("jet shape mismatch");
  }
}

}  // namespace

JetPoint jet_of(const Connection& a, const std::vector<Rational>& x) {
  require_connection(a);
  const std::size_t n = a.generators(), m = a.dim();
  if (x.size() != m) throw std::invalid_argument("point dimension mismatch");
  JetPoint j{a.algebra(), m, x, Grid<Rational>(n, std::vector<Rational>(m, 0)),
             zero_cube(n, m)};
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t mu = 0; mu < m; ++mu) {
      const Poly comp = a.comp(g).component({mu});
      j.A[g][mu] = comp.eval(x);
      for (std::size_t lam = 0; lam < m; ++lam) j.k[g][mu][lam] = comp.partial(lam).eval(x);
    }
  }
  return j;
}

JetPoint gamma_map(const JetPoint& j) {
  require_jet_shape(j);
  const auto& alg = *j.alg;
  const std::size_t n = alg.dim(), m = j.dim;
  JetPoint out = j;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::size_t lam = 0; lam < m; ++lam) {
        Rational corr = 0;
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            corr += alg.c(a, b, c) * j.A[b][lam] * j.A[c][mu];
        out.k[a][mu][lam] = j.k[a][mu][lam] + corr / 2;
      }
  return out;
}

SplitJet split_jet(const JetPoint& j) {
  const JetPoint adapted = gamma_map(j);
  const std::size_t n = j.alg->dim(), m = j.dim;
  SplitJet s{j.alg, m, j.x, j.A, zero_cube(n, m), zero_cube(n, m)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::size_t lam = 0; lam < m; ++lam) {
        const Rational& kml = adapted.k[a][mu][lam];
        const Rational& klm = adapted.k[a][lam][mu];
        s.S[a][mu][lam] = (kml + klm) / 2;
        s.F[a][mu][lam] = klm - kml;
      }
  return s;
}

JetPoint reconstruct(const SplitJet& s) {
  if (!s.alg) throw std::invalid_argument("split jet without algebra");
  const auto& alg = *s.alg;
  const std::size_t n = alg.dim(), m = s.dim;
  JetPoint j{s.alg, m, s.x, s.A, zero_cube(n, m)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::size_t lam = 0; lam < m; ++lam) {
        // invert the symmetric/antisymmetric split of K'
        const Rational kprime = s.S[a][mu][lam] + s.F[a][lam][mu] / 2;
        Rational corr = 0;
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            corr += alg.c(a, b, c) * s.A[b][lam] * s.A[c][mu];
        j.k[a][mu][lam] = kprime - corr / 2;
      }
  return j;
}

std::optional<SymmetryWitness> sardanashvily_check(const JetPoint& j) {
  require_jet_shape(j);
  const auto& alg = *j.alg;
  if (alg.is_abelian())
    throw std::invalid_argument(
        "symmetry holds for abelian algebras; the check needs a non-abelian one");
  const std::size_t n = alg.dim(), m = j.dim;
  // claimed symmetric part 1/2 (k^a_{mu lam} + k^a_{lam mu} + c^a_{bc} A^b_lam A^c_mu)
  const auto claimed = [&](std::size_t a, std::size_t mu, std::size_t lam) -> Rational {
    Rational corr = 0;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) corr += alg.c(a, b, c) * j.A[b][lam] * j.A[c][mu];
    return (j.k[a][mu][lam] + j.k[a][lam][mu] + corr) / 2;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::size_t lam = mu + 1; lam < m; ++lam) {
        const Rational ml = claimed(a, mu, lam);
        const Rational lm = claimed(a, lam, mu);
        if (ml != lm) return SymmetryWitness{a + 1, mu, lam, ml, lm};
      }
  return std::nullopt;
}

FieldMapImage field_alpha(const FieldJet& j) {
  if (j.q.size() != j.m || j.y.size() != j.n || j.p.size() != j.n ||
      j.yk.size() != j.n || j.ps.size() != j.n)
    throw std::invalid_argument("field jet shape mismatch");
  for (std::size_t d = 0; d < j.n; ++d) {
    if (j.p[d].size() != j.m || j.yk[d].size() != j.m || j.ps[d].size() != j.m)
      throw std::invalid_argument("field jet shape mismatch");
    for (const auto& row : j.ps[d])
      if (row.size() != j.m) throw std::invalid_argument("field jet shape mismatch");
  }
  FieldMapImage out{j.q, j.y, j.yk, std::vector<Rational>(j.n, 0), j.p};
  for (std::size_t d = 0; d < j.n; ++d)
    for (std::size_t l = 0; l < j.m; ++l) out.divergence[d] += j.ps[d][l][l];
  return out;
}

FieldMapImage field_beta(const FieldJet& j) {
  FieldMapImage out = field_alpha(j);
  std::swap(out.slot3, out.slot5);
  return out;
}

std::size_t field_var_count(std::size_t m, std::size_t n) { return m + n + n * m; }
std::size_t field_q_var(std::size_t, std::size_t, std::size_t i) { return i; }
std::size_t field_y_var(std::size_t m, std::size_t, std::size_t a) { return m + a; }
std::size_t field_v_var(std::size_t m, std::size_t n, std::size_t a, std::size_t j) {
  return m + n + a * m + j;
}

LagrangeResiduals lagrange_equations(const Poly& density, std::size_t m, std::size_t n,
                                     const std::vector<Poly>& y_sections,
                                     const Grid<Poly>& p_sections) {
  if (density.num_vars() != field_var_count(m, n))
    throw std::invalid_argument("density variable count mismatch");
  if (y_sections.size() != n || p_sections.size() != n)
    throw std::invalid_argument("section count mismatch");
  for (const auto& y : y_sections)
    if (y.num_vars() != m) throw std::invalid_argument("section variable count mismatch");
  for (const auto& row : p_sections) {
    if (row.size() != m) throw std::invalid_argument("momentum shape mismatch");
    for (const auto& p : row)
      if (p.num_vars() != m) throw std::invalid_argument("momentum variable count mismatch");
  }
  // jet prolongation of the candidate sections, as substitution images
  std::vector<Poly> images(field_var_count(m, n), Poly(m));
  for (std::size_t i = 0; i < m; ++i) images[field_q_var(m, n, i)] = Poly::variable(m, i);
  for (std::size_t a = 0; a < n; ++a) {
    images[field_y_var(m, n, a)] = y_sections[a];
    for (std::size_t j = 0; j < m; ++j)
      images[field_v_var(m, n, a, j)] = y_sections[a].partial(j);
  }
  LagrangeResiduals res;
  res.source.reserve(n);
  res.momentum.assign(n, std::vector<Poly>(m, Poly(m)));
  for (std::size_t b = 0; b < n; ++b) {
    Poly div(m);
    for (std::size_t j = 0; j < m; ++j) div = div + p_sections[b][j].partial(j);
    res.source.push_back(div - density.partial(field_y_var(m, n, b)).compose(images));
    for (std::size_t j = 0; j < m; ++j)
      res.momentum[b][j] =
          p_sections[b][j] - density.partial(field_v_var(m, n, b, j)).compose(images);
  }
  return res;
}

}  // namespace gfc
