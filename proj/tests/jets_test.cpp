#include <doctest.h>

#include "gfc/jets.hpp"
#include "gfc/rng.hpp"

using namespace gfc;

namespace {

JetPoint random_jet(Rng& rng, const AlgebraPtr& alg, std::size_t m) {
  const std::size_t n = alg->dim();
  JetPoint j{alg, m, rng.point(m), Grid<Rational>(n, std::vector<Rational>(m, 0)),
             Cube<Rational>(n, Grid<Rational>(m, std::vector<Rational>(m, 0)))};
  for (auto& row : j.A)
    for (auto& v : row) v = rng.rational();
  for (auto& grid : j.k)
    for (auto& row : grid)
      for (auto& v : row) v = rng.rational();
  return j;
}

}  // namespace

TEST_SUITE("jets") {

TEST_CASE("jet_of evaluates components and first partials") {
  const auto alg = LieAlgebra::so3();
  Connection a = zero_connection(alg, 2);
  a.comp(0).add({0}, parse_poly("x0^2*x1", 2));
  a.comp(1).add({1}, parse_poly("x1 - x0", 2));
  const JetPoint j = jet_of(a, {2, 3});
  CHECK(j.A[0][0] == Rational(12));
  CHECK(j.A[1][1] == Rational(1));
  CHECK(j.A[2][0] == Rational(0));
  // k[a][mu][lambda] = d_lambda A^a_mu
  CHECK(j.k[0][0][0] == Rational(12));  // d_0 (x0^2 x1) = 2 x0 x1
  CHECK(j.k[0][0][1] == Rational(4));   // d_1 (x0^2 x1) = x0^2
  CHECK(j.k[1][1][0] == Rational(-1));
  CHECK(j.k[1][1][1] == Rational(1));
}

TEST_CASE("gamma map adds the half bracket correction") {
  // constant connection A^1_0 = A^2_1 = 1 on so3: k = 0 and
  // K'^3_{01} = -1/2, K'^3_{10} = +1/2, everything else untouched
  const auto alg = LieAlgebra::so3();
  JetPoint j{alg, 2, {0, 0}, Grid<Rational>(3, std::vector<Rational>(2, 0)),
             Cube<Rational>(3, Grid<Rational>(2, std::vector<Rational>(2, 0)))};
  j.A[0][0] = 1;
  j.A[1][1] = 1;
  const JetPoint g = gamma_map(j);
  CHECK(g.k[2][0][1] == Rational(-1, 2));
  CHECK(g.k[2][1][0] == Rational(1, 2));
  CHECK(g.k[0][0][1] == Rational(0));
  CHECK(g.k[1][0][1] == Rational(0));
  CHECK(g.A == j.A);
}

TEST_CASE("split is exact and matches the curvature") {
  const auto alg = LieAlgebra::so3();
  Rng rng(79);
  for (const std::size_t m : {2u, 3u}) {
    for (int t = 0; t < 15; ++t) {
      const Connection a = rng.connection(alg, m, 2, 2);
      const auto x = rng.point(m);
      const JetPoint j = jet_of(a, x);
      const SplitJet s = split_jet(j);
      const Curvature f = curvature(a);
      for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t mu = 0; mu < m; ++mu)
          for (std::size_t nu = 0; nu < m; ++nu) {
            // S symmetric, F antisymmetric
            CHECK(s.S[g][mu][nu] == s.S[g][nu][mu]);
            CHECK(s.F[g][mu][nu] == -s.F[g][nu][mu]);
            if (mu < nu) CHECK(s.F[g][mu][nu] == f.comp(g).component({mu, nu}).eval(x));
          }
      const JetPoint back = reconstruct(s);
      CHECK(back.A == j.A);
      CHECK(back.k == j.k);
      CHECK(back.x == j.x);
    }
  }
}

TEST_CASE("random jets split and reconstruct") {
  const auto alg = LieAlgebra::so3();
  Rng rng(83);
  for (int t = 0; t < 20; ++t) {
    const JetPoint j = random_jet(rng, alg, 3);
    const JetPoint back = reconstruct(split_jet(j));
    CHECK(back.A == j.A);
    CHECK(back.k == j.k);
  }
}

TEST_CASE("claimed symmetric part fails for so3") {
  const auto alg = LieAlgebra::so3();
  // frozen witness: constant connection A^1_0 = A^2_1 = 1, k = 0
  JetPoint j{alg, 2, {0, 0}, Grid<Rational>(3, std::vector<Rational>(2, 0)),
             Cube<Rational>(3, Grid<Rational>(2, std::vector<Rational>(2, 0)))};
  j.A[0][0] = 1;
  j.A[1][1] = 1;
  const auto w = sardanashvily_check(j);
  REQUIRE(w.has_value());
  CHECK(w->generator == 3);
  CHECK(w->mu == 0);
  CHECK(w->lambda == 1);
  CHECK(w->value_ml == Rational(-1, 2));
  CHECK(w->value_lm == Rational(1, 2));

  // the zero jet is degenerate: no witness exists
  JetPoint z{alg, 2, {0, 0}, Grid<Rational>(3, std::vector<Rational>(2, 0)),
             Cube<Rational>(3, Grid<Rational>(2, std::vector<Rational>(2, 0)))};
  CHECK_FALSE(sardanashvily_check(z).has_value());

  // the claim is true for abelian algebras, so the check refuses them
  JetPoint ab{LieAlgebra::abelian(2), 2, {0, 0},
              Grid<Rational>(2, std::vector<Rational>(2, 0)),
              Cube<Rational>(2, Grid<Rational>(2, std::vector<Rational>(2, 0)))};
  CHECK_THROWS_AS(sardanashvily_check(ab), std::invalid_argument);
}

TEST_CASE("field phase maps swap the jet slots") {
  Rng rng(89);
  const std::size_t m = 2, n = 2;
  for (int t = 0; t < 10; ++t) {
    FieldJet j;
    j.m = m;
    j.n = n;
    j.q = rng.point(m);
    j.y.resize(n);
    for (auto& v : j.y) v = rng.rational();
    j.p.assign(n, std::vector<Rational>(m));
    j.yk.assign(n, std::vector<Rational>(m));
    j.ps.assign(n, Grid<Rational>(m, std::vector<Rational>(m)));
    for (auto& row : j.p)
      for (auto& v : row) v = rng.rational();
    for (auto& row : j.yk)
      for (auto& v : row) v = rng.rational();
    for (auto& g : j.ps)
      for (auto& row : g)
        for (auto& v : row) v = rng.rational();

    const FieldMapImage a = field_alpha(j);
    const FieldMapImage b = field_beta(j);
    CHECK(a.q == j.q);
    CHECK(a.y == j.y);
    CHECK(a.slot3 == j.yk);
    CHECK(a.slot5 == j.p);
    CHECK(b.slot3 == j.p);
    CHECK(b.slot5 == j.yk);
    CHECK(a.divergence == b.divergence);
    for (std::size_t d = 0; d < n; ++d) {
      Rational div = 0;
      for (std::size_t l = 0; l < m; ++l) div += j.ps[d][l][l];
      CHECK(a.divergence[d] == div);
    }
  }
  FieldJet bad;
  bad.m = 2;
  bad.n = 1;
  CHECK_THROWS_AS(field_alpha(bad), std::invalid_argument);
}

TEST_CASE("variable layout for first-order densities") {
  const std::size_t m = 2, n = 3;
  CHECK(field_var_count(m, n) == m + n + n * m);
  std::vector<bool> seen(field_var_count(m, n), false);
  for (std::size_t i = 0; i < m; ++i) seen[field_q_var(m, n, i)] = true;
  for (std::size_t a = 0; a < n; ++a) seen[field_y_var(m, n, a)] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < m; ++j) seen[field_v_var(m, n, a, j)] = true;
  for (bool b : seen) CHECK(b);
}

TEST_CASE("uniformly forced field is on shell") {
  // L = 1/2 v^2 + y on the line: equation y'' = 1, solved by y = q^2/2
  // with momentum p = y' = q
  const std::size_t m = 1, n = 1;
  Poly body(field_var_count(m, n));
  body.add_term({0, 0, 2}, Rational(1, 2));
  body.add_term({0, 1, 0}, 1);
  const std::vector<Poly> y = {parse_poly("x0^2", 1) * Rational(1, 2)};
  const Grid<Poly> p = {{parse_poly("x0", 1)}};
  const LagrangeResiduals r = lagrange_equations(body, m, n, y, p);
  CHECK(r.source[0].is_zero());
  CHECK(r.momentum[0][0].is_zero());

  // the linear section y = q misses the force: source residual -1
  const LagrangeResiduals off =
      lagrange_equations(body, m, n, {parse_poly("x0", 1)}, {{parse_poly("1", 1)}});
  CHECK(off.source[0] == Poly::constant(1, -1));
  CHECK(off.momentum[0][0].is_zero());
}

}  // TEST_SUITE
