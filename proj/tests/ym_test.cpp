#include <doctest.h>

#include "gfc/rng.hpp"
#include "gfc/yang_mills.hpp"

using namespace gfc;

namespace {

const Mat kRot345 = {{Rational(3, 5), Rational(-4, 5), 0},
                     {Rational(4, 5), Rational(3, 5), 0},
                     {0, 0, 1}};

Connection coulomb_like() {
  // A = x1^2 dq0 on minkowski R^4, a static field with uniform source
  Connection a = zero_connection(LieAlgebra::abelian(1), 4);
  a.comp(0).add({0}, parse_poly("x1^2", 4));
  return a;
}

Connection plane_wave(const Poly& profile) {
  // A = f(x0 - x1) dq2; pass f already composed in the chart variables
  Connection a = zero_connection(LieAlgebra::abelian(1), 4);
  a.comp(0).add({2}, profile);
  return a;
}

}  // namespace

TEST_SUITE("ym") {

TEST_CASE("frozen static example") {
  const Metric g = Metric::minkowski(4);
  const Connection a = coulomb_like();
  const Curvature f = curvature(a);

  const ScalarForm density = ym_lagrangian(f, g);
  CHECK(density.component({0, 1, 2, 3}) == parse_poly("-2*x1^2", 4));

  const GForm p = ym_momentum(a, g);
  CHECK(p.comp(0).component({2, 3}) == parse_poly("2*x1", 4));
  CHECK(p.comp(0).coeffs().size() == 1);

  const GForm r = ym_residual(a, g);
  CHECK(r.comp(0).component({1, 2, 3}) == Poly::constant(4, 2));
  CHECK(r.comp(0).coeffs().size() == 1);
  CHECK_FALSE(r.is_zero());
}

TEST_CASE("polynomial plane waves are on shell") {
  const Metric g = Metric::minkowski(4);
  const Poly u = parse_poly("x0 - x1", 4);
  for (const Poly& profile : {u, u * u, u * u * u, u * u * u * u}) {
    CHECK(ym_residual(plane_wave(profile), g).is_zero());
  }
  // fails off the light cone: the same profile along x0 alone has a source
  Connection bad = zero_connection(LieAlgebra::abelian(1), 4);
  bad.comp(0).add({2}, parse_poly("x0^2", 4));
  CHECK_FALSE(ym_residual(bad, g).is_zero());
}

TEST_CASE("density polynomial matches the exterior route") {
  Rng rng(131);
  for (const std::size_t m : {2u, 3u, 4u}) {
    for (const bool mink : {false, true}) {
      const Metric g = mink ? Metric::minkowski(m) : Metric::euclidean(m);
      for (const auto& alg : {LieAlgebra::so3(), LieAlgebra::abelian(2)}) {
        const LagrangianDensity l = ym_density(alg, g);
        const Connection a = rng.connection(alg, m, 2, 2);
        const Curvature f = curvature(a);
        CHECK(lagrangian_form(l, a, f) == ym_lagrangian(f, g));
      }
    }
  }
}

TEST_CASE("triple route agrees with the direct route") {
  Rng rng(137);
  for (const std::size_t m : {2u, 3u, 4u}) {
    const Metric g = m == 4 ? Metric::minkowski(m) : Metric::euclidean(m);
    const Connection a = rng.connection(LieAlgebra::so3(), m, 2, 2);
    const TripleConsistency tc = triple_consistency(a, g);
    CHECK(tc.momentum_equal);
    CHECK(tc.momentum_residual_zero);
    CHECK(tc.residual_equal);
    CHECK(tc.ok());
    CHECK(tc.momentum_direct == ym_momentum(a, g));
    CHECK(tc.residual_direct == ym_residual(a, g));
  }
}

TEST_CASE("abelian residual is the maxwell form") {
  Rng rng(139);
  for (const std::size_t m : {3u, 4u}) {
    const Metric g = Metric::minkowski(m);
    for (int t = 0; t < 5; ++t) {
      const Connection a = rng.connection(LieAlgebra::abelian(2), m, 3, 3);
      const MaxwellCheck mc = maxwell_check(a, g);
      CHECK(mc.equal);
      CHECK(mc.residual == mc.maxwell);
      CHECK(mc.residual == ym_residual(a, g));
      // with the identity pairing this is literally d*F
      CHECK(mc.maxwell == k_sharp(ext_d(hodge(curvature(a), g))));
    }
  }
  CHECK_THROWS_AS(maxwell_check(zero_connection(LieAlgebra::so3(), 3),
                                Metric::euclidean(3)),
                  std::invalid_argument);
}

TEST_CASE("rotation equivariance of the field equation") {
  const auto alg = LieAlgebra::so3();
  const Metric g = Metric::euclidean(3);
  Rng rng(149);
  for (int t = 0; t < 5; ++t) {
    const Connection a = rng.connection(alg, 3, 2, 2);
    const Connection ra = gauge_rotate_constant(a, kRot345);
    CHECK(curvature(ra) == apply_matrix(curvature(a), kRot345));
    CHECK(ym_residual(ra, g) == rotate_dual(ym_residual(a, g), kRot345));
    CHECK(ym_lagrangian(curvature(ra), g) == ym_lagrangian(curvature(a), g));
  }
}

TEST_CASE("abelian shifts leave the reports unchanged") {
  const auto alg = LieAlgebra::abelian(1);
  const Metric g = Metric::minkowski(4);
  Rng rng(151);
  for (int t = 0; t < 5; ++t) {
    const Connection a = rng.connection(alg, 4, 2, 2);
    const GForm chi = rng.gform(alg, Valence::algebra, 4, 0, 3, 2);
    const Connection shifted = gauge_shift_abelian(a, chi);
    CHECK(curvature(shifted) == curvature(a));
    CHECK(ym_momentum(shifted, g) == ym_momentum(a, g));
    CHECK(ym_residual(shifted, g) == ym_residual(a, g));
  }
}

TEST_CASE("vacuum") {
  const Metric g = Metric::minkowski(4);
  const Connection a = zero_connection(LieAlgebra::abelian(1), 4);
  CHECK(ym_lagrangian(curvature(a), g).is_zero());
  CHECK(ym_momentum(a, g).is_zero());
  CHECK(ym_residual(a, g).is_zero());
  CHECK(triple_consistency(a, g).ok());
}

}  // TEST_SUITE
