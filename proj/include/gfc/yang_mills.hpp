#pragma once

#include "gfc/triple.hpp"

namespace gfc {

// 1/2 K_ab F^a ^ *F^b as a top-degree form (direct exterior-algebra route).
ScalarForm ym_lagrangian(const GForm& f, const Metric& g);

// The same density as a formal polynomial in the curvature components:
// 1/2 K_ab sum_{mu<nu} g_mu g_nu F^a_{mu nu} F^b_{mu nu}.
LagrangianDensity ym_density(AlgebraPtr alg, Metric metric);

// On-shell momentum *K~F.
GForm ym_momentum(const Connection& a, const Metric& g);

// Generalized field equation residual D#_w (*K~F); zero iff on-shell.
GForm ym_residual(const Connection& a, const Metric& g);

// For an abelian algebra the residual collapses to K~(d*F), the Maxwell
// form (literally d*F when K is the identity). Throws on non-abelian input.
struct MaxwellCheck {
  GForm residual;  // D#-route
  GForm maxwell;   // K~(d*F)
  bool equal;
};
MaxwellCheck maxwell_check(const Connection& a, const Metric& g);

// Cross-check of the two derivation routes: the formal-polynomial route
// through vertical_diff/legendre/dynamics_residuals must reproduce the
// direct exterior-algebra momentum and residual exactly.
struct TripleConsistency {
  GForm momentum_triple;   // legendre(ym_density)
  GForm momentum_direct;   // *K~F
  GForm residual_triple;   // field residual at p = legendre
  GForm residual_direct;   // D#_w *K~F
  bool momentum_equal;
  bool momentum_residual_zero;  // res_momentum at p = legendre
  bool residual_equal;
  bool ok() const { return momentum_equal && momentum_residual_zero && residual_equal; }
};
TripleConsistency triple_consistency(const Connection& a, const Metric& g);

}  // namespace gfc
