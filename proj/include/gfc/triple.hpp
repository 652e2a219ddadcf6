#pragma once

#include "gfc/gauge.hpp"

namespace gfc {

// Polynomial Lagrangian density on the curvature-adapted first jet:
// body is a polynomial in chart coordinates q, connection components
// A^a_mu and curvature components F^a_{mu nu} (mu < nu), laid out in that
// order. The density stands for body * vol with vol = dq^0 ^ ... ^ dq^{m-1}.
struct LagrangianDensity {
  AlgebraPtr alg;
  Metric metric;
  Poly body;

  std::size_t dim() const { return metric.dim; }
  std::size_t gens() const { return alg->dim(); }

  std::size_t q_var(std::size_t i) const;
  std::size_t a_var(std::size_t a, std::size_t mu) const;
  std::size_t f_var(std::size_t a, std::size_t mu, std::size_t nu) const;  // mu < nu
  std::size_t var_count() const;

  // Identifier table for parsing bodies: x<i>, A<a>_<mu>, F<a>_<mu><nu>
  // with generator indices 1-based and coordinate indices 0-based.
  std::map<std::string, std::size_t> symbols() const;

  static LagrangianDensity make(AlgebraPtr alg, Metric metric, Poly body);
  static LagrangianDensity parse(AlgebraPtr alg, Metric metric, const std::string& body);
};

// Evaluates the density on (omega, F) as a top-degree form.
ScalarForm lagrangian_form(const LagrangianDensity& l, const Connection& omega,
                           const GForm& f);

// Tuple flowing through the reduced maps. Slot meaning depends on the map:
// alpha_bar fills (omega, F, D#_w p, (-1)^m p); applying r_bar yields
// (omega, (-1)^m p, D#_w p, -F).
struct Tuple4 {
  GForm s1, s2, s3, s4;
  bool operator==(const Tuple4& o) const {
    return s1 == o.s1 && s2 == o.s2 && s3 == o.s3 && s4 == o.s4;
  }
};

// Image of the Lagrangian-side map with named slots.
struct PhaseTuple {
  Connection omega;
  Curvature curv;     // F_omega
  GForm sigma;        // D#_omega p, degree m-1, dual
  GForm momentum;     // (-1)^m p, degree m-2, dual
  Tuple4 as_tuple() const { return {omega, curv, sigma, momentum}; }
};

// (omega, F_omega, j p) |-> (omega, F_omega, D#_omega p, (-1)^m p).
// p enters as a polynomial section; its jet is taken internally by d.
PhaseTuple alpha_bar(const Connection& omega, const GForm& p);

// (omega, F, b, X) |-> (omega, X, b, -F). Pure slot transposition; applying
// it twice flips the sign of the last two slots.
Tuple4 r_bar(const Tuple4& t);

// r_bar after alpha_bar: (omega, (-1)^m p, D#_omega p, -F_omega).
Tuple4 beta_bar(const Connection& omega, const GForm& p);

// The two slots of the vertical differential of the density at (omega, F),
// identified with dual-valued forms through interior products with vol:
//   dA = (-1)^{m-1} sum (dL/dA^a_mu) i_mu vol          (degree m-1)
//   dF = (-1)^m     sum (dL/dF^a_{mu nu}) i_nu i_mu vol (degree m-2)
// pinned by the pairing identities <dA, tau> = d/dt L(omega + t tau, F) and
// <(-1)^m dF, phi> = d/dt L(omega, F + t phi).
struct VerticalDiff {
  GForm dA;
  GForm dF;
};
VerticalDiff vertical_diff(const LagrangianDensity& l, const Connection& omega,
                           const GForm& f);

// On-shell momentum (-1)^m * dF slot; for the quadratic curvature density
// this is exactly hodge(k_sharp(F)).
GForm legendre(const LagrangianDensity& l, const Connection& omega, const GForm& f);

// res_momentum = (-1)^m p - dF slot, res_field = D#_omega p - dA slot,
// evaluated at F = curvature(omega). A candidate (omega, p) solves the
// field equations iff both vanish.
struct DynamicsResiduals {
  GForm momentum;  // degree m-2, dual
  GForm field;     // degree m-1, dual
};
DynamicsResiduals dynamics_residuals(const LagrangianDensity& l, const Connection& omega,
                                     const GForm& p);

// H(omega, F, p) = L(omega, F) - <p, F> as a top-degree form.
ScalarForm hamiltonian(const LagrangianDensity& l, const Connection& omega,
                       const GForm& f, const GForm& p);

// Exact invertibility of the momentum-curvature relation, decided for
// densities whose F-block Hessian is constant; otherwise not checked.
enum class LegendreStatus { invertible, degenerate, not_checked };
LegendreStatus legendre_invertibility(const LagrangianDensity& l);

}  // namespace gfc
