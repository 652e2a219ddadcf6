#pragma once

#include <optional>

#include "gfc/gauge.hpp"

namespace gfc {

template <typename T>
using Grid = std::vector<std::vector<T>>;  // [a][mu]
template <typename T>
using Cube = std::vector<std::vector<std::vector<T>>>;  // [a][mu][lambda]

// First-jet data of a connection at a chart point. Index convention:
// k[a][mu][lambda] = d_lambda A^a_mu.
struct JetPoint {
  AlgebraPtr alg;
  std::size_t dim = 0;
  std::vector<Rational> x;
  Grid<Rational> A;
  Cube<Rational> k;
};

// Image of the jet under the curvature-adapted splitting: S symmetric,
// F antisymmetric with F[a][mu][lambda] = F(d_mu, d_lambda), matching the
// coefficient of dq^mu ^ dq^lambda (mu < lambda) of the curvature.
struct SplitJet {
  AlgebraPtr alg;
  std::size_t dim = 0;
  std::vector<Rational> x;
  Grid<Rational> A;
  Cube<Rational> S;
  Cube<Rational> F;
};

// Evaluates the connection components and their first partials at x.
JetPoint jet_of(const Connection& a, const std::vector<Rational>& x);

// Adapted-coordinate change K'^a_{mu lambda} = k^a_{mu lambda}
// + 1/2 c^a_{bc} A^b_lambda A^c_mu, returned in the k slot.
JetPoint gamma_map(const JetPoint& j);

// Symmetric/antisymmetric decomposition after gamma_map:
// S = sym(K'), F[a][mu][lambda] = K'[a][lambda][mu] - K'[a][mu][lambda].
SplitJet split_jet(const JetPoint& j);

// Exact inverse of split_jet.
JetPoint reconstruct(const SplitJet& s);

// Test of the claimed jet splitting with symmetric part
// 1/2 (k^a_{mu lambda} + k^a_{lambda mu} + c^a_{bc} A^b_lambda A^c_mu):
// for a non-abelian algebra that expression is not symmetric in
// (mu, lambda). Returns the first witness, or nothing when the jet is
// degenerate (all claimed values already symmetric, e.g. A = 0).
// Throws for abelian algebras, where the claim does hold.
struct SymmetryWitness {
  std::size_t generator;  // 1-based
  std::size_t mu, lambda;
  Rational value_ml, value_lm;  // claimed "symmetric" values, unequal
};
std::optional<SymmetryWitness> sardanashvily_check(const JetPoint& j);

// First-order field-theory phase jet over the trivial bundle
// R^m x R^n -> R^m: coordinates (q, y^a, p^j_b, y^c_k, p^l_{d m}) with
// ps[d][l][m] = p^l_{d m}.
struct FieldJet {
  std::size_t m = 0, n = 0;
  std::vector<Rational> q;
  std::vector<Rational> y;
  Grid<Rational> p;   // [b][j]
  Grid<Rational> yk;  // [c][k]
  Cube<Rational> ps;  // [d][l][mu]
};

// Shared image shape of the two phase maps; the maps fill slot3/slot5 in
// swapped order and agree on the divergence slot sum_l p^l_{d l}.
struct FieldMapImage {
  std::vector<Rational> q;
  std::vector<Rational> y;
  Grid<Rational> slot3;
  std::vector<Rational> divergence;
  Grid<Rational> slot5;
};

// (q, y, p, y_k, ps) |-> (q, y, y_k, sum_l ps[.][l][l], p).
FieldMapImage field_alpha(const FieldJet& j);
// (q, y, p, y_k, ps) |-> (q, y, p, sum_l ps[.][l][l], y_k).
FieldMapImage field_beta(const FieldJet& j);

// Variable layout for first-order Lagrangian densities L(q, y, y_j):
// chart q0..q{m-1}, then y^a, then velocities y^a_j (a-major).
std::size_t field_var_count(std::size_t m, std::size_t n);
std::size_t field_q_var(std::size_t m, std::size_t n, std::size_t i);
std::size_t field_y_var(std::size_t m, std::size_t n, std::size_t a);
std::size_t field_v_var(std::size_t m, std::size_t n, std::size_t a, std::size_t j);

// Residuals of the first-order field equations for candidate sections
// y^a(q) and momenta p^j_b(q):
//   source[b]       = sum_j d_j p^j_b - (dL/dy^b) o jet
//   momentum[b][j]  = p^j_b - (dL/dy^b_j) o jet
// Both vanish iff (y, p) solves the equations.
struct LagrangeResiduals {
  std::vector<Poly> source;
  Grid<Poly> momentum;
};
LagrangeResiduals lagrange_equations(const Poly& density, std::size_t m, std::size_t n,
                                     const std::vector<Poly>& y_sections,
                                     const Grid<Poly>& p_sections);

}  // namespace gfc
