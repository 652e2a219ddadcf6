#pragma once

#include "gfc/forms.hpp"

namespace gfc {

// A connection in the trivial-bundle chart is an algebra-valued 1-form;
// curvature is the algebra-valued 2-form F = dA + 1/2 [A ^ A].
using Connection = GForm;
using Curvature = GForm;

Connection zero_connection(AlgebraPtr alg, std::size_t dim);

// Throws unless the form has degree 1 and algebra valence.
void require_connection(const GForm& a);

Curvature curvature(const Connection& a);

// Covariant derivative of an algebra-valued form:
// D_w z = dz + [w ^ z].
GForm cov_d(const Connection& w, const GForm& z);

// Covariant derivative of a dual-valued form:
// (D#_w xi)_a = d xi_a - c^c_{ba} w^b ^ xi_c.
// The sign is pinned by d<p,t> = <D#_w p, t> + (-1)^m <p, D_w t>.
GForm cov_d_star(const Connection& w, const GForm& xi);

// A |-> A + d(chi) for an abelian algebra; chi is an algebra-valued 0-form.
Connection gauge_shift_abelian(const Connection& a, const GForm& chi);

// Component rotation by a constant algebra automorphism; throws when r is
// not an automorphism of the structure constants.
Connection gauge_rotate_constant(const Connection& a, const Mat& r);

// Contragredient action on dual-valued forms: components transform by the
// inverse transpose, so pair_forms is preserved.
GForm rotate_dual(const GForm& xi, const Mat& r);

// D_w F_w; identically zero (Bianchi) when the algebra is valid.
GForm bianchi_residual(const Connection& a);

}  // namespace gfc
