#include "gfc/gauge.hpp"

#include <stdexcept>

namespace gfc {

Connection zero_connection(AlgebraPtr alg, std::size_t dim) {
  return GForm::zero(std::move(alg), Valence::algebra, dim, 1);
}

void require_connection(const GForm& a) {
  if (a.degree() != 1 || a.valence() != Valence::algebra)
    throw std::invalid_argument("connection must be an algebra-valued 1-form");
}

Curvature curvature(const Connection& a) {
  require_connection(a);
  return ext_d(a) + graded_bracket(a, a) * Rational(1, 2);
}

GForm cov_d(const Connection& w, const GForm& z) {
  require_connection(w);
  if (z.valence() != Valence::algebra)
    throw std::invalid_argument("cov_d needs algebra valence");
  return ext_d(z) + graded_bracket(w, z);
}

GForm cov_d_star(const Connection& w, const GForm& xi) {
  require_connection(w);
  if (xi.valence() != Valence::dual)
    throw std::invalid_argument("cov_d_star needs dual valence");
  if (!(*w.algebra() == *xi.algebra())) throw std::invalid_argument("algebra mismatch");
  if (w.dim() != xi.dim()) throw std::invalid_argument("chart dimension mismatch");
  const auto& alg = *w.algebra();
  GForm r = ext_d(xi);
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    ScalarForm acc(w.dim(), xi.degree() + 1);
    for (std::size_t b = 0; b < alg.dim(); ++b)
      for (std::size_t c = 0; c < alg.dim(); ++c) {
        const Rational& s = alg.c(c, b, a);
        if (is_zero(s)) continue;
        acc = acc + wedge(w.comp(b), xi.comp(c)) * s;
      }
    r.comp(a) = r.comp(a) - acc;
  }
  return r;
}

Connection gauge_shift_abelian(const Connection& a, const GForm& chi) {
  require_connection(a);
  if (!a.algebra()->is_abelian())
    throw std::invalid_argument("gauge shift by a 0-form is abelian-only");
  if (chi.degree() != 0 || chi.valence() != Valence::algebra)
    throw std::invalid_argument("gauge parameter must be an algebra-valued 0-form");
  return a + ext_d(chi);
}

Connection gauge_rotate_constant(const Connection& a, const Mat& r) {
  require_connection(a);
  if (!a.algebra()->is_automorphism(r))
    throw std::invalid_argument("matrix is not an automorphism of the algebra");
  return apply_matrix(a, r);
}

GForm rotate_dual(const GForm& xi, const Mat& r) {
  if (xi.valence() != Valence::dual)
    throw std::invalid_argument("rotate_dual needs dual valence");
  return apply_matrix(xi, mat_transpose(mat_inverse(r)));
}

GForm bianchi_residual(const Connection& a) { return cov_d(a, curvature(a)); }

}  // namespace gfc
