#include "gfc/rng.hpp"

namespace gfc {

Rational Rng::rational(long max_abs_num, long max_den) {
  const long num = int_in(-max_abs_num, max_abs_num);
  const long den = int_in(1, max_den);
  return Rational(num, den);
}

Rational Rng::nonzero_rational(long max_abs_num, long max_den) {
  for (;;) {
    Rational r = rational(max_abs_num, max_den);
    if (!is_zero(r)) return r;
  }
}

Poly Rng::poly(std::size_t num_vars, std::uint32_t max_degree, std::size_t max_terms) {
  Poly p(num_vars);
  const std::size_t terms = next(max_terms + 1);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial e(num_vars, 0);
    std::uint32_t budget = static_cast<std::uint32_t>(next(max_degree + 1));
    while (budget && num_vars) {
      e[next(num_vars)] += 1;
      --budget;
    }
    p.add_term(e, rational());
  }
  return p;
}

ScalarForm Rng::scalar_form(std::size_t dim, std::size_t degree, std::uint32_t max_degree,
                            std::size_t max_terms_per_component) {
  ScalarForm f(dim, degree);
  if (degree > dim) return f;
  // iterate all strictly increasing tuples, fill each with a random poly
  IndexTuple t(degree);
  for (std::size_t i = 0; i < degree; ++i) t[i] = i;
  for (;;) {
    f.add(t, poly(dim, max_degree, max_terms_per_component));
    // next combination
    std::size_t i = degree;
    while (i > 0) {
      --i;
      if (t[i] + (degree - i) < dim) {
        ++t[i];
        for (std::size_t j = i + 1; j < degree; ++j) t[j] = t[j - 1] + 1;
        break;
      }
      if (i == 0) return f;
    }
    if (degree == 0) return f;
  }
}

GForm Rng::gform(const AlgebraPtr& alg, Valence v, std::size_t dim, std::size_t degree,
                 std::uint32_t max_degree, std::size_t max_terms_per_component) {
  GForm g(alg, v, dim, degree);
  for (std::size_t a = 0; a < g.generators(); ++a)
    g.comp(a) = scalar_form(dim, degree, max_degree, max_terms_per_component);
  return g;
}

Connection Rng::connection(const AlgebraPtr& alg, std::size_t dim, std::uint32_t max_degree,
                           std::size_t max_terms_per_component) {
  return gform(alg, Valence::algebra, dim, 1, max_degree, max_terms_per_component);
}

std::vector<Rational> Rng::point(std::size_t dim, long max_abs) {
  std::vector<Rational> x(dim);
  for (auto& v : x) v = Rational(int_in(-max_abs, max_abs));
  return x;
}

}  // namespace gfc
