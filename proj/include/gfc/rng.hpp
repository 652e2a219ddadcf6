#pragma once

#include <cstdint>
#include <random>

#include "gfc/forms.hpp"
#include "gfc/gauge.hpp"

namespace gfc {

// Deterministic generator for randomized exact checks. mt19937_64 output is
// fixed by the standard; the bounded sampler below avoids the
// implementation-defined std::uniform_int_distribution so seeded runs are
// byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next(std::uint64_t bound) { return bound ? eng_() % bound : 0; }
  long int_in(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Small exact rationals, denominators in [1, max_den].
  Rational rational(long max_abs_num = 4, long max_den = 3);
  Rational nonzero_rational(long max_abs_num = 4, long max_den = 3);

  // Sparse polynomial with at most max_terms monomials of total degree
  // <= max_degree (possibly zero).
  Poly poly(std::size_t num_vars, std::uint32_t max_degree, std::size_t max_terms);

  ScalarForm scalar_form(std::size_t dim, std::size_t degree, std::uint32_t max_degree,
                         std::size_t max_terms_per_component);
  GForm gform(const AlgebraPtr& alg, Valence v, std::size_t dim, std::size_t degree,
              std::uint32_t max_degree, std::size_t max_terms_per_component);
  Connection connection(const AlgebraPtr& alg, std::size_t dim, std::uint32_t max_degree,
                        std::size_t max_terms_per_component);
  std::vector<Rational> point(std::size_t dim, long max_abs = 3);

 private:
  std::mt19937_64 eng_;
};

}  // namespace gfc
