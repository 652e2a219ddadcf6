#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gfc/rational.hpp"

namespace gfc {

// Exponent vector, always of length num_vars (dense; zeros allowed).
using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic, descending: higher total degree first, then
// lexicographically larger exponent vector first (x0 before x1).
// Map iteration therefore starts at the leading term, which fixes the
// canonical printing order.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over the rationals. Invariants: no stored
// zero coefficients, every key has length num_vars, the zero polynomial is
// the empty map. Value semantics; all operations return new values.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDesc>;

  explicit Poly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Poly constant(std::size_t num_vars, const Rational& c);
  static Poly variable(std::size_t num_vars, std::size_t index);
  static Poly monomial(std::size_t num_vars, const Monomial& exps,
                       const Rational& c);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree of the leading term; -1 for the zero polynomial.
  long total_degree() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly pow(std::uint32_t k) const;

  bool operator==(const Poly& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly partial(std::size_t axis) const;
  Rational eval(const std::vector<Rational>& point) const;
  // Substitutes images[i] for variable i; images must agree on a common
  // variable count, which becomes the result's.
  Poly compose(const std::vector<Poly>& images) const;

  std::string to_string() const;

  void add_term(const Monomial& exps, const Rational& c);

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// Grammar: variables x0..x{num_vars-1}, integer and a/b rational literals,
// + - * ^ (^ tightest, then *, then + -), parentheses, unary minus,
// whitespace insignificant. '/' is not an operator; it only occurs inside a
// rational literal. Throws ParseError with a byte offset.
Poly parse_poly(const std::string& text, std::size_t num_vars);

// Same grammar with an explicit identifier table (used for Lagrangian bodies
// whose indeterminates are field components, not just chart coordinates).
Poly parse_poly(const std::string& text,
                const std::map<std::string, std::size_t>& symbols,
                std::size_t num_vars);

}  // namespace gfc
