#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gfc/rational.hpp"

namespace gfc {

using Mat = std::vector<std::vector<Rational>>;

Mat mat_identity(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
Rational mat_det(const Mat& a);
// Throws std::invalid_argument on a singular matrix.
Mat mat_inverse(const Mat& a);
std::size_t mat_rank(Mat a);

// One failed structural identity, reported with the generator indices
// (1-based, matching the e1..en labels used everywhere in output).
struct Violation {
  std::string rule;
  std::vector<std::size_t> indices;
  std::string detail;
  std::string format() const;
};

// Finite-dimensional real Lie algebra given by structure constants in a
// fixed basis e1..en: [e_b, e_c] = c^a_{bc} e_a, plus a symmetric pairing K
// used to lower indices. Construction does not validate; `validate` reports
// every violated identity so corrupted inputs stay representable.
class LieAlgebra {
 public:
  LieAlgebra(std::size_t dim, std::vector<Rational> structure, Mat pairing);

  static std::shared_ptr<const LieAlgebra> abelian(std::size_t k);
  static std::shared_ptr<const LieAlgebra> so3();
  // "abelian(k)" or "so3".
  static std::shared_ptr<const LieAlgebra> builtin(const std::string& name);

  std::size_t dim() const { return dim_; }
  const Mat& pairing() const { return pairing_; }
  // c^a_{bc}, all indices 0-based.
  const Rational& c(std::size_t a, std::size_t b, std::size_t c_) const {
    return structure_[(a * dim_ + b) * dim_ + c_];
  }
  bool is_abelian() const;

  // [X, Y]^a = c^a_{bc} X^b Y^c.
  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;
  // (coad(X) xi)_a = -c^c_{ba} X^b xi_c; satisfies
  // <coad(X) xi, Y> = -<xi, [X, Y]>.
  std::vector<Rational> coad(const std::vector<Rational>& x,
                             const std::vector<Rational>& xi) const;

  // Antisymmetry, Jacobi, K symmetric, K nondegenerate, K ad-invariant.
  std::vector<Violation> validate() const;

  // True when R (n x n) satisfies [R e_b, R e_c] = R [e_b, e_c] for all b, c.
  bool is_automorphism(const Mat& r) const;

  bool operator==(const LieAlgebra& o) const {
    return dim_ == o.dim_ && structure_ == o.structure_ && pairing_ == o.pairing_;
  }

 private:
  std::size_t dim_;
  std::vector<Rational> structure_;  // dense n^3, index (a*n + b)*n + c
  Mat pairing_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

}  // namespace gfc
