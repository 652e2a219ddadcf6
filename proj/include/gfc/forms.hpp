#pragma once

#include <map>
#include <string>
#include <vector>

#include "gfc/lie_algebra.hpp"
#include "gfc/poly.hpp"

namespace gfc {

// Flat chart metric: diagonal with entries +-1, orientation dq0^...^dq{m-1}.
struct Metric {
  std::size_t dim = 0;
  std::vector<int> signs;  // each +1 or -1

  static Metric euclidean(std::size_t m);
  static Metric minkowski(std::size_t m);  // (-,+,+,...)
  // Space-separated signs, e.g. "- + + +".
  static Metric parse(const std::string& text);
  std::string str() const;
  bool operator==(const Metric& o) const = default;
};

// Strictly increasing coordinate indices in [0, dim).
using IndexTuple = std::vector<std::size_t>;

std::string tuple_str(const IndexTuple& t);  // "01", "" for the empty tuple

// Sorts v in place, returns the permutation sign, or 0 on a repeated index.
int sort_sign(std::vector<std::size_t>& v);

// Differential form on R^m with polynomial coefficients, stored on the
// strictly increasing index basis dq^I. Degrees above m are legal and
// necessarily zero (d of a top form, wedges past top degree).
class ScalarForm {
 public:
  ScalarForm(std::size_t dim = 0, std::size_t degree = 0) : dim_(dim), degree_(degree) {}

  static ScalarForm from_poly(std::size_t dim, const Poly& p);  // 0-form

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<IndexTuple, Poly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Adds c on the (not necessarily sorted) tuple, folding in the sort sign.
  // A repeated index contributes nothing.
  void add(IndexTuple tuple, const Poly& c);
  // Coefficient on a strictly increasing tuple (zero when absent).
  Poly component(const IndexTuple& tuple) const;
  // Antisymmetric extension: any index order, signs folded in.
  Poly component_signed(IndexTuple tuple) const;

  ScalarForm operator-() const;
  ScalarForm operator+(const ScalarForm& o) const;
  ScalarForm operator-(const ScalarForm& o) const;
  ScalarForm operator*(const Rational& c) const;
  ScalarForm operator*(const Poly& p) const;
  bool operator==(const ScalarForm& o) const;
  bool operator!=(const ScalarForm& o) const { return !(*this == o); }

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::map<IndexTuple, Poly> coeffs_;
};

ScalarForm wedge(const ScalarForm& a, const ScalarForm& b);
ScalarForm ext_d(const ScalarForm& a);
// Hodge star for the diagonal metric: *dq^I = s(I) dq^{I^c} with
// s(I) = (prod of metric signs over I) * sign(I, I^c as a permutation).
ScalarForm hodge(const ScalarForm& a, const Metric& g);

enum class Valence { algebra, dual };

// Lie-algebra-valued (or dual-valued) form: one ScalarForm per generator.
class GForm {
 public:
  GForm() = default;
  GForm(AlgebraPtr alg, Valence v, std::size_t dim, std::size_t degree);

  static GForm zero(AlgebraPtr alg, Valence v, std::size_t dim, std::size_t degree);

  const AlgebraPtr& algebra() const { return alg_; }
  Valence valence() const { return valence_; }
  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  std::size_t generators() const { return comps_.size(); }
  const ScalarForm& comp(std::size_t a) const { return comps_.at(a); }
  ScalarForm& comp(std::size_t a) { return comps_.at(a); }
  bool is_zero() const;

  GForm operator-() const;
  GForm operator+(const GForm& o) const;
  GForm operator-(const GForm& o) const;
  GForm operator*(const Rational& c) const;
  bool operator==(const GForm& o) const;
  bool operator!=(const GForm& o) const { return !(*this == o); }

 private:
  AlgebraPtr alg_;
  Valence valence_ = Valence::algebra;
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::vector<ScalarForm> comps_;
};

// Componentwise operations (valence preserved).
GForm ext_d(const GForm& a);
GForm hodge(const GForm& a, const Metric& g);

// [a ^ b]^e = c^e_{fg} a^f ^ b^g; both arguments algebra-valued over the
// same algebra. Satisfies [a^b] = -(-1)^{kl} [b^a] and the graded Jacobi
// identity inherited from the scalar one.
GForm graded_bracket(const GForm& a, const GForm& b);

// <p, t> = p_a ^ t^a for p dual-valued and t algebra-valued.
ScalarForm pair_forms(const GForm& p, const GForm& t);

// Index lowering (K~ F)_a = K_ab F^b; flips valence algebra -> dual.
GForm k_sharp(const GForm& f, const Mat& k);
GForm k_sharp(const GForm& f);  // uses the algebra's own pairing

// comps'_i = sum_j M[i][j] comps_j, valence unchanged. Used for constant
// automorphism action (algebra valence) and its contragredient (dual).
GForm apply_matrix(const GForm& a, const Mat& m);

}  // namespace gfc
