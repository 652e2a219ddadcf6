#include "gfc/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace gfc {

Mat mat_identity(std::size_t n) {
  Mat m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  Mat r(n, std::vector<Rational>(p, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t j = 0; j < p; ++j) {
      Rational acc = 0;
      for (std::size_t t = 0; t < k; ++t) acc += a[i][t] * b[t][j];
      r[i][j] = acc;
    }
  }
  return r;
}

Mat mat_transpose(const Mat& a) {
  const std::size_t n = a.size(), m = n ? a[0].size() : 0;
  Mat r(m, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
  return r;
}

namespace {

// Fraction-free forward elimination; returns (det, rank, echelon form).
struct Elim {
  Rational det;
  std::size_t rank;
  Mat rows;
};

Elim eliminate(Mat a) {
  const std::size_t n = a.size(), m = n ? a[0].size() : 0;
  Rational det = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) {
      det = 0;
      continue;
    }
    if (piv != rank) {
      std::swap(a[piv], a[rank]);
      det = -det;
    }
    det *= a[rank][col];
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (is_zero(a[r][col])) continue;
      const Rational f = a[r][col] / a[rank][col];
      for (std::size_t j = col; j < m; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  if (rank < n) det = 0;
  return {det, rank, std::move(a)};
}

}  // namespace

Rational mat_det(const Mat& a) { return eliminate(a).det; }

std::size_t mat_rank(Mat a) { return eliminate(std::move(a)).rank; }

Mat mat_inverse(const Mat& a) {
  const std::size_t n = a.size();
  Mat aug(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("matrix not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(aug[piv][col])) ++piv;
    if (piv == n) throw std::invalid_argument("matrix is singular");
    std::swap(aug[piv], aug[col]);
    const Rational d = aug[col][col];
    for (std::size_t j = 0; j < 2 * n; ++j) aug[col][j] /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(aug[r][col])) continue;
      const Rational f = aug[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  Mat inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::string Violation::format() const {
  std::ostringstream os;
  os << rule;
  if (!indices.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
    os << ")";
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Rational> structure, Mat pairing)
    : dim_(dim), structure_(std::move(structure)), pairing_(std::move(pairing)) {
  if (structure_.size() != dim_ * dim_ * dim_)
    throw std::invalid_argument("structure constant tensor has wrong size");
  if (pairing_.size() != dim_)
    throw std::invalid_argument("pairing matrix has wrong size");
  for (const auto& row : pairing_)
    if (row.size() != dim_) throw std::invalid_argument("pairing matrix not square");
}

std::shared_ptr<const LieAlgebra> LieAlgebra::abelian(std::size_t k) {
  return std::make_shared<LieAlgebra>(k, std::vector<Rational>(k * k * k, 0),
                                      mat_identity(k));
}

namespace {

int epsilon3(std::size_t a, std::size_t b, std::size_t c) {
  if (a == b || b == c || a == c) return 0;
  // parity of the permutation (a b c) of (0 1 2)
  int inv = 0;
  const std::size_t p[3] = {a, b, c};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

std::shared_ptr<const LieAlgebra> LieAlgebra::so3() {
  std::vector<Rational> c(27, 0);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t d = 0; d < 3; ++d) c[(a * 3 + b) * 3 + d] = epsilon3(a, b, d);
  return std::make_shared<LieAlgebra>(3, std::move(c), mat_identity(3));
}

std::shared_ptr<const LieAlgebra> LieAlgebra::builtin(const std::string& name) {
  if (name == "so3") return so3();
  if (name.rfind("abelian(", 0) == 0 && name.back() == ')') {
    const std::string arg = name.substr(8, name.size() - 9);
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad abelian dimension: " + name);
    const unsigned long k = std::stoul(arg);
    if (k == 0 || k > 64) throw std::invalid_argument("bad abelian dimension: " + name);
    return abelian(k);
  }
  throw std::invalid_argument("unknown builtin algebra: " + name);
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : structure_)
    if (!is_zero(v)) return false;
  return true;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket argument dimension mismatch");
  std::vector<Rational> z(dim_, 0);
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b) {
      if (is_zero(x[b])) continue;
      for (std::size_t cc = 0; cc < dim_; ++cc) z[a] += c(a, b, cc) * x[b] * y[cc];
    }
  return z;
}

std::vector<Rational> LieAlgebra::coad(const std::vector<Rational>& x,
                                       const std::vector<Rational>& xi) const {
  if (x.size() != dim_ || xi.size() != dim_)
    throw std::invalid_argument("coad argument dimension mismatch");
  std::vector<Rational> out(dim_, 0);
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b)
      for (std::size_t cc = 0; cc < dim_; ++cc) out[a] -= c(cc, b, a) * x[b] * xi[cc];
  return out;
}

std::vector<Violation> LieAlgebra::validate() const {
  std::vector<Violation> out;
  const std::size_t n = dim_;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) {
        const Rational sum = c(a, b, d) + c(a, d, b);
        if (!is_zero(sum))
          out.push_back({"antisymmetry c^a_{bc} + c^a_{cb} = 0",
                         {a + 1, b + 1, d + 1},
                         "sum = " + to_string(sum)});
      }
  // c^e_{ad} c^d_{bc} + c^e_{bd} c^d_{ca} + c^e_{cd} c^d_{ab} = 0
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t cc = 0; cc < n; ++cc) {
          Rational sum = 0;
          for (std::size_t d = 0; d < n; ++d)
            sum += c(e, a, d) * c(d, b, cc) + c(e, b, d) * c(d, cc, a) +
                   c(e, cc, d) * c(d, a, b);
          if (!is_zero(sum))
            out.push_back({"Jacobi identity",
                           {e + 1, a + 1, b + 1, cc + 1},
                           "cyclic sum = " + to_string(sum)});
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pairing_[i][j] != pairing_[j][i])
        out.push_back({"pairing symmetry", {i + 1, j + 1}, ""});
  if (is_zero(mat_det(pairing_)))
    out.push_back({"pairing nondegeneracy", {}, "det K = 0"});
  // K([e_a, e_b], e_c) + K(e_b, [e_a, e_c]) = 0
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        Rational sum = 0;
        for (std::size_t d = 0; d < n; ++d)
          sum += c(d, a, b) * pairing_[d][cc] + c(d, a, cc) * pairing_[b][d];
        if (!is_zero(sum))
          out.push_back({"pairing ad-invariance",
                         {a + 1, b + 1, cc + 1},
                         "defect = " + to_string(sum)});
      }
  return out;
}

bool LieAlgebra::is_automorphism(const Mat& r) const {
  if (r.size() != dim_) return false;
  for (std::size_t b = 0; b < dim_; ++b)
    for (std::size_t cc = 0; cc < dim_; ++cc)
      for (std::size_t a = 0; a < dim_; ++a) {
        Rational lhs = 0;  // [R e_b, R e_c]^a
        for (std::size_t e = 0; e < dim_; ++e)
          for (std::size_t f = 0; f < dim_; ++f) lhs += c(a, e, f) * r[e][b] * r[f][cc];
        Rational rhs = 0;  // (R [e_b, e_c])^a
        for (std::size_t d = 0; d < dim_; ++d) rhs += r[a][d] * c(d, b, cc);
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace gfc
