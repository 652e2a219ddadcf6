#include "gfc/forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gfc {

Metric Metric::euclidean(std::size_t m) { return {m, std::vector<int>(m, 1)}; }

Metric Metric::minkowski(std::size_t m) {
  Metric g{m, std::vector<int>(m, 1)};
  if (m == 0) throw std::invalid_argument("empty metric");
  g.signs[0] = -1;
  return g;
}

Metric Metric::parse(const std::string& text) {
  Metric g;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "+" || tok == "+1") g.signs.push_back(1);
    else if (tok == "-" || tok == "-1") g.signs.push_back(-1);
    else throw std::invalid_argument("bad metric sign token: " + tok);
  }
  g.dim = g.signs.size();
  if (g.dim == 0) throw std::invalid_argument("empty metric");
  return g;
}

std::string Metric::str() const {
  std::string s;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) s += ' ';
    s += signs[i] > 0 ? '+' : '-';
  }
  return s;
}

std::string tuple_str(const IndexTuple& t) {
  std::string s;
  for (std::size_t i : t) s += std::to_string(i);
  return s;
}

int sort_sign(std::vector<std::size_t>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && v[j - 1] > v[j]) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] == v[i]) return 0;
  return sign;
}

ScalarForm ScalarForm::from_poly(std::size_t dim, const Poly& p) {
  ScalarForm f(dim, 0);
  f.add({}, p);
  return f;
}

void ScalarForm::add(IndexTuple tuple, const Poly& c) {
  if (tuple.size() != degree_) throw std::invalid_argument("index tuple length != degree");
  for (std::size_t i : tuple)
    if (i >= dim_) throw std::invalid_argument("coordinate index out of range");
  if (c.num_vars() != dim_) throw std::invalid_argument("coefficient variable count != chart dimension");
  if (c.is_zero()) return;
  const int s = sort_sign(tuple);
  if (s == 0) return;
  const Poly v = s == 1 ? c : -c;
  auto it = coeffs_.find(tuple);
  if (it == coeffs_.end()) {
    coeffs_.emplace(std::move(tuple), v);
  } else {
    it->second = it->second + v;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Poly ScalarForm::component(const IndexTuple& tuple) const {
  auto it = coeffs_.find(tuple);
  return it == coeffs_.end() ? Poly(dim_) : it->second;
}

Poly ScalarForm::component_signed(IndexTuple tuple) const {
  const int s = sort_sign(tuple);
  if (s == 0) return Poly(dim_);
  const Poly p = component(tuple);
  return s == 1 ? p : -p;
}

ScalarForm ScalarForm::operator-() const {
  ScalarForm r(dim_, degree_);
  for (const auto& [t, p] : coeffs_) r.coeffs_.emplace(t, -p);
  return r;
}

ScalarForm ScalarForm::operator+(const ScalarForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_)
    throw std::invalid_argument("form shape mismatch in addition");
  ScalarForm r = *this;
  for (const auto& [t, p] : o.coeffs_) {
    auto it = r.coeffs_.find(t);
    if (it == r.coeffs_.end()) {
      r.coeffs_.emplace(t, p);
    } else {
      it->second = it->second + p;
      if (it->second.is_zero()) r.coeffs_.erase(it);
    }
  }
  return r;
}

ScalarForm ScalarForm::operator-(const ScalarForm& o) const { return *this + (-o); }

ScalarForm ScalarForm::operator*(const Rational& c) const {
  ScalarForm r(dim_, degree_);
  if (gfc::is_zero(c)) return r;
  for (const auto& [t, p] : coeffs_) r.coeffs_.emplace(t, p * c);
  return r;
}

ScalarForm ScalarForm::operator*(const Poly& p) const {
  ScalarForm r(dim_, degree_);
  if (p.is_zero()) return r;
  for (const auto& [t, q] : coeffs_) {
    const Poly prod = q * p;
    if (!prod.is_zero()) r.coeffs_.emplace(t, prod);
  }
  return r;
}

bool ScalarForm::operator==(const ScalarForm& o) const {
  return dim_ == o.dim_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

ScalarForm wedge(const ScalarForm& a, const ScalarForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge dimension mismatch");
  ScalarForm r(a.dim(), a.degree() + b.degree());
  IndexTuple joined;
  for (const auto& [ta, pa] : a.coeffs()) {
    for (const auto& [tb, pb] : b.coeffs()) {
      joined = ta;
      joined.insert(joined.end(), tb.begin(), tb.end());
      r.add(joined, pa * pb);
    }
  }
  return r;
}

ScalarForm ext_d(const ScalarForm& a) {
  ScalarForm r(a.dim(), a.degree() + 1);
  IndexTuple t;
  for (const auto& [tuple, p] : a.coeffs()) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Poly dp = p.partial(i);
      if (dp.is_zero()) continue;
      t.clear();
      t.push_back(i);
      t.insert(t.end(), tuple.begin(), tuple.end());
      r.add(t, dp);
    }
  }
  return r;
}

ScalarForm hodge(const ScalarForm& a, const Metric& g) {
  if (g.dim != a.dim()) throw std::invalid_argument("metric dimension mismatch");
  if (a.degree() > a.dim()) throw std::invalid_argument("hodge of degree above top");
  ScalarForm r(a.dim(), a.dim() - a.degree());
  for (const auto& [tuple, p] : a.coeffs()) {
    IndexTuple comp;
    std::vector<bool> used(a.dim(), false);
    for (std::size_t i : tuple) used[i] = true;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!used[i]) comp.push_back(i);
    std::vector<std::size_t> perm = tuple;
    perm.insert(perm.end(), comp.begin(), comp.end());
    int s = sort_sign(perm);
    for (std::size_t i : tuple) s *= g.signs[i];
    r.add(comp, s == 1 ? p : -p);
  }
  return r;
}

GForm::GForm(AlgebraPtr alg, Valence v, std::size_t dim, std::size_t degree)
    : alg_(std::move(alg)), valence_(v), dim_(dim), degree_(degree) {
  if (!alg_) throw std::invalid_argument("null algebra");
  comps_.assign(alg_->dim(), ScalarForm(dim_, degree_));
}

GForm GForm::zero(AlgebraPtr alg, Valence v, std::size_t dim, std::size_t degree) {
  return GForm(std::move(alg), v, dim, degree);
}

bool GForm::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

GForm GForm::operator-() const {
  GForm r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

namespace {

void require_same_shape(const GForm& a, const GForm& b) {
  if (!a.algebra() || !b.algebra() || !(*a.algebra() == *b.algebra()))
    throw std::invalid_argument("algebra mismatch");
  if (a.valence() != b.valence() || a.dim() != b.dim() || a.degree() != b.degree())
    throw std::invalid_argument("form shape mismatch");
}

}  // namespace

GForm GForm::operator+(const GForm& o) const {
  require_same_shape(*this, o);
  GForm r = *this;
  for (std::size_t a = 0; a < r.comps_.size(); ++a) r.comps_[a] = r.comps_[a] + o.comps_[a];
  return r;
}

GForm GForm::operator-(const GForm& o) const { return *this + (-o); }

GForm GForm::operator*(const Rational& c) const {
  GForm r = *this;
  for (auto& f : r.comps_) f = f * c;
  return r;
}

bool GForm::operator==(const GForm& o) const {
  if (!alg_ || !o.alg_) return alg_ == o.alg_;
  return *alg_ == *o.alg_ && valence_ == o.valence_ && dim_ == o.dim_ &&
         degree_ == o.degree_ && comps_ == o.comps_;
}

GForm ext_d(const GForm& a) {
  GForm r(a.algebra(), a.valence(), a.dim(), a.degree() + 1);
  for (std::size_t i = 0; i < a.generators(); ++i) r.comp(i) = ext_d(a.comp(i));
  return r;
}

GForm hodge(const GForm& a, const Metric& g) {
  if (a.degree() > a.dim()) throw std::invalid_argument("hodge of degree above top");
  GForm r(a.algebra(), a.valence(), a.dim(), a.dim() - a.degree());
  for (std::size_t i = 0; i < a.generators(); ++i) r.comp(i) = hodge(a.comp(i), g);
  return r;
}

GForm graded_bracket(const GForm& a, const GForm& b) {
  if (!(*a.algebra() == *b.algebra())) throw std::invalid_argument("algebra mismatch");
  if (a.valence() != Valence::algebra || b.valence() != Valence::algebra)
    throw std::invalid_argument("graded bracket needs algebra valence");
  if (a.dim() != b.dim()) throw std::invalid_argument("chart dimension mismatch");
  const auto& alg = *a.algebra();
  GForm r(a.algebra(), Valence::algebra, a.dim(), a.degree() + b.degree());
  for (std::size_t e = 0; e < alg.dim(); ++e) {
    ScalarForm acc(a.dim(), a.degree() + b.degree());
    for (std::size_t f = 0; f < alg.dim(); ++f)
      for (std::size_t g2 = 0; g2 < alg.dim(); ++g2) {
        const Rational& c = alg.c(e, f, g2);
        if (is_zero(c)) continue;
        acc = acc + wedge(a.comp(f), b.comp(g2)) * c;
      }
    r.comp(e) = acc;
  }
  return r;
}

ScalarForm pair_forms(const GForm& p, const GForm& t) {
  if (!(*p.algebra() == *t.algebra())) throw std::invalid_argument("algebra mismatch");
  if (p.valence() != Valence::dual || t.valence() != Valence::algebra)
    throw std::invalid_argument("pairing needs dual and algebra valences");
  if (p.dim() != t.dim()) throw std::invalid_argument("chart dimension mismatch");
  ScalarForm r(p.dim(), p.degree() + t.degree());
  for (std::size_t a = 0; a < p.generators(); ++a) r = r + wedge(p.comp(a), t.comp(a));
  return r;
}

GForm k_sharp(const GForm& f, const Mat& k) {
  if (f.valence() != Valence::algebra)
    throw std::invalid_argument("index lowering needs algebra valence");
  if (k.size() != f.generators()) throw std::invalid_argument("pairing matrix size mismatch");
  GForm r(f.algebra(), Valence::dual, f.dim(), f.degree());
  for (std::size_t a = 0; a < f.generators(); ++a) {
    ScalarForm acc(f.dim(), f.degree());
    for (std::size_t b = 0; b < f.generators(); ++b) {
      if (is_zero(k[a][b])) continue;
      acc = acc + f.comp(b) * k[a][b];
    }
    r.comp(a) = acc;
  }
  return r;
}

GForm k_sharp(const GForm& f) { return k_sharp(f, f.algebra()->pairing()); }

GForm apply_matrix(const GForm& a, const Mat& m) {
  if (m.size() != a.generators()) throw std::invalid_argument("matrix size mismatch");
  GForm r(a.algebra(), a.valence(), a.dim(), a.degree());
  for (std::size_t i = 0; i < a.generators(); ++i) {
    ScalarForm acc(a.dim(), a.degree());
    for (std::size_t j = 0; j < a.generators(); ++j) {
      if (is_zero(m[i][j])) continue;
      acc = acc + a.comp(j) * m[i][j];
    }
    r.comp(i) = acc;
  }
  return r;
}

}  // namespace gfc
