#include "gfc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace gfc {

bool GrlexDesc::operator()(const Monomial& a, const Monomial& b) const {
  const auto deg = [](const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
  };
  const std::uint64_t da = deg(a), db = deg(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic on exponent vectors, larger first
}

Poly Poly::constant(std::size_t num_vars, const Rational& c) {
  Poly p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::invalid_argument("variable index out of range");
  Monomial m(num_vars, 0);
  m[index] = 1;
  return monomial(num_vars, m, 1);
}

Poly Poly::monomial(std::size_t num_vars, const Monomial& exps, const Rational& c) {
  Poly p(num_vars);
  p.add_term(exps, c);
  return p;
}

void Poly::add_term(const Monomial& exps, const Rational& c) {
  if (exps.size() != num_vars_) throw std::invalid_argument("exponent vector length mismatch");
  if (gfc::is_zero(c)) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (gfc::is_zero(it->second)) terms_.erase(it);
  }
}

long Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const Monomial& lead = terms_.begin()->first;
  return static_cast<long>(std::accumulate(lead.begin(), lead.end(), std::uint64_t{0}));
}

Poly Poly::operator-() const {
  Poly r(num_vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (num_vars_ != o.num_vars_) throw std::invalid_argument("variable count mismatch");
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (num_vars_ != o.num_vars_) throw std::invalid_argument("variable count mismatch");
  Poly r(num_vars_);
  Monomial m(num_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < num_vars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(num_vars_);
  if (gfc::is_zero(c)) return r;
  for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * c);
  return r;
}

Poly Poly::pow(std::uint32_t k) const {
  Poly acc = Poly::constant(num_vars_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1u) acc = acc * base;
    base = base * base;
    k >>= 1u;
  }
  return acc;
}

Poly Poly::partial(std::size_t axis) const {
  if (axis >= num_vars_) throw std::invalid_argument("derivative axis out of range");
  Poly r(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (m[axis] == 0) continue;
    Monomial e = m;
    e[axis] -= 1;
    r.add_term(e, c * Rational(m[axis]));
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("evaluation point dimension mismatch");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
  if (images.size() != num_vars_) throw std::invalid_argument("substitution image count mismatch");
  const std::size_t target = images.empty() ? 0 : images[0].num_vars();
  for (const auto& im : images) {
    if (im.num_vars() != target) throw std::invalid_argument("substitution images disagree on variable count");
  }
  Poly acc(target);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(target, c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (m[i]) t = t * images[i].pow(m[i]);
    }
    acc = acc + t;
  }
  return acc;
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i);
    if (m[i] > 1) {
      s += '^';
      s += std::to_string(m[i]);
    }
  }
  return s;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string mono = monomial_str(m);
    if (mono.empty()) {
      out += gfc::to_string(mag);
    } else {
      if (mag != 1) {
        out += gfc::to_string(mag);
        out += '*';
      }
      out += mono;
    }
  }
  return out;
}

namespace {

// Recursive-descent parser over a fixed token stream.
struct Parser {
  const std::string& text;
  const std::map<std::string, std::size_t>& symbols;
  std::size_t num_vars;
  bool plain_chart;  // true when symbols are exactly x0..x{n-1}
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) { throw ParseError(at, msg); }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  Int integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(start, "expected integer");
    return Int(text.substr(start, pos - start));
  }

  std::uint32_t small_uint() {
    const std::size_t at = pos;
    Int v = integer();
    if (v > 1000000) fail(at, "exponent too large");
    return v.convert_to<std::uint32_t>();
  }

  Poly atom() {
    skip_ws();
    if (pos >= text.size()) fail(pos, "unexpected end of input");
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      if (eat('/')) {
        const std::size_t at = pos;
        Int den = integer();
        if (den == 0) fail(at, "zero denominator");
        return Poly::constant(num_vars, Rational(num, den));
      }
      return Poly::constant(num_vars, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos;
      ++pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      const std::string name = text.substr(start, pos - start);
      auto it = symbols.find(name);
      if (it == symbols.end()) {
        if (plain_chart && name.size() > 1 && name[0] == 'x' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }))
          fail(start, "variable index out of range (declared dimension " +
                          std::to_string(symbols.size()) + "): " + name);
        fail(start, "unknown variable: " + name);
      }
      return Poly::variable(num_vars, it->second);
    }
    if (c == '(') {
      ++pos;
      Poly e = expr();
      skip_ws();
      if (!eat(')')) fail(pos, "expected ')'");
      return e;
    }
    fail(pos, std::string("unexpected character '") + c + "'");
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) return base.pow(small_uint());
    return base;
  }

  Poly unary() {
    if (eat('-')) return -unary();
    return power();
  }

  Poly term() {
    Poly acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }

  Poly expr() {
    skip_ws();
    Poly acc = term();
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (peek('-')) {
        ++pos;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos != text.size()) fail(pos, "trailing input");
    return p;
  }
};

}  // namespace

Poly parse_poly(const std::string& text,
                const std::map<std::string, std::size_t>& symbols,
                std::size_t num_vars) {
  Parser p{text, symbols, num_vars, false};
  return p.run();
}

Poly parse_poly(const std::string& text, std::size_t num_vars) {
  std::map<std::string, std::size_t> symbols;
  for (std::size_t i = 0; i < num_vars; ++i) symbols.emplace("x" + std::to_string(i), i);
  Parser p{text, symbols, num_vars, true};
  return p.run();
}

}  // namespace gfc
