#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gfc {

// Exact arithmetic throughout. The rational backend keeps values in lowest
// terms with a positive denominator, which is the canonical form assumed by
// printing and hashing. Expression templates are disabled: every operation
// yields a value, so deduced return types can never capture references to
// expired operands.
using Int = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

// "n" for integers, "n/d" otherwise. Matches the polynomial grammar.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

struct ParseError : std::runtime_error {
  std::size_t position;  // byte offset into the offending text
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace gfc
