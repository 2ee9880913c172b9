// Exact rational arithmetic used throughout the library.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kollar {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(Integer(num), Integer(den));
}

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "p/q" in lowest terms with q > 0. Integers keep the "/1" suffix so every
/// serialized value has the same shape.
inline std::string to_fraction_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Human-readable form: integers print bare ("6"), everything else as "p/q".
inline std::string to_display_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return to_fraction_string(r);
}

/// Parses "p/q", "-p/q" or an integer literal. Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Integer {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j])))
        throw std::invalid_argument("bad integer: " + std::string(s));
    }
    Integer v(std::string(s.substr(i)));
    return s[0] == '-' ? Integer(-v) : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer num = parse_int(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("sign belongs on the numerator: " + std::string(text));
  const Integer den = parse_int(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(num, den);
}

}  // namespace kollar
