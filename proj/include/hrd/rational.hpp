#pragma once

// Exact arithmetic used everywhere in the library.  Coefficients are
// arbitrary-precision integers and bounds are arbitrary-precision rationals;
// nothing in the analysis ever rounds.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/functional/hash.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace hrd {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::size_t hash_int(const Int& v) { return boost::multiprecision::hash_value(v); }
inline std::size_t hash_rational(const Rational& r) { return boost::multiprecision::hash_value(r); }

// Renders "p" when the denominator is 1 and "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) {
  Int num = rat_num(r);
  Int den = rat_den(r);
  std::string s = num.str();
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

// Parses "p" or "p/q" with an optional leading '-'.  Returns nothing on any
// malformed input (including q == 0) instead of throwing.
inline std::optional<Rational> rational_from_string(std::string_view text) {
  auto parse_int = [](std::string_view t) -> std::optional<Int> {
    if (t.empty()) return std::nullopt;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return std::nullopt;
    for (std::size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return std::nullopt;
    return Int(std::string(t));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto num = parse_int(text);
    if (!num) return std::nullopt;
    return Rational(*num);
  }
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace hrd
