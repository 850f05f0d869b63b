#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace argbelief {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or a plain decimal like "0.25" into an exact rational.
/// Throws `ErrorKind::input_error` on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string format_rational(const Rational& value);

inline const Rational& one_half() {
  static const Rational half(1, 2);
  return half;
}

}  // namespace argbelief
