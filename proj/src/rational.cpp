#include "argbelief/rational.hpp"

#include <cctype>
#include <string>

#include "argbelief/error.hpp"

namespace argbelief {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (const char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

// cpp_int reads a leading zero as an octal prefix.
cpp_int decimal(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return cpp_int{std::string(digits)};
}

[[noreturn]] void malformed(std::string_view text) {
  throw Error(ErrorKind::input_error, "\"" + std::string(text) + "\" is not a rational number");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    const cpp_int d = decimal(den);
    if (d == 0) throw Error(ErrorKind::input_error, "zero denominator in \"" + std::string(text) + "\"");
    value = Rational(decimal(num), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) malformed(text);
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const cpp_int digits = decimal(std::string(whole) + std::string(frac));
    value = Rational(digits, scale);
  } else {
    if (!all_digits(body)) malformed(text);
    value = Rational(decimal(body));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace argbelief
