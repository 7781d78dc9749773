#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "hamspec/error.hpp"

namespace hamspec {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Base-10 only; the string constructor of cpp_int reads a leading 0 as octal.
inline BigInt decimal_digits(std::string_view digits) {
  BigInt value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

inline BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw Error(ErrorKind::InvalidArgument, "not an exact rational: '" + std::string(whole) + "'");
  BigInt value = decimal_digits(s);
  return negative ? BigInt(-value) : value;
}

}  // namespace detail

/// Parses "p/q", an integer, or a finite decimal such as "-1.25". Decimals are
/// converted exactly (1.25 -> 5/4). Anything else is rejected.
inline Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = detail::parse_integer(text.substr(0, slash), whole);
    BigInt den = detail::parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac_part.empty())
      throw Error(ErrorKind::InvalidArgument, "not an exact rational: '" + std::string(whole) + "'");
    if ((!int_part.empty() && !detail::all_digits(int_part)) ||
        (!frac_part.empty() && !detail::all_digits(frac_part)))
      throw Error(ErrorKind::InvalidArgument, "not an exact rational: '" + std::string(whole) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    BigInt digits = detail::decimal_digits(std::string(int_part) + std::string(frac_part));
    Rational value(digits, scale);
    return negative ? Rational(-value) : value;
  }

  return Rational(detail::parse_integer(text, whole));
}

}  // namespace hamspec
