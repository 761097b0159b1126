#pragma once

// Exact rationals and the "p/q" text form used by scene files.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rcc11 {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline int sign(const Rational& q) { return q.sign(); }

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt n(std::string(num.front() == '+' ? num.substr(1) : num));
  BigInt d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  auto n = boost::multiprecision::numerator(q);
  auto d = boost::multiprecision::denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

/// Exact test for q being the square of a rational; returns the root.
inline bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  auto n = boost::multiprecision::numerator(q);
  auto d = boost::multiprecision::denominator(q);
  BigInt sn = boost::multiprecision::sqrt(n);
  BigInt sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  root = Rational(sn, sd);
  return true;
}

}  // namespace rcc11
