#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "qnum/error.hpp"

namespace qnum {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline integer gcd(const integer& a, const integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline integer abs(const integer& a) { return a < 0 ? integer(-a) : a; }

inline int sign(const integer& a) { return a.sign(); }

/// floor(a / b) for b != 0.
inline integer floor_div(const integer& a, const integer& b) {
  integer q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline integer ceil_div(const integer& a, const integer& b) { return -floor_div(-a, b); }

/// Division that must be exact; throws non_integral otherwise.
inline integer exact_div(const integer& a, const integer& b) {
  if (b == 0) throw error(errc::division_by_zero, "integer division by zero");
  integer q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw error(errc::non_integral, a.str() + " / " + b.str());
  return q;
}

inline rational exact_div(const rational& a, const rational& b) {
  if (b == 0) throw error(errc::division_by_zero, "rational division by zero");
  return a / b;
}

/// Integer square root if `a` is a perfect square, otherwise -1.
inline integer exact_sqrt(const integer& a) {
  if (a < 0) return -1;
  integer r = boost::multiprecision::sqrt(a);
  return r * r == a ? r : integer(-1);
}

inline bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw error(errc::parse_error, "not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return integer(std::string(s));
}

}  // namespace qnum
