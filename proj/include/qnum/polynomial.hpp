#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qnum/error.hpp"
#include "qnum/integer.hpp"

namespace qnum {

/// Dense univariate polynomial, coefficient i multiplies q^i.
///
/// Trailing zeros are never stored, so the zero polynomial has an empty coefficient
/// vector and degree -1. `Coeff` is `integer` for everything the library exposes;
/// `rational` is used internally where square roots need half-integers.
template <typename Coeff>
class basic_polynomial {
 public:
  using coefficient_type = Coeff;

  basic_polynomial() = default;
  basic_polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  basic_polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  template <typename T>
    requires std::is_integral_v<T>
  basic_polynomial(std::initializer_list<T> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (T c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static basic_polynomial constant(Coeff c) { return basic_polynomial(std::vector<Coeff>{std::move(c)}); }

  static basic_polynomial monomial(Coeff c, std::size_t exponent) {
    if (c == 0) return {};
    std::vector<Coeff> v(exponent + 1);
    v[exponent] = std::move(c);
    return basic_polynomial(std::move(v));
  }

  /// 1 + q + ... + q^(n-1); zero for n == 0.
  static basic_polynomial q_integer(std::size_t n) {
    return basic_polynomial(std::vector<Coeff>(n, Coeff(1)));
  }

  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  const Coeff& leading() const { return coeffs_.back(); }

  /// Exponent of the lowest nonzero term; 0 for the zero polynomial.
  std::size_t valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return i;
    return 0;
  }
  const Coeff& lowest() const { return coeffs_[valuation()]; }

  basic_polynomial operator-() const {
    basic_polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  basic_polynomial& operator+=(const basic_polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  basic_polynomial& operator-=(const basic_polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  basic_polynomial& operator*=(const basic_polynomial& o) { return *this = *this * o; }
  basic_polynomial& operator*=(const Coeff& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend basic_polynomial operator+(basic_polynomial a, const basic_polynomial& b) { return a += b; }
  friend basic_polynomial operator-(basic_polynomial a, const basic_polynomial& b) { return a -= b; }
  friend basic_polynomial operator*(basic_polynomial a, const Coeff& c) { return a *= c; }
  friend basic_polynomial operator*(const Coeff& c, basic_polynomial a) { return a *= c; }

  friend basic_polynomial operator*(const basic_polynomial& a, const basic_polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return basic_polynomial(std::move(r));
  }

  friend bool operator==(const basic_polynomial&, const basic_polynomial&) = default;

  /// Multiply by q^k.
  basic_polynomial shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Coeff> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return basic_polynomial(std::move(v));
  }

  /// Divide by q^k; the low k coefficients must vanish.
  basic_polynomial unshifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    if (valuation() < k) throw error(errc::non_integral, "polynomial not divisible by q^" + std::to_string(k));
    return basic_polynomial(std::vector<Coeff>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
  }

  /// Keep only terms of degree < n.
  basic_polynomial truncated(std::size_t n) const {
    if (coeffs_.size() <= n) return *this;
    return basic_polynomial(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
  }

  /// q^d p(1/q) with d = degree(): reverses the coefficient list.
  basic_polynomial reversed() const {
    std::vector<Coeff> v(coeffs_.rbegin(), coeffs_.rend());
    return basic_polynomial(std::move(v));
  }

  /// q^d p(1/q) == p(q) with d = degree().
  bool is_palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

  /// Palindromic after dividing out the largest power of q.
  bool is_palindromic_up_to_shift() const {
    auto first = coeffs_.begin() + static_cast<long>(valuation());
    return std::equal(first, coeffs_.end(), coeffs_.rbegin());
  }

  template <typename T>
  T evaluate(const T& x) const {
    T acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + convert<T>(*it);
    return acc;
  }

  /// Formal derivative.
  basic_polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Coeff(static_cast<long>(i));
    return basic_polynomial(std::move(v));
  }

  /// Render low-to-high, e.g. `1 + 2*q + q^2`.
  std::string to_string(std::string_view var = "q") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Coeff& c = coeffs_[i];
      if (c == 0) continue;
      Coeff mag = c < 0 ? Coeff(-c) : c;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        os << mag;
      } else {
        if (mag != 1) os << mag << '*';
        os << var;
        if (i > 1) os << '^' << i;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const basic_polynomial& p) { return os << p.to_string(); }

 private:
  template <typename T>
  static T convert(const Coeff& c) {
    if constexpr (std::is_same_v<T, Coeff>) {
      return c;
    } else if constexpr (std::is_same_v<T, std::complex<double>> || std::is_same_v<T, std::complex<long double>>) {
      return T(static_cast<typename T::value_type>(c), 0);
    } else {
      return static_cast<T>(c);
    }
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using polynomial = basic_polynomial<integer>;
using rational_polynomial = basic_polynomial<rational>;

inline rational_polynomial to_rational(const polynomial& p) {
  std::vector<rational> v(p.coeffs().begin(), p.coeffs().end());
  return rational_polynomial(std::move(v));
}

/// gcd of all coefficients, non-negative; 0 for the zero polynomial.
inline integer content(const polynomial& p) {
  integer g = 0;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

inline polynomial exact_div(const polynomial& p, const integer& c) {
  std::vector<integer> v;
  v.reserve(p.size());
  for (const auto& x : p.coeffs()) v.push_back(exact_div(x, c));
  return polynomial(std::move(v));
}

/// p / content(p), with positive leading coefficient.
inline polynomial primitive_part(const polynomial& p) {
  if (p.is_zero()) return p;
  integer c = content(p);
  if (p.leading() < 0) c = -c;
  return exact_div(p, c);
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline polynomial pseudo_remainder(polynomial a, const polynomial& b) {
  if (b.is_zero()) throw error(errc::division_by_zero, "pseudo-remainder by zero polynomial");
  const long db = b.degree();
  const integer& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const long shift = a.degree() - db;
    polynomial t = polynomial::monomial(a.leading(), static_cast<std::size_t>(shift)) * b;
    a = a * lb - t;
  }
  return a;
}

/// Quotient of an exact polynomial division; throws non_integral on remainder.
inline polynomial exact_div(const polynomial& a, const polynomial& b) {
  if (b.is_zero()) throw error(errc::division_by_zero, "division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw error(errc::non_integral, "inexact polynomial division");
  std::vector<integer> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<integer> quo(rem.size() - db);
  const integer& lb = b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const integer& top = rem[k + db];
    if (top == 0) continue;
    integer qk = exact_div(top, lb);
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= qk * b.coeffs()[j];
    quo[k] = std::move(qk);
  }
  for (const auto& r : rem)
    if (r != 0) throw error(errc::non_integral, "inexact polynomial division");
  return polynomial(std::move(quo));
}

/// Greatest common divisor over Z[q]: primitive-part Euclid, times gcd of contents.
/// Result has positive leading coefficient (zero only when both inputs are zero).
inline polynomial gcd(const polynomial& a, const polynomial& b) {
  if (a.is_zero()) return primitive_part(b) * content(b);
  if (b.is_zero()) return primitive_part(a) * content(a);
  const integer c = gcd(content(a), content(b));
  polynomial x = primitive_part(a);
  polynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    polynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x) * c;
}

/// p(x + a), via repeated synthetic division.
inline polynomial taylor_shift(const polynomial& p, const integer& a) {
  std::vector<integer> c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  return polynomial(std::move(c));
}

/// Parse a univariate polynomial written as a sum of terms, e.g. `x^3+x^2-2x-1`,
/// `1 + 2*q + q^2`. The variable is any single identifier; implicit multiplication
/// (`2x`) is allowed.
inline polynomial parse_polynomial(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw error(errc::parse_error, "empty polynomial");
  std::vector<integer> coeffs;
  char var = 0;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw error(errc::parse_error, "polynomial '" + std::string(text) + "': " + why);
  };
  while (i < s.size()) {
    int sgn = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sgn = -1;
      ++i;
    } else if (i != 0) {
      fail("expected + or -");
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    integer c = 1;
    bool has_coeff = i > start;
    if (has_coeff) c = integer(s.substr(start, i - start));
    std::size_t exponent = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) fail("dangling '*'");
      ++i;
    }
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      if (var != 0 && s[i] != var) fail("more than one variable");
      var = s[i++];
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (es == i) fail("missing exponent");
        exponent = std::stoul(s.substr(es, i - es));
      }
    } else if (!has_coeff) {
      fail("empty term");
    }
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
    coeffs[exponent] += sgn * c;
  }
  return polynomial(std::move(coeffs));
}

}  // namespace qnum
