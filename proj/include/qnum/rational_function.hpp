#pragma once

#include <string>
#include <utility>

#include "qnum/laurent.hpp"
#include "qnum/polynomial.hpp"

namespace qnum {

/// Reduced quotient num/den of integer polynomials, or the projective point 1/0.
///
/// Canonical form: gcd(num, den) = 1 over Q[q], common integer content removed,
/// lowest nonzero coefficient of den positive. Zero is 0/1, infinity is 1/0.
class rational_function {
 public:
  /// The zero function.
  rational_function() : num_(), den_{1} {}
  rational_function(polynomial p) : num_(std::move(p)), den_{1} {}
  rational_function(const laurent_polynomial& p) {
    auto [n, d] = p.as_fraction();
    *this = reduce(std::move(n), std::move(d));
  }

  static rational_function infinity() {
    rational_function r;
    r.num_ = polynomial{1};
    r.den_ = polynomial{};
    return r;
  }

  /// Canonical form of num/den; throws invalid_rational on 0/0.
  static rational_function reduce(polynomial num, polynomial den) {
    if (num.is_zero() && den.is_zero()) throw error(errc::invalid_rational, "0/0");
    if (den.is_zero()) return infinity();
    rational_function r;
    if (num.is_zero()) return r;
    polynomial g = gcd(num, den);
    g = primitive_part(g);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
    integer c = gcd(content(num), content(den));
    if (den.lowest() < 0) c = -c;
    if (c != 1) {
      num = exact_div(num, c);
      den = exact_div(den, c);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  const polynomial& num() const noexcept { return num_; }
  const polynomial& den() const noexcept { return den_; }
  bool is_infinity() const noexcept { return den_.is_zero(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0 && den_[0] == 1; }

  rational_function operator-() const {
    if (is_infinity()) return *this;
    rational_function r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend rational_function operator+(const rational_function& a, const rational_function& b) {
    a.require_finite();
    b.require_finite();
    if (a.den_ == b.den_) return reduce(a.num_ + b.num_, a.den_);
    return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend rational_function operator-(const rational_function& a, const rational_function& b) { return a + (-b); }
  friend rational_function operator*(const rational_function& a, const rational_function& b) {
    a.require_finite();
    b.require_finite();
    return reduce(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend rational_function operator/(const rational_function& a, const rational_function& b) {
    a.require_finite();
    b.require_finite();
    if (b.is_zero()) throw error(errc::division_by_zero, "rational function divided by zero");
    return reduce(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const rational_function&, const rational_function&) = default;

  /// Multiplicative inverse in the projective sense: 1/0 <-> 0.
  rational_function reciprocal() const {
    if (is_infinity()) return {};
    if (is_zero()) return infinity();
    return reduce(den_, num_);
  }

  /// f(1/q), renormalized.
  rational_function substitute_q_inverse() const {
    if (is_infinity() || is_zero()) return *this;
    const long dn = num_.degree(), dd = den_.degree();
    polynomial n = num_.reversed(), d = den_.reversed();
    if (dd > dn) n = n.shifted(static_cast<std::size_t>(dd - dn));
    else if (dn > dd) d = d.shifted(static_cast<std::size_t>(dn - dd));
    return reduce(std::move(n), std::move(d));
  }

  /// Value at q = 1 as (num(1), den(1)); both zero cannot happen for canonical
  /// q-rationals but can for arbitrary input.
  std::pair<integer, integer> at_one() const { return {num_.evaluate(integer(1)), den_.evaluate(integer(1))}; }

  std::string to_string() const {
    if (is_infinity()) return "1/0";
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void require_finite() const {
    if (is_infinity()) throw error(errc::not_finite, "arithmetic with the point at infinity");
  }

  polynomial num_;
  polynomial den_;
};

}  // namespace qnum
