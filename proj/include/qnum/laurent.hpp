#pragma once

#include <string>
#include <utility>

#include "qnum/polynomial.hpp"

namespace qnum {

/// q^valuation * body, with body(0) != 0 unless the value is zero (then valuation is 0).
class laurent_polynomial {
 public:
  laurent_polynomial() = default;
  laurent_polynomial(polynomial p) : body_(std::move(p)) { normalize(); }
  laurent_polynomial(long valuation, polynomial body) : valuation_(valuation), body_(std::move(body)) { normalize(); }

  static laurent_polynomial monomial(integer c, long exponent) { return {exponent, polynomial::constant(std::move(c))}; }

  /// [n]_q for any integer n: 1 + ... + q^(n-1) for n >= 0, -(q^n + ... + q^-1) for n < 0.
  static laurent_polynomial q_integer(long n) {
    if (n >= 0) return laurent_polynomial(polynomial::q_integer(static_cast<std::size_t>(n)));
    return {n, -polynomial::q_integer(static_cast<std::size_t>(-n))};
  }

  long valuation() const noexcept { return valuation_; }
  const polynomial& body() const noexcept { return body_; }
  bool is_zero() const noexcept { return body_.is_zero(); }
  long max_exponent() const noexcept { return valuation_ + body_.degree(); }

  integer coefficient(long e) const {
    if (e < valuation_) return 0;
    return body_[static_cast<std::size_t>(e - valuation_)];
  }

  laurent_polynomial operator-() const { return {valuation_, -body_}; }

  friend laurent_polynomial operator+(const laurent_polynomial& a, const laurent_polynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long v = std::min(a.valuation_, b.valuation_);
    return {v, a.body_.shifted(static_cast<std::size_t>(a.valuation_ - v)) +
                   b.body_.shifted(static_cast<std::size_t>(b.valuation_ - v))};
  }
  friend laurent_polynomial operator-(const laurent_polynomial& a, const laurent_polynomial& b) { return a + (-b); }
  friend laurent_polynomial operator*(const laurent_polynomial& a, const laurent_polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.valuation_ + b.valuation_, a.body_ * b.body_};
  }
  friend bool operator==(const laurent_polynomial&, const laurent_polynomial&) = default;

  laurent_polynomial shifted(long k) const { return is_zero() ? *this : laurent_polynomial(valuation_ + k, body_); }

  /// f(1/q).
  laurent_polynomial substitute_q_inverse() const {
    if (is_zero()) return *this;
    return {-valuation_ - body_.degree(), body_.reversed()};
  }

  /// Split into (numerator, denominator) polynomials with the q-power moved to
  /// whichever side keeps both polynomial.
  std::pair<polynomial, polynomial> as_fraction() const {
    if (valuation_ >= 0) return {body_.shifted(static_cast<std::size_t>(valuation_)), polynomial{1}};
    return {body_, polynomial::monomial(1, static_cast<std::size_t>(-valuation_))};
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < body_.size(); ++i) {
      const integer& c = body_.coeffs()[i];
      if (c == 0) continue;
      const long e = valuation_ + static_cast<long>(i);
      const integer mag = abs(c);
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += "q";
      if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return out;
  }

 private:
  void normalize() {
    if (body_.is_zero()) {
      valuation_ = 0;
      return;
    }
    const std::size_t v = body_.valuation();
    if (v > 0) {
      body_ = body_.unshifted(v);
      valuation_ += static_cast<long>(v);
    }
  }

  long valuation_ = 0;
  polynomial body_;
};

}  // namespace qnum
