#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qnum/error.hpp"
#include "qnum/laurent.hpp"
#include "qnum/polynomial.hpp"
#include "qnum/rational_function.hpp"

namespace qnum {

/// Laurent series known exactly for exponents valuation .. order.
///
/// The coefficient at `valuation` may be zero (a series that is zero to its known
/// precision is still a valid value). Arithmetic tracks precision the usual way: sums
/// keep the smaller order, products and quotients keep the smaller relative precision.
template <typename Coeff>
class basic_series {
 public:
  using coefficient_type = Coeff;

  basic_series() : coeffs_(1) {}
  basic_series(long valuation, std::vector<Coeff> coeffs) : valuation_(valuation), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw error(errc::invalid_arguments, "series needs at least one coefficient");
  }

  static basic_series zero(long valuation, long order) {
    if (order < valuation) throw error(errc::invalid_arguments, "series order below valuation");
    return {valuation, std::vector<Coeff>(static_cast<std::size_t>(order - valuation + 1))};
  }

  /// Polynomial viewed as a series known up to `order`.
  static basic_series from_polynomial(const basic_polynomial<Coeff>& p, long order) {
    basic_series s = zero(std::min(0L, order), order);
    for (long e = 0; e < static_cast<long>(p.size()) && e <= order; ++e)
      s.coeffs_[static_cast<std::size_t>(e - s.valuation_)] = p[static_cast<std::size_t>(e)];
    return s;
  }

  long valuation() const noexcept { return valuation_; }
  long order() const noexcept { return valuation_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

  Coeff coefficient(long e) const {
    if (e < valuation_ || e > order()) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(e - valuation_)];
  }

  /// True when every known coefficient is zero.
  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c == 0; });
  }

  /// Exponent of the first nonzero coefficient, or order()+1 if none.
  long leading_exponent() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return valuation_ + static_cast<long>(i);
    return order() + 1;
  }

  /// Drop leading zero coefficients (keeps one coefficient if all vanish).
  basic_series normalized() const {
    const long lead = leading_exponent();
    if (lead > order()) return {order(), {Coeff(0)}};
    return {lead, std::vector<Coeff>(coeffs_.begin() + (lead - valuation_), coeffs_.end())};
  }

  /// Same value with explicit zeros down to `v` (v <= valuation()).
  basic_series extended_down(long v) const {
    if (v >= valuation_) return *this;
    std::vector<Coeff> c(static_cast<std::size_t>(valuation_ - v));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return {v, std::move(c)};
  }

  basic_series truncated(long new_order) const {
    if (new_order >= order()) return *this;
    if (new_order < valuation_) throw error(errc::invalid_arguments, "truncation below valuation");
    return {valuation_, std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + (new_order - valuation_ + 1))};
  }

  /// Multiply by q^k.
  basic_series shifted(long k) const { return {valuation_ + k, coeffs_}; }

  basic_series operator-() const {
    basic_series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend basic_series operator+(const basic_series& a, const basic_series& b) {
    const long v = std::min(a.valuation_, b.valuation_);
    const long o = std::min(a.order(), b.order());
    if (o < v) return zero(o, o);
    basic_series r = zero(v, o);
    for (long e = v; e <= o; ++e) r.coeffs_[static_cast<std::size_t>(e - v)] = a.coefficient(e) + b.coefficient(e);
    return r;
  }
  friend basic_series operator-(const basic_series& a, const basic_series& b) { return a + (-b); }

  friend basic_series operator*(const basic_series& x, const basic_series& y) {
    const basic_series a = x.normalized(), b = y.normalized();
    const long v = a.valuation_ + b.valuation_;
    const long o = std::min(a.order() + b.valuation_, b.order() + a.valuation_);
    basic_series r = zero(v, o);
    const std::size_t n = r.coeffs_.size();
    for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  friend basic_series operator*(const basic_series& a, const Coeff& c) {
    basic_series r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  /// 1/a; the leading coefficient must divide exactly for integer coefficients.
  basic_series inverse() const {
    const basic_series a = normalized();
    if (a.coeffs_.size() == 1 && a.coeffs_[0] == 0)
      throw error(errc::division_by_zero, "inverse of a series that vanishes to its order");
    const std::size_t n = a.coeffs_.size();
    std::vector<Coeff> r(n);
    const Coeff& lead = a.coeffs_[0];
    for (std::size_t k = 0; k < n; ++k) {
      Coeff acc = k == 0 ? Coeff(1) : Coeff(0);
      for (std::size_t i = 1; i <= k; ++i) acc -= a.coeffs_[i] * r[k - i];
      r[k] = exact_div(acc, lead);
    }
    return {-a.valuation_, std::move(r)};
  }

  friend basic_series operator/(const basic_series& a, const basic_series& b) { return a * b.inverse(); }

  /// Square root with positive leading coefficient.
  basic_series sqrt() const {
    const basic_series a = normalized();
    if (a.coeffs_.size() == 1 && a.coeffs_[0] == 0) return zero(a.valuation_ / 2, a.valuation_ / 2);
    if (a.valuation_ % 2 != 0) throw error(errc::not_a_square, "series with odd valuation");
    const Coeff root0 = sqrt_coefficient(a.coeffs_[0]);
    const std::size_t n = a.coeffs_.size();
    std::vector<Coeff> r(n);
    r[0] = root0;
    const Coeff twice = root0 * Coeff(2);
    for (std::size_t k = 1; k < n; ++k) {
      Coeff acc = a.coeffs_[k];
      for (std::size_t i = 1; i < k; ++i) acc -= r[i] * r[k - i];
      try {
        r[k] = exact_div(acc, twice);
      } catch (const error&) {
        throw error(errc::not_a_square, "square root leaves the coefficient ring at term " + std::to_string(k));
      }
    }
    return {a.valuation_ / 2, std::move(r)};
  }

  friend bool operator==(const basic_series&, const basic_series&) = default;

  /// Agreement on every exponent both series know.
  bool agrees_with(const basic_series& o) const {
    const long lo = std::min(valuation_, o.valuation_);
    const long hi = std::min(order(), o.order());
    for (long e = lo; e <= hi; ++e)
      if (coefficient(e) != o.coefficient(e)) return false;
    return true;
  }

  /// Low-to-high rendering with a trailing O(q^(order+1)).
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Coeff& c = coeffs_[i];
      if (c == 0) continue;
      const long e = valuation_ + static_cast<long>(i);
      const Coeff mag = c < 0 ? Coeff(-c) : c;
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (e == 0) {
        out += coeff_str(mag);
        continue;
      }
      if (mag != 1) out += coeff_str(mag) + "*";
      out += "q";
      if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    if (out.empty()) out = "0";
    return out + " + O(q^" + std::to_string(order() + 1) + ")";
  }

 private:
  static std::string coeff_str(const Coeff& c) { return c.str(); }

  static Coeff sqrt_coefficient(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, integer>) {
      const integer r = exact_sqrt(c);
      if (r < 0) throw error(errc::not_a_square, "leading coefficient " + c.str() + " is not a square");
      return r;
    } else {
      const integer n = exact_sqrt(numerator(c)), d = exact_sqrt(denominator(c));
      if (n < 0 || d < 0) throw error(errc::not_a_square, "leading coefficient is not a rational square");
      return Coeff(n, d);
    }
  }

  long valuation_ = 0;
  std::vector<Coeff> coeffs_;
};

using series = basic_series<integer>;
using rational_series = basic_series<rational>;

/// Integer series from a rational one; throws non_integral if any coefficient is not.
inline series to_integer(const rational_series& s) {
  std::vector<integer> c;
  c.reserve(s.coeffs().size());
  for (const auto& x : s.coeffs()) {
    if (denominator(x) != 1) throw error(errc::non_integral, "series coefficient " + x.str());
    c.push_back(numerator(x));
  }
  return {s.valuation(), std::move(c)};
}

inline rational_series to_rational(const series& s) {
  return {s.valuation(), std::vector<rational>(s.coeffs().begin(), s.coeffs().end())};
}

/// Expansion of num/den at q = 0 through q^order, by exact long division.
/// The lowest nonzero coefficient of den must divide every step (it is 1 for all
/// q-rationals); otherwise non_integral is thrown.
inline series taylor(const polynomial& num, const polynomial& den, long order) {
  if (den.is_zero()) throw error(errc::pole_at_every_point, "Taylor expansion of 1/0");
  const long dv = static_cast<long>(den.valuation());
  if (num.is_zero()) return series::zero(std::min(order, -dv), order);
  const long nv = static_cast<long>(num.valuation());
  const long v = nv - dv;
  if (order < v) return series::zero(order, order);
  const std::size_t n = static_cast<std::size_t>(order - v + 1);
  const auto& nc = num.coeffs();
  const auto& dc = den.coeffs();
  const integer& d0 = dc[static_cast<std::size_t>(dv)];
  std::vector<integer> r(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t ni = static_cast<std::size_t>(nv) + k;
    integer acc = ni < nc.size() ? nc[ni] : integer(0);
    for (std::size_t i = 1; i <= k; ++i) {
      const std::size_t di = static_cast<std::size_t>(dv) + i;
      if (di >= dc.size()) break;
      acc -= dc[di] * r[k - i];
    }
    r[k] = exact_div(acc, d0);
  }
  return {v, std::move(r)};
}

inline series taylor(const rational_function& f, long order) {
  if (f.is_infinity()) throw error(errc::pole_at_every_point, "Taylor expansion of 1/0");
  return taylor(f.num(), f.den(), order);
}

inline series taylor(const laurent_polynomial& p, long order) {
  auto [n, d] = p.as_fraction();
  return taylor(n, d, order);
}

}  // namespace qnum
