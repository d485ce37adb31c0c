#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qnum/error.hpp"
#include "qnum/integer.hpp"
#include "qnum/polynomial.hpp"

namespace qnum {

/// Reduced fraction num/den with den >= 0; infinity is 1/0.
class fraction {
 public:
  fraction() : num_(0), den_(1) {}
  fraction(integer n) : num_(std::move(n)), den_(1) {}
  fraction(long n) : num_(n), den_(1) {}
  fraction(integer n, integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  fraction(long n, long d) : fraction(integer(n), integer(d)) {}

  static fraction infinity() { return {1, 0}; }

  const integer& num() const noexcept { return num_; }
  const integer& den() const noexcept { return den_; }
  bool is_infinity() const noexcept { return den_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  friend bool operator==(const fraction&, const fraction&) = default;

  /// Ordering on finite values only.
  friend bool operator<(const fraction& a, const fraction& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  friend bool operator>(const fraction& a, const fraction& b) { return b < a; }
  friend bool operator<=(const fraction& a, const fraction& b) { return !(b < a); }

  friend fraction operator+(const fraction& a, const fraction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend fraction operator-(const fraction& a, const fraction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  fraction operator-() const { return is_infinity() ? *this : fraction(-num_, den_); }
  fraction reciprocal() const { return {den_, num_}; }

  integer floor() const { return floor_div(num_, den_); }
  integer ceil() const { return ceil_div(num_, den_); }

  double to_double() const { return static_cast<double>(rational(num_, den_)); }

  std::string to_string() const {
    if (is_infinity()) return "inf";
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

 private:
  void normalize() {
    if (num_ == 0 && den_ == 0) throw error(errc::invalid_rational, "0/0");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_ == 0) {
      num_ = 1;
      return;
    }
    const integer g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  integer num_;
  integer den_;
};

/// Parse `n/m`, `-n/m`, `n` or `inf`. A zero denominator is rejected; infinity must be
/// written `inf`.
inline fraction parse_fraction(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s == "inf" || s == "oo" || s == "1/0") return fraction::infinity();
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return fraction(parse_integer(s));
  const integer n = parse_integer(trim(s.substr(0, slash)));
  const integer d = parse_integer(trim(s.substr(slash + 1)));
  if (d == 0) throw error(errc::parse_error, "zero denominator in '" + std::string(s) + "'");
  return {n, d};
}

enum class cf_kind { regular, negative };
enum class cf_parity { canonical, even, odd };

/// Regular [a0; a1, ...] (a_i >= 1 for i >= 1) or negative [[c0; c1, ...]]
/// (c_j >= 2 for j >= 1) continued fraction. Always nonempty.
class continued_fraction {
 public:
  continued_fraction(cf_kind kind, std::vector<integer> terms) : kind_(kind), terms_(std::move(terms)) { validate(); }

  static continued_fraction regular(std::vector<integer> terms) { return {cf_kind::regular, std::move(terms)}; }
  static continued_fraction negative(std::vector<integer> terms) { return {cf_kind::negative, std::move(terms)}; }

  cf_kind kind() const noexcept { return kind_; }
  const std::vector<integer>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const continued_fraction&, const continued_fraction&) = default;

  std::string to_string() const {
    std::string out = kind_ == cf_kind::regular ? "[" : "[[";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i == 1) out += ';';
      else if (i > 1) out += ',';
      out += terms_[i].str();
    }
    return out + (kind_ == cf_kind::regular ? "]" : "]]");
  }

 private:
  void validate() const {
    if (terms_.empty()) throw error(errc::invalid_continued_fraction, "empty continued fraction");
    const integer floor_value = kind_ == cf_kind::regular ? 1 : 2;
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (terms_[i] < floor_value)
        throw error(errc::invalid_continued_fraction,
                    "term " + std::to_string(i) + " = " + terms_[i].str() + " is below " + floor_value.str());
  }

  cf_kind kind_;
  std::vector<integer> terms_;
};

/// Parse `[2;2]`, `[2,2]`, `[[3;2]]`, `[[3,2]]`.
inline continued_fraction parse_continued_fraction(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  cf_kind kind = cf_kind::regular;
  std::string body;
  if (s.size() >= 4 && s.starts_with("[[") && s.ends_with("]]")) {
    kind = cf_kind::negative;
    body = s.substr(2, s.size() - 4);
  } else if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
    body = s.substr(1, s.size() - 2);
  } else {
    throw error(errc::parse_error, "continued fraction must be bracketed: '" + std::string(text) + "'");
  }
  std::vector<integer> terms;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',' || body[i] == ';') {
      terms.push_back(parse_integer(std::string_view(body).substr(start, i - start)));
      start = i + 1;
    }
  }
  return {kind, std::move(terms)};
}

/// Exact value of a continued fraction.
inline fraction cf_evaluate(const continued_fraction& cf) {
  // p_k = t_k p_{k-1} +/- p_{k-2}, seeded with (1, 0) and (t_0, 1).
  const integer sgn = cf.kind() == cf_kind::regular ? 1 : -1;
  integer p_prev = 1, q_prev = 0;
  integer p = cf.terms()[0], q = 1;
  for (std::size_t i = 1; i < cf.size(); ++i) {
    const integer& t = cf.terms()[i];
    integer pn = t * p + sgn * p_prev;
    integer qn = t * q + sgn * q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
  }
  return {p, q};
}

/// Re-express a regular CF with the requested term-count parity, or in canonical
/// form (last term >= 2 whenever there is more than one term).
inline continued_fraction cf_normalize(const continued_fraction& cf, cf_parity parity) {
  if (cf.kind() != cf_kind::regular)
    throw error(errc::invalid_arguments, "parity normalization applies to regular continued fractions");
  std::vector<integer> t = cf.terms();
  // [.., a, 1] == [.., a + 1]
  if (t.size() > 1 && t.back() == 1) {
    t.pop_back();
    t.back() += 1;
  }
  const bool want_even = parity == cf_parity::even;
  if (parity != cf_parity::canonical && (t.size() % 2 == 0) != want_even) {
    t.back() -= 1;
    t.emplace_back(1);
  }
  return continued_fraction::regular(std::move(t));
}

/// Regular expansion; a0 = floor(x) may be any integer.
inline continued_fraction cf_regular(const fraction& x, cf_parity parity = cf_parity::canonical) {
  if (x.is_infinity()) throw error(errc::not_finite, "continued fraction of infinity");
  std::vector<integer> terms;
  integer n = x.num(), d = x.den();
  while (d != 0) {
    integer a = floor_div(n, d);
    integer r = n - a * d;
    terms.push_back(std::move(a));
    n = std::move(d);
    d = std::move(r);
  }
  return cf_normalize(continued_fraction::regular(std::move(terms)), parity);
}

/// Negative (Hirzebruch) expansion: c0 = ceil(x), then c_j >= 2.
inline continued_fraction cf_negative(const fraction& x) {
  if (x.is_infinity()) throw error(errc::not_finite, "continued fraction of infinity");
  std::vector<integer> terms;
  integer n = x.num(), d = x.den();
  while (d != 0) {
    integer c = ceil_div(n, d);
    integer r = c * d - n;  // x = c - r/d, 0 <= r < d
    terms.push_back(std::move(c));
    n = std::move(d);
    d = std::move(r);
  }
  return continued_fraction::negative(std::move(terms));
}

/// Real root of `minpoly` isolated in the closed interval [lo, hi].
struct algebraic_number {
  polynomial minpoly;
  fraction lo;
  fraction hi;
};

namespace detail {

/// Sign of p(n/d) for d > 0, via the homogenized sum c_i n^i d^(deg-i).
inline int sign_at(const polynomial& p, const fraction& x) {
  if (p.is_zero()) return 0;
  integer acc = 0;
  integer dpow = 1;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * x.num() + c[k] * dpow;
    dpow *= x.den();
  }
  return acc.sign();
}

/// y^deg p(a + 1/y): the polynomial whose roots are 1/(r - a) for roots r of p.
inline polynomial invert_after_shift(const polynomial& p, const integer& a) {
  const polynomial shifted = taylor_shift(p, a);
  std::vector<integer> c = shifted.coeffs();
  c.resize(static_cast<std::size_t>(p.degree()) + 1);
  std::reverse(c.begin(), c.end());
  return polynomial(std::move(c));
}

/// Upper bound on |roots| (Cauchy): 1 + max |c_i / c_n|, rounded up.
inline integer root_bound(const polynomial& p) {
  const integer lead = abs(p.leading());
  integer m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, ceil_div(abs(p.coeffs()[i]), lead));
  return m + 1;
}

}  // namespace detail

/// Number of distinct real roots of p in the half-open interval (lo, hi], by Sturm's theorem.
inline int count_real_roots(const polynomial& p, const fraction& lo, const fraction& hi) {
  // Remainders scaled by positive constants keep the Sturm sign pattern intact.
  auto positive_remainder = [](polynomial a, const polynomial& b) {
    const integer lb = abs(b.leading());
    const int sb = b.leading().sign();
    while (!a.is_zero() && a.degree() >= b.degree()) {
      const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
      a = a * lb - polynomial::monomial(a.leading() * sb, shift) * b;
    }
    return a;
  };
  std::vector<polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    polynomial r = positive_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    r = exact_div(r, content(r));
    chain.push_back(-r);
  }
  auto variations = [&](const fraction& x) {
    int count = 0, last = 0;
    for (const auto& f : chain) {
      const int s = detail::sign_at(f, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return variations(lo) - variations(hi);
}

/// Raised by cf_algebraic when the isolated root is rational.
class rational_root_error : public error {
 public:
  explicit rational_root_error(fraction root)
      : error(errc::rational_root, "root is rational: " + root.to_string()), root_(std::move(root)) {}
  const fraction& root() const noexcept { return root_; }

 private:
  fraction root_;
};

/// Lazily extracts regular partial quotients of a real algebraic number, exactly.
///
/// Each step finds a = floor(root) by sign tests of the current polynomial at
/// integers, then replaces the polynomial by y^d p(a + 1/y) and maps the isolating
/// interval through x -> 1/(x - a).
class algebraic_cf_generator {
 public:
  explicit algebraic_cf_generator(algebraic_number x) : poly_(std::move(x.minpoly)), lo_(x.lo), hi_(x.hi) {
    if (poly_.degree() < 1) throw error(errc::invalid_arguments, "minimal polynomial must have degree >= 1");
    if (hi_ < lo_) std::swap(lo_, hi_);
    check_endpoint(lo_);
    check_endpoint(hi_);
    if (detail::sign_at(poly_, lo_) == detail::sign_at(poly_, hi_))
      throw error(errc::invalid_arguments, "polynomial does not change sign on the isolating interval");
  }

  /// Next partial quotient.
  integer next() {
    const int s_lo = detail::sign_at(poly_, lo_);
    // Smallest integer k in (lo, hi] with a sign change between lo and k.
    const integer k_lo = lo_.floor() + 1, k_hi = hi_.floor();
    integer a;
    if (k_lo > k_hi) {
      a = lo_.floor();
    } else {
      // Binary search: predicate "sign changed by k" is monotone because the root is unique.
      integer lo = k_lo, hi = k_hi + 1;  // hi means "no integer in range changes sign"
      while (lo < hi) {
        integer mid = floor_div(lo + hi, 2);
        const int s = detail::sign_at(poly_, fraction(mid));
        if (s == 0) throw rational_root_error(to_original(fraction(mid)));
        if (s != s_lo) hi = mid;
        else lo = mid + 1;
      }
      a = lo - 1;
    }
    // Narrow to (a, a+1) intersected with the interval, then invert.
    fraction new_lo = std::max(lo_, fraction(a));
    fraction new_hi = std::min(hi_, fraction(a + 1));
    polynomial next_poly = detail::invert_after_shift(poly_, a);
    const integer bound = detail::root_bound(next_poly);
    fraction inv_lo = (new_hi - fraction(a)).reciprocal();
    fraction inv_hi = new_lo == fraction(a) ? fraction(bound) : (new_lo - fraction(a)).reciprocal();
    if (inv_hi < inv_lo) std::swap(inv_lo, inv_hi);
    if (inv_lo < fraction(1)) inv_lo = fraction(1);
    history_.push_back(a);
    poly_ = std::move(next_poly);
    lo_ = inv_lo;
    hi_ = inv_hi;
    check_endpoint(lo_);
    check_endpoint(hi_);
    return a;
  }

  const std::vector<integer>& emitted() const noexcept { return history_; }

 private:
  void check_endpoint(const fraction& x) const {
    if (detail::sign_at(poly_, x) == 0) throw rational_root_error(to_original(x));
  }

  /// Map a point of the current variable back to the original one through the
  /// partial quotients consumed so far.
  fraction to_original(fraction y) const {
    for (auto it = history_.rbegin(); it != history_.rend(); ++it) y = fraction(*it) + y.reciprocal();
    return y;
  }

  polynomial poly_;
  fraction lo_;
  fraction hi_;
  std::vector<integer> history_;
};

/// First `count` regular partial quotients of an algebraic number.
inline continued_fraction cf_algebraic(const algebraic_number& x, std::size_t count) {
  if (count == 0) throw error(errc::invalid_arguments, "count must be >= 1");
  algebraic_cf_generator gen(x);
  std::vector<integer> terms;
  for (std::size_t i = 0; i < count; ++i) terms.push_back(gen.next());
  return continued_fraction::regular(std::move(terms));
}

/// Disjoint intervals [k/den, (k+1)/den] each holding one sign change of p, found by
/// scanning the grid of step 1/den inside the Cauchy root bound.
inline std::vector<algebraic_number> isolate_real_roots(const polynomial& p, const integer& den) {
  const integer bound = detail::root_bound(p) * den;
  std::vector<algebraic_number> out;
  int prev = detail::sign_at(p, fraction(-bound, den));
  for (integer k = -bound; k < bound; ++k) {
    const fraction right(k + 1, den);
    const int s = detail::sign_at(p, right);
    if (s == 0) throw rational_root_error(right);
    if (s != prev) out.push_back({p, fraction(k, den), right});
    prev = s;
  }
  return out;
}

}  // namespace qnum
