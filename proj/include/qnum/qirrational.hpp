#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnum/continued_fraction.hpp"
#include "qnum/error.hpp"
#include "qnum/modular.hpp"
#include "qnum/qrational.hpp"
#include "qnum/roots.hpp"
#include "qnum/series.hpp"

namespace qnum {

/// Source of regular partial quotients a0, a1, ... (a_i >= 1 for i >= 1).
///
/// A `prefix` stream is the known beginning of an infinite expansion and running past
/// its end is an error; a `finite` stream is the complete expansion of a rational.
class cf_stream {
 public:
  enum class kind { prefix, finite, periodic, algebraic };

  static cf_stream prefix(std::vector<integer> terms) { return cf_stream(kind::prefix, std::move(terms), {}); }
  static cf_stream finite(std::vector<integer> terms) { return cf_stream(kind::finite, std::move(terms), {}); }
  static cf_stream of(const fraction& x) { return finite(cf_regular(x).terms()); }

  /// preperiod followed by period repeated forever.
  static cf_stream periodic(std::vector<integer> preperiod, std::vector<integer> period) {
    if (period.empty()) throw error(errc::invalid_continued_fraction, "empty period");
    return cf_stream(kind::periodic, std::move(preperiod), std::move(period));
  }

  static cf_stream algebraic(algebraic_number x) {
    cf_stream s(kind::algebraic, {}, {});
    s.generator_ = std::make_shared<algebraic_cf_generator>(std::move(x));
    return s;
  }

  kind stream_kind() const noexcept { return kind_; }
  bool terminates() const noexcept { return kind_ == kind::finite; }

  /// Term i, or nothing past the end of a prefix or finite stream.
  std::optional<integer> term(std::size_t i) {
    switch (kind_) {
      case kind::prefix:
      case kind::finite:
        if (i < terms_.size()) return terms_[i];
        return std::nullopt;
      case kind::periodic:
        if (i < terms_.size()) return terms_[i];
        return period_[(i - terms_.size()) % period_.size()];
      case kind::algebraic:
        while (terms_.size() <= i) {
          terms_.push_back(generator_->next());
          check(terms_.size() - 1, terms_.back());
        }
        return terms_[i];
    }
    return std::nullopt;
  }

  /// Terms known without further generation (the whole expansion for finite streams).
  const std::vector<integer>& known_terms() const noexcept { return terms_; }

 private:
  cf_stream(kind k, std::vector<integer> terms, std::vector<integer> period)
      : kind_(k), terms_(std::move(terms)), period_(std::move(period)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) check(i, terms_[i]);
    for (const auto& t : period_) check(terms_.size() + 1, t);
    if (k == kind::finite && terms_.empty()) throw error(errc::invalid_continued_fraction, "empty expansion");
  }

  static void check(std::size_t index, const integer& t) {
    if (index > 0 && t < 1)
      throw error(errc::invalid_continued_fraction,
                  "partial quotient " + std::to_string(index) + " = " + t.str() + " is below 1");
  }

  kind kind_;
  std::vector<integer> terms_;
  std::vector<integer> period_;
  std::shared_ptr<algebraic_cf_generator> generator_;
};

namespace detail {

/// Polynomial kept modulo q^K as a dense coefficient vector of length K.
using truncated = std::vector<integer>;

inline truncated shift_mod(const truncated& p, std::size_t a) {
  truncated r(p.size());
  for (std::size_t i = 0; i + a < p.size(); ++i) r[i + a] = p[i];
  return r;
}

/// [a]_q p mod q^K by a sliding window sum.
inline truncated q_int_times(const truncated& p, std::size_t a) {
  truncated r(p.size());
  integer window = 0;
  for (std::size_t e = 0; e < p.size(); ++e) {
    window += p[e];
    if (e >= a) window -= p[e - a];
    r[e] = window;
  }
  return r;
}

inline truncated add_mod(truncated a, const truncated& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline truncated sub_mod(truncated a, const truncated& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

/// Running product T^a0 L^a1 T^a2 ... with entries mod q^K.
struct convergent_matrix {
  truncated a, b, c, d;
  std::size_t count = 0;

  explicit convergent_matrix(std::size_t K) : a(K), b(K), c(K), d(K) {
    a[0] = 1;
    d[0] = 1;
  }

  /// Right-multiply by the factor for partial quotient number `count`.
  void push(const integer& t) {
    if (count % 2 == 0) {
      if (t >= 0) {
        const auto n = static_cast<std::size_t>(t);
        // [[q^n, [n]], [0, 1]]
        b = add_mod(q_int_times(a, n), b);
        d = add_mod(q_int_times(c, n), d);
        a = shift_mod(a, n);
        c = shift_mod(c, n);
      } else {
        const auto n = static_cast<std::size_t>(-t);
        // [[1, -[n]], [0, q^n]]
        b = sub_mod(shift_mod(b, n), q_int_times(a, n));
        d = sub_mod(shift_mod(d, n), q_int_times(c, n));
      }
    } else {
      const auto n = static_cast<std::size_t>(t);
      // [[q^n, 0], [q [n], 1]]
      a = add_mod(shift_mod(a, n), shift_mod(q_int_times(b, n), 1));
      c = add_mod(shift_mod(c, n), shift_mod(q_int_times(d, n), 1));
    }
    ++count;
  }

  /// Value of the current convergent: the column the last factor leaves meaningful.
  std::pair<const truncated&, const truncated&> ratio() const {
    if (count % 2 == 1) return {b, d};
    return {a, c};
  }
};

inline series ratio_series(const truncated& num, const truncated& den) {
  const series n(0, num), dd(0, den);
  if (dd.is_zero()) throw error(errc::pole_at_every_point, "convergent denominator vanishes to working precision");
  try {
    return n / dd;
  } catch (const error& e) {
    if (e.code() != errc::non_integral) throw;
  }
  return to_integer(to_rational(n) / to_rational(dd));
}

inline long integer_log2(const integer& x) {
  return x == 0 ? -1 : static_cast<long>(boost::multiprecision::msb(abs(x)));
}

}  // namespace detail

/// Taylor-Laurent series of [x]_q through q^order for x given by a continued-fraction stream.
///
/// Convergents are formed with at least order + 2 partial quotients; the output is
/// accepted once three consecutive convergents agree through q^order.
inline series q_irrational(cf_stream& stream, long order) {
  if (order < 0) throw error(errc::invalid_arguments, "order must be >= 0");
  const auto a0 = stream.term(0);
  if (!a0) throw error(errc::insufficient_terms, "empty continued fraction");

  if (stream.terminates()) {
    const fraction x = cf_evaluate(continued_fraction::regular(stream.known_terms()));
    return taylor(q_rational(x).value, order).truncated(order);
  }

  const long margin = *a0 < 0 ? static_cast<long>(-*a0) : 0;
  std::size_t k = static_cast<std::size_t>(order + 2 + margin);
  std::size_t K = static_cast<std::size_t>(order + 8 + 2 * margin);
  for (;;) {
    const std::size_t needed = k + 2;
    for (std::size_t i = 0; i < needed; ++i)
      if (!stream.term(i))
        throw insufficient_terms(needed, "continued fraction has " + std::to_string(i) + " terms, " +
                                             std::to_string(needed) + " needed for order " + std::to_string(order));
    detail::convergent_matrix m(K);
    std::vector<series> values;
    for (std::size_t i = 0; i < needed; ++i) {
      m.push(*stream.term(i));
      if (i + 1 >= k) {
        const auto [num, den] = m.ratio();
        values.push_back(detail::ratio_series(num, den));
      }
    }
    bool precise = true;
    for (const auto& v : values) precise = precise && v.order() >= order;
    if (!precise) {
      K *= 2;
      continue;
    }
    const long lo = std::min({values[0].valuation(), values[1].valuation(), values[2].valuation()});
    bool stable = true;
    for (long e = lo; e <= order && stable; ++e)
      stable = values[0].coefficient(e) == values[1].coefficient(e) && values[1].coefficient(e) == values[2].coefficient(e);
    if (stable) return values[0].truncated(order);
    k += std::max<std::size_t>(4, k / 2);
  }
}

inline series q_irrational(cf_stream&& stream, long order) { return q_irrational(stream, order); }

/// (P + sqrt(Q)) / R with the square root taken as the series with positive leading
/// coefficient, together with a quadratic A X^2 + B X + C = 0 that it solves.
struct surd {
  polynomial P, Q, R;
  polynomial A, B, C;

  /// Series through q^order.
  series expand(long order) const {
    const long vr = static_cast<long>(R.valuation());
    const long work = order + 2 * vr + 4;
    const rational_series root = rational_series::from_polynomial(to_rational(Q), work).sqrt();
    const rational_series num = rational_series::from_polynomial(to_rational(P), work) + root;
    const rational_series value = num / rational_series::from_polynomial(to_rational(R), work + vr + 4);
    if (value.order() < order) throw error(errc::internal, "surd expansion lost precision");
    return to_integer(value.truncated(order));
  }

  /// Rationalized A X^2 + B X + C at X = this, as (rational part, coefficient of sqrt(Q)),
  /// both scaled by R^2.
  std::pair<polynomial, polynomial> residual(const polynomial& a, const polynomial& b, const polynomial& c) const {
    return {a * (P * P + Q) + b * R * P + c * R * R, polynomial{2} * a * P + b * R};
  }

  std::pair<polynomial, polynomial> residual() const { return residual(A, B, C); }

  std::string to_string() const {
    return "(" + P.to_string() + " + sqrt(" + Q.to_string() + "))/(" + R.to_string() + ")";
  }
};

/// The metallic number [k, k, k, ...]_q.
inline surd metallic(long k) {
  if (k < 1) throw error(errc::invalid_arguments, "metallic index must be >= 1");
  const auto n = static_cast<std::size_t>(k);
  const polynomial q{0, 1};
  const polynomial P = q * polynomial::q_integer(n) + (polynomial::monomial(1, n) + polynomial{1}) * polynomial{-1, 1};
  return {P, P * P + polynomial{0, 4}, polynomial{0, 2}, q, -P, polynomial{-1}};
}

namespace detail {

inline polynomial lowest_positive(polynomial g) { return !g.is_zero() && g.lowest() < 0 ? -g : g; }

inline std::optional<polynomial> try_exact_div(const polynomial& a, const polynomial& b) {
  try {
    return exact_div(a, b);
  } catch (const error&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// [x]_q for x = [p0; p1, ..., p0, p1, ...] purely periodic, as the fixed point of the
/// q-deformed matrix of one (even-length) period.
inline surd quadratic_fixed_point(const std::vector<integer>& period) {
  if (period.empty()) throw error(errc::invalid_continued_fraction, "empty period");
  for (const auto& t : period)
    if (t < 1) throw error(errc::invalid_continued_fraction, "periodic terms must be >= 1");
  std::vector<integer> w = period;
  if (w.size() % 2 != 0) w.insert(w.end(), period.begin(), period.end());

  mat2<polynomial> m{polynomial{1}, polynomial{}, polynomial{}, polynomial{1}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto n = static_cast<std::size_t>(w[i]);
    const mat2<polynomial> f = i % 2 == 0
                                   ? mat2<polynomial>{polynomial::monomial(1, n), polynomial::q_integer(n), polynomial{}, polynomial{1}}
                                   : mat2<polynomial>{polynomial::monomial(1, n), polynomial{}, polynomial::q_integer(n).shifted(1), polynomial{1}};
    m = m * f;
  }
  const integer one = 1;
  const matrix_z at_one(m.a.evaluate(one), m.b.evaluate(one), m.c.evaluate(one), m.d.evaluate(one));
  if (classify(at_one) != element_class::hyperbolic)
    throw error(errc::not_hyperbolic, "period matrix " + at_one.to_string() + " is not hyperbolic");

  // c X^2 + (d - a) X - b = 0
  polynomial A = m.c, B = m.d - m.a, C = -m.b;
  const polynomial content_gcd = detail::lowest_positive(gcd(gcd(A, B), C));
  A = exact_div(A, content_gcd);
  B = exact_div(B, content_gcd);
  C = exact_div(C, content_gcd);

  polynomial P = -B, R = polynomial{2} * A, Q = B * B - polynomial{4} * A * C;
  const polynomial g = detail::lowest_positive(gcd(P, R));
  if (g.degree() > 0 || abs(g.leading()) != 1) {
    if (auto reduced = detail::try_exact_div(Q, g * g)) {
      P = exact_div(P, g);
      R = exact_div(R, g);
      Q = *reduced;
    }
  }
  if (!Q.is_palindromic()) throw error(errc::internal, "discriminant " + Q.to_string() + " is not palindromic");

  const long check_order = 20;
  const series target = q_irrational(cf_stream::periodic({}, period), check_order);
  surd s{P, Q, R, A, B, C};
  if (s.expand(check_order) == target) return s;
  surd other{-P, Q, -R, A, B, C};
  if (other.expand(check_order) == target) return other;
  throw error(errc::internal, "neither branch of " + s.to_string() + " matches the continued fraction");
}

enum class approach_side { left, right };

struct stabilization_report {
  fraction x;
  approach_side side = approach_side::right;
  std::vector<fraction> sequence;
  series limit;          // stabilized prefix
  long stable_order = 0; // coefficients agree through q^stable_order
  bool matches_right = false;
  bool matches_left = false;
};

/// Rationals x_k = (k n + n') / (k m + m') approaching x = n/m from one side, where n'/m'
/// is a Farey neighbour of x on that side.
inline std::vector<fraction> one_sided_sequence(const fraction& x, approach_side side, std::size_t count) {
  if (x.is_infinity()) throw error(errc::not_finite, "one-sided approach to infinity");
  const matrix_z b = matrix_with_first_column(x);  // n d - b m = 1
  integer nn = b.b, mm = b.d;                       // left neighbour: nn m - n mm = -1
  if (side == approach_side::right) {
    nn = -nn;
    mm = -mm;
  }
  while (mm < 0) {
    nn += x.num();
    mm += x.den();
  }
  std::vector<fraction> out;
  for (std::size_t k = 1; k <= count; ++k) out.emplace_back(integer(k) * x.num() + nn, integer(k) * x.den() + mm);
  return out;
}

/// Expand q-rationals of a one-sided sequence converging to x and report the limit.
inline stabilization_report stabilization_experiment(const fraction& x, approach_side side, std::size_t count,
                                                     long order) {
  if (count < 2) throw error(errc::invalid_arguments, "count must be >= 2");
  stabilization_report r;
  r.x = x;
  r.side = side;
  r.sequence = one_sided_sequence(x, side, count);
  const series last = taylor(q_rational(r.sequence.back()).value, order);
  const series prev = taylor(q_rational(r.sequence[r.sequence.size() - 2]).value, order);
  const long lo = std::min(last.valuation(), prev.valuation());
  long e = lo;
  while (e <= order && last.coefficient(e) == prev.coefficient(e)) ++e;
  r.stable_order = e - 1;
  if (r.stable_order < lo) {
    r.limit = series::zero(lo, lo);
    return r;
  }
  r.limit = last.extended_down(lo).truncated(r.stable_order);
  const series right = taylor(q_rational(x).value, r.stable_order);
  const series left = taylor(left_q_rational(x).value, r.stable_order);
  r.matches_right = r.limit.agrees_with(right);
  r.matches_left = r.limit.agrees_with(left);
  return r;
}

// ---------------------------------------------------------------------------
// Radius of convergence

inline const double general_radius_bound = 3.0 - 2.0 * std::sqrt(2.0);
inline const double golden_radius = (3.0 - std::sqrt(5.0)) / 2.0;

enum class radius_method { denominator_roots, surd_discriminant_roots, coefficient_ratio };

inline std::string to_string(radius_method m) {
  switch (m) {
    case radius_method::denominator_roots: return "denominator-roots";
    case radius_method::surd_discriminant_roots: return "surd-discriminant-roots";
    case radius_method::coefficient_ratio: return "coefficient-ratio";
  }
  return "";
}

struct radius_report {
  double value = std::numeric_limits<double>::infinity();
  radius_method method = radius_method::denominator_roots;
  bool certified = false;
  bool infinite = false;
  bool above_general_bound = true;  // value > 3 - 2 sqrt 2
  std::optional<complex> nearest_singularity;
};

namespace detail {

/// Minimum modulus over the nonzero roots of the given polynomials.
inline radius_report min_root_modulus(const std::vector<polynomial>& factors, radius_method method) {
  radius_report r;
  r.method = method;
  r.certified = true;
  for (const auto& f : factors) {
    const polynomial body = f.is_zero() ? f : f.unshifted(f.valuation());
    if (body.degree() <= 0) continue;
    const root_result roots = polynomial_roots(body);
    r.certified = r.certified && roots.converged;
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
      r.certified = r.certified && roots.inclusion[i] <= 1e-9;
      const double mod = std::abs(roots.roots[i]);
      if (mod < r.value) {
        r.value = mod;
        r.nearest_singularity = roots.roots[i];
      }
    }
  }
  r.infinite = std::isinf(r.value);
  r.above_general_bound = r.value > general_radius_bound;
  return r;
}

inline polynomial squarefree_part(const polynomial& p) {
  if (p.degree() <= 0) return p;
  return primitive_part(exact_div(p, gcd(p, p.derivative())));
}

}  // namespace detail

/// Radius of convergence at q = 0 of [x]_q: smallest modulus of a nonzero root of its denominator.
inline radius_report radius(const qrational& x) {
  if (x.value.is_infinity()) throw error(errc::not_finite, "radius of 1/0");
  return detail::min_root_modulus({detail::squarefree_part(x.den())}, radius_method::denominator_roots);
}

/// Radius of the series of (P + sqrt Q)/R: branch points are roots of Q of odd
/// multiplicity, poles are nonzero roots of R at which P^2 != Q.
inline radius_report radius(const surd& s) {
  std::vector<polynomial> factors;
  const auto parts = squarefree_decomposition(s.Q);
  for (std::size_t i = 0; i < parts.size(); i += 2) factors.push_back(parts[i]);
  const polynomial touching = gcd(s.R, s.P * s.P - s.Q);
  factors.push_back(detail::squarefree_part(exact_div(s.R, touching)));
  return detail::min_root_modulus(factors, radius_method::surd_discriminant_roots);
}

/// Uncertified estimate from the growth of the coefficients: the slope of log|a_n|
/// between the largest coefficients of the windows [N/4, N/2) and [3N/4, N].
inline radius_report radius(const series& s) {
  const long first = s.valuation();
  const long n_total = s.order() - first + 1;
  if (n_total < 64) throw error(errc::invalid_arguments, "coefficient-ratio radius needs at least 64 coefficients");
  auto log_abs = [](const integer& c) {
    const long bits = detail::integer_log2(c);
    if (bits < 0) return -std::numeric_limits<double>::infinity();
    if (bits < 900) return std::log(std::abs(static_cast<double>(c)));
    const long drop = bits - 60;
    return std::log(static_cast<double>(integer(abs(c) >> drop))) + static_cast<double>(drop) * std::log(2.0);
  };
  auto peak = [&](long from, long to) {
    std::pair<long, double> best{from, -std::numeric_limits<double>::infinity()};
    for (long i = from; i < to; ++i) {
      const double l = log_abs(s.coefficient(first + i));
      if (l > best.second) best = {i, l};
    }
    return best;
  };
  const auto [n1, l1] = peak(n_total / 4, n_total / 2);
  const auto [n2, l2] = peak(3 * n_total / 4, n_total);
  radius_report r;
  r.method = radius_method::coefficient_ratio;
  r.certified = false;
  if (std::isinf(l1) || std::isinf(l2)) {
    r.infinite = true;
  } else {
    r.value = std::exp(-(l2 - l1) / static_cast<double>(n2 - n1));
  }
  r.above_general_bound = r.value > general_radius_bound;
  return r;
}

}  // namespace qnum
