#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnum/continued_fraction.hpp"
#include "qnum/error.hpp"
#include "qnum/modular.hpp"
#include "qnum/qirrational.hpp"
#include "qnum/qrational.hpp"
#include "qnum/series.hpp"

namespace qnum {

// ---------------------------------------------------------------- Hankel

/// Determinants Δ_0^{(k)}, ..., Δ_{count-1}^{(k)} of a sequence a_1, a_2, ...
struct hankel_sequence {
  long shift = 0;
  std::vector<integer> values;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
inline integer bareiss_determinant(std::vector<std::vector<integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// coeffs[0] is a_1; Δ_n^{(k)} = det(a_{k+i+j-1})_{i,j=1..n}, Δ_0 = 1.
inline hankel_sequence hankel(const std::vector<integer>& coeffs, long shift, long count) {
  if (shift < 0 || count < 1) throw error(errc::invalid_arguments, "hankel needs shift >= 0 and count >= 1");
  const std::size_t needed = static_cast<std::size_t>(std::max(0L, shift + 2 * (count - 1) - 1));
  if (coeffs.size() < needed)
    throw insufficient_terms(needed, "hankel with shift " + std::to_string(shift) + " and " + std::to_string(count) +
                                         " terms has " + std::to_string(coeffs.size()) + " coefficients");
  hankel_sequence h{shift, {}};
  for (long n = 0; n < count; ++n) {
    std::vector<std::vector<integer>> m(static_cast<std::size_t>(n), std::vector<integer>(static_cast<std::size_t>(n)));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coeffs[static_cast<std::size_t>(shift + i + j)];
    h.values.push_back(bareiss_determinant(std::move(m)));
  }
  return h;
}

enum class periodicity { periodic, antiperiodic, none };

inline std::string to_string(periodicity p) {
  switch (p) {
    case periodicity::periodic: return "periodic";
    case periodicity::antiperiodic: return "antiperiodic";
    case periodicity::none: return "none";
  }
  return "?";
}

struct periodicity_report {
  periodicity kind = periodicity::none;
  long period = 0;
  long checked_length = 0;
};

/// Smallest p <= n/2 with v[i+p] = v[i] or v[i+p] = -v[i] across the whole window.
inline periodicity_report detect_periodicity(const std::vector<integer>& v) {
  periodicity_report r;
  r.checked_length = static_cast<long>(v.size());
  for (std::size_t p = 1; 2 * p <= v.size(); ++p) {
    bool per = true, anti = true;
    for (std::size_t i = 0; i + p < v.size() && (per || anti); ++i) {
      per = per && v[i + p] == v[i];
      anti = anti && v[i + p] == -v[i];
    }
    if (anti && !per) return {periodicity::antiperiodic, static_cast<long>(p), r.checked_length};
    if (per) return {periodicity::periodic, static_cast<long>(p), r.checked_length};
  }
  return r;
}

struct somos_report {
  bool holds = true;
  std::optional<std::size_t> first_violation;
};

/// d_{n+4} d_n = d_{n+3} d_{n+1} - d_{n+2}^2 for every window of the sequence.
inline somos_report somos4_check(const std::vector<integer>& d) {
  if (d.size() < 5) throw error(errc::invalid_arguments, "somos-4 check needs at least 5 terms");
  for (std::size_t n = 0; n + 4 < d.size(); ++n)
    if (d[n + 4] * d[n] != d[n + 3] * d[n + 1] - d[n + 2] * d[n + 2]) return {false, n};
  return {};
}

// ---------------------------------------------------------------- sequences

/// First n coefficients of the Catalan generating function, from C = 1 + q C^2.
inline std::vector<integer> catalan_numbers(std::size_t n) {
  std::vector<integer> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0) {
      c[0] = 1;
      continue;
    }
    for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  }
  return c;
}

/// First n coefficients of the Motzkin generating function, from M = 1 + q M + q^2 M^2.
inline std::vector<integer> motzkin_numbers(std::size_t n) {
  std::vector<integer> m(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0) {
      m[0] = 1;
      continue;
    }
    m[k] = m[k - 1];
    for (std::size_t i = 0; k >= 2 && i <= k - 2; ++i) m[k] += m[i] * m[k - 2 - i];
  }
  return m;
}

/// Named coefficient sources for Hankel experiments: golden, silver, metallic-<k>,
/// catalan, motzkin. The result starts at a_1 = constant term.
inline std::vector<integer> target_coefficients(const std::string& name, std::size_t n) {
  if (name == "catalan") return catalan_numbers(n);
  if (name == "motzkin") return motzkin_numbers(n);
  long k = 0;
  if (name == "golden") k = 1;
  else if (name == "silver") k = 2;
  else if (name.rfind("metallic-", 0) == 0) {
    try {
      k = std::stol(name.substr(9));
    } catch (const std::exception&) {
      k = 0;
    }
  }
  if (k < 1) throw error(errc::parse_error, "unknown target '" + name + "'");
  const series s = q_irrational(cf_stream::periodic({}, {integer(k)}), static_cast<long>(n) - 1);
  std::vector<integer> out;
  for (long e = 0; e < static_cast<long>(n); ++e) out.push_back(s.coefficient(e));
  return out;
}

// ---------------------------------------------------------------- Moebius on series

/// (a X + b) / (c X + d) for Laurent polynomial entries given as q^shift * polynomial.
struct laurent_matrix {
  laurent_polynomial a, b, c, d;
};

inline series as_series(const laurent_polynomial& p, long order) {
  if (p.is_zero()) return series::zero(std::min(0L, order), order);
  return series::from_polynomial(p.body(), order - p.valuation()).shifted(p.valuation());
}

inline series moebius(const laurent_matrix& m, const series& x) {
  const long o = x.order() + 8;
  auto mul = [&](const laurent_polynomial& p, const series& s) {
    return p.is_zero() ? series::zero(s.valuation(), s.order()) : as_series(p, o) * s;
  };
  const series num = mul(m.a, x) + as_series(m.b, o);
  const series den = mul(m.c, x) + as_series(m.d, o);
  return num / den;
}

inline integer max_abs_through(const series& s, long order) {
  if (s.order() < order)
    throw error(errc::internal, "residual known only through q^" + std::to_string(s.order()));
  integer m = 0;
  for (long e = s.valuation(); e <= order; ++e) m = std::max(m, integer(abs(s.coefficient(e))));
  return m;
}

struct catalan_motzkin_report {
  long order = 0;
  std::vector<integer> catalan;
  std::vector<integer> motzkin;
  integer catalan_residual;
  integer motzkin_residual;
};

/// Residuals of T_q S_q (C) = q C and S_q (M) = q M + (q - 1)/q through q^order.
inline catalan_motzkin_report catalan_motzkin_check(long order) {
  if (order < 1) throw error(errc::invalid_arguments, "order must be >= 1");
  const long work = order + 6;
  const series C(0, catalan_numbers(static_cast<std::size_t>(work) + 1));
  const series M(0, motzkin_numbers(static_cast<std::size_t>(work) + 1));
  const laurent_matrix ts{laurent_polynomial(1, polynomial{1}), laurent_polynomial(1, polynomial{-1}),
                          laurent_polynomial(1, polynomial{1}), laurent_polynomial{}};
  const laurent_matrix s{laurent_polynomial{}, laurent_polynomial(0, polynomial{-1}), laurent_polynomial(1, polynomial{1}),
                         laurent_polynomial{}};
  const series cres = moebius(ts, C) - C.shifted(1);
  const series mres = moebius(s, M) - M.shifted(1) - as_series(laurent_polynomial(-1, polynomial{-1, 1}), work);
  catalan_motzkin_report r;
  r.order = order;
  r.catalan = catalan_numbers(static_cast<std::size_t>(order) + 1);
  r.motzkin = motzkin_numbers(static_cast<std::size_t>(order) + 1);
  r.catalan_residual = max_abs_through(cres, order);
  r.motzkin_residual = max_abs_through(mres, order);
  return r;
}

// ---------------------------------------------------------------- cubic Vieta identities

enum class cubic_equation { heptagon, nonagon };

inline std::string to_string(cubic_equation e) { return e == cubic_equation::heptagon ? "heptagon" : "nonagon"; }

inline cubic_equation parse_cubic_equation(std::string_view s) {
  if (s == "heptagon") return cubic_equation::heptagon;
  if (s == "nonagon") return cubic_equation::nonagon;
  throw error(errc::parse_error, "unknown equation '" + std::string(s) + "' (heptagon|nonagon)");
}

inline polynomial cubic_polynomial(cubic_equation e) {
  return e == cubic_equation::heptagon ? polynomial{-1, -2, 1, 1} : polynomial{1, -3, 0, 1};
}

struct vieta_report {
  cubic_equation equation = cubic_equation::heptagon;
  long order = 0;
  std::vector<algebraic_number> roots;
  std::vector<series> root_series;
  series b_series;
  /// Max |coefficient| through q^order of X1 X2 X3 - e3 and of e2 - (its expected form).
  integer product_residual;
  integer pair_residual;

  bool holds() const { return product_residual == 0 && pair_residual == 0; }
};

/// [x_i]_q for the three real roots of the heptagon or nonagon cubic and the two
/// symmetric-function identities they satisfy.
inline vieta_report vieta_check(cubic_equation eq, long order) {
  if (order < 5) throw error(errc::invalid_arguments, "vieta check needs order >= 5");
  vieta_report r;
  r.equation = eq;
  r.order = order;
  r.roots = isolate_real_roots(cubic_polynomial(eq), integer(10000));
  if (r.roots.size() != 3) throw error(errc::internal, "expected three real roots");
  const long work = order + 8;
  for (const auto& x : r.roots) r.root_series.push_back(q_irrational(cf_stream::algebraic(x), work));
  const series& x1 = r.root_series[0];
  const series& x2 = r.root_series[1];
  const series& x3 = r.root_series[2];
  const series e1 = x1 + x2 + x3;
  const series e2 = x1 * x2 + x2 * x3 + x3 * x1;
  const series e3 = x1 * x2 * x3;
  r.b_series = e1.truncated(order);
  const long w = work + 4;
  if (eq == cubic_equation::heptagon) {
    r.product_residual = max_abs_through(e3 - as_series(laurent_polynomial::monomial(1, -3), w), order);
    r.pair_residual =
        max_abs_through(e2 + e1.shifted(-1) + as_series(laurent_polynomial::monomial(3, -2), w), order);
  } else {
    r.product_residual = max_abs_through(e3 + as_series(laurent_polynomial::monomial(1, 0), w), order);
    r.pair_residual = max_abs_through(e2 - e1 + as_series(laurent_polynomial::monomial(3, 0), w), order);
  }
  return r;
}

// ---------------------------------------------------------------- symmetries

struct symmetry_report {
  fraction x;
  bool negation_holds = false;
  std::optional<bool> reciprocal_holds;
};

/// [-x]_q = -q^-1 [x]_{q^-1} and, for x not 0 or inf, [1/x]_q = 1 / [x]_{q^-1}.
inline symmetry_report symmetry_check(const fraction& x) {
  symmetry_report r{x, false, std::nullopt};
  if (x.is_infinity()) {
    r.negation_holds = q_rational(x).value.is_infinity();
    return r;
  }
  const rational_function mirrored = q_rational(x).value.substitute_q_inverse();
  const rational_function minus_q_inv = rational_function::reduce(polynomial{-1}, polynomial{0, 1});
  r.negation_holds = q_rational(-x).value == minus_q_inv * mirrored;
  if (x != fraction(0)) r.reciprocal_holds = q_rational(x.reciprocal()).value == mirrored.reciprocal();
  return r;
}

/// Comparison of three printed operators against the values they are meant to produce:
/// J1 [x] vs [-x], J2 [x] vs [1/x], and the involution I [x] vs the left value.
struct printed_operator_report {
  fraction x;
  bool j1_negation = false;
  bool j2_reciprocal = false;
  bool involution_left = false;
};

inline printed_operator_report printed_operator_check(const fraction& x) {
  const rational_function v = q_rational(x).value;
  const mat2<polynomial> j1{polynomial{0, -1}, polynomial{-1, 1}, polynomial{0, -1, 1}, polynomial{0, 1}};
  const mat2<polynomial> j2{polynomial{-1, 1}, polynomial{1}, polynomial{0, 1}, polynomial{1, -1}};
  const mat2<polynomial> inv{polynomial{-1}, polynomial{-1, 1}, polynomial{1, -1}, polynomial{0, 1}};
  printed_operator_report r{x};
  r.j1_negation = moebius(j1, v) == q_rational(-x).value;
  if (x != fraction(0) && !x.is_infinity()) r.j2_reciprocal = moebius(j2, v) == q_rational(x.reciprocal()).value;
  r.involution_left = moebius(inv, v.substitute_q_inverse()) == left_q_rational(x).value;
  return r;
}

}  // namespace qnum
