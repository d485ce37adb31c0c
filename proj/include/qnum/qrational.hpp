#pragma once

#include <array>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "qnum/continued_fraction.hpp"
#include "qnum/error.hpp"
#include "qnum/laurent.hpp"
#include "qnum/modular.hpp"
#include "qnum/rational_function.hpp"

namespace qnum {

/// q-deformed rational [x]_q together with the rational it deforms.
struct qrational {
  fraction source;
  rational_function value;

  const polynomial& num() const { return value.num(); }
  const polynomial& den() const { return value.den(); }
};

enum class qmethod { negcf, regcf, recurrence, farey };

inline constexpr std::array<qmethod, 4> all_qmethods{qmethod::negcf, qmethod::regcf, qmethod::recurrence,
                                                     qmethod::farey};

inline std::string to_string(qmethod m) {
  switch (m) {
    case qmethod::negcf: return "negcf";
    case qmethod::regcf: return "regcf";
    case qmethod::recurrence: return "recurrence";
    case qmethod::farey: return "farey";
  }
  return "";
}

inline qmethod parse_qmethod(std::string_view s) {
  for (qmethod m : all_qmethods)
    if (to_string(m) == s) return m;
  throw error(errc::parse_error, "unknown method '" + std::string(s) + "'");
}

namespace detail {

inline rational_function q_int(const integer& n) { return rational_function(laurent_polynomial::q_integer(static_cast<long>(n))); }

inline rational_function q_pow(const integer& e) {
  return rational_function(laurent_polynomial::monomial(1, static_cast<long>(e)));
}

/// [n]_{q^-1}
inline rational_function q_int_inverse(const integer& n) {
  return rational_function(laurent_polynomial::q_integer(static_cast<long>(n)).substitute_q_inverse());
}

/// [c0]_q - q^(c0-1) / (...), evaluated from the innermost term outwards.
inline rational_function via_negative_cf(const fraction& x) {
  const auto terms = cf_negative(x).terms();
  rational_function v = q_int(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) v = q_int(terms[i]) - q_pow(terms[i] - 1) / v;
  return v;
}

/// [a0]_q + q^a0 / ([a1]_{1/q} + q^-a1 / ([a2]_q + ...)) on the even-length expansion.
inline rational_function via_regular_cf(const fraction& x) {
  const auto terms = cf_regular(x, cf_parity::even).terms();
  std::size_t i = terms.size() - 1;
  rational_function v = q_int_inverse(terms[i]);
  while (i-- > 0) {
    if (i % 2 == 0) v = q_int(terms[i]) + q_pow(terms[i]) / v;
    else v = q_int_inverse(terms[i]) + q_pow(-terms[i]) / v;
  }
  return v;
}

/// Convergent recurrence N_{i+1} = [c_{i+1}] N_i - q^(c_i - 1) N_{i-1} on Laurent polynomials.
inline rational_function via_recurrence(const fraction& x) {
  const auto terms = cf_negative(x).terms();
  laurent_polynomial n_prev(polynomial{1}), m_prev;
  laurent_polynomial n = laurent_polynomial::q_integer(static_cast<long>(terms[0])), m(polynomial{1});
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const laurent_polynomial ci = laurent_polynomial::q_integer(static_cast<long>(terms[i]));
    const laurent_polynomial w = laurent_polynomial::monomial(1, static_cast<long>(terms[i - 1]) - 1);
    laurent_polynomial n_next = ci * n - w * n_prev;
    laurent_polynomial m_next = ci * m - w * m_prev;
    n_prev = std::move(n);
    m_prev = std::move(m);
    n = std::move(n_next);
    m = std::move(m_next);
  }
  return rational_function(n) / rational_function(m);
}

/// Endpoint of a Farey edge: fraction and unreduced q-numerator/denominator.
struct farey_point {
  fraction x;
  polynomial num;
  polynomial den;
};

inline farey_point farey_mediant(const farey_point& l, const farey_point& r, std::size_t d) {
  const polynomial w = polynomial::monomial(1, d);
  return {fraction(l.x.num() + r.x.num(), l.x.den() + r.x.den()), l.num + w * r.num, l.den + w * r.den};
}

inline farey_point farey_zero() { return {fraction(0), polynomial{}, polynomial{1}}; }
inline farey_point farey_infinity() { return {fraction::infinity(), polynomial{1}, polynomial{}}; }

/// Stern-Brocot descent with weighted mediants, for x > 0.
inline rational_function via_farey_positive(const fraction& x) {
  farey_point l = farey_zero(), r = farey_infinity();
  std::size_t d = 0;
  for (;;) {
    farey_point m = farey_mediant(l, r, d);
    if (m.x == x) return rational_function::reduce(m.num, m.den);
    if (x < m.x) {
      r = std::move(m);
      d = 1;
    } else {
      l = std::move(m);
      d += 1;
    }
  }
}

inline rational_function via_farey(const fraction& x) {
  if (x > fraction(0)) return via_farey_positive(x);
  // [x]_q = T_q^-k [x + k]_q with x + k > 0.
  const integer k = 1 - x.floor();
  const rational_function shifted = via_farey_positive(x + fraction(k));
  return moebius(qmatrix::T(-static_cast<long>(k)), shifted);
}

}  // namespace detail

/// [x]_q by the requested method; infinity maps to 1/0.
inline qrational q_rational(const fraction& x, qmethod method = qmethod::negcf) {
  if (x.is_infinity()) return {x, rational_function::infinity()};
  switch (method) {
    case qmethod::negcf: return {x, detail::via_negative_cf(x)};
    case qmethod::regcf: return {x, detail::via_regular_cf(x)};
    case qmethod::recurrence: return {x, detail::via_recurrence(x)};
    case qmethod::farey: return {x, detail::via_farey(x)};
  }
  throw error(errc::internal, "unhandled method");
}

/// A unimodular matrix whose first column is (n, m).
inline matrix_z matrix_with_first_column(const fraction& x) {
  if (x.is_infinity()) return matrix_z();
  // n d - b m = 1 via the extended Euclidean algorithm.
  integer old_r = x.num(), r = x.den(), old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const integer qt = floor_div(old_r, r);
    old_r = std::exchange(r, old_r - qt * r);
    old_s = std::exchange(s, old_s - qt * s);
    old_t = std::exchange(t, old_t - qt * t);
  }
  // old_s n + old_t m = old_r = +-1
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  return {x.num(), -old_t, x.den(), old_s};
}

/// (q - 1)/q, the left counterpart of [0]_q.
inline rational_function left_anchor() { return rational_function::reduce(polynomial{-1, 1}, polynomial{0, 1}); }

/// [x]_q^flat = A_q((q-1)/q) for any A with A(0) = x. The value is computed from two
/// different choices of A and must agree.
inline qrational left_q_rational(const fraction& x) {
  const matrix_z b = matrix_with_first_column(x);
  const matrix_z a1 = b * matrix_z::S();
  const matrix_z a2 = b * matrix_z::T(3) * matrix_z::S();
  const rational_function v1 = moebius(q_deform(a1), left_anchor());
  const rational_function v2 = moebius(q_deform(a2), left_anchor());
  if (!(v1 == v2)) throw error(errc::internal, "left q-rational depends on the chosen matrix for " + x.to_string());
  return {x, v1};
}

/// One node of the weighted Stern-Brocot tree. The node is the mediant of the edge
/// (left_parent, right_parent) of weight `edge_weight`; its two descending edges
/// carry weights `left_edge_weight` (towards left_parent) and `right_edge_weight`.
struct farey_node {
  fraction x;
  rational_function value;
  fraction left_parent;
  fraction right_parent;
  std::size_t depth = 0;
  std::size_t edge_weight = 0;
  std::size_t left_edge_weight = 1;
  std::size_t right_edge_weight = 1;
};

/// Breadth-first weighted Farey tree of levels 0..depth.
inline std::vector<farey_node> farey_tree(std::size_t depth) {
  struct pending {
    detail::farey_point l, r;
    std::size_t d;
    std::size_t level;
  };
  std::vector<farey_node> out;
  std::deque<pending> queue;
  queue.push_back({detail::farey_zero(), detail::farey_infinity(), 0, 0});
  while (!queue.empty()) {
    pending p = std::move(queue.front());
    queue.pop_front();
    detail::farey_point m = detail::farey_mediant(p.l, p.r, p.d);
    out.push_back({m.x, rational_function::reduce(m.num, m.den), p.l.x, p.r.x, p.level, p.d, 1, p.d + 1});
    if (p.level < depth) {
      queue.push_back({p.l, m, 1, p.level + 1});
      queue.push_back({m, p.r, p.d + 1, p.level + 1});
    }
  }
  return out;
}

/// N_x M_y - M_x N_y for x > y.
inline polynomial diff_poly(const fraction& x, const fraction& y) {
  if (y.is_infinity() || (!x.is_infinity() && x <= y))
    throw error(errc::order_violation, x.to_string() + " is not greater than " + y.to_string());
  const qrational qx = q_rational(x), qy = q_rational(y);
  return qx.num() * qy.den() - qx.den() * qy.num();
}

struct shape_report {
  bool unimodal = false;
  bool palindromic = false;
  bool monic = false;
};

/// Coefficients from q^0 up to the degree weakly rise then weakly fall.
inline bool is_unimodal(const polynomial& p) {
  const auto& c = p.coeffs();
  std::size_t i = 1;
  while (i < c.size() && c[i] >= c[i - 1]) ++i;
  while (i < c.size() && c[i] <= c[i - 1]) ++i;
  return i >= c.size();
}

inline shape_report check_shape(const polynomial& p) {
  return {is_unimodal(p), p.is_palindromic(), !p.is_zero() && p.leading() == 1};
}

}  // namespace qnum
