#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "qnum/polynomial.hpp"

namespace qnum {

using complex = std::complex<double>;

struct root_result {
  std::vector<complex> roots;
  /// Radius of a disc around each root guaranteed to contain a true root: n |p(z)/p'(z)|.
  std::vector<double> inclusion;
  bool converged = false;
};

namespace detail {

inline std::vector<double> to_double_coeffs(const polynomial& p) {
  std::vector<double> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.push_back(static_cast<double>(x));
  return c;
}

inline std::pair<complex, complex> eval_with_derivative(const std::vector<double>& c, complex z) {
  complex v = 0, dv = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    dv = dv * z + v;
    v = v * z + c[k];
  }
  return {v, dv};
}

}  // namespace detail

/// All complex roots of p (with multiplicity) by Aberth-Ehrlich simultaneous iteration
/// in double precision. Roots at q = 0 are returned exactly.
inline root_result polynomial_roots(const polynomial& p, double tol = 1e-12, int max_iter = 1000) {
  root_result out;
  if (p.degree() <= 0) {
    out.converged = true;
    return out;
  }
  const std::size_t zeros = p.valuation();
  for (std::size_t i = 0; i < zeros; ++i) {
    out.roots.emplace_back(0.0, 0.0);
    out.inclusion.push_back(0.0);
  }
  const polynomial body = p.unshifted(zeros);
  const std::vector<double> c = detail::to_double_coeffs(body);
  const std::size_t n = c.size() - 1;
  if (n == 0) {
    out.converged = true;
    return out;
  }

  // Initial points on a circle whose radius is the geometric mean of |roots|.
  const double r0 = std::pow(std::abs(c[0] / c[n]), 1.0 / static_cast<double>(n));
  std::vector<complex> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(r0, 2 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4);

  for (int iter = 0; iter < max_iter; ++iter) {
    double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto [v, dv] = detail::eval_with_derivative(c, z[k]);
      if (v == complex(0)) continue;
      const complex ratio = v / dv;
      complex sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      const complex step = ratio / (1.0 - ratio * sum);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < tol) {
      out.converged = true;
      break;
    }
  }
  for (const complex& r : z) {
    const auto [v, dv] = detail::eval_with_derivative(c, r);
    out.roots.push_back(r);
    out.inclusion.push_back(dv == complex(0) ? std::numeric_limits<double>::infinity()
                                             : static_cast<double>(n) * std::abs(v / dv));
  }
  return out;
}

/// Factors of p by multiplicity (Yun): result[i] collects the roots of multiplicity i+1.
inline std::vector<polynomial> squarefree_decomposition(const polynomial& p) {
  std::vector<polynomial> out;
  if (p.degree() <= 0) return out;
  const polynomial dp = p.derivative();
  const polynomial a0 = gcd(p, dp);
  polynomial b = exact_div(p, a0);
  polynomial c = exact_div(dp, a0);
  polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    polynomial a = gcd(b, d);
    out.push_back(primitive_part(a));
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

}  // namespace qnum
