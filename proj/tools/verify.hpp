#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "qnum/analysis.hpp"
#include "qnum/modular.hpp"
#include "qnum/qirrational.hpp"
#include "qnum/qrational.hpp"
#include "qnum/snake.hpp"

namespace qnum {

struct verify_limits {
  long max_den = 60;
  long depth = 10;
  long order = 32;
  long count = 1000;
  unsigned seed = 1;
};

inline constexpr verify_limits verify_ceilings{200, 16, 400, 100000, 0};

struct suite_result {
  std::string name;
  long passed = 0;
  long failed = 0;
  std::vector<std::string> failures;  // first few only
  double seconds = 0;

  bool ok() const { return failed == 0; }

  void check(bool cond, const std::function<std::string()>& what) {
    if (cond) {
      ++passed;
      return;
    }
    ++failed;
    if (failures.size() < 10) failures.push_back(what());
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"methods", "positivity", "unimodal", "trace",  "farey",
                                              "snake",   "stabilize",  "hankel",   "vieta",  "catalan-motzkin",
                                              "symmetry", "radius",    "fixtures"};
  return names;
}

namespace detail {

inline bool coprime(long n, long m) { return gcd(integer(n), integer(m)) == 1; }

/// Every coefficient from the lowest nonzero one to the leading one is positive.
inline bool positive_without_gaps(const polynomial& p) {
  if (p.is_zero()) return false;
  for (std::size_t i = p.valuation(); i < p.size(); ++i)
    if (p[i] <= 0) return false;
  return true;
}

inline generator_word random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), kind(0, 2);
  generator_word w;
  for (int i = len(rng); i > 0; --i) {
    switch (kind(rng)) {
      case 0: w.push_T(1); break;
      case 1: w.push_T(-1); break;
      default: w.push_S(); break;
    }
  }
  return w;
}

inline fraction random_fraction(std::mt19937& rng, long max_den, long span) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long m = den(rng);
  std::uniform_int_distribution<long> num(-span * m, span * m);
  return fraction(num(rng), m);
}

inline void suite_methods(suite_result& r, const verify_limits& l) {
  for (long m = 1; m <= l.max_den; ++m)
    for (long n = -m; n <= 2 * m; ++n) {
      if (!coprime(n, m)) continue;
      const fraction x(n, m);
      const rational_function ref = q_rational(x).value;
      for (qmethod method : {qmethod::regcf, qmethod::recurrence, qmethod::farey})
        r.check(q_rational(x, method).value == ref, [&] { return x.to_string() + ": " + to_string(method) + " differs"; });
      const auto [a, b] = ref.at_one();
      r.check(fraction(a, b) == x, [&] { return x.to_string() + ": value at q=1 is " + fraction(a, b).to_string(); });
    }
  std::mt19937 rng(l.seed);
  for (long t = 0; t < l.count; ++t) {
    const generator_word w = random_word(rng, 12);
    const fraction x = random_fraction(rng, 20, 2);
    const matrix_z a = w.to_matrix();
    const fraction ax(a.a * x.num() + a.b * x.den(), a.c * x.num() + a.d * x.den());
    r.check(q_rational(ax).value == moebius(q_deform(w), q_rational(x).value),
            [&] { return "equivariance fails for " + w.to_string() + " at " + x.to_string(); });
  }
}

inline void suite_positivity(suite_result& r, const verify_limits& l) {
  std::mt19937 rng(l.seed);
  for (long t = 0; t < l.count; ++t) {
    fraction x = random_fraction(rng, l.max_den, 3), y = random_fraction(rng, l.max_den, 3);
    if (x == y) continue;
    if (x < y) std::swap(x, y);
    const polynomial d = diff_poly(x, y);
    r.check(positive_without_gaps(d), [&] { return x.to_string() + ", " + y.to_string() + ": " + d.to_string(); });
    const bool neighbours = abs(x.num() * y.den() - x.den() * y.num()) == 1;
    const bool monomial = d.degree() == static_cast<long>(d.valuation());
    r.check(monomial == neighbours, [&] { return x.to_string() + ", " + y.to_string() + ": monomial test"; });
  }
  for (const auto& node : farey_tree(static_cast<std::size_t>(std::min(l.depth, 12L)))) {
    auto unit = [](const polynomial& d) { return d.degree() == static_cast<long>(d.valuation()) && d.leading() == 1; };
    r.check(unit(diff_poly(node.x, node.left_parent)), [&] { return node.x.to_string() + " vs its left parent"; });
    if (!node.right_parent.is_infinity())
      r.check(unit(diff_poly(node.right_parent, node.x)), [&] { return node.x.to_string() + " vs its right parent"; });
  }
}

inline void suite_unimodal(suite_result& r, const verify_limits& l) {
  for (long m = 1; m <= l.max_den; ++m)
    for (long n = 1; n <= 2 * m; ++n) {
      if (!coprime(n, m)) continue;
      const qrational v = q_rational(fraction(n, m));
      r.check(is_unimodal(v.num()) && is_unimodal(v.den()),
              [&] { return std::to_string(n) + "/" + std::to_string(m) + " not unimodal"; });
    }
  for (long n = 0; n <= 30; ++n)
    for (long k = 0; k <= n; ++k) {
      const polynomial c = q_binomial(n, k);
      r.check(is_unimodal(c) && c.is_palindromic(),
              [&] { return "q-binomial " + std::to_string(n) + " " + std::to_string(k); });
    }
}

inline void suite_trace(suite_result& r, const verify_limits& l) {
  std::mt19937 rng(l.seed);
  for (long t = 0; t < l.count; ++t) {
    const generator_word w = random_word(rng, 20);
    const polynomial tr = trace_poly(q_deform(w));
    r.check(tr.is_palindromic_up_to_shift(), [&] { return w.to_string() + ": " + tr.to_string(); });
  }
  const generator_word b = decompose(matrix_z(5, 2, 2, 1));
  r.check(b.to_string() == "T3 S T2 S T2 S T S T S", [&] { return "B decomposes as " + b.to_string(); });
  const qmatrix bq = q_deform(b);
  r.check(bq == qmatrix(polynomial{0, 1, 2, 1, 1}, polynomial{1, 1}, polynomial{0, 1, 1}, polynomial{1}),
          [] { return "B_q entries"; });
  r.check(trace_poly(bq) == polynomial{1, 1, 2, 1, 1}, [] { return "trace of B_q"; });
}

inline void suite_farey(suite_result& r, const verify_limits& l) {
  for (const auto& node : farey_tree(static_cast<std::size_t>(l.depth)))
    r.check(node.value == q_rational(node.x).value, [&] { return "node " + node.x.to_string(); });
}

inline void suite_snake(suite_result& r, const verify_limits& l) {
  for (long n = 1; n <= l.max_den; ++n)
    for (long m = 1; m <= n; ++m) {
      if (!coprime(n, m)) continue;
      const fraction x(n, m);
      const qrational v = q_rational(x);
      r.check(count_paths_by_area(snake_graph(x)) == v.num(), [&] { return x.to_string() + " numerator"; });
      r.check(snake_denominator(x) == v.den(), [&] { return x.to_string() + " denominator"; });
    }
}

inline void suite_stabilize(suite_result& r, const verify_limits& l) {
  const long order = std::min(l.order, 16L);
  for (const fraction& x : {fraction(0), fraction(1), fraction(1, 2), fraction(2, 3)}) {
    const auto right = stabilization_experiment(x, approach_side::right, static_cast<std::size_t>(order + 4), order);
    const auto left = stabilization_experiment(x, approach_side::left, static_cast<std::size_t>(order + 4), order);
    r.check(right.matches_right && right.stable_order >= order, [&] { return x.to_string() + " from the right"; });
    r.check(left.matches_left && left.stable_order >= order, [&] { return x.to_string() + " from the left"; });
  }
  const std::vector<std::pair<fraction, rational_function>> left_values{
      {fraction(0), rational_function::reduce(polynomial{-1, 1}, polynomial{0, 1})},
      {fraction(1), rational_function(polynomial{0, 1})},
      {fraction(2), rational_function(polynomial{1, 0, 1})},
      {fraction::infinity(), rational_function::reduce(polynomial{1}, polynomial{1, -1})}};
  for (const auto& [x, v] : left_values)
    r.check(left_q_rational(x).value == v, [&] { return "left value at " + x.to_string(); });
  for (const auto& period : std::vector<std::vector<integer>>{{1}, {2}, {1, 2}, {3, 1}}) {
    const series full = q_irrational(cf_stream::periodic({}, period), l.order);
    for (long n = 0; n < l.order; n += 3)
      r.check(q_irrational(cf_stream::periodic({}, period), n) == full.truncated(n),
              [&] { return "prefix through q^" + std::to_string(n) + " changes"; });
  }
}

inline void suite_hankel(suite_result& r, const verify_limits&) {
  const auto a = target_coefficients("golden", 100);
  const std::vector<std::vector<integer>> rows{
      {1, 1, 1, 0, -1, -1, -1, 0}, {1, 0, -1, 1, -1, 0, 1, -1}, {1, 1, 1, 0, -1, -1, -1, 0}, {1, -1, 0, 0, -1, 1, 0, 0}};
  for (long k = 0; k <= 3; ++k) {
    const auto h = hankel(a, k, 44);
    r.check(std::vector<integer>(h.values.begin(), h.values.begin() + 8) == rows[static_cast<std::size_t>(k)],
            [&] { return "golden row " + std::to_string(k); });
    const auto p = detect_periodicity(h.values);
    r.check(p.kind == periodicity::antiperiodic && p.period == 4, [&] { return "golden row " + std::to_string(k) + " period"; });
    if (k <= 2) r.check(somos4_check(h.values).holds, [&] { return "somos-4 on golden row " + std::to_string(k); });
  }
  const auto m = motzkin_numbers(80);
  r.check(hankel(m, 0, 30).values == std::vector<integer>(30, integer(1)), [] { return "Motzkin row 0"; });
  const auto m1 = hankel(m, 1, 30).values;
  const auto p = detect_periodicity(m1);
  r.check(p.kind == periodicity::antiperiodic && p.period == 3, [] { return "Motzkin row 1"; });
  const auto c = catalan_numbers(80);
  r.check(hankel(c, 0, 30).values == std::vector<integer>(30, integer(1)), [] { return "Catalan row 0"; });
  r.check(hankel(c, 1, 30).values == std::vector<integer>(30, integer(1)), [] { return "Catalan row 1"; });
}

inline void suite_vieta(suite_result& r, const verify_limits& l) {
  for (cubic_equation e : {cubic_equation::heptagon, cubic_equation::nonagon}) {
    const auto v = vieta_check(e, std::max(5L, l.order));
    r.check(v.product_residual == 0, [&] { return to_string(e) + " product residual " + v.product_residual.str(); });
    r.check(v.pair_residual == 0, [&] { return to_string(e) + " pair residual " + v.pair_residual.str(); });
  }
}

inline void suite_catalan_motzkin(suite_result& r, const verify_limits& l) {
  const auto c = catalan_motzkin_check(std::max(1L, l.order));
  r.check(c.catalan_residual == 0, [&] { return "Catalan residual " + c.catalan_residual.str(); });
  r.check(c.motzkin_residual == 0, [&] { return "Motzkin residual " + c.motzkin_residual.str(); });
}

inline void suite_symmetry(suite_result& r, const verify_limits& l) {
  const long bound = std::min(l.max_den, 50L);
  for (long m = 1; m <= bound; ++m)
    for (long n = -bound; n <= bound; ++n) {
      if (!coprime(n, m)) continue;
      const fraction x(n, m);
      const auto s = symmetry_check(x);
      r.check(s.negation_holds, [&] { return x.to_string() + " negation"; });
      if (s.reciprocal_holds) r.check(*s.reciprocal_holds, [&] { return x.to_string() + " reciprocal"; });
      const rational_function v = q_rational(x).value;
      r.check(v.substitute_q_inverse().substitute_q_inverse() == v, [&] { return x.to_string() + " mirror twice"; });
    }
}

inline void suite_radius(suite_result& r, const verify_limits& l) {
  const long bound = std::min(l.max_den, 60L);
  for (long m = 2; m <= bound; ++m)
    for (long n = 1; n < m; ++n) {
      if (!coprime(n, m)) continue;
      const auto rep = radius(q_rational(fraction(n, m)));
      r.check(rep.certified && rep.value > general_radius_bound,
              [&] { return std::to_string(n) + "/" + std::to_string(m) + " radius " + std::to_string(rep.value); });
      r.check(rep.value >= golden_radius - 1e-9,
              [&] { return std::to_string(n) + "/" + std::to_string(m) + " below the rational bound"; });
    }
  for (long k = 1; k <= 6; ++k) {
    const auto rep = radius(metallic(k));
    r.check(rep.certified && rep.value > general_radius_bound, [&] { return "metallic " + std::to_string(k); });
  }
  r.check(std::abs(radius(metallic(1)).value - 0.381966) < 1e-6, [] { return "golden radius"; });
}

inline void suite_fixtures(suite_result& r, const verify_limits&) {
  for (const auto& f : load_fixtures()) {
    const auto res = check_fixture(f);
    r.check(res.pass, [&] { return f.name + ": " + res.detail; });
  }
}

}  // namespace detail

inline suite_result run_suite(const std::string& name, const verify_limits& limits) {
  suite_result r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  if (name == "methods") detail::suite_methods(r, limits);
  else if (name == "positivity") detail::suite_positivity(r, limits);
  else if (name == "unimodal") detail::suite_unimodal(r, limits);
  else if (name == "trace") detail::suite_trace(r, limits);
  else if (name == "farey") detail::suite_farey(r, limits);
  else if (name == "snake") detail::suite_snake(r, limits);
  else if (name == "stabilize") detail::suite_stabilize(r, limits);
  else if (name == "hankel") detail::suite_hankel(r, limits);
  else if (name == "vieta") detail::suite_vieta(r, limits);
  else if (name == "catalan-motzkin") detail::suite_catalan_motzkin(r, limits);
  else if (name == "symmetry") detail::suite_symmetry(r, limits);
  else if (name == "radius") detail::suite_radius(r, limits);
  else if (name == "fixtures") detail::suite_fixtures(r, limits);
  else throw error(errc::invalid_arguments, "unknown suite '" + name + "'");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace qnum
