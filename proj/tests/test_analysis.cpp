#include <gtest/gtest.h>

#include <random>

#include "qnum/analysis.hpp"

using namespace qnum;

namespace {

std::vector<integer> Z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

integer cofactor_det(const std::vector<std::vector<integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  integer d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const integer t = m[0][j] * cofactor_det(minor);
    d += j % 2 == 0 ? t : integer(-t);
  }
  return d;
}

std::vector<integer> head(const std::vector<integer>& v, std::size_t n) { return {v.begin(), v.begin() + n}; }

}  // namespace

TEST(Hankel, BareissMatchesCofactors) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    std::vector<std::vector<integer>> m(n, std::vector<integer>(n));
    for (auto& row : m)
      for (auto& x : row) x = val(rng) * (trial % 3 == 0 ? (val(rng) % 2) : 1);
    EXPECT_EQ(bareiss_determinant(m), cofactor_det(m));
  }
}

TEST(Hankel, GoldenRows) {
  const auto a = target_coefficients("golden", 100);
  EXPECT_EQ(hankel(a, 0, 8).values, Z({1, 1, 1, 0, -1, -1, -1, 0}));
  EXPECT_EQ(hankel(a, 1, 8).values, Z({1, 0, -1, 1, -1, 0, 1, -1}));
  EXPECT_EQ(hankel(a, 2, 8).values, Z({1, 1, 1, 0, -1, -1, -1, 0}));
  EXPECT_EQ(hankel(a, 3, 8).values, Z({1, -1, 0, 0, -1, 1, 0, 0}));
  for (long k = 0; k <= 3; ++k) {
    const auto h = hankel(a, k, 44);
    const auto p = detect_periodicity(h.values);
    EXPECT_EQ(p.kind, periodicity::antiperiodic) << k;
    EXPECT_EQ(p.period, 4) << k;
    for (const auto& v : h.values) EXPECT_LE(abs(v), 1);
    if (k <= 2) {
      EXPECT_TRUE(somos4_check(h.values).holds) << k;
    }
  }
}

TEST(Hankel, Sequences) {
  EXPECT_EQ(head(catalan_numbers(10), 6), Z({1, 1, 2, 5, 14, 42}));
  EXPECT_EQ(head(motzkin_numbers(10), 7), Z({1, 1, 2, 4, 9, 21, 51}));
  const auto m = motzkin_numbers(60);
  EXPECT_EQ(hankel(m, 0, 20).values, std::vector<integer>(20, integer(1)));
  const auto m1 = hankel(m, 1, 24).values;
  EXPECT_EQ(head(m1, 6), Z({1, 1, 0, -1, -1, 0}));
  const auto p = detect_periodicity(m1);
  EXPECT_EQ(p.kind, periodicity::antiperiodic);
  EXPECT_EQ(p.period, 3);
  const auto c = catalan_numbers(60);
  EXPECT_EQ(hankel(c, 0, 20).values, std::vector<integer>(20, integer(1)));
  EXPECT_EQ(hankel(c, 1, 20).values, std::vector<integer>(20, integer(1)));
}

TEST(Hankel, Errors) {
  EXPECT_THROW(hankel(Z({1, 2, 3}), 0, 5), insufficient_terms);
  EXPECT_THROW(hankel(Z({1, 2, 3}), -1, 1), error);
  EXPECT_THROW(target_coefficients("bronze", 5), error);
}

TEST(Periodicity, Examples) {
  auto p = detect_periodicity(Z({1, 1, 1, 0, -1, -1, -1, 0, 1, 1, 1, 0}));
  EXPECT_EQ(p.kind, periodicity::antiperiodic);
  EXPECT_EQ(p.period, 4);
  p = detect_periodicity(Z({1, 1, 0, -1, -1, 0, 1, 1, 0}));
  EXPECT_EQ(p.kind, periodicity::antiperiodic);
  EXPECT_EQ(p.period, 3);
  p = detect_periodicity(Z({1, 1, 1, 1}));
  EXPECT_EQ(p.kind, periodicity::periodic);
  EXPECT_EQ(p.period, 1);
  p = detect_periodicity(Z({1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(p.kind, periodicity::none);
}

TEST(Somos, Examples) {
  const auto bad = somos4_check(Z({1, 1, 1, 1, 2}));
  EXPECT_FALSE(bad.holds);
  EXPECT_EQ(bad.first_violation, 0u);
  EXPECT_THROW(somos4_check(Z({1, 1})), error);
}

TEST(Hankel, SilverRowsAreSmall) {
  const auto a = target_coefficients("silver", 120);
  int clean = 0;
  for (long k = 0; k <= 5; ++k) {
    const auto h = hankel(a, k, 40);
    const bool small = std::all_of(h.values.begin(), h.values.end(), [](const integer& v) { return abs(v) <= 1; });
    const auto p = detect_periodicity(h.values);
    if (small && p.kind != periodicity::none) ++clean;
  }
  EXPECT_GE(clean, 4);
}

TEST(CatalanMotzkin, ResidualsVanish) {
  const auto r = catalan_motzkin_check(50);
  EXPECT_EQ(r.catalan_residual, 0);
  EXPECT_EQ(r.motzkin_residual, 0);
  EXPECT_EQ(head(r.catalan, 6), Z({1, 1, 2, 5, 14, 42}));
  EXPECT_EQ(head(r.motzkin, 7), Z({1, 1, 2, 4, 9, 21, 51}));
}

TEST(CatalanMotzkin, PerturbedSeriesFails) {
  auto c = catalan_numbers(30);
  c[7] += 1;
  const laurent_matrix ts{laurent_polynomial(1, polynomial{1}), laurent_polynomial(1, polynomial{-1}),
                          laurent_polynomial(1, polynomial{1}), laurent_polynomial{}};
  const series C(0, c);
  EXPECT_NE(max_abs_through(moebius(ts, C) - C.shifted(1), 20), 0);
}

TEST(Vieta, Heptagon) {
  const auto r = vieta_check(cubic_equation::heptagon, 30);
  EXPECT_EQ(r.product_residual, 0);
  EXPECT_EQ(r.pair_residual, 0);
  ASSERT_EQ(r.root_series.size(), 3u);
  EXPECT_EQ(r.b_series.order(), 30);
  const auto again = vieta_check(cubic_equation::heptagon, 30);
  EXPECT_EQ(again.b_series, r.b_series);
}

TEST(Vieta, Nonagon) {
  const auto r = vieta_check(cubic_equation::nonagon, 30);
  EXPECT_EQ(r.product_residual, 0);
  EXPECT_EQ(r.pair_residual, 0);
  EXPECT_THROW(vieta_check(cubic_equation::nonagon, 3), error);
}

TEST(Vieta, GenericCubicFails) {
  // discriminant 229 is not a square
  const polynomial p{1, -4, 0, 1};
  const auto roots = isolate_real_roots(p, integer(10000));
  ASSERT_EQ(roots.size(), 3u);
  std::vector<series> x;
  for (const auto& r : roots) x.push_back(q_irrational(cf_stream::algebraic(r), 20));
  const series e3 = x[0] * x[1] * x[2];
  bool constant = true;
  for (long e = e3.valuation(); e <= 10; ++e)
    if (e != e3.leading_exponent() && e3.coefficient(e) != 0) constant = false;
  EXPECT_FALSE(constant);
}

TEST(Symmetry, Examples) {
  for (const fraction& x : {fraction(1), fraction(2), fraction(5, 2), fraction(-3, 7)}) {
    const auto r = symmetry_check(x);
    EXPECT_TRUE(r.negation_holds) << x.to_string();
    ASSERT_TRUE(r.reciprocal_holds.has_value());
    EXPECT_TRUE(*r.reciprocal_holds) << x.to_string();
  }
  EXPECT_EQ(q_rational(fraction(1, 2)).value, rational_function::reduce(polynomial{0, 1}, polynomial{1, 1}));
  const auto z = symmetry_check(fraction(0));
  EXPECT_TRUE(z.negation_holds);
  EXPECT_FALSE(z.reciprocal_holds.has_value());
}

TEST(Symmetry, AllSmallFractions) {
  for (long m = 1; m <= 50; ++m)
    for (long n = -50; n <= 50; ++n) {
      if (n == 0 || gcd(integer(n), integer(m)) != 1) continue;
      const auto r = symmetry_check(fraction(n, m));
      ASSERT_TRUE(r.negation_holds) << n << "/" << m;
      ASSERT_TRUE(*r.reciprocal_holds) << n << "/" << m;
    }
}

TEST(Symmetry, PrintedOperatorsOnlyMatchAtZero) {
  EXPECT_TRUE(printed_operator_check(fraction(0)).involution_left);
  for (const fraction& x : {fraction(1), fraction(2), fraction(1, 2), fraction(-1), fraction(5, 2)}) {
    const auto r = printed_operator_check(x);
    EXPECT_FALSE(r.j1_negation || r.j2_reciprocal || r.involution_left) << x.to_string();
  }
}
