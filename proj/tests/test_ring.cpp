#include <gtest/gtest.h>

#include <random>

#include "qnum/polynomial.hpp"
#include "qnum/rational_function.hpp"
#include "qnum/series.hpp"

using namespace qnum;

namespace {

polynomial P(std::initializer_list<long> c) {
  std::vector<integer> v;
  for (long x : c) v.emplace_back(x);
  return polynomial(std::move(v));
}

polynomial random_poly(std::mt19937& rng, int max_deg, int bound) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-bound, bound);
  std::vector<integer> v(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : v) c = coef(rng);
  return polynomial(std::move(v));
}

// Independent geometric-series expansion of 1/(1 + q): (-1)^k.
std::vector<integer> geometric_alternating(int n) {
  std::vector<integer> v;
  for (int k = 0; k < n; ++k) v.emplace_back(k % 2 == 0 ? 1 : -1);
  return v;
}

}  // namespace

TEST(Polynomial, ArithmeticAndRendering) {
  polynomial a = P({1, 1});
  EXPECT_EQ(a * a, P({1, 2, 1}));
  EXPECT_EQ((a * a).to_string(), "1 + 2*q + q^2");
  EXPECT_EQ(P({1, -1, 0, -3}).to_string(), "1 - q - 3*q^3");
  EXPECT_EQ(polynomial().to_string(), "0");
  EXPECT_EQ(P({0, 0, 0}).degree(), -1);
  EXPECT_EQ(parse_polynomial("x^3+x^2-2x-1"), P({-1, -2, 1, 1}));
  EXPECT_EQ(parse_polynomial("1 + 2*q + q^2"), P({1, 2, 1}));
  EXPECT_EQ(parse_polynomial("-q^2"), P({0, 0, -1}));
  EXPECT_THROW(parse_polynomial("x+y"), error);
  EXPECT_THROW(parse_polynomial(""), error);
}

TEST(Polynomial, GcdAndExactDivision) {
  polynomial f = P({1, 2, 1, 1}) * P({1, 1});
  EXPECT_EQ(exact_div(f, P({1, 1})), P({1, 2, 1, 1}));
  EXPECT_THROW(exact_div(P({1, 2, 1, 1}), P({1, 1})), error);
  EXPECT_EQ(gcd(f, P({1, 2, 1})), P({1, 1}));
  EXPECT_EQ(gcd(P({2, 4}), P({6, 12})), P({2, 4}));
  EXPECT_EQ(taylor_shift(P({-1, -1, 1}), 1), P({-1, 1, 1}));  // x^2-x-1 at x+1
}

TEST(Polynomial, Palindromic) {
  EXPECT_TRUE(P({1, 1, 2, 1, 1}).is_palindromic());
  EXPECT_FALSE(P({0, 1, 1}).is_palindromic());
  EXPECT_TRUE(P({0, 1, 1}).is_palindromic_up_to_shift());
  EXPECT_TRUE(P({1, 0, 0, 1}).is_palindromic());
}

TEST(Reduce, Examples) {
  auto r = rational_function::reduce(P({0, 1, 1}), P({1, 1}));
  EXPECT_EQ(r.num(), P({0, 1}));
  EXPECT_EQ(r.den(), P({1}));

  // Trial-division oracle: (1+q) divides both inputs, and the quotients share no
  // further linear factor over the small integer roots that could occur.
  polynomial n = P({1, 2, 1, 1}) * P({1, 1}), d = P({1, 1}) * P({1, 1});
  auto s = rational_function::reduce(n, d);
  EXPECT_EQ(s.num(), P({1, 2, 1, 1}));
  EXPECT_EQ(s.den(), P({1, 1}));
  for (int root = -3; root <= 3; ++root) {
    const bool both = s.num().evaluate(integer(root)) == 0 && s.den().evaluate(integer(root)) == 0;
    EXPECT_FALSE(both) << root;
  }

  auto z = rational_function::reduce(P({}), P({1, 1}));
  EXPECT_EQ(z.num(), P({}));
  EXPECT_EQ(z.den(), P({1}));

  EXPECT_THROW(rational_function::reduce(P({}), P({})), error);
  auto inf = rational_function::reduce(P({3, 1}), P({}));
  EXPECT_TRUE(inf.is_infinity());
}

TEST(Reduce, SignAndContentCanonical) {
  auto r = rational_function::reduce(P({-2, -2}), P({-4, 0, -4}));
  EXPECT_EQ(r.num(), P({1, 1}));
  EXPECT_EQ(r.den(), P({2, 0, 2}));
  auto s = rational_function::reduce(P({1}), P({0, -1}));
  EXPECT_EQ(s.num(), P({-1}));
  EXPECT_EQ(s.den(), P({0, 1}));
}

TEST(Reduce, InvariantUnderCommonFactor) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    polynomial f = random_poly(rng, 4, 5), g = random_poly(rng, 4, 5), h = random_poly(rng, 3, 4);
    if (g.is_zero() || h.is_zero()) continue;
    EXPECT_EQ(rational_function::reduce(f * h, g * h), rational_function::reduce(f, g));
  }
}

TEST(Taylor, Examples) {
  // [8/5]_q
  auto f = rational_function::reduce(P({1, 2, 2, 2, 1}), P({1, 2, 1, 1}));
  series s = taylor(f, 8);
  EXPECT_EQ(s.valuation(), 0);
  std::vector<integer> want{1, 0, 1, -1, 2, -4, 7, -12, 21};
  EXPECT_EQ(s.coeffs(), want);

  // q/(1+q) = q * sum (-q)^k
  series g = taylor(rational_function::reduce(P({0, 1}), P({1, 1})), 4);
  auto geo = geometric_alternating(4);
  EXPECT_EQ(g.valuation(), 1);
  EXPECT_EQ(g.coeffs(), geo);

  series h = taylor(rational_function::reduce(P({-1}), P({0, 1})), 2);
  EXPECT_EQ(h.valuation(), -1);
  EXPECT_EQ(h.coefficient(-1), -1);
  EXPECT_EQ(h.coefficient(0), 0);
  EXPECT_EQ(h.order(), 2);

  EXPECT_THROW(taylor(rational_function::infinity(), 3), error);
}

TEST(Taylor, TruncationConsistent) {
  auto f = rational_function::reduce(P({1, 3, 4, 5, 4, 3, 1}), P({1, 3, 3, 3, 2, 1}));
  series big = taylor(f, 30);
  for (long m : {0L, 5L, 17L, 29L}) EXPECT_EQ(big.truncated(m), taylor(f, m));
}

TEST(SeriesArith, SqrtInvert) {
  series one = series::from_polynomial(P({1}), 6);
  EXPECT_EQ(one.sqrt(), one);

  series a = series::from_polynomial(P({1, -4}), 4);
  series r = a.sqrt();
  std::vector<integer> want{1, -2, -2, -4, -10};
  EXPECT_EQ(r.coeffs(), want);
  EXPECT_EQ(r * r, a);  // squaring oracle

  series b = series::from_polynomial(P({1, 1}), 3);
  std::vector<integer> inv{1, -1, 1, -1};
  EXPECT_EQ(b.inverse().coeffs(), inv);

  EXPECT_THROW(series::from_polynomial(P({0, 1}), 4).sqrt(), error);
  EXPECT_THROW(series::from_polynomial(P({2}), 4).sqrt(), error);
  EXPECT_THROW(series::from_polynomial(P({1, 1}), 4).sqrt(), error);  // 1/2 is not an integer
  EXPECT_THROW(series::zero(0, 4).inverse(), error);
}

TEST(SeriesArith, InverseProperty) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    polynomial p = random_poly(rng, 6, 9);
    if (p.is_zero()) continue;
    std::vector<integer> c = p.coeffs();
    c[0] = (trial % 2) ? 1 : -1;
    series s = series::from_polynomial(polynomial(c), 12).shifted(trial % 5 - 2);
    series prod = s * s.inverse();
    EXPECT_EQ(prod.valuation(), 0);
    EXPECT_EQ(prod.coefficient(0), 1);
    for (long e = 1; e <= prod.order(); ++e) EXPECT_EQ(prod.coefficient(e), 0);
  }
}

TEST(SubstituteQInverse, Examples) {
  polynomial p = P({1, 1, 1});
  rational_function mirrored = rational_function(p).substitute_q_inverse() * rational_function(P({0, 0, 1}));
  EXPECT_EQ(mirrored, rational_function(p));

  laurent_polynomial two(P({1, 1}));
  laurent_polynomial inv = two.substitute_q_inverse();
  EXPECT_EQ(inv.valuation(), -1);
  EXPECT_EQ(inv.body(), P({1, 1}));

  auto five_halves = rational_function::reduce(P({1, 2, 1, 1}), P({1, 1}));
  auto m = five_halves.substitute_q_inverse();
  EXPECT_EQ(m.num(), P({1, 1, 2, 1}));
  EXPECT_EQ(m.den(), P({0, 0, 1, 1}));
  EXPECT_EQ(m.substitute_q_inverse(), five_halves);
}

TEST(SubstituteQInverse, Involution) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    polynomial f = random_poly(rng, 5, 6), g = random_poly(rng, 5, 6);
    if (g.is_zero()) continue;
    auto r = rational_function::reduce(f, g);
    EXPECT_EQ(r.substitute_q_inverse().substitute_q_inverse(), r);
    laurent_polynomial l(trial % 7 - 3, f);
    EXPECT_EQ(l.substitute_q_inverse().substitute_q_inverse(), l);
  }
}
