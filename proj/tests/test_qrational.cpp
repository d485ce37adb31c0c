#include <gtest/gtest.h>

#include <random>

#include "qnum/qrational.hpp"

using namespace qnum;

namespace {

polynomial P(std::initializer_list<long> c) {
  std::vector<integer> v;
  for (long x : c) v.emplace_back(x);
  return polynomial(std::move(v));
}

rational_function F(std::initializer_list<long> n, std::initializer_list<long> d) {
  return rational_function::reduce(P(n), P(d));
}

rational_function q_value(long n, long d, qmethod m = qmethod::negcf) { return q_rational(fraction(n, d), m).value; }

}  // namespace

TEST(QRational, PaperFixtures) {
  EXPECT_EQ(q_value(1, 2), F({0, 1}, {1, 1}));
  EXPECT_EQ(q_value(5, 2), F({1, 2, 1, 1}, {1, 1}));
  EXPECT_EQ(q_value(5, 3), F({1, 1, 2, 1}, {1, 1, 1}));
  EXPECT_EQ(q_value(3, 2), F({1, 1, 1}, {1, 1}));
  EXPECT_EQ(q_value(8, 5), F({1, 2, 2, 2, 1}, {1, 2, 1, 1}));
  EXPECT_EQ(q_value(13, 8), F({1, 2, 3, 3, 3, 1}, {1, 2, 2, 2, 1}));
  EXPECT_EQ(q_value(21, 13), F({1, 3, 4, 5, 4, 3, 1}, {1, 3, 3, 3, 2, 1}));
  EXPECT_EQ(q_value(12, 5), F({1, 2, 3, 3, 2, 1}, {1, 1, 2, 1}));
  EXPECT_EQ(q_value(29, 12), F({1, 3, 5, 6, 6, 5, 2, 1}, {1, 2, 3, 3, 2, 1}));
  EXPECT_EQ(q_value(70, 29), F({1, 3, 7, 11, 13, 13, 11, 7, 3, 1}, {1, 2, 5, 6, 6, 5, 3, 1}));
}

TEST(QRational, FixedPointsAndInfinity) {
  EXPECT_EQ(q_value(0, 1), rational_function());
  EXPECT_EQ(q_value(1, 1), rational_function(P({1})));
  for (qmethod m : all_qmethods) EXPECT_TRUE(q_rational(fraction::infinity(), m).value.is_infinity());
  EXPECT_EQ(q_value(2, 1), rational_function(P({1, 1})));
}

TEST(QRational, NegativeValuesAreLaurent) {
  // [-1]_q = -q^-1, [-1/2]_q = T_q^-1 [1/2]_q = ([1/2] - 1)/q = -1/(q + q^2)
  EXPECT_EQ(q_value(-1, 1), F({-1}, {0, 1}));
  EXPECT_EQ(q_value(-1, 2), F({-1}, {0, 1, 1}));
  for (long n = -30; n <= 0; ++n)
    for (long d = 1; d <= 12; ++d) {
      if (gcd(integer(n), integer(d)) != 1) continue;
      const rational_function ref = q_value(n, d);
      for (qmethod m : all_qmethods) EXPECT_EQ(q_value(n, d, m), ref) << n << "/" << d << " " << to_string(m);
    }
}

TEST(QRational, FourMethodsAgreeExhaustive) {
  for (long n = 0; n <= 119; ++n)
    for (long d = 1; n + d <= 120; ++d) {
      if (gcd(integer(n), integer(d)) != 1) continue;
      const rational_function ref = q_value(n, d);
      for (qmethod m : {qmethod::regcf, qmethod::recurrence, qmethod::farey})
        ASSERT_EQ(q_value(n, d, m), ref) << n << "/" << d << " " << to_string(m);
      const auto [a, b] = ref.at_one();
      ASSERT_EQ(fraction(a, b), fraction(n, d));
    }
}

TEST(QRational, Equivariance) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> kind(0, 2), len(0, 12), num(-40, 40), den(1, 20);
  for (int trial = 0; trial < 300; ++trial) {
    generator_word w;
    for (int i = len(rng); i > 0; --i) {
      const int k = kind(rng);
      if (k == 0) w.push_T(1);
      else if (k == 1) w.push_T(-1);
      else w.push_S();
    }
    const fraction x(num(rng), den(rng));
    const matrix_z a = w.to_matrix();
    const integer top = a.a * x.num() + a.b * x.den(), bottom = a.c * x.num() + a.d * x.den();
    const fraction ax(top, bottom);
    EXPECT_EQ(q_rational(ax).value, moebius(q_deform(w), q_rational(x).value)) << w.to_string() << " " << x.to_string();
  }
}

TEST(QRational, FibonacciRecurrence) {
  std::vector<long> fib{1, 1};
  while (fib.size() < 16) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  std::vector<polynomial> nums, dens;
  for (std::size_t i = 0; i + 1 < fib.size(); ++i) {
    const qrational r = q_rational(fraction(fib[i + 1], fib[i]));
    nums.push_back(r.num());
    dens.push_back(r.den());
  }
  const polynomial three = polynomial::q_integer(3), q2 = polynomial::monomial(1, 2);
  for (std::size_t i = 2; i + 2 < nums.size(); ++i) {
    EXPECT_EQ(nums[i + 2], three * nums[i] - q2 * nums[i - 2]) << i;
    EXPECT_EQ(dens[i + 2], three * dens[i] - q2 * dens[i - 2]) << i;
  }
}

TEST(LeftQRational, Fixtures) {
  EXPECT_EQ(left_q_rational(fraction(1)).value, rational_function(P({0, 1})));
  EXPECT_EQ(left_q_rational(fraction(2)).value, rational_function(P({1, 0, 1})));
  EXPECT_EQ(left_q_rational(fraction::infinity()).value, F({1}, {1, -1}));
  EXPECT_EQ(left_q_rational(fraction(0)).value, F({-1, 1}, {0, 1}));
}

TEST(LeftQRational, AgreesAtOne) {
  for (long n = -20; n <= 40; ++n)
    for (long d = 1; d <= 15; ++d) {
      if (gcd(integer(n), integer(d)) != 1) continue;
      const auto [a, b] = left_q_rational(fraction(n, d)).value.at_one();
      EXPECT_EQ(fraction(a, b), fraction(n, d));
    }
}

TEST(LeftQRational, StabilizerOfZero) {
  // [[1,0],[1,1]] = S T^-1 S fixes 0 and its deformation fixes both [0]_q and (q-1)/q.
  const generator_word l = generator_word::parse("S T-1 S");
  EXPECT_TRUE(l.to_matrix().projectively_equal(matrix_z(1, 0, 1, 1)));
  const qmatrix lq = q_deform(l);
  EXPECT_EQ(lq, qmatrix(P({0, 1}), P({}), P({0, 1}), P({1})));
  EXPECT_EQ(moebius(lq, rational_function()), rational_function());
  EXPECT_EQ(moebius(lq, left_anchor()), left_anchor());
}

TEST(Farey, TreeMatchesRegularMethod) {
  const auto tree = farey_tree(12);
  EXPECT_EQ(tree.size(), (std::size_t{1} << 13) - 1);
  EXPECT_EQ(tree[0].x, fraction(1));
  EXPECT_EQ(tree[0].value, rational_function(P({1})));
  EXPECT_EQ(tree[0].edge_weight, 0u);
  EXPECT_EQ(tree[1].x, fraction(1, 2));
  EXPECT_EQ(tree[1].value, F({0, 1}, {1, 1}));
  EXPECT_EQ(tree[1].edge_weight, 1u);
  EXPECT_EQ(tree[4].x, fraction(2, 3));
  EXPECT_EQ(tree[4].edge_weight, 2u);
  EXPECT_EQ(tree[4].value, F({0, 1, 1}, {1, 1, 1}));
  for (const auto& node : tree) ASSERT_EQ(node.value, q_rational(node.x, qmethod::regcf).value) << node.x.to_string();
}

TEST(DiffPoly, ExamplesAndErrors) {
  EXPECT_EQ(diff_poly(fraction(5, 2), fraction(2)), P({0, 0, 0, 1}));
  EXPECT_EQ(diff_poly(fraction(5, 2), fraction(1, 2)), P({1, 2, 2, 2, 1}));
  EXPECT_EQ(diff_poly(fraction(1), fraction(0)), P({1}));
  EXPECT_THROW(diff_poly(fraction(1, 2), fraction(5, 2)), error);
  EXPECT_THROW(diff_poly(fraction(1, 2), fraction(1, 2)), error);
}

TEST(DiffPoly, PositivityAndNeighbors) {
  std::mt19937 rng(33);
  std::uniform_int_distribution<int> den(1, 40), num(0, 160);
  for (int trial = 0; trial < 2000; ++trial) {
    fraction x(num(rng), den(rng)), y(num(rng), den(rng));
    if (x == y) continue;
    if (x < y) std::swap(x, y);
    const polynomial p = diff_poly(x, y);
    ASSERT_FALSE(p.is_zero());
    for (std::size_t e = p.valuation(); e < p.size(); ++e) ASSERT_GT(p[e], 0) << x.to_string() << " " << y.to_string();
    const integer det = x.num() * y.den() - x.den() * y.num();
    const bool monomial = p.degree() == static_cast<long>(p.valuation()) && p.leading() == 1;
    EXPECT_EQ(monomial, det == 1);
  }
}

TEST(Shape, Examples) {
  auto s = check_shape(P({1, 1, 2, 1, 1}));
  EXPECT_TRUE(s.unimodal);
  EXPECT_TRUE(s.palindromic);
  EXPECT_TRUE(s.monic);
  EXPECT_TRUE(check_shape(P({1, 3, 4, 5, 4, 3, 1})).unimodal);
  EXPECT_FALSE(check_shape(P({1, 3, 3, 3, 2, 1})).palindromic);
  EXPECT_FALSE(check_shape(P({1, 0, 0, 1})).unimodal);
  EXPECT_FALSE(check_shape(P({1, 2})).monic);
}

TEST(Shape, UnimodalNumeratorsAndDenominators) {
  for (long d = 1; d <= 60; ++d)
    for (long n = 1; n <= 2 * d; ++n) {
      if (gcd(integer(n), integer(d)) != 1) continue;
      const qrational r = q_rational(fraction(n, d));
      ASSERT_TRUE(is_unimodal(r.num())) << n << "/" << d;
      ASSERT_TRUE(is_unimodal(r.den())) << n << "/" << d;
    }
}
