#include <gtest/gtest.h>

#include "skeleton/poly.hpp"

using namespace skel;

namespace {

MultiPoly x(std::vector<int> e, const Integer& c = 1) { return MultiPoly::monomial(x_monomial(std::move(e)), c); }

MultiPoly q_power(int k) {
  Monomial m;
  m.q = k;
  return MultiPoly::monomial(m);
}

MultiPoly p_power(int k) {
  Monomial m;
  m.p = k;
  return MultiPoly::monomial(m);
}

}  // namespace

TEST(MultiPoly, ArithmeticCancelsExactly) {
  const MultiPoly a = x({1, 0}) + x({0, 1});
  const MultiPoly b = x({1, 0}) - x({0, 1});
  const MultiPoly prod = a * b;
  EXPECT_EQ(prod, x({2, 0}) - x({0, 2}));
  EXPECT_EQ(prod.term_count(), 2u);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.scaled(0), MultiPoly());
  EXPECT_EQ((a * a).coefficient(x_monomial({1, 1})), 2);
  EXPECT_EQ(MultiPoly::constant(3) * a, a.scaled(3));
}

TEST(MultiPoly, EqualityIgnoresArity) {
  EXPECT_EQ(x({2}), x({2, 0, 0}));
  EXPECT_NE(x({2}), x({0, 2}));
  EXPECT_EQ(x({1}).with_arity(3, 0).x_arity(), 3);
  EXPECT_THROW(x({0, 1}).with_arity(1, 0), std::invalid_argument);
}

TEST(MultiPoly, BigCoefficients) {
  MultiPoly g = MultiPoly::constant(1);
  const MultiPoly two = MultiPoly::constant(2);
  for (int i = 0; i < 100; ++i) g = g * two;
  EXPECT_EQ(to_string(g.evaluate_ones()), "1267650600228229401496703205376");
}

TEST(MultiPoly, ReverseAndSpecialize) {
  const MultiPoly g = x({2, 1, 0}) + x({0, 0, 3}, 5);
  EXPECT_EQ(g.reverse_x(), x({0, 1, 2}) + x({3, 0, 0}, 5));
  EXPECT_EQ(g.reverse_x().reverse_x(), g);
  EXPECT_EQ(g.specialize_x(2), MultiPoly::constant(1));
  EXPECT_EQ(g.specialize_x(3), MultiPoly::constant(6));
  EXPECT_EQ(g.specialize_x(0), MultiPoly());
  EXPECT_EQ(g.evaluate_ones(), 6);
  EXPECT_TRUE(g.is_x_homogeneous(3));
  EXPECT_FALSE((g + x({1})).is_x_homogeneous(3));
}

TEST(MultiPoly, Grading) {
  // x_i -> q^{i-1} x_i, so x^{(1,2)} picks up q^2.
  const MultiPoly g = x({1, 2});
  EXPECT_EQ(g.grade_x(), g * q_power(2));
  EXPECT_EQ(g.grade_x(true), g * p_power(2));
  EXPECT_EQ(g.grade_x().set_q_one(), g);
  EXPECT_EQ((g * p_power(3)).set_p_one(), g);
}

TEST(MultiPoly, DisplayOrder) {
  const MultiPoly g = x({1, 2, 2}) + x({3, 2, 0}) + x({2, 2, 1}) + x({1, 3, 1}) + x({2, 3, 0});
  std::vector<std::vector<int>> order;
  for (const auto& [m, c] : g.display_order()) order.push_back(m.x);
  EXPECT_EQ(order, (std::vector<std::vector<int>>{{3, 2, 0}, {2, 3, 0}, {2, 2, 1}, {1, 3, 1}, {1, 2, 2}}));
}

TEST(UniPoly, Basics) {
  const UniPoly g({0, 1, 0, 0, 2, 0});
  EXPECT_EQ(g.degree(), 4);
  EXPECT_EQ(g.low_degree(), 1);
  EXPECT_EQ(g.coefficient(4), 2);
  EXPECT_EQ(g.coefficient(9), 0);
  EXPECT_EQ(g.evaluate_one(), 3);
  EXPECT_EQ(UniPoly().degree(), -1);
  EXPECT_EQ(UniPoly().low_degree(), -1);
  EXPECT_EQ(UniPoly({1, 1}) * UniPoly({1, 1}), UniPoly({1, 2, 1}));
  EXPECT_EQ(UniPoly({1}) + UniPoly::monomial(2, 3), UniPoly({1, 0, 3}));
  EXPECT_THROW(UniPoly::monomial(-1), std::invalid_argument);
}

TEST(UniPoly, InternalZeros) {
  EXPECT_EQ(internal_zeros(UniPoly({0, 0, 1, 0, 1})).positions, std::vector<int>{3});
  EXPECT_EQ(internal_zeros(UniPoly({1, 0, 0, 1})).count(), 2);
  EXPECT_EQ(internal_zeros(UniPoly({0, 1, 1, 1})).count(), 0);
  EXPECT_EQ(internal_zeros(UniPoly()).count(), 0);
}

TEST(Extraction, CoefficientOfQ) {
  const MultiPoly g = p_power(1) * q_power(3) + p_power(2) * q_power(3).scaled(2) + q_power(1);
  EXPECT_EQ(coefficient_of_q(g, 3), UniPoly({0, 1, 2}));
  EXPECT_EQ(coefficient_of_q(g, 1), UniPoly({1}));
  EXPECT_TRUE(coefficient_of_q(g, 2).is_zero());
  EXPECT_EQ(as_q_poly(q_power(2) + q_power(4)), UniPoly({0, 0, 1, 0, 1}));
  EXPECT_THROW(as_q_poly(x({1})), std::invalid_argument);
  EXPECT_THROW(coefficient_of_q(x({1}), 0), std::invalid_argument);
}
