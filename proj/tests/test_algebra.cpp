#include <gtest/gtest.h>

#include <random>

#include "ribbon/json_io.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/qsqrt2.hpp"
#include "ribbon/rational.hpp"

using namespace ribbon;

TEST(Rational, NormalizesAndCompares) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseAndPow) {
  EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(pow(Rational(2), -2), Rational(1, 4));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
  EXPECT_EQ(factorial(5), Rational(120));
  EXPECT_EQ(binomial(6, 2), Rational(15));
  EXPECT_EQ(binomial(2, 5), Rational(0));
}

TEST(Rational, GammaOfA) {
  EXPECT_EQ(gamma_of(Rational(1)), Rational(0));
  EXPECT_EQ(gamma_of(Rational(2)), Rational(-3, 2));
  EXPECT_EQ(gamma_of(Rational(1, 2)), Rational(3, 2));
  EXPECT_EQ(gamma_of(Rational(-1)), Rational(0));
  EXPECT_THROW(gamma_of(Rational(0)), std::domain_error);
}

TEST(QSqrt2, FieldOperations) {
  const QSqrt2 r = QSqrt2::sqrt2();
  EXPECT_EQ(r * r, QSqrt2(2));
  EXPECT_EQ(QSqrt2(1) / r, QSqrt2(Rational(0), Rational(1, 2)));
  const QSqrt2 x(Rational(3), Rational(-2));
  EXPECT_EQ(x / x, QSqrt2(1));
  EXPECT_EQ((x * x) / x, x);
  EXPECT_EQ(pow(r, -2), QSqrt2(Rational(1, 2)));
  EXPECT_EQ((QSqrt2(2) * r).str(), "2*sqrt2");
  EXPECT_THROW(QSqrt2(1) / QSqrt2(0), std::domain_error);
}

TEST(GammaPolynomial, Arithmetic) {
  const auto g = GammaPolynomial::gamma();
  const GammaPolynomial p = GammaPolynomial(Rational(1, 6)) + (g * g).scaled(Rational(2, 3));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.leading_coefficient(), Rational(2, 3));
  EXPECT_EQ(p.coefficient(1), Rational(0));
  EXPECT_EQ(p.evaluate(Rational(3)), Rational(1, 6) + Rational(6));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(GammaPolynomial().degree(), GammaPolynomial::kZeroDegree);
  EXPECT_EQ((g + 1) * (g - 1), g * g - 1);
}

namespace {

StanleyPolynomial random_poly(std::mt19937_64& rng, int l) {
  StanleyPolynomial p;
  std::uniform_int_distribution<int> coef(-5, 5), e(0, 2), count(1, 6);
  for (int t = count(rng); t > 0; --t) {
    StanleyPolynomial::Exponent exp(static_cast<size_t>(1 + 2 * l));
    for (auto& x : exp) x = e(rng);
    p.add_term(exp, Rational(coef(rng)));
  }
  return p;
}

StanleyPoint random_point(std::mt19937_64& rng, int l) {
  std::uniform_int_distribution<int> v(-4, 4), d(1, 3);
  StanleyPoint at{Rational(v(rng), d(rng)), {}, {}};
  for (int i = 0; i < l; ++i) {
    at.p.emplace_back(v(rng), d(rng));
    at.q.emplace_back(v(rng), d(rng));
  }
  return at;
}

}  // namespace

TEST(StanleyPolynomial, EvaluatesSumOfProducts) {
  const StanleyPolynomial s = StanleyPolynomial::p(1) * StanleyPolynomial::q(1) +
                              StanleyPolynomial::p(2) * StanleyPolynomial::q(2);
  EXPECT_EQ(s.evaluate({Rational(0), {2, 1}, {3, 1}}), Rational(7));
  EXPECT_EQ(s.degree(), 2);
  EXPECT_THROW(s.evaluate({Rational(0), {2}, {3}}), std::invalid_argument);
}

TEST(StanleyPolynomial, EvaluationIsARingHomomorphism) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_poly(rng, 2), g = random_poly(rng, 2);
    const auto at = random_point(rng, 2);
    EXPECT_EQ((f + g).evaluate(at), f.evaluate(at) + g.evaluate(at));
    EXPECT_EQ((f * g).evaluate(at), f.evaluate(at) * g.evaluate(at));
  }
}

TEST(StanleyPolynomial, HomogeneousPartsSumBack) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_poly(rng, 2);
    StanleyPolynomial sum;
    for (int d = 0; d <= f.degree(); ++d) sum += f.homogeneous_part(d);
    EXPECT_EQ(sum, f);
  }
}

TEST(StanleyPolynomial, VariableNamesAndJson) {
  EXPECT_EQ(StanleyPolynomial::variable_name(0), "gamma");
  EXPECT_EQ(StanleyPolynomial::variable_name(3), "p2");
  EXPECT_EQ(StanleyPolynomial::variable_index("q1"), 2u);
  std::mt19937_64 rng(13);
  const auto f = random_poly(rng, 3);
  EXPECT_EQ(io::stanley_from_json(io::to_json(f)), f);
  EXPECT_EQ(io::rational_from_json(io::to_json(Rational(-7, 3))), Rational(-7, 3));
}

TEST(Partition, BasicOperations) {
  const Partition p{3, 1, 1};
  EXPECT_EQ(p.size(), 5);
  EXPECT_EQ(p.length(), 3);
  EXPECT_EQ(p.z(), Rational(6));  // 3 * 2! * 1^2
  EXPECT_EQ(p.conjugate(), (Partition{3, 1, 1}));
  EXPECT_EQ((Partition{4, 2}).conjugate(), (Partition{2, 2, 1, 1}));
  EXPECT_EQ((Partition{2}).with_ones(2), (Partition{2, 1, 1}));
  EXPECT_EQ(Partition::parse("(3,1)"), (Partition{3, 1}));
  EXPECT_EQ((Partition{3, 1}).str(), "(3,1)");
  EXPECT_EQ((Partition{1, 2}), (Partition{2, 1}));
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
}

TEST(Partition, EnumerationCountsAndOrder) {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(partitions_of(n).size(), static_cast<size_t>(counts[n]));
  const auto p4 = partitions_of(4);
  EXPECT_EQ(p4.front(), (Partition{1, 1, 1, 1}));
  EXPECT_EQ(p4.back(), (Partition{4}));
  EXPECT_TRUE(dominates(Partition{3, 1}, Partition{2, 2}));
  EXPECT_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
  EXPECT_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
}

TEST(YoungDiagram, Geometry) {
  const YoungDiagram d(Partition{3, 1});
  EXPECT_EQ(d.boxes(), 4);
  EXPECT_EQ(d.column_length(1), 2);
  EXPECT_EQ(d.column_length(3), 1);
  EXPECT_TRUE(d.contains(2, 1));
  EXPECT_FALSE(d.contains(2, 2));
}
