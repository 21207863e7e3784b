#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wardcomb/exactmath.hpp"

using namespace wardcomb;

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(10), 3628800);
  for (int n = 0; n <= 40; ++n) EXPECT_EQ(factorial(n), oracle::fact(n)) << n;
  EXPECT_THROW(factorial(-1), std::domain_error);
}

TEST(Factorial, NoOverflowAtLargeArguments) {
  EXPECT_EQ(factorial(30).str(), "265252859812191058636308480000000");
}

TEST(DoubleFactorialOdd, Values) {
  EXPECT_EQ(double_factorial_odd(0), 1);
  EXPECT_EQ(double_factorial_odd(2), 3);
  EXPECT_EQ(double_factorial_odd(4), 105);
  // (2n-1)!! = (2n)! / (2^n n!)
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(double_factorial_odd(n), oracle::fact(2 * n) / (oracle::power(2, n) * oracle::fact(n)));
}

TEST(Binomial, ExamplesAndRange) {
  EXPECT_EQ(binomial(5, 2), 10);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(binomial(n, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(Binomial, PascalRule) {
  for (int n = 1; n <= 30; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << "," << k;
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), oracle::binom(n, k));
}

TEST(Stirling2, AgainstBruteForce) {
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(3, 1), 1);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(5, 0), 0);
  for (int n = 0; n <= 9; ++n) {
    EXPECT_EQ(stirling2(n, n), 1);
    for (int k = 0; k <= n; ++k) EXPECT_EQ(stirling2(n, k), oracle::count_set_partitions(n, k)) << n << "," << k;
  }
}

TEST(Stirling2, TriangleRecurrence) {
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(stirling2(n, k), ExactInt(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1));
}

TEST(Stirling1Unsigned, AgainstCycleCounts) {
  EXPECT_EQ(stirling1_unsigned(4, 2), 11);
  EXPECT_EQ(stirling1_unsigned(3, 1), 2);
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(stirling1_unsigned(n, n), 1);
    for (int k = 1; k <= n; ++k) EXPECT_EQ(stirling1_unsigned(n, k), oracle::count_perms_with_cycles(n, k)) << n << "," << k;
  }
}

TEST(Stirling1Unsigned, TriangleRecurrence) {
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k <= n; ++k)
      EXPECT_EQ(stirling1_unsigned(n, k), ExactInt(n - 1) * stirling1_unsigned(n - 1, k) + stirling1_unsigned(n - 1, k - 1));
}

TEST(Lah, AgainstOrderedLists) {
  EXPECT_EQ(lah(3, 2), 6);
  EXPECT_EQ(lah(3, 1), 6);
  EXPECT_EQ(lah(0, 0), 1);
  EXPECT_EQ(lah(4, 0), 0);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(lah(n, n), 1);
    for (int k = 1; k <= n; ++k) EXPECT_EQ(lah(n, k), oracle::count_lah(n, k)) << n << "," << k;
  }
}

TEST(TriangleFunctions, OutOfRangeIsZero) {
  EXPECT_EQ(stirling2(-1, 0), 0);
  EXPECT_EQ(stirling2(2, 3), 0);
  EXPECT_EQ(stirling1_unsigned(2, -2), 0);
  EXPECT_EQ(lah(2, 5), 0);
  EXPECT_EQ(binomial(-3, 1), 0);
}

TEST(ExactRat, ReciprocalProductIsOne) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    ExactRat a = oracle::random_rat(rng, 1000);
    if (a == 0) continue;
    ExactRat b = oracle::random_rat(rng, 1000);
    if (b == 0) continue;
    ExactRat q = a / b;
    EXPECT_EQ(q * (b / a), 1);
  }
}

TEST(ExactRat, LowestTermsPositiveDenominator) {
  ExactRat r = make_rat(6, -4);
  EXPECT_EQ(numerator_of(r), -3);
  EXPECT_EQ(denominator_of(r), 2);
  // normalizing an already normalized value changes nothing
  ExactRat again = make_rat(numerator_of(r), denominator_of(r));
  EXPECT_EQ(numerator_of(again), numerator_of(r));
  EXPECT_EQ(denominator_of(again), denominator_of(r));
  EXPECT_THROW(make_rat(1, 0), std::exception);
}

TEST(ExactRat, ParseAndPrint) {
  EXPECT_EQ(parse_rat("-2/5"), ExactRat(-2, 5));
  EXPECT_EQ(parse_rat("4/6"), ExactRat(2, 3));
  EXPECT_EQ(parse_rat("7"), 7);
  EXPECT_EQ(to_string(ExactRat(-2, 5)), "-2/5");
  EXPECT_EQ(to_string(ExactRat(3)), "3");
  EXPECT_THROW(parse_rat("1/0"), std::domain_error);
  EXPECT_THROW(parse_rat("x"), std::invalid_argument);
  EXPECT_THROW(parse_rat(""), std::invalid_argument);
}

TEST(Powers, IntegerAndRational) {
  EXPECT_EQ(ipow(ExactInt(3), 4), 81);
  EXPECT_EQ(ipow(ExactInt(5), 0), 1);
  EXPECT_EQ(rpow(ExactRat(2, 3), 3), ExactRat(8, 27));
  EXPECT_EQ(sign_power(3), -1);
  EXPECT_EQ(sign_power(-2), 1);
}
