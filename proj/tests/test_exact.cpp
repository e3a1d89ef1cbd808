#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bspin/bigint.hpp"
#include "bspin/laurent.hpp"

using namespace bspin;

namespace {

LaurentPoly binomial_y(int coeff_minus = 1) {
  // y_1 + coeff_minus * y_1^{-1}
  LaurentPoly p = LaurentPoly::monomial({1}, 1);
  p += LaurentPoly::monomial({-1}, coeff_minus);
  return p;
}

std::mt19937 rng(987654321);

LaurentPoly random_poly(int vars) {
  LaurentPoly p(vars);
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    LaurentPoly::ExpVec e(vars);
    for (int i = 0; i < vars; ++i) e[i] = static_cast<int>(rng() % 7) - 3;
    const long long c = static_cast<long long>(rng() % 11) - 5;
    p += LaurentPoly::monomial(e, c);
  }
  return p;
}

TorusPoint random_point(int vars) {
  std::vector<BigRat> y(vars);
  for (auto& v : y) v = BigRat(1 + rng() % 9, 1 + rng() % 9);
  return TorusPoint(std::move(y));
}

}  // namespace

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), ValidationError);
}

TEST_CASE("poly_mul basics") {
  const LaurentPoly sq = binomial_y() * binomial_y();
  LaurentPoly expect = LaurentPoly::monomial({2}, 1);
  expect += LaurentPoly::constant(1, 2);
  expect += LaurentPoly::monomial({-2}, 1);
  CHECK(sq == expect);

  const LaurentPoly p = random_poly(2);
  CHECK(p * LaurentPoly::constant(2, 1) == p);

  const LaurentPoly diff = binomial_y(-1) * binomial_y(+1);
  LaurentPoly expect2 = LaurentPoly::monomial({2}, 1);
  expect2 += LaurentPoly::monomial({-2}, -1);
  CHECK(diff == expect2);
}

TEST_CASE("poly_mul rejects mixed variable counts") {
  CHECK_THROWS_AS(random_poly(1) * random_poly(2), ValidationError);
}

TEST_CASE("poly_pow") {
  CHECK(random_poly(2).pow(0) == LaurentPoly::constant(2, 1));
  CHECK(binomial_y().pow(2) == binomial_y() * binomial_y());

  const LaurentPoly p4 = binomial_y().pow(4);
  REQUIRE(p4.term_count() == 5);
  CHECK(p4.terms().at({4}) == 1);
  CHECK(p4.terms().at({2}) == 4);
  CHECK(p4.terms().at({0}) == 6);
  CHECK(p4.terms().at({-2}) == 4);
  CHECK(p4.terms().at({-4}) == 1);
}

TEST_CASE("poly_pow matches iterated products") {
  for (int trial = 0; trial < 20; ++trial) {
    const int vars = 1 + static_cast<int>(rng() % 2);
    const LaurentPoly p = random_poly(vars);
    LaurentPoly iterated = LaurentPoly::constant(vars, 1);
    for (unsigned k = 0; k <= 8; ++k) {
      CHECK(p.pow(k) == iterated);
      iterated = iterated * p;
    }
  }
}

TEST_CASE("poly_eval") {
  const TorusPoint two({BigRat(2)});
  CHECK(binomial_y().eval(two) == BigRat(5, 2));
  CHECK(LaurentPoly::constant(3, 7).eval(random_point(3)) == 7);
  // y^2 + 1 + y^{-2} at y = 2 is 4 + 1 + 1/4.
  LaurentPoly p = LaurentPoly::monomial({2}, 1);
  p += LaurentPoly::constant(1, 1);
  p += LaurentPoly::monomial({-2}, 1);
  CHECK(p.eval(two) == BigRat(21, 4));
}

TEST_CASE("evaluation is a ring homomorphism") {
  for (int trial = 0; trial < 40; ++trial) {
    const int vars = 1 + static_cast<int>(rng() % 3);
    const LaurentPoly a = random_poly(vars);
    const LaurentPoly b = random_poly(vars);
    const TorusPoint pt = random_point(vars);
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
  }
}

TEST_CASE("no zero coefficients survive arithmetic") {
  for (int trial = 0; trial < 40; ++trial) {
    const int vars = 1 + static_cast<int>(rng() % 3);
    const LaurentPoly a = random_poly(vars);
    LaurentPoly neg(vars);
    for (const auto& [e, c] : a.terms()) neg += LaurentPoly::monomial(e, -c);
    CHECK((a + neg).is_zero());
    const LaurentPoly sq = a * a;
    for (const auto& [e, c] : sq.terms()) CHECK(c != 0);
  }
}

TEST_CASE("torus points must be strictly positive") {
  CHECK_THROWS_AS(TorusPoint({BigRat(0)}), ValidationError);
  CHECK_THROWS_AS(TorusPoint({BigRat(2), BigRat(-1, 3)}), ValidationError);
  CHECK_THROWS_AS(TorusPoint(std::vector<BigRat>{}), ValidationError);
}

TEST_CASE("rational arithmetic is exact") {
  for (int trial = 0; trial < 60; ++trial) {
    const BigInt a = static_cast<long long>(rng() % 2001) - 1000;
    const BigInt b = 1 + rng() % 999;
    const BigInt c = static_cast<long long>(rng() % 2001) - 1000;
    const BigInt d = 1 + rng() % 999;
    const BigRat sum = BigRat(a, b) + BigRat(c, d);
    CHECK(sum == BigRat(a * d + c * b, b * d));
    CHECK(denominator(sum) > 0);
    CHECK(gcd(numerator(sum), denominator(sum)) == 1);
  }
}

TEST_CASE("rat_pow handles negative exponents") {
  CHECK(rat_pow(BigRat(2, 3), -2) == BigRat(9, 4));
  CHECK(rat_pow(BigRat(5), 0) == 1);
  CHECK(rat_pow(BigRat(7, 2), 3) == BigRat(343, 8));
}

TEST_CASE("log_value and to_double stay accurate for huge values") {
  const BigInt big = factorial(500);
  const double lg = log_value(big);
  // Stirling cross-check.
  const double stirling = 500.5 * std::log(500.0) - 500.0 + 0.5 * std::log(2 * 3.14159265358979);
  CHECK(std::abs(lg - stirling) / stirling < 1e-4);
  CHECK(to_double(BigRat(big, big * 3)) == doctest::Approx(1.0 / 3).epsilon(1e-15));
}
