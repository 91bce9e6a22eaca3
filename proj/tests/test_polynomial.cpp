#include <doctest.h>

#include "braidforge/polynomial.hpp"

using namespace braidforge;

TEST_CASE("construction trims trailing zeros") {
  CHECK(IntegerPolynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(IntegerPolynomial{0, 0}.is_zero());
  CHECK(IntegerPolynomial{}.degree() == -1);
  CHECK(IntegerPolynomial::geometric(3) == IntegerPolynomial{1, 1, 1, 1});
  CHECK(IntegerPolynomial{1, 2}.coefficient(7) == 0);
}

TEST_CASE("arithmetic") {
  const IntegerPolynomial a{1, 1};
  const IntegerPolynomial b{1, -1};
  CHECK(a * b == IntegerPolynomial{1, 0, -1});
  CHECK(a + b == IntegerPolynomial{2});
  CHECK((a - a).is_zero());
  CHECK((a * IntegerPolynomial{}).is_zero());
  CHECK((a * a * a).evaluate(2) == 27);
  CHECK(to_string(IntegerPolynomial{1, 2, 2, 1}) == to_string(IntegerPolynomial{1, 1} * IntegerPolynomial{1, 1, 1}));
}

TEST_CASE("big coefficients stay exact") {
  IntegerPolynomial p{1, 1};
  IntegerPolynomial acc{1};
  for (int i = 0; i < 100; ++i) acc *= p;
  CHECK(acc.evaluate(1) == BigInt(1) << 100);
  CHECK(acc.coefficient(50) > BigInt(1) << 95);
}

TEST_CASE("series_divide") {
  // 1/(1-t-t^2): Fibonacci shifted by one.
  const auto fib = series_divide(IntegerPolynomial{1}, IntegerPolynomial{1, -1, -1}, 10);
  CHECK(fib == std::vector<BigInt>{1, 1, 2, 3, 5, 8, 13, 21, 34, 55});
  // 1/(1-t) with a negated denominator.
  const auto neg = series_divide(IntegerPolynomial{1}, IntegerPolynomial{-1, 1}, 4);
  CHECK(neg == std::vector<BigInt>{-1, -1, -1, -1});
  CHECK(series_divide(IntegerPolynomial{}, IntegerPolynomial{1}, 3) == std::vector<BigInt>{0, 0, 0});
  CHECK_THROWS_AS(series_divide(IntegerPolynomial{1}, IntegerPolynomial{2, 1}, 3), std::domain_error);
  CHECK_THROWS_AS(series_divide(IntegerPolynomial{1}, IntegerPolynomial{0, 1}, 3), std::domain_error);
}
