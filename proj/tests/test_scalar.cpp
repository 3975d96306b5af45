#include <random>

#include "doctest.h"
#include "rgd/errors.hpp"
#include "rgd/scalar.hpp"

using namespace rgd;

namespace {

Scalar gaussian(long a, long b) { return Scalar(Rational(a), Rational(b), -1); }

Scalar random_scalar(std::mt19937& rng, int disc) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  return Scalar(frac(num(rng), den(rng)), frac(num(rng), den(rng)), disc);
}

}  // namespace

TEST_CASE("norm of 1+i") {
  CHECK(gaussian(1, 1) * gaussian(1, -1) == Scalar(2));
  CHECK((gaussian(1, 1) * gaussian(1, -1)).is_rational());
}

TEST_CASE("zero is additive identity") {
  Scalar x = gaussian(3, -7);
  CHECK(x + Scalar() == x);
  CHECK(Scalar() + x == x);
}

TEST_CASE("division checked by back-multiplication") {
  Scalar v = gaussian(3, 2) / gaussian(1, 1);
  CHECK(v * gaussian(1, 1) == gaussian(3, 2));
  // (3+2i)(1-i)/2 = (5 - i)/2
  CHECK(v == Scalar(Rational(5, 2), Rational(-1, 2), -1));
}

TEST_CASE("involution") {
  CHECK(tau(gaussian(3, 2)) == gaussian(3, -2));
  CHECK(tau(Scalar(5)) == Scalar(5));
  std::mt19937 rng(7);
  for (int disc : {-1, 2, -3, 5}) {
    for (int k = 0; k < 50; ++k) {
      Scalar x = random_scalar(rng, disc), y = random_scalar(rng, disc);
      CHECK(tau(tau(x)) == x);
      CHECK(tau(x * y) == tau(x) * tau(y));
      CHECK(tau(x + y) == tau(x) + tau(y));
      CHECK((x * tau(x)).is_rational());
      CHECK((tau(x) == x) == x.is_rational());
      if (!y.is_zero()) CHECK((x / y) * y == x);
    }
  }
}

TEST_CASE("field mismatch and division by zero") {
  CHECK_THROWS_AS(Scalar::sqrt_of(-1) + Scalar::sqrt_of(2), FieldMismatch);
  CHECK_THROWS_AS(gaussian(1, 1) / Scalar(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1, 1, 4), FieldMismatch);
  CHECK_THROWS_AS(Scalar(1, 1, 0), FieldMismatch);
  // rationals promote into any field
  CHECK_NOTHROW(Scalar(Rational(1, 2)) * Scalar::sqrt_of(5));
}

TEST_CASE("sqrt(d) squares to d") {
  for (int d : {-1, -2, 3, -7}) CHECK(Scalar::sqrt_of(d) * Scalar::sqrt_of(d) == Scalar(d));
}

TEST_CASE("text format round trip") {
  CHECK(Scalar(Rational(3, 4)).to_string() == "3/4");
  CHECK(Scalar(Rational(1, 2), Rational(-3, 5), -1).to_string() == "1/2-3/5*sqrt(-1)");
  CHECK(Scalar(0, 2, 3).to_string() == "2*sqrt(3)");
  std::mt19937 rng(11);
  for (int k = 0; k < 40; ++k) {
    Scalar x = random_scalar(rng, k % 2 ? -1 : 7);
    CHECK(Scalar::parse(x.to_string()) == x);
  }
  CHECK(Scalar::parse("-2/6") == Scalar(Rational(-1, 3)));
  CHECK_THROWS_AS(Scalar::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
}

TEST_CASE("powers") {
  Scalar x = gaussian(1, 1);
  CHECK(x.pow(2) == gaussian(0, 2));
  CHECK(x.pow(-1) * x == Scalar(1));
  CHECK(x.pow(0) == Scalar(1));
}
