#include <random>

#include "doctest.h"
#include "rgd/errors.hpp"
#include "rgd/matrix.hpp"

using namespace rgd;

namespace {

LaurentPoly t(long num, long den = 1) { return LaurentPoly::t_pow(num, den); }

LaurentPoly random_poly(std::mt19937& rng, int disc, long step = 4) {
  std::uniform_int_distribution<long> num(-5, 5), exps(-3, 3), count(0, 3);
  LaurentPoly p;
  for (long k = count(rng); k > 0; --k) {
    Scalar c = disc ? Scalar(num(rng), num(rng), disc) : Scalar(num(rng));
    p += LaurentPoly::monomial(c, step * exps(rng));
  }
  return p;
}

LaurentMatrix random_matrix(std::mt19937& rng, std::size_t n, int disc) {
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, disc);
  return m;
}

// Cofactor expansion along the first row, independent of Bareiss.
LaurentPoly det_by_expansion(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m(0, 0);
  LaurentPoly s;
  for (std::size_t j = 0; j < n; ++j) {
    LaurentMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = m(i, c);
    LaurentPoly term = m(0, j) * det_by_expansion(minor);
    s += j % 2 ? -term : term;
  }
  return s;
}

}  // namespace

TEST_CASE("binomial square") {
  LaurentPoly x = t(1) + t(-1);
  CHECK(x * x == t(2) + LaurentPoly(2) + t(-2));
  CHECK((x * x).to_string() == "1*t^2 + 2 + 1*t^-2");
}

TEST_CASE("additive identity and lattice closure") {
  LaurentPoly p = t(3) + LaurentPoly(Scalar(Rational(1, 2)));
  CHECK(p + LaurentPoly() == p);
  CHECK(t(1, 2) * t(1, 2) == t(1));
  CHECK(t(1, 4).to_string() == "1*t^1/4");
  CHECK_THROWS_AS(t(1, 8), NotMonomial);
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937 rng(3);
  for (int k = 0; k < 100; ++k) {
    LaurentPoly a = random_poly(rng, -1, 1), b = random_poly(rng, -1, 1), c = random_poly(rng, -1, 1);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == LaurentPoly());
    CHECK(tau(a * b) == tau(a) * tau(b));
  }
}

TEST_CASE("integral exponents form a subring") {
  std::mt19937 rng(5);
  for (int k = 0; k < 50; ++k) {
    LaurentPoly a = random_poly(rng, 0), b = random_poly(rng, 0);
    CHECK((a * b).integral_exponents());
    CHECK((a + b).integral_exponents());
  }
  CHECK_FALSE(t(1, 2).integral_exponents());
}

TEST_CASE("exact division") {
  std::mt19937 rng(9);
  for (int k = 0; k < 60; ++k) {
    LaurentPoly a = random_poly(rng, -1), b = random_poly(rng, -1);
    if (b.is_zero()) continue;
    auto q = (a * b).divide_exact(b);
    REQUIRE(q);
    CHECK(*q == a);
  }
  CHECK_FALSE((t(1) + LaurentPoly(1)).divide_exact(t(1) - LaurentPoly(1)).has_value());
}

TEST_CASE("matrix products") {
  Scalar c(3), d(Rational(-1, 2));
  auto e12 = [](const LaurentPoly& v) { return LaurentMatrix::elementary(2, 0, 1, v); };
  CHECK(e12(c) * LaurentMatrix::identity(2) == e12(c));
  CHECK(e12(c) * e12(d) == e12(c + d));
  LaurentMatrix h = LaurentMatrix::diagonal({t(-1, 2), t(1, 2)});
  LaurentMatrix hinv = LaurentMatrix::diagonal({t(1, 2), t(-1, 2)});
  CHECK(h * e12(c) * hinv == e12(LaurentPoly(c) * t(-1)));
  CHECK(conjugate_by_diagonal({t(-1, 2), t(1, 2)}, e12(c)) == e12(LaurentPoly(c) * t(-1)));
  CHECK_THROWS_AS(LaurentMatrix::identity(2) * LaurentMatrix::identity(3), DimensionMismatch);
}

TEST_CASE("determinants") {
  CHECK(det(LaurentMatrix::identity(4)).is_one());
  CHECK(det(LaurentMatrix::elementary(3, 0, 2, t(-1))).is_one());
  for (long l = -3; l <= 3; ++l) CHECK(det(LaurentMatrix::diagonal({t(l), t(-l)})).is_one());
  std::mt19937 rng(13);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 10; ++k) {
      LaurentMatrix m = random_matrix(rng, n, k % 2 ? -1 : 0);
      CHECK(det(m) == det_by_expansion(m));
    }
}

TEST_CASE("inverses") {
  CHECK(inverse(LaurentMatrix::identity(3)) == LaurentMatrix::identity(3));
  CHECK(inverse(LaurentMatrix::elementary(2, 0, 1, t(2))) == LaurentMatrix::elementary(2, 0, 1, -t(2)));
  std::mt19937 rng(17);
  for (int k = 0; k < 20; ++k) {
    LaurentMatrix u = LaurentMatrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) u(i, j) = random_poly(rng, -1);
    CHECK(inverse(u) * u == LaurentMatrix::identity(3));
    CHECK(u * inverse(u) == LaurentMatrix::identity(3));
    LaurentMatrix lower = u.transpose();
    CHECK(inverse(lower) * lower == LaurentMatrix::identity(3));
    // a dense det-1 matrix via a product of both triangles
    LaurentMatrix g = u * lower;
    CHECK(inverse(g) * g == LaurentMatrix::identity(3));
  }
  LaurentMatrix w(2);
  w(0, 1) = t(-1);
  w(1, 0) = -t(1);
  CHECK(inverse(w) * w == LaurentMatrix::identity(2));
  LaurentMatrix bad = LaurentMatrix::diagonal({t(1) + LaurentPoly(1), LaurentPoly(1)});
  CHECK_THROWS_AS(inverse(bad), NotInvertibleOverRing);
}
