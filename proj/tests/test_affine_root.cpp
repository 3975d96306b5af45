#include "doctest.h"
#include "rgd/affine_root.hpp"
#include "rgd/errors.hpp"

using namespace rgd;

namespace {

Vector v(std::initializer_list<long> xs) {
  Vector r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

AffineRoot ar(const RootSystem& s, std::initializer_list<long> coords, long level) {
  return AffineRoot{s.id(v(coords)), Level::of(level)};
}

}  // namespace

TEST_CASE("affine reflection examples") {
  RootSystem a1 = RootSystem::build(RootKind::A, 1);
  AffineRoot a0 = ar(a1, {1, -1}, 0);
  CHECK(affine_reflect(a1, a0, a0) == ar(a1, {-1, 1}, 0));
  CHECK(affine_reflect(a1, ar(a1, {1, -1}, 1), a0) == ar(a1, {-1, 1}, -2));
  for (AffineRoot r : affine_roots_in_range(a1, -3, 3))
    for (AffineRoot t : affine_roots_in_range(a1, -3, 3))
      CHECK(affine_reflect(a1, r, affine_reflect(a1, r, t)) == t);
}

TEST_CASE("positivity examples") {
  RootSystem a2 = RootSystem::build(RootKind::A, 2);
  AffineRoot a1{a2.simple()[0], Level::of(0)};
  CHECK(is_positive(a2, a1));
  CHECK(is_positive(a2, simple_affine_roots(a2)[0]));
  CHECK_FALSE(is_positive(a2, AffineRoot{a2.simple()[0], Level::of(-1)}));
  CHECK_THROWS_AS(is_positive(a2, AffineRoot{a2.simple()[0], Level::half(1)}), HalfIntegerLevel);
}

TEST_CASE("prenilpotency examples") {
  RootSystem a1 = RootSystem::build(RootKind::A, 1);
  CHECK(is_prenilpotent(a1, ar(a1, {1, -1}, 0), ar(a1, {1, -1}, 5)));
  CHECK_FALSE(is_prenilpotent(a1, ar(a1, {1, -1}, 0), ar(a1, {-1, 1}, 3)));
  RootSystem bc1 = RootSystem::build(RootKind::BC, 1);
  CHECK_FALSE(is_prenilpotent(bc1, ar(bc1, {1}, 0), ar(bc1, {-2}, 1)));
  CHECK_THROWS_AS(open_interval(bc1, ar(bc1, {1}, 0), ar(bc1, {-2}, 1)), NotPrenilpotent);
}

TEST_CASE("open interval examples") {
  RootSystem a2 = RootSystem::build(RootKind::A, 2);
  auto r = open_interval(a2, ar(a2, {1, -1, 0}, 1), ar(a2, {0, 1, -1}, 2));
  CHECK(r == std::vector<AffineRoot>{ar(a2, {1, 0, -1}, 3)});
  CHECK(open_interval(a2, ar(a2, {1, -1, 0}, 0), ar(a2, {1, -1, 0}, 1)).empty());
  RootSystem bc1 = RootSystem::build(RootKind::BC, 1);
  for (long l = -2; l <= 2; ++l)
    for (long m = -2; m <= 2; ++m) {
      if (l == m) continue;
      CHECK(open_interval(bc1, ar(bc1, {1}, l), ar(bc1, {1}, m)) ==
            std::vector<AffineRoot>{ar(bc1, {2}, l + m)});
      CHECK(open_interval(bc1, ar(bc1, {1}, l), ar(bc1, {2}, m)).empty());
    }
}

TEST_CASE("BC2 interval is ordered by p+q") {
  RootSystem bc2 = RootSystem::build(RootKind::BC, 2);
  auto m = open_interval_members(bc2, ar(bc2, {1, -1}, 0), ar(bc2, {0, 2}, 2));
  // e1 (p=1,q=1/2), e1+e2 (1,1), 2e1 (2,1)
  REQUIRE(m.size() == 3);
  CHECK(m[0].root == ar(bc2, {1, 0}, 1));
  CHECK(m[1].root == ar(bc2, {1, 1}, 2));
  CHECK(m[2].root == ar(bc2, {2, 0}, 2));
  // odd level on 2e2 makes the half coefficient non-integral
  auto odd = open_interval(bc2, ar(bc2, {1, -1}, 0), ar(bc2, {0, 2}, 1));
  CHECK(odd.size() == 2);
}

TEST_CASE("chamber oracle") {
  RootSystem a1 = RootSystem::build(RootKind::A, 1);
  AffineRoot a = ar(a1, {1, -1}, 0);
  Vector half{Rational(1, 2), Rational(-1, 2)};  // (a, v) = 1
  CHECK(chamber_oracle(a1, a, half));
  Vector neg{Rational(-1, 2), Rational(1, 2)};
  CHECK_FALSE(chamber_oracle(a1, a, neg));
}

TEST_CASE("fundamental point lies in the open alcove") {
  for (int n = 1; n <= 3; ++n)
    for (RootKind k : {RootKind::A, RootKind::BC}) {
      RootSystem s = RootSystem::build(k, n);
      Vector f = fundamental_point(s);
      for (RootId x : s.simple()) CHECK(sgn(dot(s.vec(x), f)) > 0);
      CHECK(dot(s.vec(s.highest()), f) < 1);
      for (const AffineRoot& a : affine_roots_in_range(s, -3, 3))
        CHECK(is_positive(s, a) == chamber_oracle(s, a, f));
    }
}

TEST_CASE("geometric oracle reaches deep levels") {
  RootSystem bc2 = RootSystem::build(RootKind::BC, 2);
  for (long l : {-3, 3, -5, 5}) {
    CHECK(prenilpotent_by_geometry(bc2, ar(bc2, {-1, -1}, l), ar(bc2, {0, 1}, l)));
    CHECK(prenilpotent_by_geometry(bc2, ar(bc2, {2, 0}, l), ar(bc2, {-1, 1}, -l)));
    CHECK_FALSE(prenilpotent_by_geometry(bc2, ar(bc2, {1, 0}, l), ar(bc2, {-2, 0}, l)));
  }
}
