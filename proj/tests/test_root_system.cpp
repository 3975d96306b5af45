#include "doctest.h"
#include "rgd/errors.hpp"
#include "rgd/root_system.hpp"

using namespace rgd;

namespace {

Vector v(std::initializer_list<long> xs) {
  Vector r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("root counts and highest roots") {
  for (int n = 1; n <= 4; ++n) {
    RootSystem a = RootSystem::build(RootKind::A, n);
    CHECK(a.size() == static_cast<std::size_t>(n * (n + 1)));
    CHECK(a.height(a.highest()) == n);
    RootSystem bc = RootSystem::build(RootKind::BC, n);
    CHECK(bc.size() == static_cast<std::size_t>(2 * n * n + 2 * n));
    CHECK(bc.height(bc.highest()) == 2 * n);
    Vector top(n, Rational(0));
    top[0] = 2;
    CHECK(bc.vec(bc.highest()) == top);
    CHECK(a.is_irreducible());
    CHECK(bc.is_irreducible());
  }
  CHECK_THROWS_AS(RootSystem::build(RootKind::A, 0), UnsupportedType);
}

TEST_CASE("A2 highest root is the sum of the simple roots") {
  RootSystem a = RootSystem::build(RootKind::A, 2);
  CHECK(a.size() == 6);
  CHECK(a.vec(a.highest()) == v({1, 0, -1}));
  Vector s = a.vec(a.simple()[0]);
  for (std::size_t i = 0; i < 3; ++i) s[i] += a.vec(a.simple()[1])[i];
  CHECK(s == a.vec(a.highest()));
}

TEST_CASE("BC1 and A1") {
  RootSystem bc = RootSystem::build(RootKind::BC, 1);
  CHECK(bc.size() == 4);
  for (long x : {-2, -1, 1, 2}) CHECK(bc.find(v({x})).has_value());
  RootSystem a = RootSystem::build(RootKind::A, 1);
  CHECK(a.size() == 2);
}

TEST_CASE("pairings") {
  RootSystem bc = RootSystem::build(RootKind::BC, 1);
  RootId e = bc.id(v({1})), e2 = bc.id(v({2}));
  CHECK(bc.pairing(e, e) == 2);
  CHECK(bc.pairing(e, e2) == 1);
  CHECK(bc.pairing(e2, e) == 4);
  RootSystem a = RootSystem::build(RootKind::A, 2);
  CHECK(a.pairing(a.simple()[0], a.simple()[1]) == -1);
  for (int n = 1; n <= 3; ++n)
    for (RootKind k : {RootKind::A, RootKind::BC}) {
      RootSystem s = RootSystem::build(k, n);
      for (RootId x : s.all())
        for (RootId y : s.all()) CHECK(s.pairing(x, y).get_den() == 1);
    }
}

TEST_CASE("reflections") {
  RootSystem bc = RootSystem::build(RootKind::BC, 1);
  RootId e = bc.id(v({1})), e2 = bc.id(v({2}));
  CHECK(bc.reflect(e, e2) == bc.id(v({-2})));
  CHECK(bc.reflect(e, e) == bc.negate(e));
  RootSystem bc2 = RootSystem::build(RootKind::BC, 2);
  CHECK(bc2.reflect(bc2.id(v({1, 0})), bc2.id(v({0, 2}))) == bc2.id(v({0, 2})));
  for (int n = 1; n <= 3; ++n)
    for (RootKind k : {RootKind::A, RootKind::BC}) {
      RootSystem s = RootSystem::build(k, n);
      for (RootId x : s.all())
        for (RootId y : s.all()) {
          RootId r = s.reflect(x, y);  // closure: throws if it leaves the system
          CHECK(s.reflect(x, r) == y);
          for (RootId z : s.all()) CHECK(s.pairing(s.reflect(x, y), s.reflect(x, z)) == s.pairing(y, z));
        }
    }
}

TEST_CASE("proportional sets") {
  RootSystem a = RootSystem::build(RootKind::A, 2);
  for (RootId x : a.all()) CHECK(a.proportional_set(x).size() == 1);
  RootSystem bc = RootSystem::build(RootKind::BC, 1);
  RootId e = bc.id(v({1})), e2 = bc.id(v({2}));
  CHECK(bc.proportional_set(e) == std::vector<RootId>{e, e2});
  CHECK(bc.proportional_set(e2) == std::vector<RootId>{e2});
}

TEST_CASE("positivity split") {
  for (int n = 1; n <= 3; ++n)
    for (RootKind k : {RootKind::A, RootKind::BC}) {
      RootSystem s = RootSystem::build(k, n);
      int pos = 0;
      for (RootId x : s.all()) {
        CHECK(s.is_positive(x) != s.is_positive(s.negate(x)));
        pos += s.is_positive(x);
        // all simple coordinates share a sign
        Vector c = s.simple_coordinates(s.vec(x));
        for (const auto& q : c) CHECK((s.is_positive(x) ? sgn(q) >= 0 : sgn(q) <= 0));
      }
      CHECK(2 * pos == static_cast<int>(s.size()));
    }
}
