#include <set>

#include "doctest.h"
#include "rgd/errors.hpp"
#include "rgd/verifier.hpp"

using namespace rgd;

namespace {

Vector v(std::initializer_list<long> xs) {
  Vector r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

LaurentPoly t(long num) { return LaurentPoly::t_pow(num, 1); }

LaurentMatrix e(std::size_t n, std::size_t i, std::size_t j, const LaurentPoly& x) {
  return LaurentMatrix::elementary(n, i - 1, j - 1, x);
}

SuiteConfig small() {
  SuiteConfig c;
  c.samples = 4;
  return c;
}

}  // namespace

TEST_CASE("axiom tags round trip") {
  CHECK(all_axioms().size() == 9);
  std::set<std::string> tags;
  for (Axiom a : all_axioms()) {
    tags.insert(axiom_tag(a));
    CHECK(axiom_from_tag(axiom_tag(a)) == a);
  }
  CHECK(tags.size() == 9);
  CHECK(axiom_name(Axiom::CorootShift) == "CorootShift");
  CHECK(!axiom_from_tag("rgd6"));
}

TEST_CASE("coefficient samples") {
  auto s = coefficient_samples(8, 3);
  REQUIRE(s.size() == 8);
  CHECK(s[0] == 1);
  CHECK(s[1] == -1);
  CHECK(s[2] == frac(1, 2));
  std::set<Rational> distinct(s.begin(), s.end());
  CHECK(distinct.size() == 8);
  CHECK(distinct.count(Rational(0)) == 0);
  CHECK(s == coefficient_samples(8, 3));
  CHECK(coefficient_samples(1, 0) == std::vector<Rational>{Rational(1)});
}

TEST_CASE("suite config validation") {
  SuiteConfig c;
  CHECK_NOTHROW(c.validate());
  c.level_min = 1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SuiteConfig{};
  c.samples = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("positive and negative profiles") {
  CHECK(in_positive_profile(e(2, 1, 2, t(-1))));
  CHECK(in_positive_profile(e(2, 1, 2, LaurentPoly(5))));
  CHECK(!in_positive_profile(e(2, 1, 2, t(1))));
  CHECK(!in_positive_profile(e(2, 2, 1, LaurentPoly(1))));
  CHECK(in_positive_profile(e(2, 2, 1, t(-1))));
  CHECK(in_negative_profile(e(2, 2, 1, t(1))));
  CHECK(!in_negative_profile(e(2, 1, 2, LaurentPoly(1))));
  CHECK(in_negative_profile(e(2, 1, 2, t(1))));
  CHECK(!in_positive_profile(e(2, 1, 2, LaurentPoly::t_pow(-1, 2))));
  CHECK(in_positive_profile(LaurentMatrix::identity(3)));
  CHECK(in_negative_profile(LaurentMatrix::identity(3)));
}

TEST_CASE("RGD0 on SL2 counts ten cases") {
  auto r = check_rgd0(GroupModel::split_sl(1), SuiteConfig{});
  CHECK(r.cases == 10);
  CHECK(r.pass());
  SuiteConfig one;
  one.samples = 1;
  CHECK(check_rgd0(GroupModel::special_unitary(3, 1), one).pass());
}

TEST_CASE("SL3 commutator lands in the sum root group") {
  GroupModel g = GroupModel::split_sl(2);
  const RootSystem& s = g.roots();
  LaurentMatrix u = e(3, 1, 2, LaurentPoly(3) * t(-1)), w = e(3, 2, 3, LaurentPoly(-2) * t(-2));
  LaurentMatrix c = u * w * inverse(u) * inverse(w);
  CHECK(c == e(3, 1, 3, LaurentPoly(-6) * t(-3)));
  AffineRoot a{s.id(v({1, -1, 0})), Level::of(1)}, b{s.id(v({0, 1, -1})), Level::of(2)};
  auto order = open_interval(s, a, b);
  REQUIRE(order.size() == 1);
  CHECK(order[0] == AffineRoot{s.id(v({1, 0, -1})), Level::of(3)});
  CHECK(g.peel_product(c, order)[0].c == v({-6}));
  LaurentMatrix z = e(3, 1, 2, LaurentPoly(1)) * e(3, 1, 3, LaurentPoly(4));
  CHECK(z * inverse(e(3, 1, 2, LaurentPoly(1))) * inverse(e(3, 1, 3, LaurentPoly(4))) == LaurentMatrix::identity(3));
}

TEST_CASE("SU(3,1) commutator of single roots lies in the double root group") {
  GroupModel g = GroupModel::special_unitary(3, 1);
  const RootSystem& s = g.roots();
  RootId a = s.id(v({1}));
  RootGroupCoords x{a, Level::of(0), v({1, 2}), v({0})}, y{a, Level::of(1), v({-3, 1}), v({0})};
  LaurentMatrix mx = g.relative_pinning(x), my = g.relative_pinning(y);
  LaurentMatrix c = mx * my * inverse(mx) * inverse(my);
  CHECK(!c.is_identity());
  AffineRoot target{s.id(v({2})), Level::of(1)};
  CHECK(g.try_peel(c, target).has_value());
  CHECK(open_interval(s, AffineRoot{a, Level::of(0)}, AffineRoot{a, Level::of(1)}) == std::vector<AffineRoot>{target});
}

TEST_CASE("RGD5 example on SL3") {
  LaurentMatrix h = LaurentMatrix::diagonal({LaurentPoly(2), LaurentPoly(1), LaurentPoly(Scalar(frac(1, 2)))});
  LaurentMatrix c = h * e(3, 1, 3, LaurentPoly(5) * t(-1)) * inverse(h);
  CHECK(c == e(3, 1, 3, LaurentPoly(20) * t(-1)));
}

TEST_CASE("all suites pass on SL2 and SL3") {
  for (const auto& g : {GroupModel::split_sl(1), GroupModel::split_sl(2)}) {
    for (const auto& r : run_suites(g, small())) {
      INFO(g.description() << " " << axiom_name(r.axiom));
      CHECK(r.pass());
      CHECK(r.cases > 0);
      CHECK(r.failures.empty());
    }
  }
}

TEST_CASE("all suites pass on small unitary models") {
  SuiteConfig c = small();
  c.level_min = -1;
  c.level_max = 1;
  for (const auto& g : {GroupModel::special_unitary(3, 1), GroupModel::special_unitary(3, 1, 2),
                        GroupModel::special_unitary(4, 1)}) {
    for (const auto& r : run_suites(g, c)) {
      INFO(g.description() << " " << axiom_name(r.axiom));
      CHECK(r.pass());
      CHECK(r.cases > 0);
    }
  }
}

TEST_CASE("selected suites run in order") {
  SuiteConfig c = small();
  c.suites = {Axiom::RGD3, Axiom::RGD0};
  auto rs = run_suites(GroupModel::split_sl(1), c);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].axiom == Axiom::RGD3);
  CHECK(rs[1].axiom == Axiom::RGD0);
}

TEST_CASE("suites are deterministic") {
  SuiteConfig c = small();
  c.seed = 17;
  GroupModel g = GroupModel::special_unitary(3, 1);
  for (Axiom a : all_axioms()) {
    auto r1 = run_suite(g, c, a), r2 = run_suite(g, c, a);
    CHECK(r1.cases == r2.cases);
    CHECK(r1.failure_count == r2.failure_count);
  }
}

TEST_CASE("combinatorics counts depend on the point budget only through sampling") {
  SuiteConfig c;
  c.level_min = -1;
  c.level_max = 1;
  auto a = check_combinatorics(RootSystem::build(RootKind::BC, 1), c);
  c.points = 5;
  auto b = check_combinatorics(RootSystem::build(RootKind::BC, 1), c);
  CHECK(a.pass());
  CHECK(b.pass());
  CHECK(a.cases == b.cases);
}
