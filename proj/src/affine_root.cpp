#include "rgd/affine_root.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "rgd/errors.hpp"

namespace rgd {

Level Level::from_rational(const Rational& r) {
  Rational q = 4 * r;
  if (q.get_den() != 1) throw HalfIntegerLevel("level outside the quarter lattice: " + r.get_str());
  return Level(q.get_num().get_si());
}

long Level::integer() const {
  if (!is_integer()) throw HalfIntegerLevel("non-integer level " + to_string());
  return q_ / 4;
}

std::string Level::to_string() const { return value().get_str(); }

AffineRoot negate(const RootSystem& sys, const AffineRoot& a) {
  return AffineRoot{sys.negate(a.root), -a.level};
}

AffineRoot affine_reflect(const RootSystem& sys, const AffineRoot& reflector,
                          const AffineRoot& target) {
  RootId r = sys.reflect(reflector.root, target.root);
  Rational m = target.level.value() - reflector.level.value() * sys.pairing(target.root, reflector.root);
  return AffineRoot{r, Level::from_rational(m)};
}

bool is_positive(const RootSystem& sys, const AffineRoot& a) {
  long l = a.level.integer();
  return sys.is_positive(a.root) ? l >= 0 : l >= 1;
}

namespace {

// Some lambda with b = lambda * a, if a and b are proportional.
std::optional<Rational> proportionality(const Vector& a, const Vector& b) {
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) {
      if (sgn(b[i]) != 0) return std::nullopt;
      continue;
    }
    Rational r = b[i] / a[i];
    if (lambda && *lambda != r) return std::nullopt;
    lambda = r;
  }
  return lambda;
}

}  // namespace

bool is_prenilpotent(const RootSystem& sys, const AffineRoot& a, const AffineRoot& b) {
  a.level.integer();
  b.level.integer();
  auto lambda = proportionality(sys.vec(a.root), sys.vec(b.root));
  // k a = -n b with k, n > 0 happens exactly for a negative ratio
  return !(lambda && sgn(*lambda) < 0);
}

std::vector<IntervalMember> open_interval_members(const RootSystem& sys, const AffineRoot& a,
                                                  const AffineRoot& b) {
  if (!is_prenilpotent(sys, a, b)) throw NotPrenilpotent("pair is not prenilpotent");
  const Vector& va = sys.vec(a.root);
  const Vector& vb = sys.vec(b.root);
  const Rational l = a.level.value(), m = b.level.value();
  std::vector<IntervalMember> out;
  std::set<AffineRoot> seen;
  auto add = [&](RootId c, const Rational& p, const Rational& q) {
    Rational lev = p * l + q * m;
    if (lev.get_den() != 1) return;
    AffineRoot r{c, Level::of(lev.get_num().get_si())};
    if (seen.insert(r).second) out.push_back({r, p, q});
  };
  auto lambda = proportionality(va, vb);
  for (RootId c : sys.all()) {
    const Vector& vc = sys.vec(c);
    if (lambda) {
      auto mu = proportionality(va, vc);
      if (!mu) continue;
      // p + q lambda = mu over positive integers; mu <= 4 in A and BC
      for (long p = 1; p <= 8; ++p)
        for (long q = 1; q <= 8; ++q)
          if (Rational(p) + q * *lambda == *mu) add(c, Rational(p), Rational(q));
      continue;
    }
    RationalMatrix sys2(va.size(), Vector(2));
    for (std::size_t i = 0; i < va.size(); ++i) {
      sys2[i][0] = va[i];
      sys2[i][1] = vb[i];
    }
    auto x = solve(sys2, vc, 2);
    if (!x || sgn((*x)[0]) <= 0 || sgn((*x)[1]) <= 0) continue;
    add(c, (*x)[0], (*x)[1]);
  }
  std::sort(out.begin(), out.end(), [](const IntervalMember& x, const IntervalMember& y) {
    Rational sx = x.p + x.q, sy = y.p + y.q;
    if (sx != sy) return sx < sy;
    return x.root < y.root;
  });
  return out;
}

std::vector<AffineRoot> open_interval(const RootSystem& sys, const AffineRoot& a,
                                      const AffineRoot& b) {
  std::vector<AffineRoot> r;
  for (const auto& m : open_interval_members(sys, a, b)) r.push_back(m.root);
  return r;
}

bool chamber_oracle(const RootSystem& sys, const AffineRoot& a, const Vector& v) {
  return dot(sys.vec(a.root), v) >= -a.level.value();
}

Vector affine_reflect_point(const RootSystem& sys, const AffineRoot& reflector, const Vector& v) {
  Vector r = sys.reflect_vector(reflector.root, v);
  Vector co = sys.coroot(reflector.root);
  Rational l = reflector.level.value();
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= l * co[i];
  return r;
}

Vector fundamental_point(const RootSystem& sys) {
  const std::size_t n = sys.ambient_dim();
  RationalMatrix a;
  Vector rhs;
  Rational delta = frac(1, 2 * sys.height(sys.highest()) + 1);
  for (RootId s : sys.simple()) {
    a.push_back(sys.vec(s));
    rhs.push_back(delta);
  }
  if (sys.kind() == RootKind::A) {
    a.push_back(Vector(n, Rational(1)));
    rhs.push_back(0);
  }
  auto v = solve(a, rhs, n);
  if (!v) throw Error("no fundamental point");
  return *v;
}

bool prenilpotent_by_geometry(const RootSystem& sys, const AffineRoot& a, const AffineRoot& b) {
  const Vector& va = sys.vec(a.root);
  const Vector& vb = sys.vec(b.root);
  // the standard realizations have integral Gram entries
  long aa = dot(va, va).get_num().get_si();
  long ab = dot(va, vb).get_num().get_si();
  long bb = dot(vb, vb).get_num().get_si();
  long la = a.level.quarters(), lb = b.level.quarters();
  bool inside = false, outside = false;
  // v = (s a + u b) / 4, compare 4 (a, v) with -4 l
  const long box = 2 * (std::labs(la) + std::labs(lb)) + 16;
  for (long s = -box; s <= box && !(inside && outside); ++s)
    for (long u = -box; u <= box && !(inside && outside); ++u) {
      long x = s * aa + u * ab, y = s * ab + u * bb;
      if (x > -la && y > -lb) inside = true;
      if (x < -la && y < -lb) outside = true;
    }
  return inside && outside;
}

std::vector<AffineRoot> affine_roots_in_range(const RootSystem& sys, long lmin, long lmax) {
  std::vector<AffineRoot> r;
  for (RootId a : sys.all())
    for (long l = lmin; l <= lmax; ++l) r.push_back(AffineRoot{a, Level::of(l)});
  return r;
}

std::vector<AffineRoot> simple_affine_roots(const RootSystem& sys) {
  std::vector<AffineRoot> r{AffineRoot{sys.negate(sys.highest()), Level::of(1)}};
  for (RootId s : sys.simple()) r.push_back(AffineRoot{s, Level::of(0)});
  return r;
}

std::string to_string(const RootSystem& sys, const AffineRoot& a) {
  return "(" + sys.name(a.root) + ", " + a.level.to_string() + ")";
}

}  // namespace rgd
