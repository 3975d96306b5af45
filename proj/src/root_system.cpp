#include "rgd/root_system.hpp"

#include <algorithm>
#include <functional>

#include "rgd/errors.hpp"

namespace rgd {

std::string vector_string(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + "]";
}

RootSystem RootSystem::build(RootKind kind, int rank) {
  if (rank < 1) throw UnsupportedType("rank must be positive");
  RootSystem sys;
  sys.kind_ = kind;
  sys.rank_ = rank;
  const std::size_t n = kind == RootKind::A ? rank + 1 : rank;
  sys.ambient_ = n;
  auto unit = [n](std::size_t i) {
    Vector v(n, Rational(0));
    v[i] = 1;
    return v;
  };
  auto plus = [](Vector a, const Vector& b, int sb) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += sb * b[i];
    return a;
  };
  auto scale = [](Vector a, int s) {
    for (auto& x : a) x *= s;
    return a;
  };
  std::vector<Vector> roots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) roots.push_back(plus(unit(i), unit(j), -1));
  if (kind == RootKind::BC) {
    for (std::size_t i = 0; i < n; ++i) {
      for (int s : {1, -1}) {
        roots.push_back(scale(unit(i), s));
        roots.push_back(scale(unit(i), 2 * s));
      }
      for (std::size_t j = i + 1; j < n; ++j)
        for (int s : {1, -1}) roots.push_back(scale(plus(unit(i), unit(j), 1), s));
    }
  }
  std::sort(roots.begin(), roots.end());
  sys.roots_ = roots;
  for (std::size_t i = 0; i < roots.size(); ++i) sys.index_[roots[i]] = RootId{static_cast<int>(i)};

  for (int i = 0; i + 1 < static_cast<int>(n); ++i) sys.simple_.push_back(sys.id(plus(unit(i), unit(i + 1), -1)));
  if (kind == RootKind::BC) sys.simple_.push_back(sys.id(unit(n - 1)));

  for (const auto& r : roots) {
    Vector c = sys.simple_coordinates(r);
    Rational h = 0;
    for (const auto& x : c) h += x;
    sys.heights_.push_back(static_cast<int>(h.get_num().get_si()));
    sys.negation_.push_back(sys.id(scale(r, -1)));
  }
  int best = 0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (sys.heights_[i] > sys.heights_[best]) best = static_cast<int>(i);
  sys.highest_ = RootId{best};
  return sys;
}

std::vector<RootId> RootSystem::all() const {
  std::vector<RootId> r;
  for (std::size_t i = 0; i < roots_.size(); ++i) r.push_back(RootId{static_cast<int>(i)});
  return r;
}

std::optional<RootId> RootSystem::find(const Vector& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootId RootSystem::id(const Vector& v) const {
  auto r = find(v);
  if (!r) throw ReflectionLeftSystem("vector is not a root: " + vector_string(v));
  return *r;
}

std::optional<RootId> RootSystem::doubled(RootId a) const {
  Vector v = vec(a);
  for (auto& x : v) x *= 2;
  return find(v);
}

Rational RootSystem::pairing(RootId b, RootId a) const {
  return 2 * dot(vec(a), vec(b)) / dot(vec(a), vec(a));
}

Vector RootSystem::coroot(RootId a) const {
  Vector v = vec(a);
  Rational f = 2 / dot(v, v);
  for (auto& x : v) x *= f;
  return v;
}

Vector RootSystem::reflect_vector(RootId a, const Vector& v) const {
  const Vector& av = vec(a);
  Rational p = 2 * dot(av, v) / dot(av, av);
  Vector r = v;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= p * av[i];
  return r;
}

RootId RootSystem::reflect(RootId a, RootId b) const { return id(reflect_vector(a, vec(b))); }

std::vector<RootId> RootSystem::proportional_set(RootId a) const {
  std::vector<RootId> r{a};
  if (auto d = doubled(a)) r.push_back(*d);
  return r;
}

Vector RootSystem::simple_coordinates(const Vector& v) const {
  RationalMatrix a(ambient_, Vector(simple_.size()));
  for (std::size_t j = 0; j < simple_.size(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i) a[i][j] = vec(simple_[j])[i];
  auto x = solve(a, v, simple_.size());
  if (!x) throw Error("vector outside the root span: " + vector_string(v));
  return *x;
}

bool RootSystem::is_irreducible() const {
  const std::size_t n = simple_.size();
  std::vector<bool> seen(n, false);
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    seen[i] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && sgn(dot(vec(simple_[i]), vec(simple_[j]))) != 0) visit(j);
  };
  visit(0);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string RootSystem::name(RootId a) const { return vector_string(vec(a)); }

}  // namespace rgd
