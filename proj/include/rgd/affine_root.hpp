#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rgd/root_system.hpp"

namespace rgd {

// Level in quarter units. Genuine affine roots have integer levels;
// half and quarter levels only appear for shifted groups.
class Level {
 public:
  constexpr Level() = default;
  static constexpr Level of(long l) { return Level(l * 4); }
  static constexpr Level half(long twice) { return Level(twice * 2); }
  static constexpr Level quarters(long q) { return Level(q); }
  static Level from_rational(const Rational& r);

  constexpr long quarters() const { return q_; }
  constexpr bool is_integer() const { return q_ % 4 == 0; }
  constexpr bool is_half_integer() const { return q_ % 2 == 0; }
  long integer() const;  // throws HalfIntegerLevel
  Rational value() const { return frac(q_, 4); }

  friend constexpr Level operator+(Level a, Level b) { return Level(a.q_ + b.q_); }
  friend constexpr Level operator-(Level a, Level b) { return Level(a.q_ - b.q_); }
  constexpr Level operator-() const { return Level(-q_); }
  friend constexpr Level operator*(long k, Level a) { return Level(k * a.q_); }
  friend constexpr auto operator<=>(const Level&, const Level&) = default;

  std::string to_string() const;

 private:
  constexpr explicit Level(long q) : q_(q) {}
  long q_ = 0;
};

// Half-space {v : (a, v) >= -l}.
struct AffineRoot {
  RootId root;
  Level level;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

AffineRoot negate(const RootSystem& sys, const AffineRoot& a);
AffineRoot affine_reflect(const RootSystem& sys, const AffineRoot& reflector,
                          const AffineRoot& target);
bool is_positive(const RootSystem& sys, const AffineRoot& a);
bool is_prenilpotent(const RootSystem& sys, const AffineRoot& a, const AffineRoot& b);

struct IntervalMember {
  AffineRoot root;
  Rational p, q;  // root = p*a + q*b
};

// Roots (p a + q b, p l + q m) with p, q > 0, ordered by p + q.
std::vector<IntervalMember> open_interval_members(const RootSystem& sys, const AffineRoot& a,
                                                  const AffineRoot& b);
std::vector<AffineRoot> open_interval(const RootSystem& sys, const AffineRoot& a,
                                      const AffineRoot& b);

bool chamber_oracle(const RootSystem& sys, const AffineRoot& a, const Vector& v);
// s_(a,l)(v) = s_a(v) - l a^vee
Vector affine_reflect_point(const RootSystem& sys, const AffineRoot& reflector, const Vector& v);
// Interior point of the fundamental alcove.
Vector fundamental_point(const RootSystem& sys);
// Brute-force geometric test on a grid in the plane of a and b.
bool prenilpotent_by_geometry(const RootSystem& sys, const AffineRoot& a, const AffineRoot& b);

std::vector<AffineRoot> affine_roots_in_range(const RootSystem& sys, long lmin, long lmax);
// alpha_0 = (-a0, 1) first, then (a_i, 0).
std::vector<AffineRoot> simple_affine_roots(const RootSystem& sys);

std::string to_string(const RootSystem& sys, const AffineRoot& a);

}  // namespace rgd
