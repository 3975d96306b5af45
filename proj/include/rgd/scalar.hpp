#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rgd {

using Rational = mpq_class;

// Canonical n/d; mpq_class(n, d) alone does not reduce.
Rational frac(long n, long d);
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

// Element base + ext*sqrt(disc) of Q(sqrt(disc)). disc == 0 means a plain
// rational that promotes into whichever field it meets.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : base_(value) {}  // NOLINT(implicit)
  Scalar(Rational value) : base_(std::move(value)) {}  // NOLINT(implicit)
  Scalar(Rational base, Rational ext, int disc);

  static Scalar sqrt_of(int disc);
  static Scalar parse(std::string_view text);
  static bool valid_disc(long disc);

  const Rational& base() const { return base_; }
  const Rational& ext() const { return ext_; }
  int disc() const { return disc_; }

  bool is_zero() const { return sgn(base_) == 0 && sgn(ext_) == 0; }
  bool is_one() const { return base_ == 1 && sgn(ext_) == 0; }
  bool is_rational() const { return sgn(ext_) == 0; }

  // Involution: sqrt(d) -> -sqrt(d).
  Scalar conj() const;
  // x * conj(x), always rational.
  Rational norm() const;
  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.base_ == b.base_ && a.ext_ == b.ext_ &&
           (sgn(a.ext_) == 0 || a.disc_ == b.disc_);
  }

  std::string to_string() const;

 private:
  int join(const Scalar& o) const;

  Rational base_{0};
  Rational ext_{0};
  int disc_ = 0;
};

inline Scalar tau(const Scalar& x) { return x.conj(); }

}  // namespace rgd
