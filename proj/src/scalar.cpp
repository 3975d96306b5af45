#include "rgd/scalar.hpp"

#include <cctype>
#include <cstdlib>

#include "rgd/errors.hpp"

namespace rgd {

Rational frac(long n, long d) {
  if (d == 0) throw DivisionByZero("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/' && !slash && i > start && i + 1 < s.size()) {
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("bad rational: " + s);
    }
  }
  if (start == s.size()) throw ParseError("bad rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  if (sgn(q.get_den()) == 0) throw DivisionByZero("zero denominator: " + s);
  q.canonicalize();
  return q;
}

bool Scalar::valid_disc(long disc) {
  if (disc == 0 || disc == 1) return false;
  long m = disc < 0 ? -disc : disc;
  for (long p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

Scalar::Scalar(Rational base, Rational ext, int disc)
    : base_(std::move(base)), ext_(std::move(ext)), disc_(disc) {
  if (disc_ != 0 && !valid_disc(disc_))
    throw FieldMismatch("discriminant must be square-free and not 0 or 1");
  if (disc_ == 0 && sgn(ext_) != 0)
    throw FieldMismatch("irrational part without a discriminant");
}

Scalar Scalar::sqrt_of(int disc) { return Scalar(0, 1, disc); }

int Scalar::join(const Scalar& o) const {
  if (disc_ == 0) return o.disc_;
  if (o.disc_ == 0 || o.disc_ == disc_) return disc_;
  throw FieldMismatch("operands live in different quadratic fields");
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  r.ext_ = -r.ext_;
  return r;
}

Rational Scalar::norm() const { return base_ * base_ - disc_ * ext_ * ext_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Rational n = norm();
  Scalar r;
  r.base_ = base_ / n;
  r.ext_ = -ext_ / n;
  r.disc_ = disc_;
  return r;
}

Scalar Scalar::pow(long e) const {
  Scalar b = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar r(Rational(1), Rational(0), 0);
  r.disc_ = disc_;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  disc_ = join(o);
  base_ += o.base_;
  ext_ += o.ext_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  disc_ = join(o);
  base_ -= o.base_;
  ext_ -= o.ext_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  int d = join(o);
  if (sgn(ext_) == 0 && sgn(o.ext_) == 0) {
    base_ *= o.base_;
  } else {
    Rational b = base_ * o.base_ + d * ext_ * o.ext_;
    Rational e = base_ * o.ext_ + ext_ * o.base_;
    base_ = std::move(b);
    ext_ = std::move(e);
  }
  disc_ = d;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  join(o);
  if (o.is_zero()) throw DivisionByZero("division by zero");
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.base_ = -r.base_;
  r.ext_ = -r.ext_;
  return r;
}

std::string Scalar::to_string() const {
  if (sgn(ext_) == 0) return base_.get_str();
  std::string root = "*sqrt(" + std::to_string(disc_) + ")";
  if (sgn(base_) == 0) return ext_.get_str() + root;
  std::string e = ext_.get_str();
  return base_.get_str() + (sgn(ext_) > 0 ? "+" : "") + e + root;
}

// Accepts "p/q", "r/s*sqrt(d)" and "p/q+r/s*sqrt(d)" (or with '-').
Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto pos = s.find("*sqrt(");
  if (pos == std::string::npos) return Scalar(parse_rational(s));
  if (s.back() != ')') throw ParseError("bad scalar: " + s);
  std::string dtext = s.substr(pos + 6, s.size() - pos - 7);
  long disc = 0;
  try {
    std::size_t used = 0;
    disc = std::stol(dtext, &used);
    if (used != dtext.size()) throw ParseError("bad discriminant: " + dtext);
  } catch (const std::logic_error&) {
    throw ParseError("bad discriminant: " + dtext);
  }
  if (!valid_disc(disc)) throw FieldMismatch("invalid discriminant " + dtext);
  std::string head = s.substr(0, pos);
  // split head at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;)
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  Rational base = 0, ext;
  if (split == std::string::npos) {
    ext = parse_rational(head);
  } else {
    base = parse_rational(head.substr(0, split));
    ext = parse_rational(head.substr(split));
  }
  return Scalar(base, ext, static_cast<int>(disc));
}

}  // namespace rgd
