#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgd/scalar.hpp"

namespace rgd {

// Exponents are stored in quarter units: t^(e/4).
constexpr long kQuarter = 4;

class LaurentPoly {
 public:
  using Term = std::pair<long, Scalar>;

  LaurentPoly() = default;
  LaurentPoly(Scalar c);  // NOLINT(implicit)
  LaurentPoly(long c) : LaurentPoly(Scalar(c)) {}  // NOLINT(implicit)

  static LaurentPoly monomial(Scalar c, long quarter_exp);
  // t^(num/den); den must divide 4 after reduction.
  static LaurentPoly t_pow(long num, long den = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Every exponent is an integer, i.e. the element lies in k[t, 1/t].
  bool integral_exponents() const;

  Scalar coefficient(long quarter_exp) const;
  Scalar constant_term() const { return coefficient(0); }
  long min_exp() const;
  long max_exp() const;

  LaurentPoly conj() const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const Scalar& c) const;
  LaurentPoly shifted(long quarter_exp) const;

  // Power of a monomial; negative exponents invert it.
  LaurentPoly monomial_pow(long e) const;
  // Exact quotient when the divisor divides this polynomial, else nullopt.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(long e, const Scalar& c);
  std::vector<Term> terms_;  // increasing exponent, no zero coefficients
};

inline LaurentPoly tau(const LaurentPoly& p) { return p.conj(); }

std::string exponent_string(long quarter_exp);

}  // namespace rgd
