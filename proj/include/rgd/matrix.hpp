#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rgd/laurent.hpp"

namespace rgd {

// Square matrix over Laurent polynomials, 0-based indices.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static LaurentMatrix identity(std::size_t n);
  // I + value * E_(row, col).
  static LaurentMatrix elementary(std::size_t n, std::size_t row, std::size_t col,
                                  const LaurentPoly& value);
  static LaurentMatrix diagonal(const std::vector<LaurentPoly>& entries);

  std::size_t size() const { return n_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  LaurentMatrix& operator+=(const LaurentMatrix& o);
  LaurentMatrix& operator-=(const LaurentMatrix& o);
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
  friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  LaurentMatrix scaled(const LaurentPoly& c) const;

  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

  LaurentMatrix transpose() const;
  // Entrywise involution followed by transpose.
  LaurentMatrix adjoint() const;

  bool is_identity() const;
  bool is_diagonal() const;
  bool is_constant() const;
  bool is_upper_unitriangular() const;
  bool is_lower_unitriangular() const;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> a_;
};

LaurentPoly det(const LaurentMatrix& m);
// Exact inverse; requires a unit-monomial determinant.
LaurentMatrix inverse(const LaurentMatrix& m);
// Conjugation diag(d) * g * diag(d)^-1 for monomial diagonal entries.
LaurentMatrix conjugate_by_diagonal(const std::vector<LaurentPoly>& d, const LaurentMatrix& g);

}  // namespace rgd
