#include "rgd/matrix.hpp"

#include <utility>

#include "rgd/errors.hpp"

namespace rgd {

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
  return m;
}

LaurentMatrix LaurentMatrix::elementary(std::size_t n, std::size_t row, std::size_t col,
                                        const LaurentPoly& value) {
  if (row >= n || col >= n || row == col) throw IndexOutOfRange("bad elementary position");
  LaurentMatrix m = identity(n);
  m(row, col) = value;
  return m;
}

LaurentMatrix LaurentMatrix::diagonal(const std::vector<LaurentPoly>& entries) {
  LaurentMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& o) {
  if (n_ != o.n_) throw DimensionMismatch("matrix sum");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

LaurentMatrix& LaurentMatrix::operator-=(const LaurentMatrix& o) {
  if (n_ != o.n_) throw DimensionMismatch("matrix difference");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("matrix product");
  const std::size_t n = a.n_;
  LaurentMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const LaurentPoly& x = a(i, k);
      if (x.is_zero()) continue;
      if (x.is_one()) {
        for (std::size_t j = 0; j < n; ++j)
          if (!b(k, j).is_zero()) r(i, j) += b(k, j);
        continue;
      }
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& c) const {
  LaurentMatrix r = *this;
  for (auto& x : r.a_) x = x * c;
  return r;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

LaurentMatrix LaurentMatrix::adjoint() const {
  LaurentMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

bool LaurentMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

bool LaurentMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool LaurentMatrix::is_constant() const {
  for (const auto& x : a_)
    if (!x.is_constant()) return false;
  return true;
}

bool LaurentMatrix::is_upper_unitriangular() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!(*this)(i, i).is_one()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

bool LaurentMatrix::is_lower_unitriangular() const { return transpose().is_upper_unitriangular(); }

std::string LaurentMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

// Bareiss elimination; every intermediate quotient is exact.
LaurentPoly det(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  LaurentMatrix a = m;
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return LaurentPoly();
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        auto q = num.divide_exact(prev);
        if (!q) throw Error("inexact Bareiss step");
        a(i, j) = std::move(*q);
      }
    prev = a(k, k);
  }
  LaurentPoly d = a(n - 1, n - 1);
  return negate ? -d : d;
}

namespace {

LaurentMatrix upper_unitriangular_inverse(const LaurentMatrix& u) {
  const std::size_t n = u.size();
  LaurentMatrix r = LaurentMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j; i-- > 0;) {
      LaurentPoly s;
      for (std::size_t k = i + 1; k <= j; ++k)
        if (!u(i, k).is_zero() && !r(k, j).is_zero()) s += u(i, k) * r(k, j);
      r(i, j) = -s;
    }
  return r;
}

LaurentMatrix minor_matrix(const LaurentMatrix& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.size();
  LaurentMatrix r(n - 1);
  for (std::size_t i = 0, ri = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, rj = 0; j < n; ++j) {
      if (j == col) continue;
      r(ri, rj++) = m(i, j);
    }
    ++ri;
  }
  return r;
}

}  // namespace

LaurentMatrix inverse(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  if (m.is_upper_unitriangular()) return upper_unitriangular_inverse(m);
  if (m.is_lower_unitriangular()) return upper_unitriangular_inverse(m.transpose()).transpose();
  LaurentPoly d = det(m);
  if (!d.is_monomial()) throw NotInvertibleOverRing("determinant is not a unit: " + d.to_string());
  if (m.is_diagonal()) {
    LaurentMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = m(i, i).monomial_pow(-1);
    return r;
  }
  LaurentPoly dinv = d.monomial_pow(-1);
  LaurentMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly c = n == 1 ? LaurentPoly(1) : det(minor_matrix(m, j, i));
      if ((i + j) % 2) c = -c;
      r(i, j) = c * dinv;
    }
  return r;
}

LaurentMatrix conjugate_by_diagonal(const std::vector<LaurentPoly>& d, const LaurentMatrix& g) {
  if (d.size() != g.size()) throw DimensionMismatch("diagonal conjugation");
  std::vector<LaurentPoly> inv;
  inv.reserve(d.size());
  for (const auto& x : d) inv.push_back(x.monomial_pow(-1));
  LaurentMatrix r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (!g(i, j).is_zero()) r(i, j) = d[i] * g(i, j) * inv[j];
  return r;
}

}  // namespace rgd
