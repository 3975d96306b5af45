#include "rgd/linear.hpp"

#include <utility>

#include "rgd/errors.hpp"

namespace rgd {

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Echelon row_reduce(RationalMatrix a, std::size_t cols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

std::optional<Vector> solve(const RationalMatrix& a, const Vector& b, std::size_t cols) {
  if (a.size() != b.size()) throw DimensionMismatch("linear system");
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != cols) throw DimensionMismatch("linear system row");
    aug[i].push_back(b[i]);
  }
  Echelon e = row_reduce(std::move(aug), cols + 1);
  Vector x(cols, Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == cols) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][cols];
  }
  return x;
}

std::vector<Vector> kernel(const RationalMatrix& a, std::size_t cols) {
  Echelon e = row_reduce(a, cols);
  std::vector<bool> pivot(cols, false);
  for (auto p : e.pivots) pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot[f]) continue;
    Vector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& a, std::size_t cols) { return row_reduce(a, cols).pivots.size(); }

}  // namespace rgd
