#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rgd/scalar.hpp"

namespace rgd {

using Vector = std::vector<Rational>;
using RationalMatrix = std::vector<Vector>;  // row-major

Rational dot(const Vector& a, const Vector& b);

struct Echelon {
  RationalMatrix rows;               // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per row
};

Echelon row_reduce(RationalMatrix a, std::size_t cols);

// Some solution of A x = b (free variables zero), or nullopt if inconsistent.
std::optional<Vector> solve(const RationalMatrix& a, const Vector& b, std::size_t cols);

// Basis of {x : A x = 0}; one vector per free column, in column order.
std::vector<Vector> kernel(const RationalMatrix& a, std::size_t cols);

std::size_t rank(const RationalMatrix& a, std::size_t cols);

}  // namespace rgd
