#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgd/linear.hpp"

namespace rgd {

enum class RootKind { A, BC };

struct RootId {
  int index = -1;
  friend auto operator<=>(const RootId&, const RootId&) = default;
};

// Finite root system in its standard Euclidean realization:
// A_n inside Q^(n+1), BC_n inside Q^n.
class RootSystem {
 public:
  static RootSystem build(RootKind kind, int rank);

  RootKind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t size() const { return roots_.size(); }
  std::vector<RootId> all() const;

  const Vector& vec(RootId a) const { return roots_.at(a.index); }
  std::optional<RootId> find(const Vector& v) const;
  RootId id(const Vector& v) const;  // throws ReflectionLeftSystem when absent

  const std::vector<RootId>& simple() const { return simple_; }
  RootId highest() const { return highest_; }
  int height(RootId a) const { return heights_.at(a.index); }
  bool is_positive(RootId a) const { return height(a) > 0; }
  RootId negate(RootId a) const { return negation_.at(a.index); }
  std::optional<RootId> doubled(RootId a) const;

  Rational inner(const Vector& a, const Vector& b) const { return dot(a, b); }
  // <b, a> = 2 (a, b) / (a, a)
  Rational pairing(RootId b, RootId a) const;
  Vector coroot(RootId a) const;  // 2a / (a, a)
  RootId reflect(RootId a, RootId b) const;
  Vector reflect_vector(RootId a, const Vector& v) const;
  std::vector<RootId> proportional_set(RootId a) const;
  // Coefficients of a in the simple basis.
  Vector simple_coordinates(const Vector& v) const;
  bool is_irreducible() const;

  std::string name(RootId a) const;  // coordinate vector, e.g. "[1,-1,0]"

 private:
  RootKind kind_ = RootKind::A;
  int rank_ = 0;
  std::size_t ambient_ = 0;
  std::vector<Vector> roots_;
  std::map<Vector, RootId> index_;
  std::vector<RootId> simple_;
  RootId highest_;
  std::vector<int> heights_;
  std::vector<RootId> negation_;
};

std::string vector_string(const Vector& v);

}  // namespace rgd
