#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgd/affine_root.hpp"
#include "rgd/matrix.hpp"

namespace rgd {

enum class ModelKind { SplitSL, SpecialUnitary };

// Matrix position, 0-based.
struct Position {
  std::size_t row = 0, col = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

// x_a(sum c_i t^-l e_i) * x_2a(sum d_j t^-2l e'_j)
struct RootGroupCoords {
  RootId root;
  Level level;
  Vector c;
  Vector d;  // empty when 2a is not a root
  friend bool operator==(const RootGroupCoords&, const RootGroupCoords&) = default;
};

struct Generator {
  LaurentMatrix matrix;
  RootGroupCoords coords;
  bool second = false;     // x_2a family
  std::size_t basis = 0;   // basis vector index within its family
};

struct RankOneElement {
  LaurentMatrix w;
  LaurentMatrix left;   // in U_(-a, -l)
  LaurentMatrix right;  // in U_(-a, -l)
};

class GroupModel {
 public:
  static GroupModel split_sl(int rank);
  // Hermitian-type form of Witt index witt on k'^dim, k' = Q(sqrt(disc)).
  static GroupModel special_unitary(int dim, int witt, int disc = -1);

  ModelKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  int witt() const { return witt_; }
  int disc() const { return disc_; }
  const RootSystem& roots() const { return roots_; }
  const LaurentMatrix& gram() const { return gram_; }
  std::string description() const;

  const std::vector<Position>& eta(RootId a) const { return data_.at(a.index).eta; }
  // k-basis of V_a: each vector holds one coefficient per eta position.
  const std::vector<std::vector<Scalar>>& basis(RootId a) const { return data_.at(a.index).basis; }
  std::size_t module_dim(RootId a) const { return basis(a).size(); }
  std::size_t module_dim_double(RootId a) const;
  // Exponent of the cocharacter a^vee on each basis line.
  const std::vector<long>& coroot_exponents(RootId a) const { return data_.at(a.index).coroot; }

  bool contains(const LaurentMatrix& g) const;
  // Relative root of the absolute root e_i - e_j (1-based), nullopt for zero.
  std::optional<RootId> project_root(std::size_t i, std::size_t j) const;

  LaurentMatrix split_pinning(RootId a, const LaurentPoly& lambda) const;
  std::vector<LaurentPoly> coroot_diagonal(RootId a, const LaurentPoly& lambda) const;
  LaurentMatrix coroot(RootId a, const LaurentPoly& lambda) const;

  // Product of absolute pinnings over eta(a) plus the membership correction.
  LaurentMatrix pinning(RootId a, const std::vector<LaurentPoly>& entries) const;
  LaurentMatrix relative_pinning(const RootGroupCoords& x) const;
  RootGroupCoords zero_coords(const AffineRoot& alpha) const;

  std::vector<Generator> generators(const AffineRoot& alpha, const std::vector<Rational>& coeffs) const;

  RootGroupCoords peel(const LaurentMatrix& g, const AffineRoot& alpha) const;
  std::optional<RootGroupCoords> try_peel(const LaurentMatrix& g, const AffineRoot& alpha) const;
  // Greedy peeling in the given order; needs an order compatible with a
  // positive functional, e.g. increasing p+q for commutator intervals.
  std::vector<RootGroupCoords> peel_product(const LaurentMatrix& g,
                                            const std::vector<AffineRoot>& order) const;
  // d with x(v) x(w) = x(v + w) x_2a(d) at the given level.
  Vector q2_additive(RootId a, const Vector& v, const Vector& w, Level level) const;

  // m(x) for x = a^vee(t^-l/2) u a^vee(t^-l/2)^-1, u given at level 0.
  RankOneElement w_element(RootId a, const RootGroupCoords& u, Level level) const;

  bool in_centralizer(const LaurentMatrix& g) const;
  std::vector<LaurentMatrix> centralizer_samples(std::size_t count, std::uint64_t seed) const;
  // Affine root read off the support and exponents of a root group element.
  std::optional<AffineRoot> infer_index(const LaurentMatrix& g) const;

 private:
  struct RootData {
    std::vector<Position> eta;
    std::vector<std::vector<Scalar>> basis;
    RationalMatrix reader;  // columns: basis vectors flattened as (base, ext)
    std::vector<long> coroot;
  };

  void build_root_data();
  std::vector<Position> compute_eta(RootId a) const;
  std::vector<std::vector<Scalar>> compute_basis(const std::vector<Position>& eta) const;
  std::optional<Vector> read_coords(RootId a, const std::vector<Scalar>& values) const;
  std::vector<LaurentPoly> entries_for(RootId a, const Vector& c, long quarter_exp) const;
  Scalar field_scalar(const Rational& base, const Rational& ext) const;
  LaurentMatrix split_torus_sample() const;
  RootGroupCoords solve_left_factor(RootId a, const LaurentMatrix& m) const;

  ModelKind kind_ = ModelKind::SplitSL;
  std::size_t dim_ = 0;
  int witt_ = 0;
  int disc_ = 0;
  RootSystem roots_;
  LaurentMatrix gram_;
  std::vector<RootData> data_;
};

}  // namespace rgd
