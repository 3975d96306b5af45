#include "rgd/group_model.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "rgd/errors.hpp"

namespace rgd {

namespace {

Vector flatten(const std::vector<Scalar>& xs) {
  Vector r;
  r.reserve(2 * xs.size());
  for (const auto& x : xs) {
    r.push_back(x.base());
    r.push_back(x.ext());
  }
  return r;
}

void push_scalar_rows(RationalMatrix& rows, Vector& rhs, const std::vector<Scalar>& coeffs,
                      const Scalar& constant) {
  // sum coeffs_k x_k + constant = 0, split into base and ext parts
  Vector base, ext;
  bool any = !constant.is_zero();
  for (const auto& c : coeffs) {
    base.push_back(c.base());
    ext.push_back(c.ext());
    any = any || !c.is_zero();
  }
  if (!any) return;
  rows.push_back(std::move(base));
  rhs.push_back(-constant.base());
  rows.push_back(std::move(ext));
  rhs.push_back(-constant.ext());
}

}  // namespace

GroupModel GroupModel::split_sl(int rank) {
  if (rank < 1) throw ConfigError("SL model needs rank >= 1");
  GroupModel m;
  m.kind_ = ModelKind::SplitSL;
  m.dim_ = static_cast<std::size_t>(rank) + 1;
  m.roots_ = RootSystem::build(RootKind::A, rank);
  m.build_root_data();
  return m;
}

GroupModel GroupModel::special_unitary(int dim, int witt, int disc) {
  if (witt < 1) throw ConfigError("SU model needs witt >= 1");
  if (dim < 2 * witt + 1) throw ConfigError("SU model needs dim >= 2*witt+1");
  if (!Scalar::valid_disc(disc)) throw ConfigError("discriminant must be square-free, not 0 or 1");
  GroupModel m;
  m.kind_ = ModelKind::SpecialUnitary;
  m.dim_ = static_cast<std::size_t>(dim);
  m.witt_ = witt;
  m.disc_ = disc;
  m.roots_ = RootSystem::build(RootKind::BC, witt);
  m.gram_ = LaurentMatrix(m.dim_);
  for (std::size_t i = 0; i < static_cast<std::size_t>(witt); ++i) {
    m.gram_(i, m.dim_ - 1 - i) = LaurentPoly(1);
    m.gram_(m.dim_ - 1 - i, i) = LaurentPoly(-1);
  }
  for (std::size_t h = witt; h < m.dim_ - witt; ++h) m.gram_(h, h) = LaurentPoly(Scalar::sqrt_of(disc));
  m.build_root_data();
  return m;
}

std::string GroupModel::description() const {
  if (kind_ == ModelKind::SplitSL) return "SL_" + std::to_string(dim_);
  return "SU(" + std::to_string(dim_) + "," + std::to_string(witt_) + ") over Q(sqrt(" +
         std::to_string(disc_) + "))";
}

Scalar GroupModel::field_scalar(const Rational& base, const Rational& ext) const {
  if (disc_ == 0) {
    if (sgn(ext) != 0) throw FieldMismatch("irrational scalar in a rational model");
    return Scalar(base);
  }
  return Scalar(base, ext, disc_);
}

std::vector<Position> GroupModel::compute_eta(RootId a) const {
  const Vector& v = roots_.vec(a);
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) nz.push_back(i);
  if (kind_ == ModelKind::SplitSL) {
    std::size_t i = v[nz[0]] > 0 ? nz[0] : nz[1];
    std::size_t j = v[nz[0]] > 0 ? nz[1] : nz[0];
    return {Position{i, j}};
  }
  const std::size_t m = dim_;
  auto star = [m](std::size_t p) { return m - 1 - p; };
  std::vector<Position> eta;
  bool negative = !roots_.is_positive(a);
  if (nz.size() == 1) {
    std::size_t i = nz[0];
    if (abs(v[i]) == 2) {
      eta = {Position{i, star(i)}};
    } else {
      for (std::size_t h = witt_; h < m - witt_; ++h) {
        eta.push_back(Position{i, h});
        eta.push_back(Position{h, star(i)});
      }
    }
  } else {
    std::size_t i = nz[0], j = nz[1];
    if (sgn(v[i]) != sgn(v[j])) {
      // e_i - e_j up to sign, with i < j
      eta = {Position{i, j}, Position{star(j), star(i)}};
    } else {
      eta = {Position{i, star(j)}, Position{j, star(i)}};
    }
  }
  if (negative)
    for (auto& p : eta) std::swap(p.row, p.col);
  return eta;
}

std::vector<std::vector<Scalar>> GroupModel::compute_basis(const std::vector<Position>& eta) const {
  const std::size_t comps = disc_ ? 2 : 1;
  const std::size_t nv = eta.size() * comps;
  // linearized membership X* F + F X = 0; columns in reverse order so the
  // first positions become the free parameters
  RationalMatrix rows;
  if (kind_ == ModelKind::SpecialUnitary) {
    rows.assign(2 * dim_ * dim_, Vector(nv, Rational(0)));
    for (std::size_t v = 0; v < nv; ++v) {
      const Position& p = eta[v / comps];
      Scalar s = v % comps ? Scalar::sqrt_of(disc_) : Scalar(1);
      LaurentMatrix x(dim_);
      x(p.row, p.col) = LaurentPoly(s);
      LaurentMatrix r = x.adjoint() * gram_ + gram_ * x;
      for (std::size_t e = 0; e < dim_ * dim_; ++e) {
        Scalar c = r(e / dim_, e % dim_).constant_term();
        rows[2 * e][nv - 1 - v] = c.base();
        rows[2 * e + 1][nv - 1 - v] = c.ext();
      }
    }
  }
  std::vector<Vector> ker = kernel(rows, nv);
  std::reverse(ker.begin(), ker.end());
  std::vector<std::vector<Scalar>> basis;
  for (const auto& kv : ker) {
    std::vector<Scalar> b;
    for (std::size_t k = 0; k < eta.size(); ++k) {
      const Rational& x = kv[nv - 1 - k * comps];
      Rational y = comps == 2 ? kv[nv - 1 - (k * comps + 1)] : Rational(0);
      b.push_back(field_scalar(x, y));
    }
    basis.push_back(std::move(b));
  }
  return basis;
}

void GroupModel::build_root_data() {
  data_.assign(roots_.size(), RootData{});
  for (RootId a : roots_.all()) {
    RootData& d = data_[a.index];
    d.eta = compute_eta(a);
    d.basis = compute_basis(d.eta);
    d.reader.assign(2 * d.eta.size(), Vector(d.basis.size()));
    for (std::size_t i = 0; i < d.basis.size(); ++i) {
      Vector f = flatten(d.basis[i]);
      for (std::size_t r = 0; r < f.size(); ++r) d.reader[r][i] = f[r];
    }
    Vector co = roots_.coroot(a);
    if (kind_ == ModelKind::SplitSL) {
      for (const auto& x : co) d.coroot.push_back(x.get_num().get_si());
    } else {
      d.coroot.assign(dim_, 0);
      for (std::size_t i = 0; i < co.size(); ++i) {
        long n = co[i].get_num().get_si();
        d.coroot[i] = n;
        d.coroot[dim_ - 1 - i] = -n;
      }
    }
  }
}

std::size_t GroupModel::module_dim_double(RootId a) const {
  auto d = roots_.doubled(a);
  return d ? module_dim(*d) : 0;
}

bool GroupModel::contains(const LaurentMatrix& g) const {
  if (g.size() != dim_) return false;
  if (kind_ == ModelKind::SpecialUnitary && !(g.adjoint() * gram_ * g == gram_)) return false;
  return det(g).is_one();
}

std::optional<RootId> GroupModel::project_root(std::size_t i, std::size_t j) const {
  const std::size_t m = dim_;
  if (i < 1 || j < 1 || i > m || j > m || i == j) throw IndexOutOfRange("absolute root index out of range");
  auto unit = [this](std::size_t p, long s) {
    Vector v(roots_.ambient_dim(), Rational(0));
    v[p - 1] = s;
    return v;
  };
  if (kind_ == ModelKind::SplitSL) {
    Vector v(m, Rational(0));
    v[i - 1] = 1;
    v[j - 1] = -1;
    return roots_.id(v);
  }
  if (i > j) {
    auto r = project_root(j, i);
    if (!r) return r;
    return roots_.negate(*r);
  }
  const std::size_t l = static_cast<std::size_t>(witt_);
  auto middle = [&](std::size_t p) { return p > l && p <= m - l; };
  auto sum = [](Vector a, const Vector& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
  };
  if (middle(i) && middle(j)) return std::nullopt;
  if (i <= l) {
    if (j == m - i + 1) return roots_.id(unit(i, 2));
    if (middle(j)) return roots_.id(unit(i, 1));
    if (j <= l) return roots_.id(sum(unit(i, 1), unit(j, -1)));
    return roots_.id(sum(unit(i, 1), unit(m - j + 1, 1)));
  }
  if (middle(i)) return roots_.id(unit(m - j + 1, 1));
  // both in the last block: e_(m-J+1) - e_(m-I+1) with I < J
  return roots_.id(sum(unit(m - j + 1, 1), unit(m - i + 1, -1)));
}

LaurentMatrix GroupModel::split_pinning(RootId a, const LaurentPoly& lambda) const {
  if (kind_ != ModelKind::SplitSL) throw WrongKind("split pinning needs an SL model");
  const Position& p = eta(a)[0];
  return LaurentMatrix::elementary(dim_, p.row, p.col, lambda);
}

std::vector<LaurentPoly> GroupModel::coroot_diagonal(RootId a, const LaurentPoly& lambda) const {
  if (!lambda.is_monomial()) throw NotMonomial("coroot parameter must be a monomial");
  if (!lambda.terms()[0].second.is_rational()) throw NotMonomial("coroot parameter must have a k coefficient");
  std::vector<LaurentPoly> d;
  for (long n : coroot_exponents(a)) d.push_back(lambda.monomial_pow(n));
  return d;
}

LaurentMatrix GroupModel::coroot(RootId a, const LaurentPoly& lambda) const {
  return LaurentMatrix::diagonal(coroot_diagonal(a, lambda));
}

LaurentMatrix GroupModel::pinning(RootId a, const std::vector<LaurentPoly>& entries) const {
  const auto& positions = eta(a);
  if (entries.size() != positions.size()) throw DimensionMismatch("pinning entries");
  LaurentMatrix p = LaurentMatrix::identity(dim_);
  bool trivial = true;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (entries[k].is_zero()) continue;
    trivial = false;
    p = p * LaurentMatrix::elementary(dim_, positions[k].row, positions[k].col, entries[k]);
  }
  auto twice = roots_.doubled(a);
  if (trivial || !twice || kind_ != ModelKind::SpecialUnitary) return p;

  // correction x_theta(q) solving (P (I + q E))* F P (I + q E) = F
  const Position th = eta(*twice)[0];
  LaurentMatrix mm = p.adjoint() * gram_ * p;
  LaurentMatrix r0 = mm - gram_;
  LaurentMatrix lin_conj(dim_), lin(dim_);
  for (std::size_t c = 0; c < dim_; ++c) lin_conj(th.col, c) = mm(th.row, c);
  for (std::size_t r = 0; r < dim_; ++r) lin(r, th.col) = mm(r, th.row);
  if (!lin_conj.is_constant() || !lin.is_constant())
    throw MembershipViolation("correction equation is not affine over k");
  std::set<long> exps;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      for (const auto& t : r0(r, c).terms()) exps.insert(t.first);
  for (const auto& t : p(th.row, th.col).terms()) exps.insert(t.first);
  const Scalar root = Scalar::sqrt_of(disc_);
  LaurentPoly q;
  for (long e : exps) {
    RationalMatrix rows;
    Vector rhs;
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) {
        Scalar a1 = lin_conj(r, c).constant_term(), b1 = lin(r, c).constant_term();
        // tau(q) a1 + q b1 with q = x + y sqrt(d)
        push_scalar_rows(rows, rhs, {a1 + b1, root * (b1 - a1)}, r0(r, c).coefficient(e));
      }
    RationalMatrix normalized = rows;
    Vector nrhs = rhs;
    normalized.push_back(Vector{Rational(1), Rational(0)});
    nrhs.push_back(-p(th.row, th.col).coefficient(e).base());
    auto sol = solve(normalized, nrhs, 2);
    if (!sol) sol = solve(rows, rhs, 2);
    if (!sol) throw MembershipViolation("no correction term satisfies the form");
    q += LaurentPoly::monomial(field_scalar((*sol)[0], (*sol)[1]), e);
  }
  if (!q.is_zero()) p = p * LaurentMatrix::elementary(dim_, th.row, th.col, q);
  if (!(p.adjoint() * gram_ * p == gram_)) throw MembershipViolation("pinning image leaves the group");
  return p;
}

std::vector<LaurentPoly> GroupModel::entries_for(RootId a, const Vector& c, long quarter_exp) const {
  const auto& b = basis(a);
  if (c.size() != b.size()) throw DimensionMismatch("coordinate vector size");
  std::vector<LaurentPoly> out;
  for (std::size_t k = 0; k < eta(a).size(); ++k) {
    Scalar s;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (sgn(c[i]) != 0) s += b[i][k] * Scalar(c[i]);
    out.push_back(LaurentPoly::monomial(s, quarter_exp));
  }
  return out;
}

RootGroupCoords GroupModel::zero_coords(const AffineRoot& alpha) const {
  return RootGroupCoords{alpha.root, alpha.level, Vector(module_dim(alpha.root), Rational(0)),
                         Vector(module_dim_double(alpha.root), Rational(0))};
}

LaurentMatrix GroupModel::relative_pinning(const RootGroupCoords& x) const {
  const long q = x.level.quarters();
  LaurentMatrix g = pinning(x.root, entries_for(x.root, x.c, -q));
  auto twice = roots_.doubled(x.root);
  if (!twice) {
    if (!x.d.empty()) throw DimensionMismatch("second coordinates without a double root");
    return g;
  }
  if (std::all_of(x.d.begin(), x.d.end(), [](const Rational& r) { return sgn(r) == 0; })) {
    if (x.d.size() != module_dim(*twice)) throw DimensionMismatch("second coordinate size");
    return g;
  }
  return g * pinning(*twice, entries_for(*twice, x.d, -2 * q));
}

std::vector<Generator> GroupModel::generators(const AffineRoot& alpha,
                                              const std::vector<Rational>& coeffs) const {
  std::vector<Generator> out;
  RootGroupCoords zero = zero_coords(alpha);
  for (std::size_t i = 0; i < zero.c.size(); ++i)
    for (const auto& c : coeffs) {
      RootGroupCoords x = zero;
      x.c[i] = c;
      out.push_back(Generator{relative_pinning(x), x, false, i});
    }
  for (std::size_t j = 0; j < zero.d.size(); ++j)
    for (const auto& c : coeffs) {
      RootGroupCoords x = zero;
      x.d[j] = c;
      out.push_back(Generator{relative_pinning(x), x, true, j});
    }
  return out;
}

std::optional<Vector> GroupModel::read_coords(RootId a, const std::vector<Scalar>& values) const {
  return solve(data_.at(a.index).reader, flatten(values), module_dim(a));
}

std::vector<RootGroupCoords> GroupModel::peel_product(const LaurentMatrix& g,
                                                      const std::vector<AffineRoot>& order) const {
  if (g.size() != dim_) throw DimensionMismatch("peel of a matrix of the wrong size");
  LaurentMatrix residue = g;
  std::vector<RootGroupCoords> out;
  auto read = [&](const LaurentMatrix& m, RootId a, long e) {
    std::vector<Scalar> vals;
    for (const auto& p : eta(a)) vals.push_back(m(p.row, p.col).coefficient(e));
    auto c = read_coords(a, vals);
    if (!c) throw ResidueNotIdentity("entries are not in the image of the pinning");
    return *c;
  };
  for (const auto& alpha : order) {
    const long q = alpha.level.quarters();
    RootGroupCoords x = zero_coords(alpha);
    x.c = read(residue, alpha.root, -q);
    if (auto twice = roots_.doubled(alpha.root)) {
      RootGroupCoords first = x;
      LaurentMatrix rest = inverse(relative_pinning(first)) * residue;
      x.d = read(rest, *twice, -2 * q);
    }
    residue = inverse(relative_pinning(x)) * residue;
    out.push_back(std::move(x));
  }
  if (!residue.is_identity()) throw ResidueNotIdentity("residue " + residue.to_string());
  return out;
}

std::optional<RootGroupCoords> GroupModel::try_peel(const LaurentMatrix& g, const AffineRoot& alpha) const {
  try {
    return peel_product(g, {alpha})[0];
  } catch (const ResidueNotIdentity&) {
    return std::nullopt;
  }
}

RootGroupCoords GroupModel::peel(const LaurentMatrix& g, const AffineRoot& alpha) const {
  auto x = try_peel(g, alpha);
  if (!x) throw NotInRootGroup("element is not in " + to_string(roots_, alpha));
  return *x;
}

Vector GroupModel::q2_additive(RootId a, const Vector& v, const Vector& w, Level level) const {
  auto make = [&](const Vector& c) {
    return relative_pinning(RootGroupCoords{a, level, c, Vector(module_dim_double(a), Rational(0))});
  };
  Vector sum = v;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += w.at(i);
  LaurentMatrix z = inverse(make(sum)) * make(v) * make(w);
  auto twice = roots_.doubled(a);
  if (!twice) {
    if (!z.is_identity()) throw PeelFailure("additive law fails for a reduced root");
    return {};
  }
  auto x = try_peel(z, AffineRoot{*twice, 2 * level});
  if (!x) throw PeelFailure("additive defect is not in the double root group");
  return x->c;
}

RootGroupCoords GroupModel::solve_left_factor(RootId a, const LaurentMatrix& m) const {
  if (!m.is_constant()) throw RankOneSolveFailed("rank-one solve needs a constant element");
  const RootId neg = roots_.negate(a);
  const auto& grade = coroot_exponents(a);
  const long gmax = *std::max_element(grade.begin(), grade.end());
  std::vector<std::size_t> vmin;
  for (std::size_t q = 0; q < dim_; ++q)
    if (grade[q] == -gmax) vmin.push_back(q);

  // rows of y * m * e_q in the given grade, linear in the coordinates of y
  auto solve_step = [&](RootId b, const LaurentMatrix& cur, long row_grade) {
    const auto& bb = basis(b);
    const auto& pos = eta(b);
    RationalMatrix rows;
    Vector rhs;
    for (std::size_t q : vmin)
      for (std::size_t r = 0; r < dim_; ++r) {
        if (grade[r] != row_grade) continue;
        std::vector<Scalar> coeffs(bb.size());
        for (std::size_t i = 0; i < bb.size(); ++i)
          for (std::size_t k = 0; k < pos.size(); ++k)
            if (pos[k].row == r) coeffs[i] += bb[i][k] * cur(pos[k].col, q).constant_term();
        push_scalar_rows(rows, rhs, coeffs, cur(r, q).constant_term());
      }
    auto sol = solve(rows, rhs, bb.size());
    if (!sol) throw RankOneSolveFailed("no left factor in the opposite root group");
    return *sol;
  };

  RootGroupCoords y = zero_coords(AffineRoot{neg, Level()});
  y.c = solve_step(neg, m, gmax - 2);
  if (auto twice = roots_.doubled(neg)) {
    LaurentMatrix cur = relative_pinning(y) * m;
    y.d = solve_step(*twice, cur, gmax - 4);
  }
  LaurentMatrix check = relative_pinning(y) * m;
  for (std::size_t q : vmin)
    for (std::size_t r = 0; r < dim_; ++r)
      if (grade[r] != gmax && !check(r, q).is_zero())
        throw RankOneSolveFailed("left factor leaves a lower component");
  return y;
}

RankOneElement GroupModel::w_element(RootId a, const RootGroupCoords& u, Level level) const {
  if (u.root != a || u.level != Level()) throw RankOneSolveFailed("u must lie in U_a at level 0");
  if (level.quarters() % 2 != 0) throw HalfIntegerLevel("level must be a half integer");
  LaurentMatrix um = relative_pinning(u);
  if (um.is_identity()) throw RankOneSolveFailed("u is the identity");
  LaurentMatrix left = relative_pinning(solve_left_factor(a, um));
  LaurentMatrix right = inverse(relative_pinning(solve_left_factor(a, inverse(um))));
  LaurentMatrix w = left * um * right;
  auto d = coroot_diagonal(a, LaurentPoly::monomial(Scalar(1), -level.quarters() / 2));
  return RankOneElement{conjugate_by_diagonal(d, w), conjugate_by_diagonal(d, left),
                        conjugate_by_diagonal(d, right)};
}

LaurentMatrix GroupModel::split_torus_sample() const {
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  std::vector<LaurentPoly> d(dim_, LaurentPoly(1));
  if (kind_ == ModelKind::SplitSL) {
    for (std::size_t i = 0; i < dim_; ++i) d[i] = LaurentPoly(Scalar(primes[i % 15] + 50 * (i / 15)));
  } else {
    for (std::size_t i = 0; i < static_cast<std::size_t>(witt_); ++i) {
      d[i] = LaurentPoly(Scalar(primes[i % 15] + 50 * (i / 15)));
      d[dim_ - 1 - i] = d[i].monomial_pow(-1);
    }
  }
  return LaurentMatrix::diagonal(d);
}

bool GroupModel::in_centralizer(const LaurentMatrix& g) const {
  if (g.size() != dim_ || !g.is_constant() || !contains(g)) return false;
  LaurentMatrix s = split_torus_sample();
  return s * g == g * s;
}

std::vector<LaurentMatrix> GroupModel::centralizer_samples(std::size_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  auto rational = [&](bool nonzero) {
    for (;;) {
      Rational r = frac(num(rng), den(rng));
      if (!nonzero || sgn(r) != 0) return r;
    }
  };
  auto scalar = [&]() {
    for (;;) {
      Scalar s = field_scalar(rational(false), disc_ ? rational(false) : Rational(0));
      if (!s.is_zero()) return s;
    }
  };
  std::vector<LaurentMatrix> out;
  for (std::size_t k = 0; k < count; ++k) {
    LaurentMatrix h = LaurentMatrix::identity(dim_);
    if (kind_ == ModelKind::SplitSL) {
      Scalar prod(1);
      for (std::size_t i = 0; i + 1 < dim_; ++i) {
        Scalar x = k == 0 ? Scalar(i == 0 ? 2 : 1) : Scalar(rational(true));
        h(i, i) = LaurentPoly(x);
        prod *= x;
      }
      h(dim_ - 1, dim_ - 1) = LaurentPoly(prod.inverse());
    } else {
      const std::size_t l = witt_, r = dim_ - 2 * l;
      Scalar det_hyp(1);
      for (std::size_t i = 0; i < l; ++i) {
        Scalar x = k == 0 ? Scalar(i == 0 ? 2 : 1) : scalar();
        h(i, i) = LaurentPoly(x);
        h(dim_ - 1 - i, dim_ - 1 - i) = LaurentPoly(x.conj().inverse());
        det_hyp *= x / x.conj();
      }
      // unitary middle block for the form sqrt(d) * I
      LaurentMatrix mid = LaurentMatrix::identity(r);
      if (k > 0) {
        for (std::size_t j = 0; j < r; ++j) {
          Scalar nu = scalar();
          mid(j, j) = LaurentPoly(nu.conj() / nu);
        }
        if (r >= 2 && k % 2 == 1) {
          LaurentMatrix rot = LaurentMatrix::identity(r);
          rot(0, 0) = LaurentPoly(Scalar(frac(3, 5)));
          rot(0, 1) = LaurentPoly(Scalar(frac(-4, 5)));
          rot(1, 0) = LaurentPoly(Scalar(frac(4, 5)));
          rot(1, 1) = LaurentPoly(Scalar(frac(3, 5)));
          mid = rot * mid;
        }
        if (r >= 2 && k % 3 == 2) {
          LaurentMatrix swap(r);
          for (std::size_t j = 2; j < r; ++j) swap(j, j) = LaurentPoly(1);
          swap(0, 1) = LaurentPoly(1);
          swap(1, 0) = LaurentPoly(1);
          mid = swap * mid;
        }
      }
      Scalar total = det_hyp * det(mid).constant_term();
      Scalar fix = total.inverse();
      for (std::size_t j = 0; j < r; ++j) mid(j, 0) = mid(j, 0) * LaurentPoly(fix);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) h(l + a, l + b) = mid(a, b);
    }
    if (!in_centralizer(h)) throw MembershipViolation("centralizer sample construction failed");
    out.push_back(std::move(h));
  }
  return out;
}

std::optional<AffineRoot> GroupModel::infer_index(const LaurentMatrix& g) const {
  if (g.size() != dim_) return std::nullopt;
  std::set<RootId> found;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      if (r == c) {
        if (!g(r, c).is_one()) return std::nullopt;
        continue;
      }
      if (g(r, c).is_zero()) continue;
      auto a = project_root(r + 1, c + 1);
      if (!a) return std::nullopt;
      found.insert(*a);
    }
  if (found.empty()) return std::nullopt;
  std::optional<RootId> root;
  for (RootId a : found) {
    auto twice = roots_.doubled(a);
    bool ok = std::all_of(found.begin(), found.end(), [&](RootId b) { return b == a || (twice && b == *twice); });
    if (ok) root = a;
  }
  if (!root) return std::nullopt;
  std::optional<long> exp;
  for (const auto& p : eta(*root)) {
    const LaurentPoly& x = g(p.row, p.col);
    if (x.is_zero()) continue;
    if (!x.is_monomial()) return std::nullopt;
    if (exp && *exp != x.min_exp()) return std::nullopt;
    exp = x.min_exp();
  }
  if (!exp) return std::nullopt;
  return AffineRoot{*root, Level::quarters(-*exp)};
}

}  // namespace rgd
