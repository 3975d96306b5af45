#include "rgd/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "rgd/errors.hpp"

namespace rgd {

namespace {

using Clock = std::chrono::steady_clock;

struct AxiomInfo {
  Axiom axiom;
  const char* name;
  const char* tag;
};

const AxiomInfo kAxioms[] = {
    {Axiom::RGD0, "RGD0", "rgd0"},
    {Axiom::RGD1, "RGD1", "rgd1"},
    {Axiom::RGD2, "RGD2", "rgd2"},
    {Axiom::RGD3, "RGD3", "rgd3"},
    {Axiom::RGD4, "RGD4", "rgd4"},
    {Axiom::RGD5, "RGD5", "rgd5"},
    {Axiom::CorootShift, "CorootShift", "coroot"},
    {Axiom::Q2Additive, "Q2Additive", "q2"},
    {Axiom::Combinatorics, "Combinatorics", "comb"},
};

// Collects case counts and capped failure witnesses.
class Recorder {
 public:
  Recorder(Axiom a, const SuiteConfig& cfg) : cap_(cfg.max_failures), start_(Clock::now()) { report_.axiom = a; }

  void check(bool ok, const std::function<Failure()>& witness) {
    ++report_.cases;
    if (ok) return;
    ++report_.failure_count;
    if (report_.failures.size() < cap_) report_.failures.push_back(witness());
  }

  AxiomReport finish() {
    report_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  AxiomReport report_;
  std::size_t cap_;
  Clock::time_point start_;
};

std::string coords_string(const RootSystem& sys, const RootGroupCoords& x) {
  std::string s = "x" + to_string(sys, AffineRoot{x.root, x.level}) + " c=" + vector_string(x.c);
  if (!x.d.empty()) s += " d=" + vector_string(x.d);
  return s;
}

std::string gen_string(const RootSystem& sys, const Generator& g) { return coords_string(sys, g.coords); }

std::vector<Generator> generators_in(const GroupModel& g, const AffineRoot& a, const std::vector<Rational>& coeffs) {
  return g.generators(a, coeffs);
}

// Generators of one affine root grouped by family.
std::vector<std::vector<Generator>> families(const GroupModel& g, const AffineRoot& a,
                                             const std::vector<Rational>& coeffs) {
  std::vector<std::vector<Generator>> out;
  for (auto& gen : g.generators(a, coeffs)) {
    if (out.empty() || out.back().front().second != gen.second || out.back().front().basis != gen.basis)
      out.emplace_back();
    out.back().push_back(std::move(gen));
  }
  return out;
}

bool peels_as(const GroupModel& g, const LaurentMatrix& m, const AffineRoot& a) {
  return g.try_peel(m, a).has_value();
}

}  // namespace

std::string axiom_name(Axiom a) {
  for (const auto& x : kAxioms)
    if (x.axiom == a) return x.name;
  return "?";
}

std::string axiom_tag(Axiom a) {
  for (const auto& x : kAxioms)
    if (x.axiom == a) return x.tag;
  return "?";
}

std::optional<Axiom> axiom_from_tag(const std::string& tag) {
  for (const auto& x : kAxioms)
    if (tag == x.tag) return x.axiom;
  return std::nullopt;
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> all = [] {
    std::vector<Axiom> r;
    for (const auto& x : kAxioms) r.push_back(x.axiom);
    return r;
  }();
  return all;
}

void SuiteConfig::validate() const {
  if (level_min > 0 || level_max < 0) throw ConfigError("level range must contain 0");
  if (samples < 1) throw ConfigError("samples must be at least 1");
  if (points < 1) throw ConfigError("points must be at least 1");
}

std::vector<Rational> coefficient_samples(std::size_t count, std::uint64_t seed) {
  std::vector<Rational> out{Rational(1), Rational(-1), frac(1, 2)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  while (out.size() < count) {
    Rational r = frac(num(rng), den(rng));
    if (sgn(r) == 0 || std::find(out.begin(), out.end(), r) != out.end()) continue;
    out.push_back(r);
  }
  out.resize(count);
  return out;
}

bool in_positive_profile(const LaurentMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const LaurentPoly& x = m(i, j);
      if (x.is_zero()) continue;
      if (!x.integral_exponents() || x.max_exp() > 0) return false;
      Scalar c = x.constant_term();
      if (i == j ? !(c == Scalar(1)) : (i > j && !c.is_zero())) return false;
    }
  return true;
}

bool in_negative_profile(const LaurentMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const LaurentPoly& x = m(i, j);
      if (x.is_zero()) continue;
      if (!x.integral_exponents() || x.min_exp() < 0) return false;
      Scalar c = x.constant_term();
      if (i == j ? !(c == Scalar(1)) : (i < j && !c.is_zero())) return false;
    }
  return true;
}

AxiomReport check_rgd0(const GroupModel& g, const SuiteConfig& cfg) {
  Recorder rec(Axiom::RGD0, cfg);
  const RootSystem& sys = g.roots();
  for (const auto& a : affine_roots_in_range(sys, cfg.level_min, cfg.level_max)) {
    auto gens = generators_in(g, a, {Rational(1)});
    bool nontrivial = std::any_of(gens.begin(), gens.end(), [](const Generator& x) { return !x.matrix.is_identity(); });
    rec.check(nontrivial, [&] { return Failure{to_string(sys, a), "a generator different from I", "only I"}; });
  }
  return rec.finish();
}

AxiomReport check_rgd1(const GroupModel& g, const SuiteConfig& cfg) {
  Recorder rec(Axiom::RGD1, cfg);
  const RootSystem& sys = g.roots();
  const auto coeffs = coefficient_samples(cfg.samples, cfg.seed);
  const auto range = affine_roots_in_range(sys, cfg.level_min, cfg.level_max);
  struct Fam {
    std::vector<Generator> gens;
    std::vector<LaurentMatrix> inv;
  };
  std::vector<std::vector<Fam>> fams;
  for (const auto& a : range) {
    std::vector<Fam> fs;
    for (auto& f : families(g, a, coeffs)) {
      Fam x;
      for (auto& gen : f) x.inv.push_back(inverse(gen.matrix));
      x.gens = std::move(f);
      fs.push_back(std::move(x));
    }
    fams.push_back(std::move(fs));
  }
  const std::size_t s = coeffs.size();
  for (std::size_t i = 0; i < range.size(); ++i)
    for (std::size_t j = i + 1; j < range.size(); ++j) {
      const AffineRoot &a = range[i], &b = range[j];
      if (!is_prenilpotent(sys, a, b)) continue;
      const auto order = open_interval(sys, a, b);
      for (const auto& fa : fams[i])
        for (const auto& fb : fams[j])
          for (std::size_t k = 0; k < s; ++k) {
            const std::size_t k2 = (k + 1) % s;
            LaurentMatrix comm = fa.gens[k].matrix * fb.gens[k2].matrix * fa.inv[k] * fb.inv[k2];
            std::string err;
            try {
              g.peel_product(comm, order);
            } catch (const Error& e) {
              err = e.what();
            }
            rec.check(err.empty(), [&] {
              std::string ord;
              for (const auto& o : order) ord += to_string(sys, o) + " ";
              return Failure{"[" + gen_string(sys, fa.gens[k]) + ", " + gen_string(sys, fb.gens[k2]) + "]",
                             "product over " + (ord.empty() ? std::string("nothing") : ord), comm.to_string()};
            });
          }
    }
  return rec.finish();
}

AxiomReport check_rgd2(const GroupModel& g, const SuiteConfig& cfg) {
  Recorder rec(Axiom::RGD2, cfg);
  const RootSystem& sys = g.roots();
  const auto coeffs = coefficient_samples(cfg.samples, cfg.seed);
  const auto range = affine_roots_in_range(sys, cfg.level_min, cfg.level_max);
  std::vector<std::vector<Generator>> gens;
  for (const auto& b : range) gens.push_back(g.generators(b, coeffs));
  const std::size_t count = std::max<std::size_t>(4, cfg.samples / 2);
  std::mt19937_64 rng(cfg.seed + 1);
  std::uniform_int_distribution<std::size_t> pick(0, coeffs.size() - 1);

  for (const auto& alpha : simple_affine_roots(sys)) {
    const RootId a = alpha.root;
    const AffineRoot opposite = negate(sys, alpha);
    std::vector<LaurentMatrix> ms;
    for (std::size_t k = 0; k < count; ++k) {
      RootGroupCoords u = g.zero_coords(AffineRoot{a, Level()});
      if (k == 0) {
        u.c[0] = 1;
      } else {
        for (auto& c : u.c) c = coeffs[pick(rng)];
        for (auto& d : u.d) d = coeffs[pick(rng)];
      }
      RootGroupCoords x = u;
      x.level = alpha.level;
      const LaurentMatrix xm = g.relative_pinning(x);
      const std::string in = "alpha=" + to_string(sys, alpha) + " u=" + coords_string(sys, x);
      RankOneElement m;
      try {
        m = g.w_element(a, u, alpha.level);
      } catch (const Error& e) {
        rec.check(false, [&] { return Failure{in, "rank-one element", e.what()}; });
        continue;
      }
      // (i) m lies in U_-alpha x U_-alpha
      bool factors = peels_as(g, m.left, opposite) && peels_as(g, m.right, opposite);
      rec.check(factors && m.left * xm * m.right == m.w && g.contains(m.w), [&] {
        return Failure{in, "m = y x y' with y, y' in U" + to_string(sys, opposite), m.w.to_string()};
      });
      // (ii) conjugation permutes the root groups as the affine reflection
      const LaurentMatrix minv = inverse(m.w);
      for (std::size_t bi = 0; bi < range.size(); ++bi) {
        const AffineRoot target = affine_reflect(sys, alpha, range[bi]);
        for (const auto& gen : gens[bi]) {
          LaurentMatrix conj = m.w * gen.matrix * minv;
          bool ok = peels_as(g, conj, target);
          auto idx = g.infer_index(conj);
          AffineRoot expect = target;
          if (gen.second) expect = AffineRoot{*sys.doubled(target.root), 2 * target.level};
          ok = ok && idx && *idx == expect;
          rec.check(ok, [&] {
            return Failure{in + " g=" + gen_string(sys, gen), "element of U" + to_string(sys, target),
                           idx ? "index " + to_string(sys, *idx) + " " + conj.to_string() : conj.to_string()};
          });
        }
      }
      ms.push_back(m.w);
    }
    // (iii) m(u) m(v)^-1 lies in the centralizer of the split torus
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i; j < ms.size(); ++j) {
        LaurentMatrix h = ms[i] * inverse(ms[j]);
        rec.check(g.in_centralizer(h), [&] {
          return Failure{"alpha=" + to_string(sys, alpha) + " samples " + std::to_string(i) + "," + std::to_string(j),
                         "element of C_G(S)(k)", h.to_string()};
        });
      }
  }
  return rec.finish();
}

AxiomReport check_rgd3(const GroupModel& g, const SuiteConfig& cfg) {
  Recorder rec(Axiom::RGD3, cfg);
  const RootSystem& sys = g.roots();
  const auto coeffs = coefficient_samples(cfg.samples, cfg.seed);
  auto bounds_ok = [](const LaurentMatrix& m, bool upper, long lo, long hi) {
    if (upper ? !m.is_upper_unitriangular() : !m.is_lower_unitriangular()) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) {
        const LaurentPoly& x = m(i, j);
        if (i == j || x.is_zero()) continue;
        if (!x.integral_exponents() || x.min_exp() < lo || x.max_exp() > hi) return false;
      }
    return true;
  };
  const long inf = 1L << 40;
  for (const auto& a : affine_roots_in_range(sys, cfg.level_min, cfg.level_max)) {
    const bool pos = sys.is_positive(a.root);
    const long l = a.level.integer();
    const int matches = (pos && l >= 0) + (pos && l <= -1) + (!pos && l >= 1) + (!pos && l <= 0);
    char which = pos ? (l >= 0 ? 'a' : 'b') : (l >= 1 ? 'c' : 'd');
    long lo = -inf, hi = inf;
    if (which == 'a') hi = l >= 1 ? -4 : 0;
    if (which == 'b') lo = 4;
    if (which == 'c') hi = -4;
    if (which == 'd') lo = 0;
    const bool upper = pos;
    auto gens = g.generators(a, coeffs);
    std::vector<LaurentMatrix> elems;
    for (const auto& gen : gens) elems.push_back(gen.matrix);
    // products of generators of the same group share the profile
    for (std::size_t k = 0; k + 2 < gens.size(); k += 3) elems.push_back(gens[k].matrix * gens[k + 1].matrix * gens[k + 2].matrix);
    for (const auto& m : elems) {
      bool ok = matches == 1 && bounds_ok(m, upper, lo, hi) &&
                in_positive_profile(m) == is_positive(sys, a) && in_negative_profile(m) == !is_positive(sys, a);
      rec.check(ok, [&] {
        return Failure{to_string(sys, a) + " case (" + std::string(1, which) + ")",
                       std::string(upper ? "upper" : "lower") + " unitriangular with exponent bounds", m.to_string()};
      });
    }
  }
  // U_-alpha_i is not inside the positive profile
  for (const auto& s : simple_affine_roots(sys)) {
    const AffineRoot opp = negate(sys, s);
    auto gens = g.generators(opp, {Rational(1)});
    const LaurentMatrix& w = gens.front().matrix;
    rec.check(!w.is_identity() && !in_positive_profile(w), [&] {
      return Failure{"witness in U" + to_string(sys, opp), "outside the positive profile", w.to_string()};
    });
  }
  return rec.finish();
}

AxiomReport check_rgd4(const GroupModel& g, const SuiteConfig& cfg) {
  Recorder rec(Axiom::RGD4, cfg);
  const RootSystem& sys = g.roots();
  const auto coeffs = coefficient_samples(cfg.samples, cfg.seed);
  std::vector<Generator> pool;
  for (const auto& a : affine_roots_in_range(sys, cfg.level_min, cfg.level_max)) {
    for (auto& gen : g.generators(a, coeffs)) {
      const auto& x = gen.coords;
      std::size_t nonzero = 0;
      for (const auto& c : x.c) nonzero += sgn(c) != 0;
      for (const auto& d : x.d) nonzero += sgn(d) != 0;
      // a single monomial pinning parameter, recovered exactly by peeling
      const auto& positions = g.eta(gen.second ? *sys.doubled(a.root) : a.root);
      bool monomial = std::all_of(positions.begin(), positions.end(), [&](const Position& p) {
        const LaurentPoly& e = gen.matrix(p.row, p.col);
        return e.is_zero() || e.is_monomial();
      });
      auto back = g.try_peel(gen.matrix, a);
      rec.check(nonzero == 1 && monomial && back && *back == x && g.contains(gen.matrix), [&] {
        return Failure{gen_string(sys, gen), "monomial pinning image in the group", gen.matrix.to_string()};
      });
      pool.push_back(std::move(gen));
    }
  }
  std::mt19937_64 rng(cfg.seed + 4);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const auto hs = g.centralizer_samples(4, cfg.seed);
  const std::size_t words = std::max<std::size_t>(8, 2 * cfg.samples);
  for (std::size_t w = 0; w < words; ++w) {
    LaurentMatrix m = LaurentMatrix::identity(g.dim());
    std::string in;
    for (int f = 0; f < 6; ++f) {
      const auto& gen = pool[pick(rng)];
      m = m * gen.matrix;
      in += gen_string(sys, gen) + " ";
    }
    rec.check(g.contains(m), [&] { return Failure{"word " + in, "group element", m.to_string()}; });
    LaurentMatrix mh = m * hs[w % hs.size()];
    rec.check(g.contains(mh), [&] { return Failure{"word " + in + "times centralizer sample", "group element", mh.to_string()}; });
  }
  return rec.finish();
}

AxiomReport check_rgd5(const GroupModel& g, const SuiteConfig& cfg) {
  Recorder rec(Axiom::RGD5, cfg);
  const RootSystem& sys = g.roots();
  const auto coeffs = coefficient_samples(cfg.samples, cfg.seed);
  const auto hs = g.centralizer_samples(std::max<std::size_t>(8, cfg.samples), cfg.seed);
  const auto range = affine_roots_in_range(sys, cfg.level_min, cfg.level_max);
  for (std::size_t hi = 0; hi < hs.size(); ++hi) {
    const LaurentMatrix& h = hs[hi];
    const LaurentMatrix hinv = inverse(h);
    for (const auto& a : range)
      for (const auto& gen : g.generators(a, coeffs)) {
        LaurentMatrix conj = h * gen.matrix * hinv;
        rec.check(peels_as(g, conj, a), [&] {
          return Failure{"h#" + std::to_string(hi) + " " + h.to_string() + " g=" + gen_string(sys, gen),
                         "element of U" + to_string(sys, a), conj.to_string()};
        });
      }
  }
  return rec.finish();
}

AxiomReport check_coroot_shift(const GroupModel& g, const SuiteConfig& cfg) {
  Recorder rec(Axiom::CorootShift, cfg);
  const RootSystem& sys = g.roots();
  const auto coeffs = coefficient_samples(std::min<std::size_t>(cfg.samples, 3), cfg.seed);
  for (RootId a : sys.all())
    for (RootId b : sys.all()) {
      const Rational pairing = sys.pairing(b, a);
      for (long n2 = 2 * cfg.level_min; n2 <= 2 * cfg.level_max; ++n2) {
        const AffineRoot beta{b, Level::half(n2)};
        const auto gens = g.generators(beta, coeffs);
        for (long l2 = 2 * cfg.level_min; l2 <= 2 * cfg.level_max; ++l2) {
          // a^vee(t^(-l/2)) with l = l2 / 2
          const auto d = g.coroot_diagonal(a, LaurentPoly::monomial(Scalar(1), -l2));
          std::vector<LaurentPoly> dinv;
          for (const auto& x : d) dinv.push_back(x.monomial_pow(-1));
          const AffineRoot target{b, beta.level + Level::from_rational(frac(l2, 2) * pairing / 2)};
          for (const auto& gen : gens) {
            LaurentMatrix conj = conjugate_by_diagonal(d, gen.matrix);
            auto x = g.try_peel(conj, target);
            LaurentMatrix back = conjugate_by_diagonal(dinv, conj);
            auto y = g.try_peel(back, beta);
            rec.check(x && y && *y == gen.coords && back == gen.matrix, [&] {
              return Failure{"coroot " + sys.name(a) + " l=" + Level::half(l2).to_string() + " g=" + gen_string(sys, gen),
                             "element of U" + to_string(sys, target) + " and round trip", conj.to_string()};
            });
          }
        }
      }
    }
  return rec.finish();
}

AxiomReport check_q2_additive(const GroupModel& g, const SuiteConfig& cfg) {
  Recorder rec(Axiom::Q2Additive, cfg);
  const RootSystem& sys = g.roots();
  const auto coeffs = coefficient_samples(std::max<std::size_t>(cfg.samples, 4), cfg.seed);
  std::mt19937_64 rng(cfg.seed + 7);
  std::uniform_int_distribution<std::size_t> pick(0, coeffs.size() - 1);
  auto random_vec = [&](std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = coeffs[pick(rng)];
    return v;
  };
  const std::size_t pairs = std::max<std::size_t>(16, 2 * cfg.samples);
  const long span = cfg.level_max - cfg.level_min + 1;
  for (RootId a : sys.all()) {
    const auto twice = sys.doubled(a);
    for (std::size_t k = 0; k < pairs; ++k) {
      const Level lev = Level::of(cfg.level_min + static_cast<long>(k) % span);
      const Vector v = random_vec(g.module_dim(a)), w = random_vec(g.module_dim(a));
      const Vector zero(g.module_dim_double(a), Rational(0));
      const RootGroupCoords xv{a, lev, v, zero}, xw{a, lev, w, zero};
      const LaurentMatrix mv = g.relative_pinning(xv), mw = g.relative_pinning(xw);
      const std::string in = "root " + sys.name(a) + " level " + lev.to_string() + " v=" + vector_string(v) +
                             " w=" + vector_string(w);
      rec.check(g.contains(mv) && g.contains(mw), [&] { return Failure{in, "pinning images in the group", mv.to_string()}; });
      rec.check(g.peel(mv, AffineRoot{a, lev}) == xv, [&] { return Failure{in, "peel recovers v", mv.to_string()}; });
      Vector d;
      try {
        d = g.q2_additive(a, v, w, lev);
      } catch (const Error& e) {
        rec.check(false, [&] { return Failure{in, "q2 defect in U_2a", e.what()}; });
        continue;
      }
      RootGroupCoords sum{a, lev, v, d};
      for (std::size_t i = 0; i < v.size(); ++i) sum.c[i] += w[i];
      const LaurentMatrix lhs = mv * mw, rhs = g.relative_pinning(sum);
      rec.check(lhs == rhs, [&] { return Failure{in, lhs.to_string(), rhs.to_string()}; });
      if (!twice) {
        rec.check(d.empty(), [&] { return Failure{in, "no defect for a reduced root", vector_string(d)}; });
        continue;
      }
      // homogeneity q2(rv, rw) = r^2 q2(v, w)
      const Rational r = coeffs[pick(rng)];
      Vector rv = v, rw = w;
      for (auto& x : rv) x *= r;
      for (auto& x : rw) x *= r;
      Vector dr = g.q2_additive(a, rv, rw, lev);
      Vector expect = d;
      for (auto& x : expect) x *= r * r;
      rec.check(dr == expect, [&] { return Failure{in + " r=" + r.get_str(), vector_string(expect), vector_string(dr)}; });
      // x_a(v) commutes with x_2a(e)
      const RootGroupCoords e2{*twice, 2 * lev, random_vec(g.module_dim(*twice)), {}};
      const LaurentMatrix me = g.relative_pinning(e2);
      rec.check(g.contains(me) && mv * me == me * mv,
                [&] { return Failure{in + " e=" + vector_string(e2.c), "commuting group elements", me.to_string()}; });
    }
  }
  return rec.finish();
}

AxiomReport check_combinatorics(const RootSystem& sys, const SuiteConfig& cfg) {
  Recorder rec(Axiom::Combinatorics, cfg);
  const auto range = affine_roots_in_range(sys, cfg.level_min, cfg.level_max);
  const std::size_t n = sys.ambient_dim();
  const std::size_t pool_size = std::max<std::size_t>(64, cfg.points);
  std::mt19937_64 rng(cfg.seed + 11);
  std::uniform_int_distribution<long> num(-24, 24), den(1, 6);
  std::vector<Vector> pool;
  for (std::size_t k = 0; k < pool_size; ++k) {
    Vector v(n);
    for (auto& x : v) x = frac(num(rng), den(rng));
    pool.push_back(std::move(v));
  }
  const std::size_t nroots = sys.size();
  // dots[root][point]
  auto dots_of = [&](const std::vector<Vector>& pts) {
    std::vector<std::vector<Rational>> d(nroots);
    for (std::size_t r = 0; r < nroots; ++r)
      for (const auto& p : pts) d[r].push_back(dot(sys.vec(RootId{static_cast<int>(r)}), p));
    return d;
  };
  const auto base_dots = dots_of(pool);
  auto inside = [](const std::vector<std::vector<Rational>>& d, const AffineRoot& a, std::size_t p) {
    return d[a.root.index][p] >= -a.level.value();
  };
  std::size_t offset = 0;
  auto points_for_case = [&]() {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < cfg.points; ++k) idx.push_back((offset + k) % pool_size);
    offset = (offset + 7) % pool_size;
    return idx;
  };

  for (const auto& r : range) {
    std::vector<Vector> moved;
    for (const auto& p : pool) moved.push_back(affine_reflect_point(sys, r, p));
    const auto moved_dots = dots_of(moved);
    // the wall of r is fixed pointwise
    {
      const Vector& av = sys.vec(r.root);
      const Rational aa = dot(av, av);
      bool fixed = true;
      for (std::size_t k : points_for_case()) {
        Vector v = pool[k];
        Rational shift = (dot(av, v) + r.level.value()) / aa;
        for (std::size_t i = 0; i < n; ++i) v[i] -= shift * av[i];
        fixed = fixed && affine_reflect_point(sys, r, v) == v;
      }
      rec.check(fixed, [&] { return Failure{"wall of " + to_string(sys, r), "fixed pointwise", "moved"}; });
    }
    for (const auto& b : range) {
      const AffineRoot s = affine_reflect(sys, r, b);
      bool ok = affine_reflect(sys, r, s) == b;
      for (std::size_t k : points_for_case()) ok = ok && inside(base_dots, s, k) == inside(moved_dots, b, k);
      rec.check(ok, [&] {
        return Failure{"s" + to_string(sys, r) + " on " + to_string(sys, b), "involution matching half-spaces",
                       to_string(sys, s)};
      });
    }
  }

  const Vector fund = fundamental_point(sys);
  for (const auto& a : range) {
    const bool p = is_positive(sys, a);
    rec.check(p == chamber_oracle(sys, a, fund) && p != is_positive(sys, negate(sys, a)), [&] {
      return Failure{to_string(sys, a), chamber_oracle(sys, a, fund) ? "positive" : "negative", p ? "positive" : "negative"};
    });
  }

  for (std::size_t i = 0; i < range.size(); ++i)
    for (std::size_t j = 0; j < range.size(); ++j) {
      const AffineRoot &a = range[i], &b = range[j];
      const bool alg = is_prenilpotent(sys, a, b);
      rec.check(alg == prenilpotent_by_geometry(sys, a, b), [&] {
        return Failure{to_string(sys, a) + " " + to_string(sys, b), alg ? "not prenilpotent" : "prenilpotent",
                       alg ? "prenilpotent" : "not prenilpotent"};
      });
      if (!alg || i == j) continue;
      // members contain a and b's intersection, negatives contain the opposite one
      for (const auto& c : open_interval(sys, a, b)) {
        const AffineRoot nc = negate(sys, c), na = negate(sys, a), nb = negate(sys, b);
        bool ok = true;
        for (std::size_t k : points_for_case()) {
          if (inside(base_dots, a, k) && inside(base_dots, b, k)) ok = ok && inside(base_dots, c, k);
          if (inside(base_dots, na, k) && inside(base_dots, nb, k)) ok = ok && inside(base_dots, nc, k);
        }
        rec.check(ok, [&] {
          return Failure{to_string(sys, a) + " " + to_string(sys, b), "interval member " + to_string(sys, c),
                         "a sampled point escapes"};
        });
      }
    }
  return rec.finish();
}

AxiomReport run_suite(const GroupModel& g, const SuiteConfig& cfg, Axiom a) {
  switch (a) {
    case Axiom::RGD0: return check_rgd0(g, cfg);
    case Axiom::RGD1: return check_rgd1(g, cfg);
    case Axiom::RGD2: return check_rgd2(g, cfg);
    case Axiom::RGD3: return check_rgd3(g, cfg);
    case Axiom::RGD4: return check_rgd4(g, cfg);
    case Axiom::RGD5: return check_rgd5(g, cfg);
    case Axiom::CorootShift: return check_coroot_shift(g, cfg);
    case Axiom::Q2Additive: return check_q2_additive(g, cfg);
    case Axiom::Combinatorics: return check_combinatorics(g.roots(), cfg);
  }
  throw ConfigError("unknown suite");
}

std::vector<AxiomReport> run_suites(const GroupModel& g, const SuiteConfig& cfg) {
  cfg.validate();
  std::vector<AxiomReport> out;
  for (Axiom a : cfg.suites) out.push_back(run_suite(g, cfg, a));
  return out;
}

}  // namespace rgd
