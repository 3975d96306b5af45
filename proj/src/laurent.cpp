#include "rgd/laurent.hpp"

#include <algorithm>
#include <numeric>

#include "rgd/errors.hpp"

namespace rgd {

LaurentPoly::LaurentPoly(Scalar c) {
  if (!c.is_zero()) terms_.emplace_back(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(Scalar c, long quarter_exp) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(quarter_exp, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::t_pow(long num, long den) {
  if (den == 0) throw DivisionByZero("zero exponent denominator");
  long scaled = num * kQuarter;
  if (scaled % den != 0) throw NotMonomial("exponent outside the quarter lattice");
  return monomial(Scalar(1), scaled / den);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

bool LaurentPoly::integral_exponents() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first % kQuarter == 0; });
}

Scalar LaurentPoly::coefficient(long e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, long v) { return t.first < v; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Scalar();
}

long LaurentPoly::min_exp() const {
  if (terms_.empty()) throw Error("min_exp of zero polynomial");
  return terms_.front().first;
}

long LaurentPoly::max_exp() const {
  if (terms_.empty()) throw Error("max_exp of zero polynomial");
  return terms_.back().first;
}

LaurentPoly LaurentPoly::conj() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, c.conj());
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
  return r;
}

void LaurentPoly::add_term(long e, const Scalar& c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, long v) { return t.first < v; });
  if (it != terms_.end() && it->first == e) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (!c.is_zero()) {
    terms_.insert(it, Term(e, c));
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Scalar s = a->second + b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& m = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& p = a.terms_.size() == 1 ? b : a;
    r.terms_.reserve(p.terms_.size());
    for (const auto& [e, c] : p.terms_) {
      Scalar s = c * m.second;
      if (!s.is_zero()) r.terms_.emplace_back(e + m.first, std::move(s));
    }
    return r;
  }
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) prod.emplace_back(ea + eb, ca * cb);
  std::stable_sort(prod.begin(), prod.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& t : prod) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
    } else {
      if (!r.terms_.empty() && r.terms_.back().second.is_zero()) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().second.is_zero()) r.terms_.pop_back();
  return r;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
  LaurentPoly r;
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [e, x] : terms_) r.terms_.emplace_back(e, x * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(long quarter_exp) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += quarter_exp;
  return r;
}

LaurentPoly LaurentPoly::monomial_pow(long e) const {
  if (!is_monomial()) throw NotMonomial("power of a non-monomial: " + to_string());
  return monomial(terms_[0].second.pow(e), terms_[0].first * e);
}

// Long division from the top degree, which is exact over a field when
// the quotient is a Laurent polynomial.
std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("Laurent division by zero");
  if (is_zero()) return LaurentPoly();
  if (d.is_monomial()) {
    Scalar inv = d.terms_[0].second.inverse();
    return scaled(inv).shifted(-d.terms_[0].first);
  }
  LaurentPoly rem = *this;
  LaurentPoly q;
  const auto& lead = d.terms_.back();
  Scalar lead_inv = lead.second.inverse();
  long span = d.max_exp() - d.min_exp();
  while (!rem.is_zero()) {
    if (rem.max_exp() - rem.min_exp() < span) return std::nullopt;
    long e = rem.max_exp() - lead.first;
    Scalar c = rem.terms_.back().second * lead_inv;
    LaurentPoly m = monomial(c, e);
    q += m;
    rem -= m * d;
  }
  return q;
}

std::string exponent_string(long quarter_exp) {
  long g = std::gcd(quarter_exp < 0 ? -quarter_exp : quarter_exp, kQuarter);
  if (g == 0) g = kQuarter;
  long num = quarter_exp / g, den = kQuarter / g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = terms_.size(); i-- > 0;) {
    const auto& [e, c] = terms_[i];
    if (!s.empty()) s += " + ";
    std::string cs = c.to_string();
    if (!c.is_rational()) cs = "(" + cs + ")";
    if (e == 0) {
      s += cs;
    } else {
      s += cs + "*t^" + exponent_string(e);
    }
  }
  return s;
}

}  // namespace rgd
