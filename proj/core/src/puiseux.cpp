#include "troplift/puiseux.hpp"

#include "troplift/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace troplift {

namespace {

std::optional<Rational> min_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::optional<Rational> add_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

PuiseuxSeries from_map(const std::map<Rational, QuadExt>& acc, const std::optional<Rational>& trunc) {
  std::vector<PuiseuxSeries::Term> terms;
  terms.reserve(acc.size());
  for (const auto& [e, c] : acc) {
    if (!c.is_zero()) terms.push_back({e, c});
  }
  return PuiseuxSeries(std::move(terms), trunc);
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(std::vector<Term> terms, std::optional<Rational> trunc)
    : trunc_(std::move(trunc)) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  for (auto& t : terms) {
    if (trunc_ && t.exp >= *trunc_) break;
    if (!terms_.empty() && terms_.back().exp == t.exp) {
      terms_.back().coef += t.coef;
      if (terms_.back().coef.is_zero()) terms_.pop_back();
      continue;
    }
    if (!t.coef.is_zero()) terms_.push_back(std::move(t));
  }
}

PuiseuxSeries PuiseuxSeries::monomial(const QuadExt& coef, const Rational& exp) {
  if (coef.is_zero()) return {};
  return PuiseuxSeries({{exp, coef}}, std::nullopt);
}

std::optional<Rational> PuiseuxSeries::lower_bound() const {
  if (!terms_.empty()) return terms_.front().exp;
  return trunc_;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& order) const {
  return PuiseuxSeries(terms_, min_opt(trunc_, order));
}

PuiseuxSeries PuiseuxSeries::shifted(const Rational& by) const {
  PuiseuxSeries r = *this;
  for (auto& t : r.terms_) t.exp += by;
  if (r.trunc_) *r.trunc_ += by;
  return r;
}

PuiseuxSeries PuiseuxSeries::scaled(const QuadExt& by) const {
  if (by.is_zero()) return trunc_ ? unknown_from(*trunc_) : PuiseuxSeries();
  PuiseuxSeries r = *this;
  for (auto& t : r.terms_) t.coef *= by;
  return r;
}

bool PuiseuxSeries::all_coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef.sign() > 0; });
}

std::string PuiseuxSeries::str() const {
  std::ostringstream os;
  if (terms_.empty()) os << "0";
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coef.str() << ")";
    if (t.exp != 0) os << "*t^(" << to_string(t.exp) << ")";
  }
  if (trunc_) os << " + O(t^(" << to_string(*trunc_) << "))";
  return os.str();
}

PuiseuxSeries ps_add(const PuiseuxSeries& x, const PuiseuxSeries& y) {
  std::map<Rational, QuadExt> acc;
  for (const auto& t : x.terms()) acc[t.exp] += t.coef;
  for (const auto& t : y.terms()) acc[t.exp] += t.coef;
  return from_map(acc, min_opt(x.trunc(), y.trunc()));
}

PuiseuxSeries ps_neg(const PuiseuxSeries& x) { return x.scaled(QuadExt(-1)); }

PuiseuxSeries ps_sub(const PuiseuxSeries& x, const PuiseuxSeries& y) { return ps_add(x, ps_neg(y)); }

PuiseuxSeries ps_mul(const PuiseuxSeries& x, const PuiseuxSeries& y) {
  if (x.is_exact_zero() || y.is_exact_zero()) return {};
  // x = X + O(t^Tx), y = Y + O(t^Ty): the product is known below
  // min(Tx + lb(y), Ty + lb(x)).
  const std::optional<Rational> trunc =
      min_opt(x.trunc() ? add_opt(x.trunc(), y.lower_bound()) : std::nullopt,
              y.trunc() ? add_opt(y.trunc(), x.lower_bound()) : std::nullopt);
  std::map<Rational, QuadExt> acc;
  for (const auto& a : x.terms()) {
    for (const auto& b : y.terms()) {
      Rational e = a.exp + b.exp;
      if (trunc && e >= *trunc) continue;
      acc[std::move(e)] += a.coef * b.coef;
    }
  }
  return from_map(acc, trunc);
}

std::optional<Rational> ps_val(const PuiseuxSeries& x) {
  if (!x.terms().empty()) return x.terms().front().exp;
  if (x.is_exact()) return std::nullopt;
  throw Error(ErrorKind::ValuationUnknown,
              "no nonzero term known below t^" + to_string(*x.trunc()));
}

const QuadExt& ps_lead_coef(const PuiseuxSeries& x) {
  if (x.terms().empty()) {
    if (x.is_exact()) throw Error(ErrorKind::InvalidArgument, "leading coefficient of exact zero");
    throw Error(ErrorKind::ValuationUnknown,
                "no nonzero term known below t^" + to_string(*x.trunc()));
  }
  return x.terms().front().coef;
}

int ps_lead_sign(const PuiseuxSeries& x) { return ps_lead_coef(x).sign(); }

namespace {

// Splits x = c t^v (1 + u) and returns {c, v, u}; u has only positive
// exponents and u's precision is relative to t^v.
struct LeadSplit {
  QuadExt lead;
  Rational val;
  PuiseuxSeries tail;
};

LeadSplit split_lead(const PuiseuxSeries& x) {
  const QuadExt c = x.terms().front().coef;
  const Rational v = x.terms().front().exp;
  const QuadExt inv_c = c.inverse();
  std::vector<PuiseuxSeries::Term> rest;
  for (std::size_t i = 1; i < x.terms().size(); ++i) {
    rest.push_back({x.terms()[i].exp - v, x.terms()[i].coef * inv_c});
  }
  std::optional<Rational> trunc;
  if (x.trunc()) trunc = *x.trunc() - v;
  return {c, v, PuiseuxSeries(std::move(rest), trunc)};
}

// sum_k coeff(k) * u^k known below relative order `rel`.
template <typename CoeffFn>
PuiseuxSeries power_series_in(const PuiseuxSeries& u, const Rational& rel, CoeffFn coeff) {
  PuiseuxSeries sum = PuiseuxSeries::constant(QuadExt(1)).truncated(rel);
  if (u.has_no_terms()) return sum;
  PuiseuxSeries power = PuiseuxSeries::constant(QuadExt(1));
  for (unsigned k = 1;; ++k) {
    power = ps_mul(power, u).truncated(rel);
    if (power.has_no_terms()) break;
    sum = ps_add(sum, power.scaled(QuadExt(coeff(k))));
  }
  return sum;
}

}  // namespace

PuiseuxSeries ps_inv(const PuiseuxSeries& x, const Rational& cap) {
  if (x.has_no_terms()) throw Error(ErrorKind::InversionOfZero, "series has no known nonzero term");
  const LeadSplit s = split_lead(x);
  const QuadExt inv_c = s.lead.inverse();
  if (s.tail.is_exact_zero()) return PuiseuxSeries::monomial(inv_c, -s.val);
  // result exponent = -v + rel must stay below cap
  Rational rel = cap + s.val;
  if (s.tail.trunc()) rel = std::min(rel, *s.tail.trunc());
  const PuiseuxSeries neg_u = ps_neg(s.tail);
  PuiseuxSeries g = power_series_in(neg_u, rel, [](unsigned) { return Rational(1); });
  return g.shifted(-s.val).scaled(inv_c);
}

PuiseuxSeries ps_sqrt(const PuiseuxSeries& x, const Rational& cap) {
  if (x.is_exact_zero()) return {};
  if (x.has_no_terms()) {
    throw Error(ErrorKind::ValuationUnknown, "square root of a series with no known term");
  }
  const LeadSplit s = split_lead(x);
  if (s.lead.sign() < 0) throw Error(ErrorKind::NegativeLeading, "leading coefficient " + s.lead.str());
  if (!s.lead.is_rational()) {
    throw Error(ErrorKind::NestedRadical, "square root of irrational leading coefficient " + s.lead.str());
  }
  const QuadExt root_c = QuadExt::sqrt_of(s.lead.a());
  const Rational half_v = s.val / 2;
  if (s.tail.is_exact_zero()) return PuiseuxSeries::monomial(root_c, half_v);
  Rational rel = cap - half_v;
  if (s.tail.trunc()) rel = std::min(rel, *s.tail.trunc());
  // binom(1/2, k) by the recurrence b_k = b_{k-1} * (1/2 - (k-1)) / k
  std::vector<Rational> binom{Rational(1)};
  auto coeff = [&binom](unsigned k) {
    while (binom.size() <= k) {
      const unsigned j = static_cast<unsigned>(binom.size());
      binom.push_back(binom.back() * (Rational(1, 2) - Rational(j - 1)) / Rational(j));
    }
    return binom[k];
  };
  PuiseuxSeries g = power_series_in(s.tail, rel, coeff);
  return g.shifted(half_v).scaled(root_c);
}

QuadRoots quad_roots(const PuiseuxSeries& a, const PuiseuxSeries& b, const PuiseuxSeries& c,
                     const Rational& cap) {
  if (a.has_no_terms()) throw Error(ErrorKind::InvalidArgument, "leading quadratic coefficient is zero");
  QuadRoots out;
  out.discriminant = ps_sub(ps_mul(b, b), ps_mul(a, c).scaled(QuadExt(4)));
  if (out.discriminant.is_exact_zero()) {
    out.disc_sign = 0;
  } else {
    out.disc_sign = ps_lead_sign(out.discriminant);  // may throw ValuationUnknown
  }
  if (out.disc_sign < 0) return out;
  const PuiseuxSeries root = ps_sqrt(out.discriminant, cap);
  int sigma = 1;
  if (!b.has_no_terms()) sigma = -ps_lead_sign(b);
  if (sigma == 0) sigma = 1;
  const PuiseuxSeries signed_root = sigma > 0 ? root : ps_neg(root);
  const PuiseuxSeries inv_2a = ps_inv(a.scaled(QuadExt(2)), cap);
  const PuiseuxSeries num1 = ps_add(ps_neg(b), signed_root);
  out.x1 = ps_mul(num1, inv_2a);
  if (!out.x1->has_no_terms()) {
    out.x2 = ps_mul(c, ps_inv(ps_mul(a, *out.x1), cap));
  } else {
    out.x2 = ps_mul(ps_sub(ps_neg(b), signed_root), inv_2a);
  }
  return out;
}

PuiseuxSeries ps_det(const std::vector<std::vector<PuiseuxSeries>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return PuiseuxSeries::constant(QuadExt(1));
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  }
  if (n > 20) throw Error(ErrorKind::SizeLimit, "series determinant limited to n <= 20");
  // minors[mask]: determinant of the last popcount(mask) rows restricted
  // to the columns in mask
  std::vector<PuiseuxSeries> minors(std::size_t{1} << n);
  minors[0] = PuiseuxSeries::constant(QuadExt(1));
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const int k = __builtin_popcountll(mask);
    const std::size_t row = n - static_cast<std::size_t>(k);
    PuiseuxSeries acc;
    int position = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (std::size_t{1} << col))) continue;
      const PuiseuxSeries& entry = m[row][col];
      if (!entry.is_exact_zero()) {
        PuiseuxSeries term = ps_mul(entry, minors[mask ^ (std::size_t{1} << col)]);
        acc = (position % 2 == 0) ? ps_add(acc, term) : ps_sub(acc, term);
      }
      ++position;
    }
    minors[mask] = std::move(acc);
  }
  return minors.back();
}

}  // namespace troplift
