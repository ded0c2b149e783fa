#pragma once

#include "troplift/quadext.hpp"
#include "troplift/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace troplift {

/// A truncated Puiseux series sum c_k t^{e_k} with rational exponents.
///
/// Terms are stored with strictly increasing exponents and nonzero
/// coefficients. `trunc()` is the exponent from which on nothing is known;
/// std::nullopt means the stored terms are the whole series (an exact
/// polynomial in fractional powers of t).
class PuiseuxSeries {
 public:
  struct Term {
    Rational exp;
    QuadExt coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  PuiseuxSeries() = default;  // exact zero
  PuiseuxSeries(std::vector<Term> terms, std::optional<Rational> trunc);

  static PuiseuxSeries monomial(const QuadExt& coef, const Rational& exp);
  static PuiseuxSeries constant(const QuadExt& coef) { return monomial(coef, Rational(0)); }
  /// The zero series known only below `trunc`.
  static PuiseuxSeries unknown_from(const Rational& trunc) { return PuiseuxSeries({}, trunc); }

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<Rational>& trunc() const { return trunc_; }
  bool is_exact() const { return !trunc_.has_value(); }
  /// No known nonzero term (exactly zero if is_exact()).
  bool has_no_terms() const { return terms_.empty(); }
  bool is_exact_zero() const { return terms_.empty() && !trunc_; }
  /// Smallest exponent that is known or the truncation order; used to
  /// propagate precision through products.
  std::optional<Rational> lower_bound() const;

  PuiseuxSeries truncated(const Rational& order) const;
  PuiseuxSeries shifted(const Rational& by) const;  // times t^by
  PuiseuxSeries scaled(const QuadExt& by) const;
  bool all_coefficients_positive() const;

  friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

  std::string str() const;

 private:
  std::vector<Term> terms_;
  std::optional<Rational> trunc_;
};

PuiseuxSeries ps_add(const PuiseuxSeries& x, const PuiseuxSeries& y);
PuiseuxSeries ps_sub(const PuiseuxSeries& x, const PuiseuxSeries& y);
PuiseuxSeries ps_neg(const PuiseuxSeries& x);
PuiseuxSeries ps_mul(const PuiseuxSeries& x, const PuiseuxSeries& y);

/// 1/x via the geometric series of the tail. The result is known below
/// min(the precision x supports, cap). Throws InversionOfZero.
PuiseuxSeries ps_inv(const PuiseuxSeries& x, const Rational& cap);

/// Square root with positive leading coefficient, tail from the binomial
/// series of sqrt(1+u). Throws NegativeLeading, NestedRadical or
/// ValuationUnknown.
PuiseuxSeries ps_sqrt(const PuiseuxSeries& x, const Rational& cap);

/// Valuation, std::nullopt meaning +infinity (exact zero). Throws
/// ValuationUnknown when no term is known but the series is truncated.
std::optional<Rational> ps_val(const PuiseuxSeries& x);
/// Sign of the leading coefficient; throws ValuationUnknown, and
/// InvalidArgument for the exact zero series.
int ps_lead_sign(const PuiseuxSeries& x);
const QuadExt& ps_lead_coef(const PuiseuxSeries& x);

inline PuiseuxSeries operator+(const PuiseuxSeries& x, const PuiseuxSeries& y) { return ps_add(x, y); }
inline PuiseuxSeries operator-(const PuiseuxSeries& x, const PuiseuxSeries& y) { return ps_sub(x, y); }
inline PuiseuxSeries operator-(const PuiseuxSeries& x) { return ps_neg(x); }
inline PuiseuxSeries operator*(const PuiseuxSeries& x, const PuiseuxSeries& y) { return ps_mul(x, y); }

struct QuadRoots {
  std::optional<PuiseuxSeries> x1;  // branch without leading cancellation
  std::optional<PuiseuxSeries> x2;
  PuiseuxSeries discriminant;
  int disc_sign = 0;
};

/// Real roots of a*x^2 + b*x + c. x1 uses the sign of sqrt(disc) that
/// agrees with -b, so -b + sqrt(disc) never cancels its leading term; x2 is
/// then recovered as c/(a*x1). Roots are absent when disc_sign < 0.
QuadRoots quad_roots(const PuiseuxSeries& a, const PuiseuxSeries& b, const PuiseuxSeries& c,
                     const Rational& cap);

/// Determinant of a square matrix of series by expansion over column
/// subsets (division free, exact for exact entries).
PuiseuxSeries ps_det(const std::vector<std::vector<PuiseuxSeries>>& m);

}  // namespace troplift
