#pragma once

#include "troplift/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace troplift {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
class MPoly {
 public:
  using Exponent = std::vector<unsigned>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly monomial(const Exponent& exp, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly operator-() const;
  friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
  friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
  friend MPoly operator*(const MPoly& x, const MPoly& y);
  MPoly scaled(const Rational& c) const;
  friend bool operator==(const MPoly&, const MPoly&) = default;

  unsigned degree_in(std::size_t var) const;
  /// Coefficient of var^k, as a polynomial not involving var.
  MPoly coefficient_in(std::size_t var, unsigned k) const;
  /// Terms of least degree in var, keeping var.
  MPoly lowest_in(std::size_t var) const;
  /// Exact quotient; throws InvalidArgument when the divisor does not divide.
  MPoly exact_div(const MPoly& divisor) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

/// Determinant, by cofactor expansion below 4x4 and fraction-free
/// Bareiss elimination with exact division otherwise.
MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m);
MPoly mpoly_det_cofactor(const std::vector<std::vector<MPoly>>& m);
MPoly mpoly_det_bareiss(const std::vector<std::vector<MPoly>>& m);

/// B^2 - 4AC for a polynomial of degree at most 2 in var; throws
/// NotQuadratic otherwise.
MPoly mpoly_disc(const MPoly& p, std::size_t var);

}  // namespace troplift
