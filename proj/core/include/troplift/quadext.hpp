#pragma once

#include "troplift/rational.hpp"

#include <string>

namespace troplift {

/// An element a + b*sqrt(d) of Q(sqrt d). Elements with b == 0 are plain
/// rationals and carry d == 0; arithmetic between two irrational elements
/// requires the same radicand and otherwise throws Error(NestedRadical).
/// The radicand is kept as a squarefree positive integer when b != 0.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& a, const Rational& b, const Rational& d);

  /// sqrt(q) for q > 0, exact in Q when q is a rational square.
  static QuadExt sqrt_of(const Rational& q);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// Exact sign of a + b*sqrt(d) as a real number.
  int sign() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  QuadExt inverse() const;

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }

  std::string str() const;

 private:
  void normalize();
  static Rational common_radicand(const QuadExt& x, const QuadExt& y);

  Rational a_{0};
  Rational b_{0};
  Rational d_{0};
};

}  // namespace troplift
