#include "troplift/quadext.hpp"

#include "troplift/errors.hpp"

namespace troplift {

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d) {
  if (b_ != 0 && d_ <= 0) {
    throw Error(ErrorKind::InvalidArgument, "radicand must be positive, got " + to_string(d_));
  }
  normalize();
}

void QuadExt::normalize() {
  if (b_ == 0) {
    d_ = 0;
    return;
  }
  const SquareSplit split = split_square(d_);
  b_ *= split.scale;
  d_ = Rational(split.radicand);
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

QuadExt QuadExt::sqrt_of(const Rational& q) {
  if (q < 0) throw Error(ErrorKind::NegativeLeading, "square root of negative rational " + to_string(q));
  if (auto r = exact_sqrt(q)) return QuadExt(*r);
  return QuadExt(Rational(0), Rational(1), q);
}

Rational QuadExt::common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  if (x.d_ != y.d_) {
    throw Error(ErrorKind::NestedRadical,
                "mixing sqrt(" + to_string(x.d_) + ") and sqrt(" + to_string(y.d_) + ")");
  }
  return x.d_;
}

int QuadExt::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * d_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  const Rational d = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = b_ == 0 ? Rational(0) : d;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) { return *this += -o; }

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  const Rational d = common_radicand(*this, o);
  const Rational a = a_ * o.a_ + b_ * o.b_ * d;
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = b_ == 0 ? Rational(0) : d;
  return *this;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InversionOfZero, "inverse of zero in Q(sqrt d)");
  const Rational norm = a_ * a_ - b_ * b_ * d_;
  QuadExt r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.d_ = r.b_ == 0 ? Rational(0) : d_;
  return r;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

std::string QuadExt::str() const {
  if (b_ == 0) return to_string(a_);
  return to_string(a_) + "+" + to_string(b_) + "*sqrt(" + to_string(d_) + ")";
}

}  // namespace troplift
