#include "troplift/rational.hpp"

#include "troplift/errors.hpp"

#include <cctype>

namespace troplift {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_text(s)) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.str(); }

int sign(const Rational& q) { return q.sign(); }

Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }

Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

Integer floor_of(const Rational& q) {
  const Integer n = numerator_of(q);
  const Integer d = denominator_of(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer n = numerator_of(q);
  const Integer d = denominator_of(q);
  const Integer rn = boost::multiprecision::sqrt(n);
  const Integer rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

SquareSplit split_square(const Rational& q) {
  // sqrt(p/d) = sqrt(p*d)/d
  const Integer d = denominator_of(q);
  Integer m = numerator_of(q) * d;
  Integer outside = 1;
  Integer inside = 1;
  constexpr unsigned kTrialBound = 100000;
  for (unsigned p = 2; p < kTrialBound; ++p) {
    const Integer pp = Integer(p) * p;
    if (pp > m) break;
    while (m % pp == 0) {
      m /= pp;
      outside *= p;
    }
    if (m % p == 0) {
      m /= p;
      inside *= p;
    }
  }
  inside *= m;
  if (const auto r = exact_sqrt(Rational(inside))) {
    // leftover cofactor beyond the trial bound happened to be a square
    outside *= numerator_of(*r);
    inside = 1;
  }
  return {Rational(outside, d), inside};
}

Rational pow_int(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InversionOfZero: return "InversionOfZero";
    case ErrorKind::ValuationUnknown: return "ValuationUnknown";
    case ErrorKind::NegativeLeading: return "NegativeLeading";
    case ErrorKind::NestedRadical: return "NestedRadical";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RankTooHigh: return "RankTooHigh";
    case ErrorKind::InvalidTree: return "InvalidTree";
    case ErrorKind::NotBarvinok2: return "NotBarvinok2";
    case ErrorKind::NotCaterpillar: return "NotCaterpillar";
    case ErrorKind::NotRank2: return "NotRank2";
    case ErrorKind::GenericRetryExhausted: return "GenericRetryExhausted";
    case ErrorKind::SameSigns: return "SameSigns";
    case ErrorKind::DegenerateGeneric: return "DegenerateGeneric";
    case ErrorKind::MinorSignsOpposed: return "MinorSignsOpposed";
    case ErrorKind::NotOnEdge: return "NotOnEdge";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace troplift
