#include "troplift/mpoly.hpp"

#include "troplift/errors.hpp"

#include <sstream>

namespace troplift {

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  Exponent e(nvars, 0);
  e.at(index) = 1;
  return monomial(e, Rational(1));
}

MPoly MPoly::monomial(const Exponent& exp, const Rational& c) {
  MPoly p(exp.size());
  p.add_term(exp, c);
  return p;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable count");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable count");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly MPoly::operator-() const { return scaled(Rational(-1)); }

MPoly MPoly::scaled(const Rational& c) const {
  MPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MPoly operator*(const MPoly& x, const MPoly& y) {
  if (x.nvars_ != y.nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial variable count");
  MPoly r(x.nvars_);
  MPoly::Exponent e(x.nvars_);
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
      r.add_term(e, cx * cy);
    }
  }
  return r;
}

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

MPoly MPoly::coefficient_in(std::size_t var, unsigned k) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) != k) continue;
    Exponent f = e;
    f[var] = 0;
    r.add_term(f, c);
  }
  return r;
}

MPoly MPoly::lowest_in(std::size_t var) const {
  MPoly r(nvars_);
  if (terms_.empty()) return r;
  unsigned low = terms_.begin()->first.at(var);
  for (const auto& [e, c] : terms_) low = std::min(low, e[var]);
  for (const auto& [e, c] : terms_) {
    if (e[var] == low) r.add_term(e, c);
  }
  return r;
}

MPoly MPoly::exact_div(const MPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InversionOfZero, "polynomial division by zero");
  // lex-leading terms are the largest keys of the map
  const auto& [dlead_e, dlead_c] = *divisor.terms_.rbegin();
  MPoly rem = *this;
  MPoly quot(nvars_);
  while (!rem.is_zero()) {
    const auto& [rlead_e, rlead_c] = *rem.terms_.rbegin();
    Exponent q(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (rlead_e[i] < dlead_e[i]) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
      q[i] = rlead_e[i] - dlead_e[i];
    }
    const MPoly step = monomial(q, rlead_c / dlead_c);
    quot += step;
    rem -= step * divisor;
  }
  return quot;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "evaluation point size");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < nvars_; ++i) v *= pow_int(point[i], e[i]);
    sum += v;
  }
  return sum;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (unsigned x : e) constant = constant && x == 0;
    bool wrote = false;
    if (mag != 1 || constant) {
      os << to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

std::size_t check_square(const std::vector<std::vector<MPoly>>& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  }
  return m.size();
}

MPoly cofactor(const std::vector<std::vector<MPoly>>& m, std::size_t nv) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly::constant(nv, Rational(1));
  if (n == 1) return m[0][0];
  MPoly acc(nv);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    MPoly term = m[0][c] * cofactor(minor, nv);
    if (c % 2 == 0) acc += term; else acc -= term;
  }
  return acc;
}

std::size_t nvars_of(const std::vector<std::vector<MPoly>>& m) {
  return m.empty() || m[0].empty() ? 0 : m[0][0].nvars();
}

}  // namespace

MPoly mpoly_det_cofactor(const std::vector<std::vector<MPoly>>& m) {
  check_square(m);
  return cofactor(m, nvars_of(m));
}

MPoly mpoly_det_bareiss(const std::vector<std::vector<MPoly>>& m) {
  const std::size_t n = check_square(m);
  const std::size_t nv = nvars_of(m);
  if (n == 0) return MPoly::constant(nv, Rational(1));
  auto a = m;
  MPoly prev = MPoly::constant(nv, Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return MPoly(nv);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev);
      }
      a[i][k] = MPoly(nv);
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m) {
  return m.size() < 4 ? mpoly_det_cofactor(m) : mpoly_det_bareiss(m);
}

MPoly mpoly_disc(const MPoly& p, std::size_t var) {
  if (p.degree_in(var) > 2) throw Error(ErrorKind::NotQuadratic, "degree in the variable exceeds 2");
  const MPoly c = p.coefficient_in(var, 0);
  const MPoly b = p.coefficient_in(var, 1);
  const MPoly a = p.coefficient_in(var, 2);
  return b * b - (a * c).scaled(Rational(4));
}

}  // namespace troplift
