#include "troplift/barvinok.hpp"

#include "troplift/errors.hpp"
#include "troplift/tropical.hpp"

namespace troplift {

namespace {

Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

bool rank_one_split(const TropMatrix& a, std::vector<Rational>& u, std::vector<Rational>& v) {
  u.assign(a.rows(), Rational(0));
  v.assign(a.cols(), Rational(0));
  for (std::size_t j = 0; j < a.cols(); ++j) v[j] = a(0, j);
  for (std::size_t i = 0; i < a.rows(); ++i) u[i] = a(i, 0) - a(0, 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (u[i] + v[j] != a(i, j)) return false;
    }
  }
  return true;
}

TropMatrix column(const std::vector<Rational>& x) {
  std::vector<std::vector<Rational>> e;
  for (const auto& v : x) e.push_back({v});
  return TropMatrix(std::move(e));
}

}  // namespace

BarvinokResult barvinok_rank2(const TropMatrix& a) {
  BarvinokResult r;
  r.trop_rank = trop_rank(a);
  if (r.trop_rank > 2) {
    r.reason = "tropical rank " + std::to_string(r.trop_rank) + " exceeds 2";
    return r;
  }
  std::vector<Rational> u, v;
  if (r.trop_rank == 1 && rank_one_split(a, u, v)) {
    r.holds = true;
    r.b = column(u);
    r.c = column(v).transpose();
    r.reason = "rank one";
    return r;
  }
  const BicoloredTree tree = tree_from_rank2(a);
  if (!is_caterpillar(tree)) {
    r.reason = "tree is not a caterpillar";
    return r;
  }
  // a_ij = -|x_i - y_j|/2 + u_i + v_j with x, y the spine positions
  const Spine s = caterpillar_spine(tree);
  const std::size_t d = a.rows(), n = a.cols();
  v.assign(n, Rational(0));
  u.assign(d, Rational(0));
  for (std::size_t j = 0; j < n; ++j) v[j] = a(0, j) + abs_of(s.red[0] - s.blue[j]) / 2;
  for (std::size_t i = 0; i < d; ++i) u[i] = a(i, 0) + abs_of(s.red[i] - s.blue[0]) / 2 - v[0];
  TropMatrix b(d, 2), c(2, n);
  for (std::size_t i = 0; i < d; ++i) {
    b.set(i, 0, s.red[i] / 2 + u[i]);
    b.set(i, 1, -s.red[i] / 2 + u[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    c.set(0, j, -s.blue[j] / 2 + v[j]);
    c.set(1, j, s.blue[j] / 2 + v[j]);
  }
  if (!(trop_mat_mul(b, c) == a)) throw Error(ErrorKind::NotBarvinok2, "spine factorization does not reproduce the matrix");
  r.holds = true;
  r.b = b;
  r.c = c;
  r.reason = "caterpillar";
  return r;
}

BarvinokResult sym_barvinok_rank2(const TropMatrix& a, int max_n) {
  BarvinokResult r;
  if (!a.is_symmetric_valued()) {
    r.reason = "matrix is not symmetric";
    return r;
  }
  r.trop_rank = trop_rank(a);
  const int srank = sym_trop_rank(a, max_n);
  if (srank > 2) {
    r.reason = "symmetric tropical rank " + std::to_string(srank) + " exceeds 2";
    return r;
  }
  const std::size_t n = a.rows();
  if (r.trop_rank == 1) {
    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = a(i, i) / 2;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) ok = w[i] + w[j] == a(i, j);
    }
    if (ok) {
      r.holds = true;
      r.b = column(w);
      r.reason = "rank one";
      return r;
    }
  }
  const BicoloredTree tree = tree_from_rank2(a);
  if (!is_caterpillar(tree)) {
    r.reason = "tree is not a caterpillar";
    return r;
  }
  const SymbicInfo info = symbic_info(tree);
  if (info.cls != SymbicClass::Symbic) {
    r.reason = "tree is not symbic: " + to_string(info.cls);
    return r;
  }
  if (!info.one_fixed_point) {
    r.reason = "colour swap fixes more than one point";
    return r;
  }
  // The swap reverses the spine about its midpoint, so blue i sits at
  // -x_i in centred coordinates and a_ij = -|x_i + x_j|/2 + w_i + w_j.
  const Spine s = caterpillar_spine(tree);
  std::vector<Rational> x(n), w(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = s.red[i] - s.length / 2;
  for (std::size_t i = 0; i < n; ++i) w[i] = (a(i, i) + abs_of(2 * x[i]) / 2) / 2;
  TropMatrix b(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    b.set(i, 0, x[i] / 2 + w[i]);
    b.set(i, 1, -x[i] / 2 + w[i]);
  }
  if (!(trop_mat_mul(b, b.transpose()) == a)) {
    throw Error(ErrorKind::NotBarvinok2, "symmetric spine factorization does not reproduce the matrix");
  }
  r.holds = true;
  r.b = b;
  r.reason = "caterpillar with one fixed point";
  return r;
}

}  // namespace troplift
