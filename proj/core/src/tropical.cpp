#include "troplift/tropical.hpp"

#include "troplift/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>

namespace troplift {

namespace {

// Entries rescaled to machine integers by a common denominator when they
// are small enough that sums over a permutation cannot overflow.
struct Scaled {
  std::vector<std::vector<std::int64_t>> v;
  Integer denom;
};

std::optional<Scaled> scale_to_int(const TropMatrix& a) {
  Integer l = 1;
  for (const auto& row : a.entries()) {
    for (const auto& x : row) l = boost::multiprecision::lcm(l, denominator_of(x));
  }
  const Integer limit = Integer(1) << 40;
  Scaled s{{}, l};
  for (const auto& row : a.entries()) {
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      const Integer y = numerator_of(x) * (l / denominator_of(x));
      if (abs(y) >= limit) return std::nullopt;
      r.push_back(y.convert_to<std::int64_t>());
    }
    s.v.push_back(std::move(r));
  }
  return s;
}

void require_enumerable(const TropMatrix& a, int max_n) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  if (static_cast<long>(a.rows()) > max_n) {
    throw Error(ErrorKind::SizeLimit, "n = " + std::to_string(a.rows()) + " exceeds the enumeration bound " +
                                          std::to_string(max_n));
  }
}

template <typename T>
std::pair<T, std::vector<Permutation>> scan_permutations(const std::vector<std::vector<T>>& v) {
  const int n = static_cast<int>(v.size());
  Permutation p = identity_permutation(n);
  std::optional<T> best;
  std::vector<Permutation> argmin;
  do {
    T s = v[0][static_cast<std::size_t>(p[0])];
    for (int i = 1; i < n; ++i) s += v[static_cast<std::size_t>(i)][static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
    if (!best || s < *best) {
      best = s;
      argmin.clear();
      argmin.push_back(p);
    } else if (s == *best) {
      argmin.push_back(p);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return {*best, std::move(argmin)};
}

std::pair<Rational, std::vector<Permutation>> scan(const TropMatrix& a) {
  if (auto s = scale_to_int(a)) {
    auto [m, arg] = scan_permutations(s->v);
    return {Rational(Integer(m)) / Rational(s->denom), std::move(arg)};
  }
  return scan_permutations(a.entries());
}

// Minimum over permutations with the count of optimal ones capped at 2.
template <typename T>
bool unique_optimum(const std::vector<std::vector<T>>& v) {
  const std::size_t k = v.size();
  struct Cell {
    T value{};
    int count = 0;  // 0 means unreachable
  };
  std::vector<Cell> dp(std::size_t{1} << k);
  dp[0] = {T(0), 1};
  for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (dp[mask].count == 0) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t c = 0; c < k; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      Cell& next = dp[mask | (std::size_t{1} << c)];
      T val = dp[mask].value + v[row][c];
      if (next.count == 0 || val < next.value) {
        next.value = std::move(val);
        next.count = dp[mask].count;
      } else if (val == next.value) {
        next.count = std::min(2, next.count + dp[mask].count);
      }
    }
  }
  return dp.back().count == 1;
}

template <typename T>
bool sym_unique_optimum(const std::vector<std::vector<T>>& v) {
  auto [m, argmin] = scan_permutations(v);
  const auto first = symmetric_exponent(argmin.front());
  for (std::size_t i = 1; i < argmin.size(); ++i) {
    if (symmetric_exponent(argmin[i]) != first) return false;
  }
  return true;
}

template <typename T>
std::vector<std::vector<T>> pick(const std::vector<std::vector<T>>& v, const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) {
  std::vector<std::vector<T>> s(rows.size(), std::vector<T>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s[i][j] = v[rows[i]][cols[j]];
  }
  return s;
}

template <typename T>
RankWitness plain_rank(const std::vector<std::vector<T>>& v, std::size_t d, std::size_t n) {
  RankWitness w;
  w.rank = 1;
  w.rows = {0};
  w.cols = {0};
  // A nonsingular k x k submatrix contains a nonsingular (k-1) x (k-1) one,
  // so the first size without any nonsingular submatrix ends the search.
  for (std::size_t k = 2; k <= std::min(d, n); ++k) {
    bool found = for_each_subset(d, k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        if (!unique_optimum(pick(v, rows, cols))) return false;
        w.rank = static_cast<int>(k);
        w.rows = rows;
        w.cols = cols;
        return true;
      });
    });
    if (!found) break;
  }
  return w;
}

template <typename T>
RankWitness symmetric_rank(const std::vector<std::vector<T>>& v, std::size_t n) {
  for (std::size_t k = n; k >= 1; --k) {
    RankWitness w;
    bool found = for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        const auto sub = pick(v, rows, cols);
        const bool ok = rows == cols ? sym_unique_optimum(sub) : unique_optimum(sub);
        if (!ok) return false;
        w = {static_cast<int>(k), rows, cols};
        return true;
      });
    });
    if (found) return w;
  }
  return {};
}

}  // namespace

std::vector<std::vector<int>> symmetric_exponent(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = static_cast<std::size_t>(p[i]);
    e[std::min(i, j)][std::max(i, j)] += 1;
  }
  return e;
}

SignedMonomialClass plain_class_of(const Permutation& p) {
  SignedMonomialClass c;
  c.exponent.assign(p.size(), std::vector<int>(p.size(), 0));
  for (std::size_t i = 0; i < p.size(); ++i) c.exponent[i][static_cast<std::size_t>(p[i])] = 1;
  c.sign = permutation_sign(p);
  c.coefficient = 1;
  c.representative = p;
  c.cycle_type = cycle_type(p);
  return c;
}

SignedMonomialClass symmetric_class_of(const Permutation& p) {
  SignedMonomialClass c;
  c.exponent = symmetric_exponent(p);
  c.sign = permutation_sign(p);
  c.cycle_type = cycle_type(p);
  c.coefficient = 1;
  for (int len : c.cycle_type) {
    if (len >= 3) c.coefficient *= 2;
  }
  c.representative = p;
  return c;
}

TropDetResult trop_det(const TropMatrix& a, int max_n) {
  require_enumerable(a, max_n);
  auto [m, argmin] = scan(a);
  TropDetResult r;
  r.min_value = m;
  for (const auto& p : argmin) r.argmin.push_back(plain_class_of(p));
  r.tie = r.argmin.size() >= 2;
  return r;
}

TropDetResult sym_trop_det(const TropMatrix& a, int max_n) {
  require_enumerable(a, max_n);
  if (!a.is_symmetric_valued()) throw Error(ErrorKind::InvalidArgument, "symmetric determinant of non-symmetric matrix");
  auto [m, argmin] = scan(a);
  TropDetResult r;
  r.min_value = m;
  for (const auto& p : argmin) {
    SignedMonomialClass c = symmetric_class_of(p);
    if (std::find(r.argmin.begin(), r.argmin.end(), c) == r.argmin.end()) r.argmin.push_back(std::move(c));
  }
  std::sort(r.argmin.begin(), r.argmin.end(),
            [](const SignedMonomialClass& x, const SignedMonomialClass& y) { return x.exponent > y.exponent; });
  r.tie = r.argmin.size() >= 2;
  return r;
}

Rational trop_det_hungarian(const TropMatrix& a, Permutation* assignment) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "assignment on non-square matrix");
  const std::size_t n = a.rows();
  const Rational inf = (a.max_abs() + 1) * Rational(static_cast<long>(4 * n + 4));
  // 1-based potentials; p[j] is the row matched to column j
  std::vector<Rational> u(n + 1, Rational(0)), v(n + 1, Rational(0));
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<Rational> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      Rational delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = a(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Permutation perm(n);
  Rational total = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    perm[p[j] - 1] = static_cast<int>(j - 1);
    total += a(p[j] - 1, j - 1);
  }
  if (assignment) *assignment = perm;
  return total;
}

bool trop_nonsingular(const TropMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "singularity of non-square matrix");
  if (a.rows() > 24) throw Error(ErrorKind::SizeLimit, "nonsingularity test limited to n <= 24");
  if (auto s = scale_to_int(a)) return unique_optimum(s->v);
  return unique_optimum(a.entries());
}

bool sym_trop_nonsingular(const TropMatrix& a, int max_n) {
  require_enumerable(a, max_n);
  return !sym_trop_det(a, max_n).tie;
}

RankWitness trop_rank_witness(const TropMatrix& a) {
  if (std::min(a.rows(), a.cols()) > 24) throw Error(ErrorKind::SizeLimit, "rank search limited to size 24");
  if (auto s = scale_to_int(a)) return plain_rank(s->v, a.rows(), a.cols());
  return plain_rank(a.entries(), a.rows(), a.cols());
}

int trop_rank(const TropMatrix& a) { return trop_rank_witness(a).rank; }

RankWitness sym_trop_rank_witness(const TropMatrix& a, int max_n) {
  if (!a.is_symmetric_valued()) throw Error(ErrorKind::InvalidArgument, "symmetric rank of non-symmetric matrix");
  require_enumerable(a, max_n);
  if (auto s = scale_to_int(a)) return symmetric_rank(s->v, a.rows());
  return symmetric_rank(a.entries(), a.rows());
}

int sym_trop_rank(const TropMatrix& a, int max_n) { return sym_trop_rank_witness(a, max_n).rank; }

}  // namespace troplift
