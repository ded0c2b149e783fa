#include "troplift/lp.hpp"

#include "troplift/errors.hpp"

namespace troplift {

namespace {

using Row = std::vector<Rational>;

struct Tableau {
  std::vector<Row> rows;  // constraint rows, last entry is the right-hand side
  Row obj;                // reduced costs, last entry is minus the objective value
  std::vector<std::size_t> basis;

  std::size_t width() const { return obj.size() - 1; }

  void pivot(std::size_t r, std::size_t col) {
    const Rational p = rows[r][col];
    for (auto& v : rows[r]) v /= p;
    auto eliminate = [&](Row& row) {
      if (row[col] == 0) return;
      const Rational f = row[col];
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (rows[r][k] != 0) row[k] -= f * rows[r][k];
      }
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r) eliminate(rows[i]);
    }
    eliminate(obj);
    basis[r] = col;
  }

  // Maximises; returns false when unbounded. Columns >= limit never enter.
  bool run(std::size_t limit) {
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i].back() / rows[i][enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, enter);
    }
  }
};

}  // namespace

LpResult lp_maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                     const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw Error(ErrorKind::DimensionMismatch, "lp right-hand side size");
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "lp constraint row size");
  }
  // columns: n structural, m artificial, rhs
  Tableau t;
  t.obj.assign(n + m + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    Row row(n + m + 1, Rational(0));
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) row[j] = flip ? Rational(-a[i][j]) : a[i][j];
    row[n + i] = 1;
    row.back() = flip ? Rational(-b[i]) : b[i];
    for (std::size_t j = 0; j < n; ++j) t.obj[j] += row[j];
    t.obj.back() += row.back();
    t.rows.push_back(std::move(row));
    t.basis.push_back(n + i);
  }
  t.run(n + m);
  LpResult res;
  if (t.obj.back() != 0) return res;  // artificial sum stays positive
  // drive remaining artificials out, dropping redundant rows
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col == n) {
      t.rows.erase(t.rows.begin() + static_cast<long>(i));
      t.basis.erase(t.basis.begin() + static_cast<long>(i));
      continue;
    }
    t.pivot(i, col);
    ++i;
  }
  for (auto& row : t.rows) {
    Rational rhs = row.back();
    row.resize(n);
    row.push_back(rhs);
  }
  t.obj.assign(n + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) t.obj[j] = c[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational& cb = c[t.basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) t.obj[j] -= cb * t.rows[i][j];
  }
  if (!t.run(n)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.value = -t.obj.back();
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) res.x[t.basis[i]] = t.rows[i].back();
  return res;
}

std::optional<std::vector<Rational>> lp_feasible_point(std::size_t vars,
                                                       const std::vector<std::vector<Rational>>& eq_a,
                                                       const std::vector<Rational>& eq_b,
                                                       const std::vector<std::vector<Rational>>& ge_a,
                                                       const std::vector<Rational>& ge_b) {
  // y = y+ - y-, one surplus per inequality
  const std::size_t cols = 2 * vars + ge_a.size();
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t i = 0; i < eq_a.size(); ++i) {
    Row row(cols, Rational(0));
    for (std::size_t k = 0; k < vars; ++k) {
      row[k] = eq_a[i][k];
      row[vars + k] = -eq_a[i][k];
    }
    a.push_back(std::move(row));
    b.push_back(eq_b[i]);
  }
  for (std::size_t i = 0; i < ge_a.size(); ++i) {
    Row row(cols, Rational(0));
    for (std::size_t k = 0; k < vars; ++k) {
      row[k] = ge_a[i][k];
      row[vars + k] = -ge_a[i][k];
    }
    row[2 * vars + i] = -1;
    a.push_back(std::move(row));
    b.push_back(ge_b[i]);
  }
  const LpResult r = lp_maximize(a, b, std::vector<Rational>(cols, Rational(0)));
  if (r.status != LpStatus::Optimal) return std::nullopt;
  std::vector<Rational> y(vars);
  for (std::size_t k = 0; k < vars; ++k) y[k] = r.x[k] - r.x[vars + k];
  return y;
}

}  // namespace troplift
