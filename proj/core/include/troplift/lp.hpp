#pragma once

#include "troplift/rational.hpp"

#include <optional>
#include <vector>

namespace troplift {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// max c.x subject to A x = b, x >= 0, by the two-phase simplex method in
/// exact arithmetic with Bland's rule.
LpResult lp_maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                     const std::vector<Rational>& c);

/// A point of { y free : E y = f, G y >= h }, or nothing if empty.
std::optional<std::vector<Rational>> lp_feasible_point(std::size_t vars,
                                                       const std::vector<std::vector<Rational>>& eq_a,
                                                       const std::vector<Rational>& eq_b,
                                                       const std::vector<std::vector<Rational>>& ge_a,
                                                       const std::vector<Rational>& ge_b);

}  // namespace troplift
