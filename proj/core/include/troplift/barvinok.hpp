#pragma once

#include "troplift/trees.hpp"
#include "troplift/trop_matrix.hpp"

#include <optional>
#include <string>

namespace troplift {

struct BarvinokResult {
  bool holds = false;
  int trop_rank = 0;
  std::optional<TropMatrix> b;  // d x k, k <= 2
  std::optional<TropMatrix> c;  // k x n (absent for the symmetric version: A = B ⊙ Bᵀ)
  std::string reason;
};

/// Barvinok rank <= 2 decided by the caterpillar criterion on the tree of A,
/// with a factorization A = B ⊙ C read off the spine.
BarvinokResult barvinok_rank2(const TropMatrix& a);

/// Symmetric Barvinok rank <= 2: A = B ⊙ Bᵀ with B of width <= 2. Holds iff
/// the tree is a caterpillar whose colour swap fixes exactly one point.
BarvinokResult sym_barvinok_rank2(const TropMatrix& a, int max_n = 8);

}  // namespace troplift
