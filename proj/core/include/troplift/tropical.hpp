#pragma once

#include "troplift/permutation.hpp"
#include "troplift/trop_matrix.hpp"

#include <vector>

namespace troplift {

constexpr int kDefaultEnumerationBound = 8;

/// A monomial of the (symmetric) determinant. In the plain case the
/// exponent matrix is the permutation matrix; in the symmetric case it is
/// upper triangular, counting how often each unordered pair {i,j} (or the
/// diagonal entry i) occurs, so permutations differing by cycle
/// reorientation share a class.
struct SignedMonomialClass {
  std::vector<std::vector<int>> exponent;
  int sign = 1;
  long coefficient = 1;
  Permutation representative;
  std::vector<int> cycle_type;

  friend bool operator==(const SignedMonomialClass& a, const SignedMonomialClass& b) {
    return a.exponent == b.exponent;
  }
};

SignedMonomialClass plain_class_of(const Permutation& p);
SignedMonomialClass symmetric_class_of(const Permutation& p);
/// Upper-triangular exponent matrix of the symmetric class of p.
std::vector<std::vector<int>> symmetric_exponent(const Permutation& p);

struct TropDetResult {
  Rational min_value;
  std::vector<SignedMonomialClass> argmin;
  bool tie = false;
};

/// Minimum over all permutations with every optimal permutation listed.
/// Throws SizeLimit when n exceeds max_n.
TropDetResult trop_det(const TropMatrix& a, int max_n = kDefaultEnumerationBound);
/// Minimum over symmetric monomial classes. Requires symmetric values.
TropDetResult sym_trop_det(const TropMatrix& a, int max_n = kDefaultEnumerationBound);

/// Optimal assignment value by the Hungarian method (no tie information).
Rational trop_det_hungarian(const TropMatrix& a, Permutation* assignment = nullptr);

/// Minimum attained exactly once over permutations (bitmask DP, no bound).
bool trop_nonsingular(const TropMatrix& a);
/// Minimum attained by exactly one symmetric class.
bool sym_trop_nonsingular(const TropMatrix& a, int max_n = kDefaultEnumerationBound);

struct RankWitness {
  int rank = 0;
  std::vector<std::size_t> rows;  // a nonsingular rank x rank submatrix
  std::vector<std::size_t> cols;
};

RankWitness trop_rank_witness(const TropMatrix& a);
int trop_rank(const TropMatrix& a);
/// Largest k with a nonsingular k x k submatrix where principal submatrices
/// use the symmetric notion and all others the plain one.
RankWitness sym_trop_rank_witness(const TropMatrix& a, int max_n = kDefaultEnumerationBound);
int sym_trop_rank(const TropMatrix& a, int max_n = kDefaultEnumerationBound);

/// Visits all k-subsets of {0..n-1} in lexicographic order; stops when the
/// visitor returns true and reports whether it did.
template <typename Visitor>
bool for_each_subset(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    if (visit(static_cast<const std::vector<std::size_t>&>(s))) return true;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace troplift
