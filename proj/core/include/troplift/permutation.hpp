#pragma once

#include <string>
#include <vector>

namespace troplift {

/// perm[i] = sigma(i), 0-based.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
int permutation_sign(const Permutation& p);
/// Cycles including fixed points, each starting at its smallest element,
/// ordered by that element.
std::vector<std::vector<int>> permutation_cycles(const Permutation& p);
/// Cycle lengths in decreasing order.
std::vector<int> cycle_type(const Permutation& p);
Permutation permutation_inverse(const Permutation& p);
Permutation permutation_compose(const Permutation& p, const Permutation& q);  // p after q
/// 1-based cycle notation without fixed points, e.g. "(12)(34)"; "id" for
/// the identity. Elements are comma separated once n >= 10.
std::string cycle_notation(const Permutation& p);
/// Parses the notation above for a permutation of {1..n}. Throws ParseError.
Permutation parse_cycle_notation(const std::string& text, int n);

}  // namespace troplift
