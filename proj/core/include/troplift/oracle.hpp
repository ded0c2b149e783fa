#pragma once

#include "troplift/newton.hpp"
#include "troplift/trop_matrix.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace troplift {

struct HullResult {
  std::vector<std::size_t> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // pairs of vertex indices into the input
};

struct HullLimits {
  std::size_t max_points = 40;
  std::size_t max_dim = 10;
};

/// Vertices and edges of the convex hull of distinct points, decided by
/// exact linear programs. Throws SizeLimit beyond the limits.
HullResult brute_hull(const std::vector<std::vector<Rational>>& points, HullLimits limits = {});

struct BruteFactorization {
  bool holds = false;
  std::optional<TropMatrix> b;
  std::optional<TropMatrix> c;
};

/// Exhaustive search for A = B ⊙ C with two inner columns over all
/// combinatorial types (which product attains each entry), each type being
/// a system of difference constraints. Requires d, n <= 4.
BruteFactorization brute_barvinok2(const TropMatrix& a);
/// Same for A = B ⊙ Bᵀ, each type solved as an exact LP. Requires n <= 4.
BruteFactorization brute_sym_barvinok2(const TropMatrix& a);

/// 9 x 12 cocircuit matrix of the affine plane over F_3: entry 0 when the
/// point lies in the cocircuit (off the line), 1 otherwise.
TropMatrix cocircuit_fixture();

struct OracleReport {
  std::string subject;
  std::string instance;
  std::string fast_result;
  std::string brute_result;
  bool agree = false;
};

/// Cross-checks fast paths against the brute-force oracles on seeded
/// random instances of size <= max_n.
std::vector<OracleReport> run_verify_suite(std::uint64_t seed, int max_n);

/// Seeded random helpers shared by tests, benchmarks and the suite.
TropMatrix random_int_matrix(std::mt19937_64& rng, std::size_t d, std::size_t n, long lo, long hi);
TropMatrix random_symmetric_int_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi);
/// Tree matrix of a random bicolored tree with random row/column scaling.
TropMatrix random_rank2_matrix(std::mt19937_64& rng, int d, int n);

}  // namespace troplift
