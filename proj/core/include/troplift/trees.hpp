#pragma once

#include "troplift/trop_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace troplift {

enum class Color { Red, Blue };

struct TreeLeaf {
  Color color = Color::Red;
  int index = 0;   // red i <-> row i, blue j <-> column j
  int vertex = 0;  // the pendant vertex carrying this leaf
};

struct TreeEdge {
  int u = 0;
  int v = 0;
  std::optional<Rational> len;  // empty for leaf edges (infinite length)
};

/// Leaf-labelled metric tree. Leaf vertices are pendant; all other vertices
/// are internal and joined by edges of finite nonnegative length.
class BicoloredTree {
 public:
  BicoloredTree() = default;
  /// Validates the structure; throws InvalidTree.
  BicoloredTree(int vertex_count, std::vector<TreeLeaf> leaves, std::vector<TreeEdge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<TreeLeaf>& leaves() const { return leaves_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  int red_count() const;
  int blue_count() const;

  bool is_leaf_vertex(int v) const { return leaf_at_[static_cast<std::size_t>(v)] >= 0; }
  /// Internal vertex a leaf hangs from.
  int attachment(Color c, int index) const;
  int leaf_vertex(Color c, int index) const;
  std::vector<int> internal_vertices() const;
  std::vector<TreeEdge> internal_edges() const;
  /// Adjacency over internal edges only: (neighbour, length).
  std::vector<std::vector<std::pair<int, Rational>>> internal_adjacency() const;
  /// Distances between internal vertices (all pairs).
  std::vector<std::vector<Rational>> internal_distances() const;

  /// Same tree with length-0 internal edges contracted and vertices renumbered.
  BicoloredTree contracted() const;
  /// Throws InvalidTree when some internal edge leaves a side without both
  /// colours.
  void check_cuts() const;

  std::string to_dot() const;

 private:
  int vertex_count_ = 0;
  std::vector<TreeLeaf> leaves_;
  std::vector<TreeEdge> edges_;
  std::vector<int> leaf_at_;  // leaf id per vertex or -1
};

/// Distances between leaf attachment points: rows/cols ordered red 0..d-1
/// then blue 0..n-1.
std::vector<std::vector<Rational>> attachment_metric(const BicoloredTree& t);

/// Tree of a tropical rank <= 2 matrix; rank-1 input gives a star. Throws
/// RankTooHigh.
BicoloredTree tree_from_rank2(const TropMatrix& a);
/// Attachment metric computed directly from the matrix (Hilbert distances
/// and row/column offsets), same ordering as attachment_metric.
std::vector<std::vector<Rational>> rank2_metric(const TropMatrix& a);
/// Builds the metric tree spanned by points with the given tree metric;
/// point k becomes leaf (colors[k], indices[k]).
BicoloredTree tree_from_metric(const std::vector<std::vector<Rational>>& metric, const std::vector<Color>& colors,
                               const std::vector<int>& indices);

/// a_ij = -1/2 dist(red i, blue j), normalized to zero first row and column.
TropMatrix tree_to_matrix(const BicoloredTree& t);

/// Same leaf labels, same attachment metric and same internal edge lengths.
bool same_metric_tree(const BicoloredTree& x, const BicoloredTree& y);

bool is_caterpillar(const BicoloredTree& t);
/// Positions of the leaf attachments along the spine of a caterpillar,
/// measured from one end. Throws NotCaterpillar.
struct Spine {
  std::vector<Rational> red;
  std::vector<Rational> blue;
  Rational length;
};
Spine caterpillar_spine(const BicoloredTree& t);

enum class SymbicClass { NotSymmetricSwap, SwapNotAutomorphism, FixedSetNotPath, Symbic };
std::string to_string(SymbicClass c);

struct SymbicInfo {
  SymbicClass cls = SymbicClass::NotSymmetricSwap;
  std::vector<int> vertex_map;           // swap automorphism on vertices of the contracted tree
  std::vector<int> fixed_vertices;
  std::vector<std::pair<int, int>> fixed_edges;        // pointwise fixed internal edges
  std::optional<std::pair<int, int>> reversed_edge;    // edge whose midpoint is the only fixed point
  bool one_fixed_point = false;
  BicoloredTree tree;  // the contracted tree the data above refers to
};

SymbicInfo symbic_info(const BicoloredTree& t);
SymbicClass symbic_classify(const BicoloredTree& t);
bool one_fixed_point(const BicoloredTree& t);

/// Random valid bicolored tree with d red and n blue leaves and integer
/// internal lengths in [1, max_len]; used by tests and benchmarks.
BicoloredTree random_bicolored_tree(std::uint64_t seed, int d, int n, int max_len = 5);

}  // namespace troplift
