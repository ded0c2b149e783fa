#pragma once

#include "troplift/tropical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace troplift {

constexpr int kMaxMonomialN = 7;

enum class ComponentKind { Loop, Edge, OddCycle, EvenCycle };
std::string to_string(ComponentKind k);

/// A connected component of the graph of a monomial: loops, isolated
/// edges (transpositions) and unoriented cycles.
struct GraphComponent {
  ComponentKind kind = ComponentKind::Loop;
  std::vector<int> vertices;  // 0-based, in cycle order starting at the smallest
  friend bool operator==(const GraphComponent&, const GraphComponent&) = default;
};

std::vector<GraphComponent> semisimple_graph(const SignedMonomialClass& c);
/// Distinct edges {i,j}, i <= j (loops as {i,i}), of the monomial graph.
std::vector<std::pair<int, int>> graph_edges(const SignedMonomialClass& c);
/// Upper-triangular exponent entries flattened row by row (i <= j).
std::vector<int> exponent_point(const SignedMonomialClass& c);
/// Monomial text such as "-2*x12*x14*x23*x34" (1-based indices).
std::string monomial_string(const SignedMonomialClass& c);

/// All classes of the n x n symmetric determinant in lexicographic order
/// of their exponent matrices. Throws SizeLimit above kMaxMonomialN.
std::vector<SignedMonomialClass> sym_det_monomials(int n);
bool is_polytope_vertex(const SignedMonomialClass& c);
std::vector<SignedMonomialClass> polytope_vertices(int n);

struct NewtonEdge {
  SignedMonomialClass u;
  SignedMonomialClass v;
  int lattice_length = 1;
  std::optional<SignedMonomialClass> midpoint;
  std::optional<int> union_cycle_length;  // the even cycle of length >= 4 in the union graph
};

/// Edge test for two vertex classes: at most n+1 distinct edges in the
/// union graph and at most one even cycle of length >= 4 in it.
bool is_polytope_edge(const SignedMonomialClass& u, const SignedMonomialClass& v);
/// Lattice data for a pair already known to be an edge.
NewtonEdge describe_edge(const SignedMonomialClass& u, const SignedMonomialClass& v);
std::vector<NewtonEdge> polytope_edges(int n);

/// Even simple cycles of length >= 4 in the union of the two monomial graphs.
std::vector<std::vector<int>> union_even_cycles(const SignedMonomialClass& u, const SignedMonomialClass& v);

/// sigma1 sigma2^{-1} is a single cycle.
bool birkhoff_edge(const Permutation& s1, const Permutation& s2);

/// Classes minimising sum_{i<=j} E_ij w_ij.
std::vector<SignedMonomialClass> initial_form(const std::vector<SignedMonomialClass>& monomials, const TropMatrix& w);
Rational class_weight(const SignedMonomialClass& c, const TropMatrix& w);

/// The five monomials of the 4 x 4 symmetric determinant shown in the
/// reference table, regenerated from their permutations.
std::vector<SignedMonomialClass> worked_monomials();

}  // namespace troplift
