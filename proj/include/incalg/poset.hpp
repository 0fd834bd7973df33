#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace incalg {

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;
using IndexPair = std::pair<int, int>;
/// A permutation of class indices, stored as its image vector: sigma[i].
using Permutation = std::vector<int>;

/// Finite preordered set on {0, ..., n-1}: reflexive and transitive `leq`.
class Preorder {
 public:
  Preorder() = default;

  int size() const { return static_cast<int>(leq_.rows()); }
  bool leq(int i, int j) const { return leq_(i, j); }
  bool less(int i, int j) const { return leq_(i, j) && !leq_(j, i); }
  bool equivalent(int i, int j) const { return leq_(i, j) && leq_(j, i); }
  const BoolMatrix& relation() const { return leq_; }

  /// Every (i, j) with i <= j, lexicographic.
  std::vector<IndexPair> pairs() const;
  /// True when the relation is antisymmetric.
  bool is_partial_order() const;

  friend bool operator==(const Preorder& a, const Preorder& b) {
    return a.size() == b.size() && a.leq_ == b.leq_;
  }

 private:
  friend Preorder build_preorder(int n, std::span<const IndexPair> pairs);
  BoolMatrix leq_;
};

/// Smallest preorder on n points containing `pairs` (Warshall closure).
/// Throws Error(IndexOutOfRange).
Preorder build_preorder(int n, std::span<const IndexPair> pairs);

/// X / ~ with classes numbered by their minimal member.
struct QuotientPoset {
  std::vector<std::vector<int>> classes;  // members ascending
  std::vector<int> class_of;              // element -> class
  BoolMatrix lt;                          // strict order on classes

  int size() const { return static_cast<int>(classes.size()); }
  int class_size(int c) const { return static_cast<int>(classes[static_cast<std::size_t>(c)].size()); }
  int repr(int c) const { return classes[static_cast<std::size_t>(c)].front(); }
  bool le(int x, int y) const { return x == y || lt(x, y); }
  bool comparable(int x, int y) const { return le(x, y) || le(y, x); }
  /// All classes are singletons.
  bool is_poset() const;
};

QuotientPoset quotient(const Preorder& p);

/// Comparability graph of X̄: one edge per strict comparable pair (not just covers).
struct CompGraph {
  int vertex_count = 0;
  std::vector<IndexPair> edges;              // (x, y) with x < y in X̄, lexicographic
  std::vector<std::vector<int>> components;  // each ascending, ordered by least vertex
  std::vector<std::vector<int>> neighbors;   // undirected adjacency, ascending
  int lambda = 0;                            // m - |V| + |components|

  int m() const { return static_cast<int>(edges.size()); }
  /// Index of edge (x, y) with x < y, or -1.
  int edge_index(int x, int y) const;
  bool connected() const { return components.size() <= 1; }

  std::vector<int> index_;  // vertex_count² lookup, -1 when absent
};

CompGraph comparability(const QuotientPoset& q);

/// BFS spanning forest: each component rooted at its least vertex, neighbours
/// visited in ascending order.
struct SpanningForest {
  std::vector<int> tree_edges;  // edge indices, ascending
  std::vector<int> chords;      // edge indices, ascending
  /// Per chord (x, y): closed walk x, y, ..., x that crosses the chord first and
  /// returns along the tree.
  std::vector<std::vector<int>> fundamental_cycles;
  std::vector<int> parent;      // -1 at roots
  std::vector<int> depth;
  std::vector<int> roots;
  std::vector<int> bfs_order;   // vertices in visiting order, component by component

  bool is_tree_edge(int edge) const;
  /// Vertex walk from `from` to `to` inside the forest (same component required).
  std::vector<int> tree_path(int from, int to) const;

  std::vector<bool> tree_mask_;
};

SpanningForest spanning_forest(const CompGraph& g);

/// A chain x < z < y of X̄ with the indices of its three edges.
struct Triangle {
  int x = 0, z = 0, y = 0;
  int xy = 0, xz = 0, zy = 0;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// All 3-chains sorted by (x, z, y).
std::vector<Triangle> triangles(const QuotientPoset& q, const CompGraph& g);
std::vector<Triangle> triangles(const QuotientPoset& q);

/// Class-size preserving order automorphisms of X̄, lexicographic (identity first).
/// Throws Error(TooLarge) above `bound` classes.
std::vector<Permutation> poset_automorphisms(const QuotientPoset& q, int bound = 10);

/// Length of the longest chain from x to y in X̄ (0 on the diagonal, -1 when x ≰ y).
Eigen::MatrixXi interval_lengths(const QuotientPoset& q);

Permutation inverse(const Permutation& p);
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation identity_permutation(int n);

}  // namespace incalg
