#pragma once

#include <limits>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "incalg/poset.hpp"
#include "incalg/ring.hpp"

namespace incalg {

/// The fixed data behind I(X, R): the preorder, its quotient and derived graphs,
/// and the coefficient ring. Shared by every function on the same algebra.
class Algebra {
 public:
  static std::shared_ptr<const Algebra> create(Preorder p, RingSpec ring);

  const Preorder& preorder() const { return preorder_; }
  const QuotientPoset& quotient() const { return quotient_; }
  const CompGraph& graph() const { return graph_; }
  const SpanningForest& forest() const { return forest_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const RingSpec& ring() const { return ring_; }

  int size() const { return preorder_.size(); }
  /// Comparable pairs (s, t), s <= t, lexicographic.
  const std::vector<IndexPair>& pairs() const { return pairs_; }
  /// Position of (s, t) in pairs(), or -1.
  int pair_index(int s, int t) const;
  /// Longest chain length between classes, -1 when not comparable.
  const Eigen::MatrixXi& lengths() const { return lengths_; }
  /// Maximum interval length D of X̄.
  int max_length() const { return max_length_; }

  bool same_as(const Algebra& other) const { return preorder_ == other.preorder_ && ring_ == other.ring_; }

 private:
  Algebra() = default;

  Preorder preorder_;
  QuotientPoset quotient_;
  CompGraph graph_;
  SpanningForest forest_;
  std::vector<Triangle> triangles_;
  RingSpec ring_;
  std::vector<IndexPair> pairs_;
  std::vector<int> pair_lookup_;
  Eigen::MatrixXi lengths_;
  int max_length_ = 0;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr make_algebra(Preorder p, RingSpec ring = RingSpec::rationals()) {
  return Algebra::create(std::move(p), std::move(ring));
}

/// An element f of I(X, R), stored sparsely on comparable pairs.
class IncidenceFunction {
 public:
  using Entries = std::map<IndexPair, RingElem>;

  explicit IncidenceFunction(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  const AlgebraPtr& algebra() const { return algebra_; }
  const RingSpec& ring() const { return algebra_->ring(); }

  /// f(s, t); zero off the relation. Throws Error(IndexOutOfRange) outside [0, n).
  RingElem operator()(int s, int t) const;
  /// Sets f(s, t). Throws IndexOutOfRange unless s <= t, Mismatch on a foreign ring.
  void set(int s, int t, const RingElem& value);
  void add(int s, int t, const RingElem& value);

  /// Nonzero entries only.
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  IncidenceFunction operator-() const;
  IncidenceFunction& operator+=(const IncidenceFunction& o);
  IncidenceFunction& operator-=(const IncidenceFunction& o);

  friend IncidenceFunction operator+(IncidenceFunction a, const IncidenceFunction& b) { return a += b; }
  friend IncidenceFunction operator-(IncidenceFunction a, const IncidenceFunction& b) { return a -= b; }
  friend bool operator==(const IncidenceFunction& a, const IncidenceFunction& b);

 private:
  AlgebraPtr algebra_;
  Entries entries_;
};

/// Convolution (fg)(x, y) = Σ_{x<=z<=y} f(x, z) g(z, y). Throws Mismatch.
IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g);
inline IncidenceFunction operator*(const IncidenceFunction& f, const IncidenceFunction& g) { return convolve(f, g); }
/// Pointwise product.
IncidenceFunction hadamard(const IncidenceFunction& f, const IncidenceFunction& g);
/// a·f and f·a for a ring element a.
IncidenceFunction scale(const RingElem& a, const IncidenceFunction& f);
IncidenceFunction scale(const IncidenceFunction& f, const RingElem& a);

enum class BasisKind { Delta, Zeta, EClass, EUnit };

/// δ, ζ, e_[x] (x any member of the class) or the matrix unit e_xy.
/// EUnit needs singleton classes (NotSingletonClass) and x <= y (IndexOutOfRange);
/// e_xx is the idempotent e_x.
IncidenceFunction basis_function(BasisKind kind, const AlgebraPtr& algebra, int x = 0, int y = 0);
inline IncidenceFunction delta(const AlgebraPtr& a) { return basis_function(BasisKind::Delta, a); }
inline IncidenceFunction zeta(const AlgebraPtr& a) { return basis_function(BasisKind::Zeta, a); }
inline IncidenceFunction e_class(const AlgebraPtr& a, int x) { return basis_function(BasisKind::EClass, a, x); }
inline IncidenceFunction e_unit(const AlgebraPtr& a, int x, int y) { return basis_function(BasisKind::EUnit, a, x, y); }

/// f = fL + fM with fL on equivalent pairs and fM on the rest.
struct Split {
  IncidenceFunction L;
  IncidenceFunction M;
};
Split split(const IncidenceFunction& f);

inline constexpr int kInfiniteLevel = std::numeric_limits<int>::max();

/// Largest k with f in V_k: the minimum class-interval length over the support,
/// kInfiniteLevel for 0. Throws Error(NotInM) if f has class-diagonal support.
int filtration_level(const IncidenceFunction& fM);

/// Two-sided inverse. Throws Error(NotInvertible) when a diagonal block is not a unit.
IncidenceFunction invert(const IncidenceFunction& f);
bool is_invertible(const IncidenceFunction& f);
/// μ = ζ⁻¹.
IncidenceFunction mobius(const AlgebraPtr& algebra);
/// Membership in J(I(X, R)): values on equivalent pairs lie in J(R).
bool in_radical_fn(const IncidenceFunction& f);

/// Dense square matrix over a ring, row-major.
class DenseMatrix {
 public:
  DenseMatrix(const RingSpec& ring, int n);

  int size() const { return n_; }
  const RingSpec& ring() const { return ring_; }
  RingElem& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }
  const RingElem& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  RingSpec ring_;
  int n_;
  std::vector<RingElem> data_;
};

/// f embedded in the full matrix ring M(N, R) together with its Boolean pattern
/// and the block-triangularising permutation.
struct Structural {
  DenseMatrix matrix;
  BoolMatrix pattern;
  /// tau[k] is the element placed at position k.
  Permutation tau;
  /// Sizes of the diagonal blocks in the permuted order.
  std::vector<int> blocks;
};

Structural to_structural(const IncidenceFunction& f);
/// pattern(tau[i], tau[j]).
BoolMatrix permute_pattern(const BoolMatrix& pattern, const Permutation& tau);
bool is_block_upper_triangular(const BoolMatrix& pattern, const std::vector<int>& blocks);

}  // namespace incalg
