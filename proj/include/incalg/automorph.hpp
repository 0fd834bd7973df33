#pragma once

#include <map>
#include <optional>
#include <vector>

#include "incalg/algebra.hpp"

namespace incalg {

enum class CocycleMode { Full, TreeOnly };

/// Central-unit values c_xy on the strict comparable class pairs of X̄,
/// stored in comparability-edge order.
struct MultCocycle {
  AlgebraPtr algebra;
  std::vector<RingElem> values;

  const RingElem& at(int x, int y) const;
  friend bool operator==(const MultCocycle& a, const MultCocycle& b) { return a.values == b.values; }
};

/// Class-pair keyed assignment used to build cocycles.
using EdgeAssignment = std::map<IndexPair, RingElem>;

/// Full: every edge needs a value (MissingEdge) and the triangle law is checked
/// (CocycleViolation). TreeOnly: only canonical tree edges are read; the rest are
/// filled with tree-semipath weights. Values must be central units (NotCentralUnit).
MultCocycle mult_cocycle(const AlgebraPtr& algebra, const EdgeAssignment& assignment, CocycleMode mode);
/// c_xy = q(x)⁻¹ q(y) for one unit per class.
MultCocycle fractional_cocycle(const AlgebraPtr& algebra, const std::vector<RingElem>& q);
MultCocycle identity_cocycle(const AlgebraPtr& algebra);
/// Pointwise product of cocycles.
MultCocycle operator*(const MultCocycle& a, const MultCocycle& b);

/// Hadamard scaling of the off-class blocks by c.
IncidenceFunction apply_mult(const MultCocycle& c, const IncidenceFunction& f);
/// Product of directed weights c_ab (upward) or c_ba⁻¹ (downward). Throws NotASemipath.
RingElem path_weight(const MultCocycle& c, const std::vector<int>& walk);

struct MultDecomposition {
  std::vector<RingElem> vertex_units;  // v per class, v_root = 1
  MultCocycle residue;                 // trivial on tree edges
  bool is_inner = false;
  std::vector<int> failing_cycle;      // empty when inner
  RingElem cycle_weight;               // weight of failing_cycle
};

/// Root-walk factorisation c = fractional(v) · residue. Throws Disconnected.
MultDecomposition decompose_mult(const MultCocycle& c);

/// A linear map I(Y, R) -> I(X, R) given by its images of the matrix units e_st,
/// indexed like source->pairs().
struct AutTable {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<IncidenceFunction> images;

  const IncidenceFunction& image(int s, int t) const;
  /// Linear extension to any source function.
  IncidenceFunction apply(const IncidenceFunction& f) const;
};

/// Matrix unit e_st for any comparable pair of a preorder.
IncidenceFunction matrix_unit(const AlgebraPtr& algebra, int s, int t);

/// Table of an arbitrary map evaluated on the matrix units.
template <class Map>
AutTable tabulate(const AlgebraPtr& source, const AlgebraPtr& target, Map&& map) {
  AutTable t{source, target, {}};
  for (const auto& [s, u] : source->pairs()) t.images.push_back(map(matrix_unit(source, s, u)));
  return t;
}

/// Φ∘Ψ.
AutTable compose(const AutTable& outer, const AutTable& inner);
/// a ↦ u a u⁻¹. Throws NotInvertible.
AutTable inner_table(const IncidenceFunction& u);
/// a ↦ apply_mult(c, a).
AutTable mult_table(const MultCocycle& c);
/// ξ_τ(f)(x, y) = f(τx, τy) on a poset: e_xy ↦ e_{τ⁻¹x τ⁻¹y}. Throws NotAutomorphism, NotAPoset.
AutTable ordinal(const Permutation& tau, const AlgebraPtr& algebra);
bool same_action(const AutTable& a, const AutTable& b);

/// Unital, multiplicative on all matrix-unit pairs and bijective. Throws
/// ShapeMismatch for malformed tables and NotCommutative for matrix rings.
bool verify_automorphism(const AutTable& phi);

/// Class bijection y ↦ x with L-part of Φ(e_[y]) equal to e_[x]. Throws NotClassPreserving.
Permutation induced_map(const AutTable& phi);

struct Diagonalization {
  IncidenceFunction v;  // unit with identity diagonal blocks
  AutTable gamma;       // conj_v ∘ Φ, Γ(e_[z]) = e_[τ(z)]
  Permutation tau;      // induced map
};
/// conj_v(a) = v⁻¹ a v with v = Σ_y Φ(e_[y]) e_[τ(y)].
Diagonalization diagonalize(const AutTable& phi);

struct AutDecomposition {
  Permutation tau;               // ordinal parameter
  IncidenceFunction inner_delta; // v − δ, in M
  MultCocycle cocycle;           // c_xy = Γ'(e_xy)(x, y)
  std::vector<RingElem> vertex_units;
  MultCocycle residue;
  bool is_inner = false;
  std::vector<int> failing_cycle;
  RingElem cycle_weight;
};

/// Φ(a) = v · ψ_c(ξ_tau(a)) · v⁻¹ with v = δ + inner_delta and
/// c = fractional(vertex_units) · residue. Requires a poset and a commutative ring.
/// Throws NotMultiplicativeResidue when Γ' is not a Hadamard scaling.
AutDecomposition full_decompose(const AutTable& phi);
AutTable recompose(const AutDecomposition& d);

}  // namespace incalg
