#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incalg/automorph.hpp"

namespace incalg {

/// Central values c_xy on the strict comparable class pairs, with c_xx = 0 implied.
struct AddCocycle {
  AlgebraPtr algebra;
  std::vector<RingElem> values;  // comparability-edge order

  const RingElem& at(int x, int y) const;
  friend bool operator==(const AddCocycle& a, const AddCocycle& b) { return a.values == b.values; }
};

/// Mirror of mult_cocycle with sums: CocycleViolation, NotCentral, MissingEdge.
AddCocycle add_cocycle(const AlgebraPtr& algebra, const EdgeAssignment& assignment, CocycleMode mode);
/// c_xy = q(y) − q(x).
AddCocycle potential_cocycle(const AlgebraPtr& algebra, const std::vector<RingElem>& q);
AddCocycle zero_cocycle(const AlgebraPtr& algebra);
AddCocycle operator+(const AddCocycle& a, const AddCocycle& b);
AddCocycle operator-(const AddCocycle& a, const AddCocycle& b);

/// Hadamard multiplication by c; class-diagonal values are sent to 0.
IncidenceFunction apply_deriv(const AddCocycle& c, const IncidenceFunction& f);
/// Sum of c_ab upward and −c_ba downward. Throws NotASemipath.
RingElem add_path_weight(const AddCocycle& c, const std::vector<int>& walk);

struct AddDecomposition {
  std::vector<RingElem> potentials;  // q per class, q_root = 0
  AddCocycle residue;                // zero on tree edges
  bool is_inner = false;
  std::vector<int> failing_cycle;
  RingElem cycle_weight;
};

/// c = potential(q) + residue by the root walk. Throws Disconnected.
AddDecomposition decompose_add(const AddCocycle& c);

/// One row (+1 at xy, −1 at xz, −1 at zy) per triangle, columns in edge order.
/// Throws CenterNotField.
Eigen::MatrixXi triangle_matrix(const AlgebraPtr& algebra);

struct DerivSpaceReport {
  int m = 0;
  int lambda = 0;
  int rank = 0;
  int dim_psi = 0;
  int dim_psi0 = 0;
  int dim_out = 0;
  bool all_inner = false;
  /// Basis of ker P over the center field, one length-m vector per free edge.
  std::vector<std::vector<RingElem>> kernel_basis;
  std::vector<std::string> warnings;
};

/// Dimensions of the additive derivations over C(R). Throws Disconnected, CenterNotField.
DerivSpaceReport derivation_space(const AlgebraPtr& algebra);

/// A kernel-basis vector (over the center) read as a cocycle of the algebra.
AddCocycle cocycle_from_center(const AlgebraPtr& algebra, const std::vector<RingElem>& values);

}  // namespace incalg
