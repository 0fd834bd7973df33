#pragma once

#include <vector>

#include "incalg/derivation.hpp"

namespace incalg {

/// A derivation given by its images of the matrix units (same layout as AutTable).
using DerivTable = AutTable;

struct BruteReport {
  int dim_k = 0;
  int dim_center = 0;
  int dim_der = 0;
  int dim_inn = 0;
  int dim_out = 0;
  std::vector<DerivTable> basis;
};

/// Solves the Leibniz system for all derivations of I(X, F), X a poset on at most
/// `max_elements` points and F = Q or Z/p. Throws TooLarge, NotAField, NotAPoset.
BruteReport brute_derivations(const AlgebraPtr& algebra, bool with_basis = true, int max_elements = 6);

/// Basis of the center Z(I(X, F)).
std::vector<IncidenceFunction> center_basis(const AlgebraPtr& algebra);

/// ad(g)(a) = a g − g a.
DerivTable ad_table(const IncidenceFunction& g);
/// a ↦ apply_deriv(c, a).
DerivTable deriv_table(const AddCocycle& c);
DerivTable operator+(const DerivTable& a, const DerivTable& b);
DerivTable operator-(const DerivTable& a, const DerivTable& b);
/// D(ab) = D(a)b + aD(b) on all matrix-unit pairs.
bool satisfies_leibniz(const DerivTable& d);

struct TriangularParts {
  std::vector<IncidenceFunction> alpha;  // L-part of D(e_x), per element
  std::vector<IncidenceFunction> delta;  // M-part of D(e_x), per element
  std::vector<IncidenceFunction> beta;   // D(e_xy), per comparability edge
};

/// Splits D along K = L ⊕ M after checking that D maps M into M and kills the
/// diagonal part of L. Throws GammaNonzero, NotAPoset.
TriangularParts triangularize_derivation(const DerivTable& d);

struct DerivDiagonalization {
  IncidenceFunction g;  // in M, g(x, y) = D(e_y)(x, y)
  DerivTable diagonal;  // D + ad(g), vanishing on every e_x
};

DerivDiagonalization diagonalize_derivation(const DerivTable& d);

/// c_xy = D(e_xy)(x, y) for a diagonal derivation. Throws NotAPoset.
AddCocycle cocycle_of_diagonal(const DerivTable& d);

}  // namespace incalg
