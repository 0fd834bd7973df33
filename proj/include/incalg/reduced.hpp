#pragma once

#include <array>
#include <map>
#include <vector>

#include "incalg/algebra.hpp"

namespace incalg {

/// A type: an equivalence class of intervals.
struct IntervalType {
  int id = 0;
  bool point = false;         // T0 (intervals [x, x]) versus T1
  IndexPair representative;   // first member in lexicographic order
  int members = 0;
};

/// An equivalence relation on the intervals [s, t] of a poset.
struct Reduction {
  AlgebraPtr algebra;
  std::vector<IntervalType> types;
  std::vector<int> type_of;  // indexed like algebra->pairs()

  int count() const { return static_cast<int>(types.size()); }
  int type(int s, int t) const;
};

/// Intervals grouped by poset isomorphism. Throws NotAPoset and IntervalTooLarge
/// when an interval exceeds `max_interval` elements.
Reduction standard_types(const AlgebraPtr& algebra, int max_interval = 12);

/// A user partition of the intervals. Throws NotAPartition unless every interval
/// appears exactly once.
Reduction make_reduction(const AlgebraPtr& algebra, const std::vector<std::vector<IndexPair>>& groups);

struct Compatibility {
  bool ok = true;
  IndexPair first{0, 0};   // offending pair of equivalent intervals when !ok
  IndexPair second{0, 0};
};

/// For every pair of equivalent intervals, looks for a bijection ε with
/// [x, z] ~ [s, ε(z)] and [z, y] ~ [ε(z), t].
Compatibility check_order_compatible(const Reduction& r);

/// Incidence coefficients [t; r s], nonzero entries only, keyed (t, r, s).
using CoefTable = std::map<std::array<int, 3>, int>;

/// Counts on every member of each type. Throws RepresentativeDisagreement.
CoefTable coefficients(const Reduction& r);

struct ReducedElem {
  RingSpec ring;
  std::vector<RingElem> values;  // one per type

  friend bool operator==(const ReducedElem&, const ReducedElem&) = default;
};

/// h_t = Σ [t; r s] a_r b_s. Throws Mismatch.
ReducedElem reduced_convolve(const ReducedElem& a, const ReducedElem& b, const CoefTable& table);
/// The function taking value a_t on every interval of type t.
IncidenceFunction lift(const Reduction& r, const ReducedElem& a);
/// Inverse of lift. Throws NotConstantOnTypes naming two intervals of one type.
ReducedElem project(const Reduction& r, const IncidenceFunction& f);

}  // namespace incalg
