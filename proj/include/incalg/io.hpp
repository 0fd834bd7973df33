#pragma once

// JSON forms of every object the command-line tool reads or writes. Exact values
// travel as strings ("p/q", residues as "r"); matrix-ring values as row-major
// nested arrays of such strings. Malformed documents raise ParseError.

#include <string>
#include <vector>

#include <json.hpp>

#include "incalg/automorph.hpp"
#include "incalg/derivation.hpp"
#include "incalg/oracle.hpp"
#include "incalg/reduced.hpp"

namespace incalg::io {

using nlohmann::json;

/// Parses text as JSON, mapping syntax errors to ParseError.
json parse_json(const std::string& text);
json read_json_file(const std::string& path);

Preorder poset_from_json(const json& j);
json poset_to_json(const Preorder& p);

RingElem elem_from_json(const RingSpec& ring, const json& j);
json elem_to_json(const RingElem& a);

/// Reads {"ring", "entries"}; the ring in the document must equal the algebra's.
IncidenceFunction function_from_json(const AlgebraPtr& algebra, const json& j);
/// Ring named by a function document.
RingSpec function_ring(const json& j);
json function_to_json(const IncidenceFunction& f);

struct CocycleInput {
  EdgeAssignment assignment;
  CocycleMode mode = CocycleMode::Full;
};
CocycleInput cocycle_from_json(const RingSpec& ring, const json& j);
json edges_to_json(const AlgebraPtr& algebra, const std::vector<RingElem>& values);
json cocycle_to_json(const MultCocycle& c);
json cocycle_to_json(const AddCocycle& c);

/// "e_3" for (3, 3), "e_0_2" for (0, 2).
std::string basis_label(int s, int t);
/// Also accepts the compact "e_02" on posets with at most ten elements.
IndexPair parse_basis_label(const std::string& label, int n);

AutTable table_from_json(const AlgebraPtr& source, const AlgebraPtr& target, const json& j);
json table_to_json(const AutTable& t);

json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json poset_info(const AlgebraPtr& algebra);
json structural_to_json(const Structural& s);
json mult_decomposition_to_json(const MultDecomposition& d);
json aut_decomposition_to_json(const AutDecomposition& d);
json add_decomposition_to_json(const AddDecomposition& d);
json deriv_space_to_json(const DerivSpaceReport& r);
json brute_report_to_json(const BruteReport& r);
json types_to_json(const Reduction& r);
json coefficients_to_json(const CoefTable& t);
ReducedElem reduced_from_json(const Reduction& r, const json& j);
json reduced_to_json(const ReducedElem& a);

}  // namespace incalg::io
