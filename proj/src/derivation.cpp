#include "incalg/derivation.hpp"

#include "incalg/errors.hpp"
#include "incalg/field.hpp"

namespace incalg {

namespace {

std::string edge_text(int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

void require_central(const RingElem& v, int x, int y) {
  if (!is_central(v)) throw Error(ErrorCode::NotCentral, "value " + v.str() + " at " + edge_text(x, y));
}

RingElem directed_weight(const AddCocycle& c, int a, int b) {
  const auto& g = c.algebra->graph();
  if (const int e = g.edge_index(a, b); e >= 0) return c.values[static_cast<std::size_t>(e)];
  if (const int e = g.edge_index(b, a); e >= 0) return -c.values[static_cast<std::size_t>(e)];
  throw Error(ErrorCode::NotASemipath, "no edge between " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

const RingElem& AddCocycle::at(int x, int y) const {
  const int e = algebra->graph().edge_index(x, y);
  if (e < 0) throw Error(ErrorCode::MissingEdge, edge_text(x, y) + " is not an edge");
  return values[static_cast<std::size_t>(e)];
}

AddCocycle add_cocycle(const AlgebraPtr& algebra, const EdgeAssignment& assignment, CocycleMode mode) {
  const auto& g = algebra->graph();
  const auto& forest = algebra->forest();
  std::vector<std::optional<RingElem>> given(static_cast<std::size_t>(g.m()));
  for (const auto& [key, value] : assignment) {
    const int e = g.edge_index(key.first, key.second);
    if (e < 0) throw Error(ErrorCode::MissingEdge, edge_text(key.first, key.second) + " is not an edge of the class poset");
    if (!(value.spec() == algebra->ring())) throw Error(ErrorCode::Mismatch, "value in " + value.spec().str());
    require_central(value, key.first, key.second);
    given[static_cast<std::size_t>(e)] = value;
  }
  AddCocycle c = zero_cocycle(algebra);
  if (mode == CocycleMode::Full) {
    for (int e = 0; e < g.m(); ++e) {
      if (!given[static_cast<std::size_t>(e)]) {
        const auto [x, y] = g.edges[static_cast<std::size_t>(e)];
        throw Error(ErrorCode::MissingEdge, "no value for " + edge_text(x, y));
      }
      c.values[static_cast<std::size_t>(e)] = *given[static_cast<std::size_t>(e)];
    }
    for (const auto& t : algebra->triangles()) {
      if (!(c.values[static_cast<std::size_t>(t.xy)] ==
            c.values[static_cast<std::size_t>(t.xz)] + c.values[static_cast<std::size_t>(t.zy)])) {
        throw Error(ErrorCode::CocycleViolation, "additive law fails on (" + std::to_string(t.x) + "," +
                                                     std::to_string(t.z) + "," + std::to_string(t.y) + ")");
      }
    }
    return c;
  }
  for (int e : forest.tree_edges) {
    if (!given[static_cast<std::size_t>(e)]) {
      const auto [x, y] = g.edges[static_cast<std::size_t>(e)];
      throw Error(ErrorCode::MissingEdge, "no value for tree edge " + edge_text(x, y));
    }
    c.values[static_cast<std::size_t>(e)] = *given[static_cast<std::size_t>(e)];
  }
  for (int e : forest.chords) {
    const auto [x, y] = g.edges[static_cast<std::size_t>(e)];
    c.values[static_cast<std::size_t>(e)] = add_path_weight(c, forest.tree_path(x, y));
  }
  return c;
}

AddCocycle potential_cocycle(const AlgebraPtr& algebra, const std::vector<RingElem>& q) {
  const auto& g = algebra->graph();
  if (static_cast<int>(q.size()) != g.vertex_count) throw Error(ErrorCode::ShapeMismatch, "one value per class expected");
  for (std::size_t x = 0; x < q.size(); ++x) require_central(q[x], static_cast<int>(x), static_cast<int>(x));
  AddCocycle c{algebra, {}};
  for (const auto& [x, y] : g.edges) c.values.push_back(q[static_cast<std::size_t>(y)] - q[static_cast<std::size_t>(x)]);
  return c;
}

AddCocycle zero_cocycle(const AlgebraPtr& algebra) {
  return AddCocycle{algebra, std::vector<RingElem>(static_cast<std::size_t>(algebra->graph().m()), RingElem::zero(algebra->ring()))};
}

AddCocycle operator+(const AddCocycle& a, const AddCocycle& b) {
  if (!a.algebra->same_as(*b.algebra)) throw Error(ErrorCode::Mismatch, "cocycles on different algebras");
  AddCocycle c = a;
  for (std::size_t e = 0; e < c.values.size(); ++e) c.values[e] += b.values[e];
  return c;
}

AddCocycle operator-(const AddCocycle& a, const AddCocycle& b) {
  if (!a.algebra->same_as(*b.algebra)) throw Error(ErrorCode::Mismatch, "cocycles on different algebras");
  AddCocycle c = a;
  for (std::size_t e = 0; e < c.values.size(); ++e) c.values[e] -= b.values[e];
  return c;
}

IncidenceFunction apply_deriv(const AddCocycle& c, const IncidenceFunction& f) {
  if (!c.algebra->same_as(*f.algebra())) throw Error(ErrorCode::Mismatch, "cocycle and function on different algebras");
  const auto& q = f.algebra()->quotient();
  IncidenceFunction out(f.algebra());
  for (const auto& [k, v] : f.entries()) {
    const int a = q.class_of[static_cast<std::size_t>(k.first)];
    const int b = q.class_of[static_cast<std::size_t>(k.second)];
    if (a != b) out.set(k.first, k.second, c.at(a, b) * v);
  }
  return out;
}

RingElem add_path_weight(const AddCocycle& c, const std::vector<int>& walk) {
  auto w = RingElem::zero(c.algebra->ring());
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) w += directed_weight(c, walk[i], walk[i + 1]);
  return w;
}

AddDecomposition decompose_add(const AddCocycle& c) {
  const auto& g = c.algebra->graph();
  const auto& forest = c.algebra->forest();
  if (!g.connected()) throw Error(ErrorCode::Disconnected, std::to_string(g.components.size()) + " components");
  const auto& ring = c.algebra->ring();
  AddDecomposition d{std::vector<RingElem>(static_cast<std::size_t>(g.vertex_count), RingElem::zero(ring)),
                     zero_cocycle(c.algebra), true, {}, RingElem::zero(ring)};
  for (int u : forest.bfs_order) {
    const int p = forest.parent[static_cast<std::size_t>(u)];
    if (p >= 0) d.potentials[static_cast<std::size_t>(u)] = d.potentials[static_cast<std::size_t>(p)] + directed_weight(c, p, u);
  }
  d.residue = c - potential_cocycle(c.algebra, d.potentials);
  for (const auto& cycle : forest.fundamental_cycles) {
    auto w = add_path_weight(c, cycle);
    if (!w.is_zero()) {
      d.is_inner = false;
      d.failing_cycle = cycle;
      d.cycle_weight = w;
      break;
    }
  }
  return d;
}

Eigen::MatrixXi triangle_matrix(const AlgebraPtr& algebra) {
  with_center_field(algebra->ring(), [](auto) { return 0; });
  const auto& tris = algebra->triangles();
  Eigen::MatrixXi p = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(tris.size()), algebra->graph().m());
  for (std::size_t r = 0; r < tris.size(); ++r) {
    const auto i = static_cast<Eigen::Index>(r);
    p(i, tris[r].xy) = 1;
    p(i, tris[r].xz) = -1;
    p(i, tris[r].zy) = -1;
  }
  return p;
}

DerivSpaceReport derivation_space(const AlgebraPtr& algebra) {
  const auto& g = algebra->graph();
  if (!g.connected()) throw Error(ErrorCode::Disconnected, std::to_string(g.components.size()) + " components");
  const auto p = triangle_matrix(algebra);
  const auto center = algebra->ring().base();
  DerivSpaceReport r;
  r.m = g.m();
  r.lambda = g.lambda;
  with_center_field(center, [&](auto proto) {
    using S = decltype(proto);
    linalg::Matrix<S> pf(p.rows(), p.cols());
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      for (Eigen::Index j = 0; j < p.cols(); ++j) pf(i, j) = field_scalar(proto, p(i, j));
    }
    const auto ech = linalg::reduced_row_echelon(pf);
    r.rank = static_cast<int>(ech.rank());
    const auto ker = linalg::kernel_from_echelon(ech, pf.cols());
    for (Eigen::Index k = 0; k < ker.cols(); ++k) {
      std::vector<RingElem> v;
      for (Eigen::Index j = 0; j < ker.rows(); ++j) v.push_back(central_from(center, ker(j, k)));
      r.kernel_basis.push_back(std::move(v));
    }
    return 0;
  });
  r.dim_psi = r.m - r.rank;
  r.dim_psi0 = r.m - r.lambda;
  r.dim_out = r.lambda - r.rank;
  r.all_inner = r.rank == r.lambda;
  if (center.modulus() == 2) {
    r.warnings.emplace_back("characteristic 2: cycle-space reformulations of ker P do not apply");
  }
  return r;
}

AddCocycle cocycle_from_center(const AlgebraPtr& algebra, const std::vector<RingElem>& values) {
  if (static_cast<int>(values.size()) != algebra->graph().m()) throw Error(ErrorCode::ShapeMismatch, "one value per edge expected");
  AddCocycle c{algebra, {}};
  for (const auto& v : values) {
    c.values.push_back(v.spec().over_rationals() ? RingElem::from_rational(algebra->ring(), v.as_rational())
                                                 : RingElem::from_int(algebra->ring(), v.as_modint().value()));
  }
  return c;
}

}  // namespace incalg
