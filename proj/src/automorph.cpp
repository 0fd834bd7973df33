#include "incalg/automorph.hpp"

#include <string>

#include "incalg/errors.hpp"

namespace incalg {

namespace {

std::string edge_text(int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

std::string chain_text(const Triangle& t) {
  return "(" + std::to_string(t.x) + "," + std::to_string(t.z) + "," + std::to_string(t.y) + ")";
}

void require_central_unit(const RingElem& v, int x, int y) {
  if (!is_central(v) || !is_unit(v)) {
    throw Error(ErrorCode::NotCentralUnit, "value " + v.str() + " at " + edge_text(x, y));
  }
}

void require_commutative(const RingSpec& ring) {
  if (!ring.is_commutative()) throw Error(ErrorCode::NotCommutative, "ring " + ring.str() + " is not commutative");
}

RingElem directed_weight(const MultCocycle& c, int a, int b) {
  const auto& g = c.algebra->graph();
  if (const int e = g.edge_index(a, b); e >= 0) return c.values[static_cast<std::size_t>(e)];
  if (const int e = g.edge_index(b, a); e >= 0) return invert_unit(c.values[static_cast<std::size_t>(e)]);
  throw Error(ErrorCode::NotASemipath, "no edge between " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

const RingElem& MultCocycle::at(int x, int y) const {
  const int e = algebra->graph().edge_index(x, y);
  if (e < 0) throw Error(ErrorCode::MissingEdge, edge_text(x, y) + " is not an edge");
  return values[static_cast<std::size_t>(e)];
}

MultCocycle mult_cocycle(const AlgebraPtr& algebra, const EdgeAssignment& assignment, CocycleMode mode) {
  const auto& g = algebra->graph();
  const auto& forest = algebra->forest();
  std::vector<std::optional<RingElem>> given(static_cast<std::size_t>(g.m()));
  for (const auto& [key, value] : assignment) {
    const int e = g.edge_index(key.first, key.second);
    if (e < 0) throw Error(ErrorCode::MissingEdge, edge_text(key.first, key.second) + " is not an edge of the class poset");
    if (!(value.spec() == algebra->ring())) throw Error(ErrorCode::Mismatch, "value in " + value.spec().str());
    require_central_unit(value, key.first, key.second);
    given[static_cast<std::size_t>(e)] = value;
  }
  MultCocycle c{algebra, std::vector<RingElem>(static_cast<std::size_t>(g.m()), RingElem::one(algebra->ring()))};
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
            c.values[static_cast<std::size_t>(t.xz)] * c.values[static_cast<std::size_t>(t.zy)])) {
        throw Error(ErrorCode::CocycleViolation, "multiplicative law fails on " + chain_text(t));
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
    c.values[static_cast<std::size_t>(e)] = path_weight(c, forest.tree_path(x, y));
  }
  return c;
}

MultCocycle fractional_cocycle(const AlgebraPtr& algebra, const std::vector<RingElem>& q) {
  const auto& g = algebra->graph();
  if (static_cast<int>(q.size()) != g.vertex_count) throw Error(ErrorCode::ShapeMismatch, "one unit per class expected");
  std::vector<RingElem> inv;
  for (std::size_t x = 0; x < q.size(); ++x) {
    require_central_unit(q[x], static_cast<int>(x), static_cast<int>(x));
    inv.push_back(invert_unit(q[x]));
  }
  MultCocycle c{algebra, {}};
  for (const auto& [x, y] : g.edges) c.values.push_back(inv[static_cast<std::size_t>(x)] * q[static_cast<std::size_t>(y)]);
  return c;
}

MultCocycle identity_cocycle(const AlgebraPtr& algebra) {
  return MultCocycle{algebra, std::vector<RingElem>(static_cast<std::size_t>(algebra->graph().m()), RingElem::one(algebra->ring()))};
}

MultCocycle operator*(const MultCocycle& a, const MultCocycle& b) {
  if (!a.algebra->same_as(*b.algebra)) throw Error(ErrorCode::Mismatch, "cocycles on different algebras");
  MultCocycle c{a.algebra, a.values};
  for (std::size_t e = 0; e < c.values.size(); ++e) c.values[e] *= b.values[e];
  return c;
}

IncidenceFunction apply_mult(const MultCocycle& c, const IncidenceFunction& f) {
  if (!c.algebra->same_as(*f.algebra())) throw Error(ErrorCode::Mismatch, "cocycle and function on different algebras");
  const auto& q = f.algebra()->quotient();
  IncidenceFunction out(f.algebra());
  for (const auto& [k, v] : f.entries()) {
    const int a = q.class_of[static_cast<std::size_t>(k.first)];
    const int b = q.class_of[static_cast<std::size_t>(k.second)];
    out.set(k.first, k.second, a == b ? v : c.at(a, b) * v);
  }
  return out;
}

RingElem path_weight(const MultCocycle& c, const std::vector<int>& walk) {
  auto w = RingElem::one(c.algebra->ring());
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) w *= directed_weight(c, walk[i], walk[i + 1]);
  return w;
}

MultDecomposition decompose_mult(const MultCocycle& c) {
  const auto& g = c.algebra->graph();
  const auto& forest = c.algebra->forest();
  if (!g.connected()) throw Error(ErrorCode::Disconnected, std::to_string(g.components.size()) + " components");
  const auto& ring = c.algebra->ring();
  MultDecomposition d{std::vector<RingElem>(static_cast<std::size_t>(g.vertex_count), RingElem::one(ring)),
                      identity_cocycle(c.algebra), true, {}, RingElem::one(ring)};
  // v_child = v_parent · w(parent, child), so that c = v_x⁻¹ v_y along the tree.
  for (int u : forest.bfs_order) {
    const int p = forest.parent[static_cast<std::size_t>(u)];
    if (p >= 0) d.vertex_units[static_cast<std::size_t>(u)] = d.vertex_units[static_cast<std::size_t>(p)] * directed_weight(c, p, u);
  }
  for (int e = 0; e < g.m(); ++e) {
    const auto [x, y] = g.edges[static_cast<std::size_t>(e)];
    d.residue.values[static_cast<std::size_t>(e)] = c.values[static_cast<std::size_t>(e)] *
                                                    invert_unit(d.vertex_units[static_cast<std::size_t>(y)]) *
                                                    d.vertex_units[static_cast<std::size_t>(x)];
  }
  for (const auto& cycle : forest.fundamental_cycles) {
    auto w = path_weight(c, cycle);
    if (!w.is_one()) {
      d.is_inner = false;
      d.failing_cycle = cycle;
      d.cycle_weight = w;
      break;
    }
  }
  return d;
}

const IncidenceFunction& AutTable::image(int s, int t) const {
  const int k = source->pair_index(s, t);
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, edge_text(s, t) + " is not a comparable pair");
  return images[static_cast<std::size_t>(k)];
}

IncidenceFunction AutTable::apply(const IncidenceFunction& f) const {
  if (!f.algebra()->same_as(*source)) throw Error(ErrorCode::Mismatch, "function not in the table's source algebra");
  IncidenceFunction out(target);
  for (const auto& [k, v] : f.entries()) out += scale(v, image(k.first, k.second));
  return out;
}

IncidenceFunction matrix_unit(const AlgebraPtr& algebra, int s, int t) {
  IncidenceFunction e(algebra);
  e.set(s, t, RingElem::one(algebra->ring()));
  return e;
}

AutTable compose(const AutTable& outer, const AutTable& inner) {
  if (!inner.target->same_as(*outer.source)) throw Error(ErrorCode::ShapeMismatch, "tables do not compose");
  AutTable t{inner.source, outer.target, {}};
  for (const auto& img : inner.images) t.images.push_back(outer.apply(img));
  return t;
}

AutTable inner_table(const IncidenceFunction& u) {
  const auto ui = invert(u);
  return tabulate(u.algebra(), u.algebra(), [&](const IncidenceFunction& a) { return u * a * ui; });
}

AutTable mult_table(const MultCocycle& c) {
  return tabulate(c.algebra, c.algebra, [&](const IncidenceFunction& a) { return apply_mult(c, a); });
}

AutTable ordinal(const Permutation& tau, const AlgebraPtr& algebra) {
  const auto& q = algebra->quotient();
  if (!q.is_poset()) throw Error(ErrorCode::NotAPoset, "ordinal maps need singleton classes");
  const int n = q.size();
  bool ok = static_cast<int>(tau.size()) == n;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (std::size_t i = 0; ok && i < tau.size(); ++i) {
    ok = tau[i] >= 0 && tau[i] < n && !hit[static_cast<std::size_t>(tau[i])];
    if (ok) hit[static_cast<std::size_t>(tau[i])] = true;
  }
  for (int x = 0; ok && x < n; ++x) {
    for (int y = 0; ok && y < n; ++y) ok = q.lt(x, y) == q.lt(tau[static_cast<std::size_t>(x)], tau[static_cast<std::size_t>(y)]);
  }
  if (!ok) throw Error(ErrorCode::NotAutomorphism, "permutation is not an order automorphism");
  const auto inv = inverse(tau);
  AutTable t{algebra, algebra, {}};
  for (const auto& [s, u] : algebra->pairs()) {
    t.images.push_back(matrix_unit(algebra, inv[static_cast<std::size_t>(s)], inv[static_cast<std::size_t>(u)]));
  }
  return t;
}

bool same_action(const AutTable& a, const AutTable& b) {
  return a.source->same_as(*b.source) && a.target->same_as(*b.target) && a.images == b.images;
}

bool verify_automorphism(const AutTable& phi) {
  const auto& src = *phi.source;
  const auto& dst = *phi.target;
  if (!(src.ring() == dst.ring())) throw Error(ErrorCode::ShapeMismatch, "source and target rings differ");
  require_commutative(src.ring());
  if (phi.images.size() != src.pairs().size()) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(src.pairs().size()) + " images, got " +
                                              std::to_string(phi.images.size()));
  }
  for (const auto& img : phi.images) {
    if (!img.algebra()->same_as(dst)) throw Error(ErrorCode::ShapeMismatch, "image outside the target algebra");
  }
  if (src.pairs().size() != dst.pairs().size()) return false;

  IncidenceFunction unit(phi.target);
  for (int s = 0; s < src.size(); ++s) unit += phi.image(s, s);
  if (!(unit == delta(phi.target))) return false;

  const auto& pairs = src.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const auto prod = phi.images[i] * phi.images[j];
      if (pairs[i].second == pairs[j].first) {
        if (!(prod == phi.image(pairs[i].first, pairs[j].second))) return false;
      } else if (!prod.is_zero()) {
        return false;
      }
    }
  }

  const int dim = static_cast<int>(pairs.size());
  if (dim == 0) return true;
  std::vector<RingElem> coords(static_cast<std::size_t>(dim * dim), RingElem::zero(src.ring()));
  const auto& dpairs = dst.pairs();
  for (int col = 0; col < dim; ++col) {
    for (int row = 0; row < dim; ++row) {
      const auto [s, t] = dpairs[static_cast<std::size_t>(row)];
      coords[static_cast<std::size_t>(row * dim + col)] = phi.images[static_cast<std::size_t>(col)](s, t);
    }
  }
  return is_unit(pack_block(src.ring(), dim, coords));
}

Permutation induced_map(const AutTable& phi) {
  const auto& sq = phi.source->quotient();
  const auto& tq = phi.target->quotient();
  if (sq.size() != tq.size()) throw Error(ErrorCode::NotClassPreserving, "class counts differ");
  Permutation tau(static_cast<std::size_t>(sq.size()), -1);
  std::vector<bool> used(static_cast<std::size_t>(tq.size()), false);
  for (int y = 0; y < sq.size(); ++y) {
    IncidenceFunction img(phi.target);
    for (int s : sq.classes[static_cast<std::size_t>(y)]) img += phi.image(s, s);
    const auto lpart = split(img).L;
    for (int x = 0; x < tq.size(); ++x) {
      if (!used[static_cast<std::size_t>(x)] && lpart == e_class(phi.target, tq.repr(x))) {
        tau[static_cast<std::size_t>(y)] = x;
        used[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
    if (tau[static_cast<std::size_t>(y)] < 0) {
      throw Error(ErrorCode::NotClassPreserving, "diagonal part of the image of e_" + std::to_string(sq.repr(y)) +
                                                     " is not a standard idempotent");
    }
  }
  for (int a = 0; a < sq.size(); ++a) {
    for (int b = 0; b < sq.size(); ++b) {
      if (sq.lt(a, b) != tq.lt(tau[static_cast<std::size_t>(a)], tau[static_cast<std::size_t>(b)])) {
        throw Error(ErrorCode::NotClassPreserving, "induced class map is not an order isomorphism");
      }
    }
  }
  return tau;
}

Diagonalization diagonalize(const AutTable& phi) {
  auto tau = induced_map(phi);
  const auto& sq = phi.source->quotient();
  const auto& tq = phi.target->quotient();
  IncidenceFunction v(phi.target);
  for (int y = 0; y < sq.size(); ++y) {
    IncidenceFunction img(phi.target);
    for (int s : sq.classes[static_cast<std::size_t>(y)]) img += phi.image(s, s);
    v += img * e_class(phi.target, tq.repr(tau[static_cast<std::size_t>(y)]));
  }
  const auto vi = invert(v);
  AutTable gamma{phi.source, phi.target, {}};
  for (const auto& img : phi.images) gamma.images.push_back(vi * img * v);
  return Diagonalization{std::move(v), std::move(gamma), std::move(tau)};
}

AutDecomposition full_decompose(const AutTable& phi) {
  const auto& alg = phi.source;
  if (!alg->same_as(*phi.target)) throw Error(ErrorCode::ShapeMismatch, "full decomposition needs an automorphism");
  if (!alg->quotient().is_poset()) throw Error(ErrorCode::NotAPoset, "full decomposition needs singleton classes");
  require_commutative(alg->ring());
  auto diag = diagonalize(phi);
  const auto gamma_prime = compose(diag.gamma, ordinal(diag.tau, alg));
  EdgeAssignment assignment;
  for (const auto& [x, y] : alg->pairs()) {
    const auto& img = gamma_prime.image(x, y);
    const auto value = img(x, y);
    if (!(img == scale(value, matrix_unit(alg, x, y))) || (x == y && !value.is_one()) || !is_unit(value)) {
      throw Error(ErrorCode::NotMultiplicativeResidue, "diagonalised map is not a Hadamard scaling at " + edge_text(x, y));
    }
    if (x != y) assignment.emplace(IndexPair{x, y}, value);
  }
  auto c = mult_cocycle(alg, assignment, CocycleMode::Full);
  auto md = decompose_mult(c);
  return AutDecomposition{inverse(diag.tau),
                          diag.v - delta(alg),
                          std::move(c),
                          std::move(md.vertex_units),
                          std::move(md.residue),
                          md.is_inner,
                          std::move(md.failing_cycle),
                          std::move(md.cycle_weight)};
}

AutTable recompose(const AutDecomposition& d) {
  const auto& alg = d.inner_delta.algebra();
  const auto c = fractional_cocycle(alg, d.vertex_units) * d.residue;
  return compose(inner_table(delta(alg) + d.inner_delta), compose(mult_table(c), ordinal(d.tau, alg)));
}

}  // namespace incalg
