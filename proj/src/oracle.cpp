#include "incalg/oracle.hpp"

#include <string>

#include "incalg/errors.hpp"
#include "incalg/field.hpp"

namespace incalg {

namespace {

void require_poset(const Algebra& a) {
  if (!a.quotient().is_poset()) throw Error(ErrorCode::NotAPoset, "classes of size > 1");
}

/// Oracle basis order: idempotents e_x first, then e_xy in edge order.
std::vector<IndexPair> oracle_basis(const Algebra& a) {
  std::vector<IndexPair> basis;
  for (int x = 0; x < a.size(); ++x) basis.emplace_back(x, x);
  for (const auto& e : a.graph().edges) basis.push_back(e);
  return basis;
}

struct Coordinates {
  std::vector<IndexPair> basis;
  std::vector<int> index;  // n*n lookup into basis, -1 when incomparable
  int n = 0;

  explicit Coordinates(const Algebra& a) : basis(oracle_basis(a)), index(static_cast<std::size_t>(a.size() * a.size()), -1), n(a.size()) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      index[static_cast<std::size_t>(basis[k].first * n + basis[k].second)] = static_cast<int>(k);
    }
  }
  int operator()(int s, int t) const { return index[static_cast<std::size_t>(s * n + t)]; }
  int dim() const { return static_cast<int>(basis.size()); }
};

template <class S>
BruteReport solve(const AlgebraPtr& algebra, const S& proto, bool with_basis) {
  const Coordinates co(*algebra);
  const int dim = co.dim();
  const auto one = field_scalar(proto, 1);
  const auto unknown = [dim](int b, int coord) { return static_cast<Eigen::Index>(b * dim + coord); };

  linalg::IncrementalEchelon<S> leibniz(static_cast<Eigen::Index>(dim * dim));
  for (int i = 0; i < dim; ++i) {
    const auto [a, b] = co.basis[static_cast<std::size_t>(i)];
    for (int j = 0; j < dim; ++j) {
      const auto [c, d] = co.basis[static_cast<std::size_t>(j)];
      const int prod = b == c ? co(a, d) : -1;
      for (int k = 0; k < dim; ++k) {
        const auto [x, y] = co.basis[static_cast<std::size_t>(k)];
        linalg::Vector<S> row = linalg::Vector<S>::Constant(dim * dim, field_scalar(proto, 0));
        bool nonzero = false;
        if (prod >= 0) {
          row(unknown(prod, k)) += one;
          nonzero = true;
        }
        // (D(e_ab) e_cd)(x, y) = D(e_ab)(x, c) when y = d
        if (y == d && co(x, c) >= 0) {
          row(unknown(i, co(x, c))) -= one;
          nonzero = true;
        }
        // (e_ab D(e_cd))(x, y) = D(e_cd)(b, y) when x = a
        if (x == a && co(b, y) >= 0) {
          row(unknown(j, co(b, y))) -= one;
          nonzero = true;
        }
        if (nonzero) leibniz.add(std::move(row));
      }
    }
  }

  linalg::IncrementalEchelon<S> commutator(dim);
  for (int i = 0; i < dim; ++i) {
    const auto [a, b] = co.basis[static_cast<std::size_t>(i)];
    for (int k = 0; k < dim; ++k) {
      const auto [x, y] = co.basis[static_cast<std::size_t>(k)];
      // (g e_ab − e_ab g)(x, y) = [y = b] g(x, a) − [x = a] g(b, y)
      linalg::Vector<S> row = linalg::Vector<S>::Constant(dim, field_scalar(proto, 0));
      if (y == b && co(x, a) >= 0) row(co(x, a)) += one;
      if (x == a && co(b, y) >= 0) row(co(b, y)) -= one;
      commutator.add(std::move(row));
    }
  }

  BruteReport r;
  r.dim_k = dim;
  r.dim_der = dim * dim - static_cast<int>(leibniz.rank());
  r.dim_center = dim - static_cast<int>(commutator.rank());
  r.dim_inn = dim - r.dim_center;
  r.dim_out = r.dim_der - r.dim_inn;
  if (with_basis) {
    const auto ker = leibniz.kernel();
    const auto& ring = algebra->ring();
    for (Eigen::Index col = 0; col < ker.cols(); ++col) {
      DerivTable t{algebra, algebra, std::vector<IncidenceFunction>(algebra->pairs().size(), IncidenceFunction(algebra))};
      for (int b = 0; b < dim; ++b) {
        auto& img = t.images[static_cast<std::size_t>(algebra->pair_index(co.basis[static_cast<std::size_t>(b)].first,
                                                                          co.basis[static_cast<std::size_t>(b)].second))];
        for (int k = 0; k < dim; ++k) {
          const auto& v = ker(unknown(b, k), col);
          if (!is_zero(v)) img.set(co.basis[static_cast<std::size_t>(k)].first, co.basis[static_cast<std::size_t>(k)].second, central_from(ring, v));
        }
      }
      r.basis.push_back(std::move(t));
    }
  }
  return r;
}

template <class S>
std::vector<IncidenceFunction> solve_center(const AlgebraPtr& algebra, const S& proto) {
  const Coordinates co(*algebra);
  const int dim = co.dim();
  const auto one = field_scalar(proto, 1);
  linalg::IncrementalEchelon<S> commutator(dim);
  for (int i = 0; i < dim; ++i) {
    const auto [a, b] = co.basis[static_cast<std::size_t>(i)];
    for (int k = 0; k < dim; ++k) {
      const auto [x, y] = co.basis[static_cast<std::size_t>(k)];
      linalg::Vector<S> row = linalg::Vector<S>::Constant(dim, field_scalar(proto, 0));
      if (y == b && co(x, a) >= 0) row(co(x, a)) += one;
      if (x == a && co(b, y) >= 0) row(co(b, y)) -= one;
      commutator.add(std::move(row));
    }
  }
  const auto ker = commutator.kernel();
  std::vector<IncidenceFunction> out;
  for (Eigen::Index col = 0; col < ker.cols(); ++col) {
    IncidenceFunction g(algebra);
    for (int k = 0; k < dim; ++k) {
      if (!is_zero(ker(k, col))) {
        g.set(co.basis[static_cast<std::size_t>(k)].first, co.basis[static_cast<std::size_t>(k)].second,
              central_from(algebra->ring(), ker(k, col)));
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

void require_field(const RingSpec& ring) {
  if (ring.is_matrix() || (!ring.over_rationals() && !is_prime(ring.modulus()))) {
    throw Error(ErrorCode::NotAField, ring.str() + " is not Q or a prime field");
  }
}

}  // namespace

BruteReport brute_derivations(const AlgebraPtr& algebra, bool with_basis, int max_elements) {
  if (algebra->size() > max_elements) {
    throw Error(ErrorCode::TooLarge, std::to_string(algebra->size()) + " elements exceeds " + std::to_string(max_elements));
  }
  require_field(algebra->ring());
  require_poset(*algebra);
  return with_center_field(algebra->ring(), [&](auto proto) { return solve(algebra, proto, with_basis); });
}

std::vector<IncidenceFunction> center_basis(const AlgebraPtr& algebra) {
  require_field(algebra->ring());
  require_poset(*algebra);
  return with_center_field(algebra->ring(), [&](auto proto) { return solve_center(algebra, proto); });
}

DerivTable ad_table(const IncidenceFunction& g) {
  return tabulate(g.algebra(), g.algebra(), [&](const IncidenceFunction& a) { return a * g - g * a; });
}

DerivTable deriv_table(const AddCocycle& c) {
  return tabulate(c.algebra, c.algebra, [&](const IncidenceFunction& a) { return apply_deriv(c, a); });
}

DerivTable operator+(const DerivTable& a, const DerivTable& b) {
  if (!a.source->same_as(*b.source) || !a.target->same_as(*b.target)) throw Error(ErrorCode::Mismatch, "tables differ in shape");
  DerivTable t = a;
  for (std::size_t k = 0; k < t.images.size(); ++k) t.images[k] += b.images[k];
  return t;
}

DerivTable operator-(const DerivTable& a, const DerivTable& b) {
  if (!a.source->same_as(*b.source) || !a.target->same_as(*b.target)) throw Error(ErrorCode::Mismatch, "tables differ in shape");
  DerivTable t = a;
  for (std::size_t k = 0; k < t.images.size(); ++k) t.images[k] -= b.images[k];
  return t;
}

bool satisfies_leibniz(const DerivTable& d) {
  const auto& pairs = d.source->pairs();
  for (const auto& [a, b] : pairs) {
    for (const auto& [c, e] : pairs) {
      const auto ea = matrix_unit(d.source, a, b);
      const auto ec = matrix_unit(d.source, c, e);
      const auto lhs = b == c ? d.image(a, e) : IncidenceFunction(d.target);
      if (!(lhs == d.image(a, b) * ec + ea * d.image(c, e))) return false;
    }
  }
  return true;
}

TriangularParts triangularize_derivation(const DerivTable& d) {
  require_poset(*d.source);
  TriangularParts parts;
  for (int x = 0; x < d.source->size(); ++x) {
    auto s = split(d.image(x, x));
    if (!s.L.is_zero()) throw Error(ErrorCode::GammaNonzero, "D(e_" + std::to_string(x) + ") has a diagonal part");
    parts.alpha.push_back(std::move(s.L));
    parts.delta.push_back(std::move(s.M));
  }
  for (const auto& [x, y] : d.source->graph().edges) {
    const auto& img = d.image(x, y);
    if (!split(img).L.is_zero()) {
      throw Error(ErrorCode::GammaNonzero, "D(e_" + std::to_string(x) + "_" + std::to_string(y) + ") leaves M");
    }
    parts.beta.push_back(img);
  }
  return parts;
}

DerivDiagonalization diagonalize_derivation(const DerivTable& d) {
  require_poset(*d.source);
  IncidenceFunction g(d.source);
  for (const auto& [x, y] : d.source->graph().edges) {
    const auto v = d.image(y, y)(x, y);
    if (!v.is_zero()) g.set(x, y, v);
  }
  auto diagonal = d + ad_table(g);
  return DerivDiagonalization{std::move(g), std::move(diagonal)};
}

AddCocycle cocycle_of_diagonal(const DerivTable& d) {
  require_poset(*d.source);
  AddCocycle c = zero_cocycle(d.source);
  const auto& edges = d.source->graph().edges;
  for (std::size_t e = 0; e < edges.size(); ++e) c.values[e] = d.image(edges[e].first, edges[e].second)(edges[e].first, edges[e].second);
  return c;
}

}  // namespace incalg
