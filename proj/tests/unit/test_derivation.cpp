#include <doctest.h>

#include <random>

#include "incalg/derivation.hpp"
#include "incalg/errors.hpp"
#include "incalg_test/corpus.hpp"
#include "incalg_test/random.hpp"

using namespace incalg;
using namespace incalg_test;

namespace {

RingElem q(std::int64_t p, std::int64_t d = 1) { return RingElem(RingSpec::rationals(), Rational(p, d)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Mismatch;
}

}  // namespace

TEST_CASE("additive cocycles") {
  auto a = make_algebra(chain(3));
  auto c = add_cocycle(a, {{{0, 1}, q(1)}, {{1, 2}, q(2)}, {{0, 2}, q(3)}}, CocycleMode::Full);
  CHECK(c.at(0, 2) == q(3));
  CHECK(code_of([&] { add_cocycle(a, {{{0, 1}, q(1)}, {{1, 2}, q(2)}, {{0, 2}, q(4)}}, CocycleMode::Full); }) ==
        ErrorCode::CocycleViolation);
  CHECK(code_of([&] { add_cocycle(a, {{{0, 1}, q(1)}}, CocycleMode::Full); }) == ErrorCode::MissingEdge);
  auto s = make_algebra(square());
  auto t = add_cocycle(s, {{{0, 2}, q(0)}, {{0, 3}, q(0)}, {{1, 2}, q(0)}}, CocycleMode::TreeOnly);
  CHECK(t == zero_cocycle(s));
  auto m2 = make_algebra(chain(2), RingSpec::parse("Mat:2:Q"));
  RingElem nonscalar(m2->ring(), QMatrix{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
  CHECK(code_of([&] { add_cocycle(m2, {{{0, 1}, nonscalar}}, CocycleMode::Full); }) == ErrorCode::NotCentral);
}

TEST_CASE("potential cocycles") {
  auto a = make_algebra(chain(3));
  auto c = potential_cocycle(a, {q(0), q(1), q(3)});
  CHECK(c.values == std::vector<RingElem>{q(1), q(3), q(2)});
  CHECK(potential_cocycle(a, {q(4), q(4), q(4)}) == zero_cocycle(a));
  auto s = make_algebra(square());
  auto cs = potential_cocycle(s, {q(0), q(0), q(0), q(1)});
  CHECK(cs.values == std::vector<RingElem>{q(0), q(1), q(0), q(1)});
}

TEST_CASE("applying additive cocycles") {
  std::mt19937_64 rng(31);
  auto a = make_algebra(chain(3));
  auto f = random_function(rng, a);
  CHECK(apply_deriv(zero_cocycle(a), f).is_zero());
  auto c = add_cocycle(a, {{{0, 1}, q(1)}, {{1, 2}, q(2)}, {{0, 2}, q(3)}}, CocycleMode::Full);
  CHECK(apply_deriv(c, delta(a)).is_zero());
  for (int t = 0; t < 50; ++t) {
    auto g = random_function(rng, a);
    auto h = random_function(rng, a);
    REQUIRE(apply_deriv(c, g * h) == apply_deriv(c, g) * h + g * apply_deriv(c, h));
  }
}

TEST_CASE("additive decomposition") {
  auto a = make_algebra(chain(3));
  auto d = decompose_add(add_cocycle(a, {{{0, 1}, q(1)}, {{1, 2}, q(2)}, {{0, 2}, q(3)}}, CocycleMode::Full));
  CHECK(d.potentials == std::vector<RingElem>{q(0), q(1), q(3)});
  CHECK(d.residue == zero_cocycle(a));
  CHECK(d.is_inner);
  auto s = make_algebra(square());
  auto ds = decompose_add(add_cocycle(s, {{{0, 2}, q(0)}, {{0, 3}, q(1)}, {{1, 2}, q(0)}, {{1, 3}, q(0)}}, CocycleMode::Full));
  CHECK_FALSE(ds.is_inner);
  CHECK((ds.cycle_weight == q(1) || ds.cycle_weight == q(-1)));
  CHECK(code_of([&] { decompose_add(zero_cocycle(make_algebra(antichain(2)))); }) == ErrorCode::Disconnected);
}

TEST_CASE("triangle matrix and derivation space") {
  auto a = make_algebra(chain(3));
  Eigen::MatrixXi expected(1, 3);
  expected << -1, 1, -1;
  CHECK(triangle_matrix(a) == expected);
  auto r = derivation_space(a);
  CHECK(r.m == 3);
  CHECK(r.lambda == 1);
  CHECK(r.rank == 1);
  CHECK(r.dim_psi == 2);
  CHECK(r.dim_psi0 == 2);
  CHECK(r.dim_out == 0);
  CHECK(r.all_inner);

  auto s = make_algebra(square());
  CHECK(triangle_matrix(s).rows() == 0);
  CHECK(triangle_matrix(s).cols() == 4);
  auto rs = derivation_space(s);
  CHECK(rs.rank == 0);
  CHECK(rs.dim_psi == 4);
  CHECK(rs.dim_psi0 == 3);
  CHECK(rs.dim_out == 1);

  auto d = make_algebra(diamond(), RingSpec::integers_mod(5));
  CHECK(triangle_matrix(d).rows() == 2);
  CHECK(triangle_matrix(d).cols() == 5);
  auto rd = derivation_space(d);
  CHECK(rd.m == 5);
  CHECK(rd.lambda == 2);
  CHECK(rd.rank == 2);
  CHECK(rd.dim_out == 0);

  CHECK(code_of([&] { triangle_matrix(make_algebra(chain(3), RingSpec::integers_mod(6))); }) == ErrorCode::CenterNotField);
  CHECK(code_of([&] { derivation_space(make_algebra(antichain(2))); }) == ErrorCode::Disconnected);
  CHECK(derivation_space(make_algebra(chain(3), RingSpec::integers_mod(2))).warnings.size() == 1);
  CHECK(derivation_space(make_algebra(chain(3), RingSpec::parse("Mat:2:Q"))).dim_out == 0);
}

TEST_CASE("additive properties on the corpus") {
  std::mt19937_64 rng(33);
  for (const auto& p : connected_corpus(5)) {
    auto alg = make_algebra(p);
    const auto& g = alg->graph();
    auto r = derivation_space(alg);
    REQUIRE(r.dim_psi0 == g.vertex_count - static_cast<int>(g.components.size()));
    for (const auto& v : r.kernel_basis) {
      auto c = cocycle_from_center(alg, v);
      EdgeAssignment full;
      for (int e = 0; e < g.m(); ++e) full.emplace(g.edges[static_cast<std::size_t>(e)], c.values[static_cast<std::size_t>(e)]);
      REQUIRE(add_cocycle(alg, full, CocycleMode::Full) == c);
    }
    // potentials span an (m − λ)-dimensional subspace of ker P
    if (g.vertex_count > 0) {
      linalg::Matrix<Rational> span(g.vertex_count, g.m());
      for (int x = 0; x < g.vertex_count; ++x) {
        std::vector<RingElem> unit(static_cast<std::size_t>(g.vertex_count), q(0));
        unit[static_cast<std::size_t>(x)] = q(1);
        auto c = potential_cocycle(alg, unit);
        for (int e = 0; e < g.m(); ++e) span(x, e) = c.values[static_cast<std::size_t>(e)].as_rational();
      }
      REQUIRE(linalg::rank(span) == r.dim_psi0);
    }
    for (int t = 0; t < 10; ++t) {
      EdgeAssignment tree;
      for (int e : alg->forest().tree_edges) tree.emplace(g.edges[static_cast<std::size_t>(e)], random_elem(rng, alg->ring()));
      auto c = add_cocycle(alg, tree, CocycleMode::TreeOnly);
      std::vector<RingElem> pot;
      for (int x = 0; x < g.vertex_count; ++x) pot.push_back(random_elem(rng, alg->ring()));
      auto mixed = c + potential_cocycle(alg, pot);
      auto d = decompose_add(mixed);
      REQUIRE(potential_cocycle(alg, d.potentials) + d.residue == mixed);
      for (int e : alg->forest().tree_edges) REQUIRE(d.residue.values[static_cast<std::size_t>(e)].is_zero());
      // tree-trivial potentials are zero
      auto dp = decompose_add(potential_cocycle(alg, pot));
      REQUIRE(dp.residue == zero_cocycle(alg));
    }
  }
}

TEST_CASE("Leibniz identity over several rings") {
  std::mt19937_64 rng(34);
  const std::vector<RingSpec> rings{RingSpec::rationals(), RingSpec::integers_mod(5), RingSpec::integers_mod(12),
                                    RingSpec::parse("Mat:2:Q")};
  for (const auto& ring : rings) {
    for (const auto& p : {chain(4), square(), diamond(), make(4, {{0, 1}, {1, 0}, {1, 2}, {3, 2}})}) {
      auto alg = make_algebra(p, ring);
      const auto& g = alg->graph();
      EdgeAssignment tree;
      for (int e : alg->forest().tree_edges) {
        tree.emplace(g.edges[static_cast<std::size_t>(e)], RingElem::from_int(ring, static_cast<std::int64_t>(rng() % 7) - 3));
      }
      auto c = add_cocycle(alg, tree, CocycleMode::TreeOnly);
      for (int t = 0; t < 50; ++t) {
        auto f = random_function(rng, alg);
        auto h = random_function(rng, alg);
        REQUIRE(apply_deriv(c, f * h) == apply_deriv(c, f) * h + f * apply_deriv(c, h));
      }
    }
  }
}
