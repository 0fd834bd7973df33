#include <doctest.h>

#include <random>

#include "incalg/algebra.hpp"
#include "incalg/errors.hpp"
#include "incalg_test/corpus.hpp"
#include "incalg_test/random.hpp"

using namespace incalg;
using namespace incalg_test;

namespace {

RingElem q(std::int64_t p, std::int64_t d = 1) { return RingElem(RingSpec::rationals(), Rational(p, d)); }

}  // namespace

TEST_CASE("basis functions") {
  auto a = make_algebra(chain(3));
  auto d = delta(a);
  CHECK(d.entries().size() == 3);
  CHECK(d(0, 0) == q(1));
  auto pre = make_algebra(make(3, {{0, 1}, {1, 0}, {0, 2}}));
  auto e = e_class(pre, 0);
  CHECK(e(0, 0) == q(1));
  CHECK(e(1, 1) == q(1));
  CHECK(e.entries().size() == 2);
  CHECK_THROWS_AS(e_unit(pre, 0, 2), Error);
  CHECK(e_unit(a, 0, 1) * e_unit(a, 1, 2) == e_unit(a, 0, 2));
}

TEST_CASE("convolution and hadamard") {
  auto a = make_algebra(chain(3));
  auto z = zeta(a);
  CHECK((z * z)(0, 2) == q(3));
  CHECK((e_unit(a, 0, 1) * e_unit(a, 0, 1)).is_zero());
  std::mt19937_64 rng(1);
  auto f = random_function(rng, a);
  CHECK(delta(a) * f == f);
  CHECK(hadamard(z, f) == f);
  CHECK(hadamard(delta(a), f) == split(f).L);
  auto g = random_function(rng, a);
  CHECK(hadamard(f, g)(0, 2) == f(0, 2) * g(0, 2));
  auto other = make_algebra(chain(3), RingSpec::integers_mod(5));
  CHECK_THROWS_AS(convolve(z, zeta(other)), Error);
}

TEST_CASE("splitting") {
  auto a = make_algebra(chain(3));
  auto s = split(zeta(a));
  CHECK(s.L == delta(a));
  CHECK(s.M == zeta(a) - delta(a));
  auto sd = split(delta(a));
  CHECK(sd.M.is_zero());
  auto pre = make_algebra(make(3, {{0, 1}, {1, 0}, {0, 2}}));
  IncidenceFunction f(pre);
  f.set(0, 1, q(5));
  CHECK(split(f).L == f);
}

TEST_CASE("filtration levels") {
  auto a = make_algebra(chain(3));
  CHECK(filtration_level(e_unit(a, 0, 1)) == 1);
  CHECK(filtration_level(e_unit(a, 0, 2)) == 2);
  CHECK(filtration_level(IncidenceFunction(a)) == kInfiniteLevel);
  CHECK_THROWS_AS(filtration_level(delta(a)), Error);
}

TEST_CASE("inversion and Mobius") {
  auto a = make_algebra(chain(3));
  auto mu = invert(zeta(a));
  CHECK(mu(0, 0) == q(1));
  CHECK(mu(0, 1) == q(-1));
  CHECK(mu(1, 2) == q(-1));
  CHECK(mu(0, 2) == q(0));
  CHECK(invert(delta(a)) == delta(a));
  auto f = zeta(a);
  f.set(0, 0, q(0));
  CHECK_THROWS_AS(invert(f), Error);

  auto md = mobius(make_algebra(diamond()));
  CHECK(md(0, 3) == q(1));
  for (auto [s, t] : std::vector<IndexPair>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}) CHECK(md(s, t) == q(-1));
  auto anti = make_algebra(antichain(3));
  CHECK(mobius(anti) == delta(anti));
}

TEST_CASE("inverses over several rings and preorders") {
  std::mt19937_64 rng(2);
  const std::vector<RingSpec> rings{RingSpec::rationals(), RingSpec::integers_mod(7), RingSpec::integers_mod(12),
                                    RingSpec::parse("Mat:2:Q")};
  for (int t = 0; t < 80; ++t) {
    const auto& ring = rings[static_cast<std::size_t>(t) % rings.size()];
    auto alg = make_algebra(random_preorder(rng, 1 + static_cast<int>(rng() % 6), 0.3), ring);
    auto f = random_invertible(rng, alg);
    auto g = invert(f);
    REQUIRE(f * g == delta(alg));
    REQUIRE(g * f == delta(alg));
  }
}

TEST_CASE("radical membership of functions") {
  auto a = make_algebra(chain(3));
  CHECK(in_radical_fn(split(zeta(a)).M));
  CHECK_FALSE(in_radical_fn(delta(a)));
  auto z12 = make_algebra(chain(3), RingSpec::integers_mod(12));
  CHECK(in_radical_fn(scale(RingElem::from_int(z12->ring(), 6), delta(z12))));
}

TEST_CASE("structural matrices") {
  auto a = make_algebra(chain(3));
  auto s = to_structural(zeta(a));
  CHECK(s.tau == Permutation{0, 1, 2});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(s.matrix(i, j) == q(i <= j ? 1 : 0));

  auto pre = make_algebra(make(3, {{0, 1}, {1, 0}, {0, 2}}));
  auto sp = to_structural(zeta(pre));
  BoolMatrix expected(3, 3);
  expected << true, true, true, true, true, true, false, false, true;
  CHECK(sp.pattern == expected);
  CHECK(sp.tau == Permutation{0, 1, 2});
  CHECK(sp.blocks == std::vector<int>{2, 1});

  auto rev = make_algebra(make(3, {{2, 1}, {1, 0}}));
  auto sr = to_structural(zeta(rev));
  CHECK(sr.tau == Permutation{2, 1, 0});
  CHECK(is_block_upper_triangular(permute_pattern(sr.pattern, sr.tau), sr.blocks));
  CHECK_FALSE(is_block_upper_triangular(sr.pattern, sr.blocks));
}

TEST_CASE("algebra laws on the corpus") {
  std::mt19937_64 rng(4);
  for (const auto& p : connected_corpus(5)) {
    auto alg = make_algebra(p);
    for (int t = 0; t < 500; ++t) {
      auto f = random_function(rng, alg);
      auto g = random_function(rng, alg);
      auto h = random_function(rng, alg);
      REQUIRE((f * g) * h == f * (g * h));
      REQUIRE(f * (g + h) == f * g + f * h);
      REQUIRE((f + g) * h == f * h + g * h);
    }
  }
}

TEST_CASE("filtration is multiplicative and splitting respects L and M") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 150; ++t) {
    auto alg = make_algebra(random_preorder(rng, 2 + static_cast<int>(rng() % 6), 0.25));
    const int k = 1 + static_cast<int>(rng() % 2);
    const int l = 1 + static_cast<int>(rng() % 2);
    auto a = random_in_level(rng, alg, k);
    auto b = random_in_level(rng, alg, l);
    auto ab = a * b;
    if (!ab.is_zero()) REQUIRE(filtration_level(ab) >= k + l);

    auto f = split(random_function(rng, alg));
    auto g = split(random_function(rng, alg));
    REQUIRE(split(f.L * g.L).M.is_zero());
    REQUIRE(split(f.L * g.M).L.is_zero());
    REQUIRE(split(f.M * g.L).L.is_zero());
  }
}

TEST_CASE("structural embedding is a homomorphism") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    auto alg = make_algebra(random_preorder(rng, 1 + static_cast<int>(rng() % 7), 0.25));
    auto f = random_function(rng, alg);
    auto g = random_function(rng, alg);
    auto sf = to_structural(f);
    REQUIRE(to_structural(f * g).matrix == sf.matrix * to_structural(g).matrix);
    REQUIRE(is_block_upper_triangular(permute_pattern(sf.pattern, sf.tau), sf.blocks));
  }
}
