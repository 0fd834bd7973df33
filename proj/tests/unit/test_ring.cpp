#include <doctest.h>

#include <random>

#include "incalg/ring.hpp"

using namespace incalg;

namespace {

RingElem q(std::int64_t p, std::int64_t d = 1) { return RingElem(RingSpec::rationals(), Rational(p, d)); }
RingElem z(std::int64_t v, std::int64_t n) { return RingElem(RingSpec::integers_mod(n), ModInt(v, n)); }

RingElem qmat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const int k = static_cast<int>(rows.size());
  QMatrix m(k, k);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (auto v : r) m(i, j++) = Rational(v);
    ++i;
  }
  return RingElem(RingSpec::matrices(k, RingSpec::rationals()), m);
}

}  // namespace

TEST_CASE("ring spec strings round-trip") {
  for (const char* s : {"Q", "Zmod:7", "Mat:2:Q", "Mat:3:Zmod:8"}) {
    CHECK(RingSpec::parse(s).str() == s);
  }
  CHECK_THROWS_AS(RingSpec::parse("Zmod:1"), ParseError);
  CHECK_THROWS_AS(RingSpec::parse("Mat:2:Mat:2:Q"), ParseError);
  CHECK_THROWS_AS(RingSpec::parse("R"), ParseError);
}

TEST_CASE("unit inversion") {
  CHECK(invert_unit(q(3, 2)) == q(2, 3));
  CHECK(invert_unit(z(3, 10)) == z(7, 10));
  CHECK(invert_unit(qmat({{1, 1}, {0, 1}})) == qmat({{1, -1}, {0, 1}}));
  CHECK_THROWS_AS(invert_unit(q(0)), Error);
  CHECK_THROWS_AS(invert_unit(z(4, 10)), Error);
  CHECK_THROWS_AS(invert_unit(qmat({{1, 2}, {2, 4}})), Error);

  const auto zmat = RingSpec::parse("Mat:2:Zmod:8");
  ZMatrix a(2, 2);
  a << ModInt(3, 8), ModInt(2, 8), ModInt(0, 8), ModInt(1, 8);
  const RingElem u(zmat, a);
  CHECK((u * invert_unit(u)).is_one());
  ZMatrix b(2, 2);
  b << ModInt(2, 8), ModInt(0, 8), ModInt(0, 8), ModInt(1, 8);
  CHECK_FALSE(is_unit(RingElem(zmat, b)));
}

TEST_CASE("centrality") {
  CHECK(is_central(z(5, 6)));
  CHECK(is_central(qmat({{2, 0}, {0, 2}})));
  CHECK_FALSE(is_central(qmat({{1, 1}, {0, 1}})));
}

TEST_CASE("radical membership") {
  CHECK(in_radical(q(0)));
  CHECK_FALSE(in_radical(q(1, 2)));
  CHECK(in_radical(z(6, 12)));
  CHECK_FALSE(in_radical(z(2, 12)));
  const auto zmat = RingSpec::parse("Mat:2:Zmod:8");
  ZMatrix a(2, 2);
  a << ModInt(4, 8), ModInt(0, 8), ModInt(0, 8), ModInt(0, 8);
  a(1, 1) = ModInt(8, 8);
  CHECK(in_radical(RingElem(zmat, a)));
}

TEST_CASE("double inversion is the identity on random units") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 30);
  const std::vector<RingSpec> specs{RingSpec::rationals(), RingSpec::integers_mod(7), RingSpec::integers_mod(12),
                                    RingSpec::parse("Mat:2:Q"), RingSpec::parse("Mat:2:Zmod:9")};
  for (const auto& spec : specs) {
    int done = 0;
    while (done < 1000) {
      RingElem a;
      if (spec.is_matrix()) {
        std::vector<RingElem> entries;
        for (int i = 0; i < 4; ++i) entries.push_back(RingElem::from_int(spec.base(), num(rng)));
        a = pack_block(spec.base(), 2, entries);
      } else if (spec.over_rationals()) {
        a = RingElem(spec, Rational(num(rng), den(rng)));
      } else {
        a = RingElem::from_int(spec, num(rng));
      }
      if (!is_unit(a)) continue;
      const auto b = invert_unit(a);
      REQUIRE((a * b).is_one());
      REQUIRE((b * a).is_one());
      REQUIRE(invert_unit(b) == a);
      ++done;
    }
  }
}

TEST_CASE("radical is an ideal in Z/n for n <= 16") {
  for (std::int64_t n = 2; n <= 16; ++n) {
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        if (in_radical(z(a, n)) && in_radical(z(b, n))) REQUIRE(in_radical(z(a, n) + z(b, n)));
        if (in_radical(z(a, n))) REQUIRE(in_radical(z(a, n) * z(b, n)));
      }
    }
  }
}

TEST_CASE("central elements commute and multiply to central elements") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> num(-9, 9);
  const auto spec = RingSpec::parse("Mat:3:Q");
  for (int t = 0; t < 100; ++t) {
    const auto a = RingElem::from_int(spec, num(rng));
    const auto b = RingElem::from_int(spec, num(rng));
    REQUIRE(is_central(a * b));
    REQUIRE(a * b == b * a);
  }
}
