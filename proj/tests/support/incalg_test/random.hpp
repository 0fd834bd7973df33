#pragma once

#include <random>
#include <vector>

#include "incalg/algebra.hpp"

namespace incalg_test {

/// Small random ring element: integers in [-range, range], occasionally a fraction over Q.
inline incalg::RingElem random_elem(std::mt19937_64& rng, const incalg::RingSpec& spec, int range = 4) {
  using incalg::RingElem;
  std::uniform_int_distribution<std::int64_t> num(-range, range);
  std::uniform_int_distribution<std::int64_t> den(1, 3);
  if (spec.is_matrix()) {
    std::vector<RingElem> entries;
    for (int i = 0; i < spec.order() * spec.order(); ++i) entries.push_back(random_elem(rng, spec.base(), range));
    return incalg::pack_block(spec.base(), spec.order(), entries);
  }
  if (spec.over_rationals()) return RingElem(spec, incalg::Rational(num(rng), den(rng)));
  return RingElem::from_int(spec, num(rng));
}

inline incalg::RingElem random_unit(std::mt19937_64& rng, const incalg::RingSpec& spec) {
  for (;;) {
    auto a = random_elem(rng, spec);
    if (incalg::is_unit(a)) return a;
  }
}

inline incalg::IncidenceFunction random_function(std::mt19937_64& rng, const incalg::AlgebraPtr& alg,
                                                 double density = 0.7) {
  std::bernoulli_distribution coin(density);
  incalg::IncidenceFunction f(alg);
  for (const auto& [s, t] : alg->pairs()) {
    if (coin(rng)) f.set(s, t, random_elem(rng, alg->ring()));
  }
  return f;
}

/// Random function whose diagonal blocks are all units.
inline incalg::IncidenceFunction random_invertible(std::mt19937_64& rng, const incalg::AlgebraPtr& alg) {
  for (;;) {
    auto f = random_function(rng, alg);
    if (incalg::is_invertible(f)) return f;
  }
}

/// Random element of W_k: values only on pairs whose class interval has length >= k
/// (class-diagonal pairs count as length 0).
inline incalg::IncidenceFunction random_in_level(std::mt19937_64& rng, const incalg::AlgebraPtr& alg, int k) {
  auto f = random_function(rng, alg);
  incalg::IncidenceFunction out(alg);
  const auto& q = alg->quotient();
  for (const auto& [key, v] : f.entries()) {
    const int a = q.class_of[static_cast<std::size_t>(key.first)];
    const int b = q.class_of[static_cast<std::size_t>(key.second)];
    if (a != b && alg->lengths()(a, b) >= k) out.set(key.first, key.second, v);
  }
  return out;
}

}  // namespace incalg_test
