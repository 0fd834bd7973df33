#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "incalg/poset.hpp"

namespace incalg_test {

using incalg::IndexPair;
using incalg::Preorder;

inline Preorder make(int n, std::vector<IndexPair> pairs) { return incalg::build_preorder(n, pairs); }

inline Preorder chain(int n) {
  std::vector<IndexPair> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return make(n, pairs);
}
inline Preorder square() { return make(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }
inline Preorder diamond() { return make(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }
inline Preorder antichain(int n) { return make(n, {}); }

namespace detail {

inline std::uint32_t encode(const std::vector<std::vector<bool>>& lt, const std::vector<int>& perm) {
  const int n = static_cast<int>(lt.size());
  std::uint32_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      code = (code << 1) | (lt[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                               [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] ? 1u : 0u);
    }
  }
  return code;
}

}  // namespace detail

/// Connected posets on n elements, one per isomorphism class. Each poset is
/// naturally labelled (i < j in the order implies i < j as integers).
inline std::vector<Preorder> connected_posets(int n) {
  std::vector<IndexPair> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::set<std::uint32_t> seen;
  std::vector<Preorder> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::vector<bool>> lt(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<IndexPair> chosen;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1u) {
        lt[static_cast<std::size_t>(slots[k].first)][static_cast<std::size_t>(slots[k].second)] = true;
        chosen.push_back(slots[k]);
      }
    }
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        for (int c = 0; c < n && transitive; ++c)
          if (lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
              lt[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] &&
              !lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)])
            transitive = false;
    if (!transitive) continue;
    auto p = make(n, chosen);
    if (n > 0 && incalg::comparability(incalg::quotient(p)).components.size() != 1) continue;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::uint32_t best = UINT32_MAX;
    do {
      best = std::min(best, detail::encode(lt, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(p);
  }
  return out;
}

/// Connected posets on 0..max_n elements, the empty poset included.
inline std::vector<Preorder> connected_corpus(int max_n = 5) {
  std::vector<Preorder> out;
  for (int n = 0; n <= max_n; ++n) {
    auto part = connected_posets(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Random preorder on n points: random pairs in both directions, closed.
inline Preorder random_preorder(std::mt19937_64& rng, int n, double density = 0.3) {
  std::bernoulli_distribution coin(density);
  std::vector<IndexPair> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && coin(rng)) pairs.emplace_back(i, j);
    }
  }
  return make(n, pairs);
}

/// Random partial order on n points (relations only go upwards before relabelling).
inline Preorder random_poset(std::mt19937_64& rng, int n, double density = 0.4) {
  std::bernoulli_distribution coin(density);
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i;
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<IndexPair> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) pairs.emplace_back(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]);
    }
  }
  return make(n, pairs);
}

}  // namespace incalg_test
