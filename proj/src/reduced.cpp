#include "incalg/reduced.hpp"

#include <algorithm>
#include <string>

#include "incalg/errors.hpp"

namespace incalg {

namespace {

std::string interval_text(IndexPair p) { return "[" + std::to_string(p.first) + "," + std::to_string(p.second) + "]"; }

/// An interval as a standalone poset with per-vertex invariants.
struct Shape {
  std::vector<std::vector<bool>> lt;
  std::vector<std::array<int, 3>> signature;  // (height, up-degree, down-degree)

  int size() const { return static_cast<int>(lt.size()); }
};

Shape shape_of(const Preorder& p, IndexPair interval) {
  std::vector<int> members;
  for (int z = 0; z < p.size(); ++z) {
    if (p.leq(interval.first, z) && p.leq(z, interval.second)) members.push_back(z);
  }
  const auto k = members.size();
  Shape s{std::vector<std::vector<bool>>(k, std::vector<bool>(k, false)), std::vector<std::array<int, 3>>(k, {0, 0, 0})};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) s.lt[i][j] = i != j && p.leq(members[i], members[j]);
  }
  // members are in index order, which need not be a linear extension; iterate to a fixpoint
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (s.lt[i][j] && s.signature[j][0] < s.signature[i][0] + 1) {
          s.signature[j][0] = s.signature[i][0] + 1;
          changed = true;
        }
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (s.lt[i][j]) {
        ++s.signature[i][1];
        ++s.signature[j][2];
      }
    }
  }
  return s;
}

bool extend(const Shape& a, const Shape& b, std::vector<int>& map, std::vector<bool>& used, int v) {
  if (v == a.size()) return true;
  for (int w = 0; w < b.size(); ++w) {
    if (used[static_cast<std::size_t>(w)] || a.signature[static_cast<std::size_t>(v)] != b.signature[static_cast<std::size_t>(w)]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      const int mu = map[static_cast<std::size_t>(u)];
      ok = a.lt[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == b.lt[static_cast<std::size_t>(mu)][static_cast<std::size_t>(w)] &&
           a.lt[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] == b.lt[static_cast<std::size_t>(w)][static_cast<std::size_t>(mu)];
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = true;
    if (extend(a, b, map, used, v + 1)) return true;
    used[static_cast<std::size_t>(w)] = false;
  }
  return false;
}

bool isomorphic(const Shape& a, const Shape& b) {
  if (a.size() != b.size()) return false;
  auto sa = a.signature;
  auto sb = b.signature;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(static_cast<std::size_t>(a.size()), -1);
  std::vector<bool> used(static_cast<std::size_t>(b.size()), false);
  return extend(a, b, map, used, 0);
}

void require_poset(const Algebra& a) {
  if (!a.quotient().is_poset()) throw Error(ErrorCode::NotAPoset, "reduced algebras need a partial order");
}

std::vector<int> interval_members(const Preorder& p, IndexPair iv) {
  std::vector<int> out;
  for (int z = 0; z < p.size(); ++z) {
    if (p.leq(iv.first, z) && p.leq(z, iv.second)) out.push_back(z);
  }
  return out;
}

/// Kuhn's augmenting-path matching; true when every left vertex is matched.
bool perfect_matching(const std::vector<std::vector<int>>& adj, int right_count) {
  std::vector<int> match(static_cast<std::size_t>(right_count), -1);
  for (std::size_t u = 0; u < adj.size(); ++u) {
    std::vector<bool> seen(static_cast<std::size_t>(right_count), false);
    auto augment = [&](auto&& self, int v) -> bool {
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        if (match[static_cast<std::size_t>(w)] < 0 || self(self, match[static_cast<std::size_t>(w)])) {
          match[static_cast<std::size_t>(w)] = v;
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, static_cast<int>(u))) return false;
  }
  return true;
}

void finish_types(Reduction& r) {
  const auto& pairs = r.algebra->pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto& t = r.types[static_cast<std::size_t>(r.type_of[k])];
    if (t.members++ == 0) {
      t.representative = pairs[k];
      t.point = pairs[k].first == pairs[k].second;
    }
  }
}

}  // namespace

int Reduction::type(int s, int t) const {
  const int k = algebra->pair_index(s, t);
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, interval_text({s, t}) + " is not an interval");
  return type_of[static_cast<std::size_t>(k)];
}

Reduction standard_types(const AlgebraPtr& algebra, int max_interval) {
  require_poset(*algebra);
  Reduction r{algebra, {}, {}};
  std::vector<Shape> reps;
  for (const auto& iv : algebra->pairs()) {
    auto shape = shape_of(algebra->preorder(), iv);
    if (shape.size() > max_interval) {
      throw Error(ErrorCode::IntervalTooLarge, interval_text(iv) + " has " + std::to_string(shape.size()) + " elements");
    }
    int found = -1;
    for (std::size_t t = 0; t < reps.size() && found < 0; ++t) {
      if (isomorphic(reps[t], shape)) found = static_cast<int>(t);
    }
    if (found < 0) {
      found = static_cast<int>(reps.size());
      reps.push_back(std::move(shape));
      r.types.push_back(IntervalType{found, false, iv, 0});
    }
    r.type_of.push_back(found);
  }
  finish_types(r);
  return r;
}

Reduction make_reduction(const AlgebraPtr& algebra, const std::vector<std::vector<IndexPair>>& groups) {
  require_poset(*algebra);
  Reduction r{algebra, {}, std::vector<int>(algebra->pairs().size(), -1)};
  for (const auto& group : groups) {
    if (group.empty()) throw Error(ErrorCode::NotAPartition, "empty group");
    const int id = r.count();
    for (const auto& iv : group) {
      const int k = algebra->pair_index(iv.first, iv.second);
      if (k < 0) throw Error(ErrorCode::NotAPartition, interval_text(iv) + " is not an interval");
      if (r.type_of[static_cast<std::size_t>(k)] >= 0) throw Error(ErrorCode::NotAPartition, interval_text(iv) + " appears twice");
      r.type_of[static_cast<std::size_t>(k)] = id;
    }
    r.types.push_back(IntervalType{id, false, group.front(), 0});
  }
  for (std::size_t k = 0; k < r.type_of.size(); ++k) {
    if (r.type_of[k] < 0) throw Error(ErrorCode::NotAPartition, interval_text(algebra->pairs()[k]) + " is not covered");
  }
  finish_types(r);
  return r;
}

Compatibility check_order_compatible(const Reduction& r) {
  const auto& p = r.algebra->preorder();
  const auto& pairs = r.algebra->pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (r.type_of[i] != r.type_of[j]) continue;
      const auto [x, y] = pairs[i];
      const auto [s, t] = pairs[j];
      const auto left = interval_members(p, pairs[i]);
      const auto right = interval_members(p, pairs[j]);
      bool ok = left.size() == right.size();
      if (ok) {
        std::vector<std::vector<int>> adj(left.size());
        for (std::size_t a = 0; a < left.size(); ++a) {
          for (std::size_t b = 0; b < right.size(); ++b) {
            if (r.type(x, left[a]) == r.type(s, right[b]) && r.type(left[a], y) == r.type(right[b], t)) {
              adj[a].push_back(static_cast<int>(b));
            }
          }
        }
        ok = perfect_matching(adj, static_cast<int>(right.size()));
      }
      if (!ok) return Compatibility{false, pairs[i], pairs[j]};
    }
  }
  return Compatibility{};
}

CoefTable coefficients(const Reduction& r) {
  const auto& p = r.algebra->preorder();
  const auto& pairs = r.algebra->pairs();
  CoefTable table;
  std::vector<std::map<std::array<int, 2>, int>> seen(static_cast<std::size_t>(r.count()));
  std::vector<bool> have(static_cast<std::size_t>(r.count()), false);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [x, y] = pairs[k];
    std::map<std::array<int, 2>, int> counts;
    for (int z : interval_members(p, pairs[k])) ++counts[{r.type(x, z), r.type(z, y)}];
    const auto t = static_cast<std::size_t>(r.type_of[k]);
    if (!have[t]) {
      have[t] = true;
      seen[t] = counts;
      for (const auto& [rs, n] : counts) table[{static_cast<int>(t), rs[0], rs[1]}] = n;
    } else if (seen[t] != counts) {
      throw Error(ErrorCode::RepresentativeDisagreement,
                  interval_text(pairs[k]) + " disagrees with " + interval_text(r.types[t].representative));
    }
  }
  return table;
}

ReducedElem reduced_convolve(const ReducedElem& a, const ReducedElem& b, const CoefTable& table) {
  if (!(a.ring == b.ring) || a.values.size() != b.values.size()) throw Error(ErrorCode::Mismatch, "reduced elements differ in shape");
  ReducedElem h{a.ring, std::vector<RingElem>(a.values.size(), RingElem::zero(a.ring))};
  for (const auto& [key, n] : table) {
    const auto t = static_cast<std::size_t>(key[0]);
    if (t >= h.values.size()) throw Error(ErrorCode::Mismatch, "coefficient table refers to unknown type");
    h.values[t] += RingElem::from_int(a.ring, n) * a.values[static_cast<std::size_t>(key[1])] * b.values[static_cast<std::size_t>(key[2])];
  }
  return h;
}

IncidenceFunction lift(const Reduction& r, const ReducedElem& a) {
  if (static_cast<int>(a.values.size()) != r.count() || !(a.ring == r.algebra->ring())) {
    throw Error(ErrorCode::Mismatch, "reduced element does not match the reduction");
  }
  IncidenceFunction f(r.algebra);
  const auto& pairs = r.algebra->pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) f.set(pairs[k].first, pairs[k].second, a.values[static_cast<std::size_t>(r.type_of[k])]);
  return f;
}

ReducedElem project(const Reduction& r, const IncidenceFunction& f) {
  if (!f.algebra()->same_as(*r.algebra)) throw Error(ErrorCode::Mismatch, "function not on the reduced poset");
  ReducedElem a{r.algebra->ring(), std::vector<RingElem>(static_cast<std::size_t>(r.count()), RingElem::zero(r.algebra->ring()))};
  const auto& pairs = r.algebra->pairs();
  std::vector<bool> have(static_cast<std::size_t>(r.count()), false);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto t = static_cast<std::size_t>(r.type_of[k]);
    const auto v = f(pairs[k].first, pairs[k].second);
    if (!have[t]) {
      have[t] = true;
      a.values[t] = v;
    } else if (!(a.values[t] == v)) {
      throw Error(ErrorCode::NotConstantOnTypes,
                  interval_text(r.types[t].representative) + " and " + interval_text(pairs[k]) + " share a type but differ");
    }
  }
  return a;
}

}  // namespace incalg
