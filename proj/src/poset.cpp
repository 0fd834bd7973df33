#include "incalg/poset.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "incalg/errors.hpp"

namespace incalg {

std::vector<IndexPair> Preorder::pairs() const {
  std::vector<IndexPair> out;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (leq_(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool Preorder::is_partial_order() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (leq_(i, j) && leq_(j, i)) return false;
    }
  }
  return true;
}

Preorder build_preorder(int n, std::span<const IndexPair> pairs) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative element count");
  Preorder p;
  p.leq_ = BoolMatrix::Identity(n, n);
  for (const auto& [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside [0," + std::to_string(n) + ")");
    }
    p.leq_(i, j) = true;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!p.leq_(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (p.leq_(k, j)) p.leq_(i, j) = true;
      }
    }
  }
  return p;
}

bool QuotientPoset::is_poset() const {
  return std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() == 1; });
}

QuotientPoset quotient(const Preorder& p) {
  QuotientPoset q;
  const int n = p.size();
  q.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (q.class_of[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<int> members;
    for (int j = i; j < n; ++j) {
      if (p.equivalent(i, j)) {
        members.push_back(j);
        q.class_of[static_cast<std::size_t>(j)] = q.size();
      }
    }
    q.classes.push_back(std::move(members));
  }
  q.lt = BoolMatrix::Zero(q.size(), q.size());
  for (int a = 0; a < q.size(); ++a) {
    for (int b = 0; b < q.size(); ++b) {
      q.lt(a, b) = a != b && p.leq(q.repr(a), q.repr(b));
    }
  }
  return q;
}

int CompGraph::edge_index(int x, int y) const {
  if (x < 0 || y < 0 || x >= vertex_count || y >= vertex_count) return -1;
  return index_[static_cast<std::size_t>(x * vertex_count + y)];
}

CompGraph comparability(const QuotientPoset& q) {
  CompGraph g;
  g.vertex_count = q.size();
  g.index_.assign(static_cast<std::size_t>(g.vertex_count * g.vertex_count), -1);
  g.neighbors.resize(static_cast<std::size_t>(g.vertex_count));
  for (int x = 0; x < g.vertex_count; ++x) {
    for (int y = 0; y < g.vertex_count; ++y) {
      if (q.lt(x, y)) {
        g.index_[static_cast<std::size_t>(x * g.vertex_count + y)] = g.m();
        g.edges.emplace_back(x, y);
      }
      if (q.lt(x, y) || q.lt(y, x)) g.neighbors[static_cast<std::size_t>(x)].push_back(y);
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count), false);
  for (int s = 0; s < g.vertex_count; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (int v : g.neighbors[static_cast<std::size_t>(comp[k])]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    g.components.push_back(std::move(comp));
  }
  g.lambda = g.m() - g.vertex_count + static_cast<int>(g.components.size());
  return g;
}

bool SpanningForest::is_tree_edge(int edge) const { return tree_mask_[static_cast<std::size_t>(edge)]; }

std::vector<int> SpanningForest::tree_path(int from, int to) const {
  std::vector<int> up{from};
  std::vector<int> down{to};
  int a = from;
  int b = to;
  while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
    a = parent[static_cast<std::size_t>(a)];
    up.push_back(a);
  }
  while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
    b = parent[static_cast<std::size_t>(b)];
    down.push_back(b);
  }
  while (a != b) {
    if (a < 0 || b < 0) throw Error(ErrorCode::Disconnected, "tree path between different components");
    a = parent[static_cast<std::size_t>(a)];
    b = parent[static_cast<std::size_t>(b)];
    up.push_back(a);
    down.push_back(b);
  }
  down.pop_back();  // the meeting vertex is already the last entry of `up`
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

SpanningForest spanning_forest(const CompGraph& g) {
  SpanningForest f;
  const auto n = static_cast<std::size_t>(g.vertex_count);
  f.parent.assign(n, -1);
  f.depth.assign(n, 0);
  f.tree_mask_.assign(static_cast<std::size_t>(g.m()), false);
  std::vector<bool> seen(n, false);
  for (int root = 0; root < g.vertex_count; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    f.roots.push_back(root);
    seen[static_cast<std::size_t>(root)] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      f.bfs_order.push_back(u);
      for (int v : g.neighbors[static_cast<std::size_t>(u)]) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = true;
        f.parent[static_cast<std::size_t>(v)] = u;
        f.depth[static_cast<std::size_t>(v)] = f.depth[static_cast<std::size_t>(u)] + 1;
        const int e = g.edge_index(u, v) >= 0 ? g.edge_index(u, v) : g.edge_index(v, u);
        f.tree_mask_[static_cast<std::size_t>(e)] = true;
        queue.push_back(v);
      }
    }
  }
  for (int e = 0; e < g.m(); ++e) {
    if (f.tree_mask_[static_cast<std::size_t>(e)]) {
      f.tree_edges.push_back(e);
    } else {
      f.chords.push_back(e);
      const auto [x, y] = g.edges[static_cast<std::size_t>(e)];
      std::vector<int> cycle{x};
      const auto back = f.tree_path(y, x);
      cycle.insert(cycle.end(), back.begin(), back.end());
      f.fundamental_cycles.push_back(std::move(cycle));
    }
  }
  return f;
}

std::vector<Triangle> triangles(const QuotientPoset& q, const CompGraph& g) {
  std::vector<Triangle> out;
  for (int x = 0; x < q.size(); ++x) {
    for (int z = 0; z < q.size(); ++z) {
      if (!q.lt(x, z)) continue;
      for (int y = 0; y < q.size(); ++y) {
        if (!q.lt(z, y)) continue;
        out.push_back({x, z, y, g.edge_index(x, y), g.edge_index(x, z), g.edge_index(z, y)});
      }
    }
  }
  return out;
}

std::vector<Triangle> triangles(const QuotientPoset& q) { return triangles(q, comparability(q)); }

Eigen::MatrixXi interval_lengths(const QuotientPoset& q) {
  const int n = q.size();
  Eigen::MatrixXi len = Eigen::MatrixXi::Constant(n, n, -1);
  // order classes by number of strict predecessors: a linear extension
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::vector<int> below(static_cast<std::size_t>(n), 0);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) below[static_cast<std::size_t>(y)] += q.lt(x, y) ? 1 : 0;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return below[static_cast<std::size_t>(a)] < below[static_cast<std::size_t>(b)]; });
  for (int x = 0; x < n; ++x) {
    len(x, x) = 0;
    for (int y : order) {
      if (!q.lt(x, y)) continue;
      int best = 1;
      for (int z = 0; z < n; ++z) {
        if (q.lt(x, z) && q.lt(z, y)) best = std::max(best, len(x, z) + 1);
      }
      len(x, y) = best;
    }
  }
  return len;
}

namespace {

struct AutSearch {
  const QuotientPoset& q;
  std::vector<int> up, down, height;
  Permutation sigma;
  std::vector<bool> used;
  std::vector<Permutation> found;

  bool compatible(int v, int image) const {
    if (q.class_size(v) != q.class_size(image)) return false;
    const auto sv = static_cast<std::size_t>(v);
    const auto si = static_cast<std::size_t>(image);
    if (up[sv] != up[si] || down[sv] != down[si] || height[sv] != height[si]) return false;
    for (int u = 0; u < v; ++u) {
      const int su = sigma[static_cast<std::size_t>(u)];
      if (q.lt(u, v) != q.lt(su, image) || q.lt(v, u) != q.lt(image, su)) return false;
    }
    return true;
  }

  void run(int v) {
    if (v == q.size()) {
      found.push_back(sigma);
      return;
    }
    for (int image = 0; image < q.size(); ++image) {
      if (used[static_cast<std::size_t>(image)] || !compatible(v, image)) continue;
      used[static_cast<std::size_t>(image)] = true;
      sigma[static_cast<std::size_t>(v)] = image;
      run(v + 1);
      used[static_cast<std::size_t>(image)] = false;
    }
  }
};

}  // namespace

std::vector<Permutation> poset_automorphisms(const QuotientPoset& q, int bound) {
  if (q.size() > bound) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(q.size()) + " classes exceeds automorphism bound " + std::to_string(bound));
  }
  const auto n = static_cast<std::size_t>(q.size());
  AutSearch search{q, std::vector<int>(n, 0), std::vector<int>(n, 0), std::vector<int>(n, 0),
                   Permutation(n, -1), std::vector<bool>(n, false), {}};
  const auto len = interval_lengths(q);
  for (int x = 0; x < q.size(); ++x) {
    for (int y = 0; y < q.size(); ++y) {
      if (q.lt(x, y)) {
        ++search.up[static_cast<std::size_t>(x)];
        ++search.down[static_cast<std::size_t>(y)];
        search.height[static_cast<std::size_t>(y)] = std::max(search.height[static_cast<std::size_t>(y)], len(x, y));
      }
    }
  }
  search.run(0);
  return search.found;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
  return out;
}

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

}  // namespace incalg
