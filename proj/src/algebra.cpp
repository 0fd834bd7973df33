#include "incalg/algebra.hpp"

#include <algorithm>
#include <string>

#include "incalg/errors.hpp"

namespace incalg {

namespace {

std::string pair_text(int s, int t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }

void require_same(const IncidenceFunction& f, const IncidenceFunction& g) {
  if (f.algebra() != g.algebra() && !f.algebra()->same_as(*g.algebra())) {
    throw Error(ErrorCode::Mismatch, "functions live in different incidence algebras");
  }
}

}  // namespace

AlgebraPtr Algebra::create(Preorder p, RingSpec ring) {
  std::shared_ptr<Algebra> a(new Algebra());
  a->preorder_ = std::move(p);
  a->ring_ = std::move(ring);
  a->quotient_ = incalg::quotient(a->preorder_);
  a->graph_ = comparability(a->quotient_);
  a->forest_ = spanning_forest(a->graph_);
  a->triangles_ = incalg::triangles(a->quotient_, a->graph_);
  a->pairs_ = a->preorder_.pairs();
  const int n = a->size();
  a->pair_lookup_.assign(static_cast<std::size_t>(n * n), -1);
  for (std::size_t k = 0; k < a->pairs_.size(); ++k) {
    const auto [s, t] = a->pairs_[k];
    a->pair_lookup_[static_cast<std::size_t>(s * n + t)] = static_cast<int>(k);
  }
  a->lengths_ = interval_lengths(a->quotient_);
  a->max_length_ = a->lengths_.size() == 0 ? 0 : a->lengths_.maxCoeff();
  return a;
}

int Algebra::pair_index(int s, int t) const {
  if (s < 0 || t < 0 || s >= size() || t >= size()) return -1;
  return pair_lookup_[static_cast<std::size_t>(s * size() + t)];
}

RingElem IncidenceFunction::operator()(int s, int t) const {
  const int n = algebra_->size();
  if (s < 0 || t < 0 || s >= n || t >= n) throw Error(ErrorCode::IndexOutOfRange, pair_text(s, t));
  const auto it = entries_.find({s, t});
  return it == entries_.end() ? RingElem::zero(ring()) : it->second;
}

void IncidenceFunction::set(int s, int t, const RingElem& value) {
  if (algebra_->pair_index(s, t) < 0) {
    throw Error(ErrorCode::IndexOutOfRange, pair_text(s, t) + " is not a comparable pair");
  }
  if (!(value.spec() == ring())) throw Error(ErrorCode::Mismatch, "value in " + value.spec().str());
  if (value.is_zero()) {
    entries_.erase({s, t});
  } else {
    entries_[{s, t}] = value;
  }
}

void IncidenceFunction::add(int s, int t, const RingElem& value) {
  const auto it = entries_.find({s, t});
  set(s, t, it == entries_.end() ? value : it->second + value);
}

IncidenceFunction IncidenceFunction::operator-() const {
  IncidenceFunction out(algebra_);
  for (const auto& [k, v] : entries_) out.entries_.emplace(k, -v);
  return out;
}

IncidenceFunction& IncidenceFunction::operator+=(const IncidenceFunction& o) {
  require_same(*this, o);
  for (const auto& [k, v] : o.entries_) add(k.first, k.second, v);
  return *this;
}

IncidenceFunction& IncidenceFunction::operator-=(const IncidenceFunction& o) {
  require_same(*this, o);
  for (const auto& [k, v] : o.entries_) add(k.first, k.second, -v);
  return *this;
}

bool operator==(const IncidenceFunction& a, const IncidenceFunction& b) {
  return a.algebra()->same_as(*b.algebra()) && a.entries_ == b.entries_;
}

IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g) {
  require_same(f, g);
  const int n = f.algebra()->size();
  std::vector<std::vector<std::pair<int, const RingElem*>>> rows(static_cast<std::size_t>(n));
  for (const auto& [k, v] : g.entries()) rows[static_cast<std::size_t>(k.first)].emplace_back(k.second, &v);
  IncidenceFunction out(f.algebra());
  for (const auto& [k, fv] : f.entries()) {
    for (const auto& [y, gv] : rows[static_cast<std::size_t>(k.second)]) out.add(k.first, y, fv * *gv);
  }
  return out;
}

IncidenceFunction hadamard(const IncidenceFunction& f, const IncidenceFunction& g) {
  require_same(f, g);
  IncidenceFunction out(f.algebra());
  for (const auto& [k, v] : f.entries()) {
    const auto it = g.entries().find(k);
    if (it != g.entries().end()) out.set(k.first, k.second, v * it->second);
  }
  return out;
}

IncidenceFunction scale(const RingElem& a, const IncidenceFunction& f) {
  IncidenceFunction out(f.algebra());
  for (const auto& [k, v] : f.entries()) out.set(k.first, k.second, a * v);
  return out;
}

IncidenceFunction scale(const IncidenceFunction& f, const RingElem& a) {
  IncidenceFunction out(f.algebra());
  for (const auto& [k, v] : f.entries()) out.set(k.first, k.second, v * a);
  return out;
}

IncidenceFunction basis_function(BasisKind kind, const AlgebraPtr& algebra, int x, int y) {
  IncidenceFunction out(algebra);
  const auto one = RingElem::one(algebra->ring());
  const auto& p = algebra->preorder();
  const auto& q = algebra->quotient();
  switch (kind) {
    case BasisKind::Delta:
      for (int s = 0; s < p.size(); ++s) out.set(s, s, one);
      break;
    case BasisKind::Zeta:
      for (const auto& [s, t] : algebra->pairs()) out.set(s, t, one);
      break;
    case BasisKind::EClass:
      if (x < 0 || x >= p.size()) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(x));
      for (int t : q.classes[static_cast<std::size_t>(q.class_of[static_cast<std::size_t>(x)])]) out.set(t, t, one);
      break;
    case BasisKind::EUnit:
      if (x < 0 || y < 0 || x >= p.size() || y >= p.size() || !p.leq(x, y)) {
        throw Error(ErrorCode::IndexOutOfRange, pair_text(x, y) + " is not a comparable pair");
      }
      for (int v : {x, y}) {
        if (q.class_size(q.class_of[static_cast<std::size_t>(v)]) != 1) {
          throw Error(ErrorCode::NotSingletonClass, "element " + std::to_string(v) + " lies in a class of size > 1");
        }
      }
      out.set(x, y, one);
      break;
  }
  return out;
}

Split split(const IncidenceFunction& f) {
  Split out{IncidenceFunction(f.algebra()), IncidenceFunction(f.algebra())};
  const auto& p = f.algebra()->preorder();
  for (const auto& [k, v] : f.entries()) {
    (p.equivalent(k.first, k.second) ? out.L : out.M).set(k.first, k.second, v);
  }
  return out;
}

int filtration_level(const IncidenceFunction& fM) {
  const auto& alg = *fM.algebra();
  const auto& q = alg.quotient();
  int level = kInfiniteLevel;
  for (const auto& [k, v] : fM.entries()) {
    const int a = q.class_of[static_cast<std::size_t>(k.first)];
    const int b = q.class_of[static_cast<std::size_t>(k.second)];
    if (a == b) throw Error(ErrorCode::NotInM, "nonzero value at class-diagonal pair " + pair_text(k.first, k.second));
    level = std::min(level, alg.lengths()(a, b));
  }
  return level;
}

namespace {

/// Inverse of the class-diagonal part, block by block.
IncidenceFunction invert_diagonal(const IncidenceFunction& fL) {
  const auto& alg = *fL.algebra();
  const auto& q = alg.quotient();
  const auto& ring = alg.ring();
  IncidenceFunction out(fL.algebra());
  for (const auto& members : q.classes) {
    const int k = static_cast<int>(members.size());
    std::vector<RingElem> entries;
    entries.reserve(static_cast<std::size_t>(k * k));
    for (int i : members) {
      for (int j : members) entries.push_back(fL(i, j));
    }
    const auto block = pack_block(ring, k, entries);
    if (!is_unit(block)) {
      throw Error(ErrorCode::NotInvertible, "diagonal block of class " + std::to_string(members.front()) + " is not a unit");
    }
    const auto inv = unpack_block(ring, k, invert_unit(block));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        out.set(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)],
                inv[static_cast<std::size_t>(i * k + j)]);
      }
    }
  }
  return out;
}

}  // namespace

IncidenceFunction invert(const IncidenceFunction& f) {
  const auto parts = split(f);
  const auto fl_inv = invert_diagonal(parts.L);
  const auto m = convolve(fl_inv, parts.M);
  // (1 + m)⁻¹ = Σ_{i=0}^{D} (−m)^i since m ∈ V_1 and V_{D+1} = 0.
  const auto neg = -m;
  auto term = delta(f.algebra());
  auto sum = term;
  for (int i = 1; i <= f.algebra()->max_length() && !term.is_zero(); ++i) {
    term = convolve(term, neg);
    sum += term;
  }
  return convolve(sum, fl_inv);
}

bool is_invertible(const IncidenceFunction& f) {
  try {
    invert_diagonal(split(f).L);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInvertible) throw;
    return false;
  }
}

IncidenceFunction mobius(const AlgebraPtr& algebra) { return invert(zeta(algebra)); }

bool in_radical_fn(const IncidenceFunction& f) {
  const auto& p = f.algebra()->preorder();
  for (int s = 0; s < p.size(); ++s) {
    for (int t = 0; t < p.size(); ++t) {
      if (p.equivalent(s, t) && !in_radical(f(s, t))) return false;
    }
  }
  return true;
}

DenseMatrix::DenseMatrix(const RingSpec& ring, int n)
    : ring_(ring), n_(n), data_(static_cast<std::size_t>(n * n), RingElem::zero(ring)) {}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n_ != b.n_ || !(a.ring_ == b.ring_)) throw Error(ErrorCode::Mismatch, "dense matrix shapes or rings differ");
  DenseMatrix out(a.ring_, a.n_);
  for (int i = 0; i < a.n_; ++i) {
    for (int k = 0; k < a.n_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Structural to_structural(const IncidenceFunction& f) {
  const auto& alg = *f.algebra();
  const auto& p = alg.preorder();
  const auto& q = alg.quotient();
  const int n = p.size();
  Structural out{DenseMatrix(alg.ring(), n), p.relation(), {}, {}};
  for (const auto& [k, v] : f.entries()) out.matrix(k.first, k.second) = v;

  // Kahn's algorithm on classes, always releasing the smallest available class.
  std::vector<int> indegree(static_cast<std::size_t>(q.size()), 0);
  for (int a = 0; a < q.size(); ++a) {
    for (int b = 0; b < q.size(); ++b) indegree[static_cast<std::size_t>(b)] += q.lt(a, b) ? 1 : 0;
  }
  std::vector<bool> done(static_cast<std::size_t>(q.size()), false);
  for (int step = 0; step < q.size(); ++step) {
    int next = 0;
    while (done[static_cast<std::size_t>(next)] || indegree[static_cast<std::size_t>(next)] != 0) ++next;
    done[static_cast<std::size_t>(next)] = true;
    for (int b = 0; b < q.size(); ++b) indegree[static_cast<std::size_t>(b)] -= q.lt(next, b) ? 1 : 0;
    const auto& members = q.classes[static_cast<std::size_t>(next)];
    out.tau.insert(out.tau.end(), members.begin(), members.end());
    out.blocks.push_back(static_cast<int>(members.size()));
  }
  return out;
}

BoolMatrix permute_pattern(const BoolMatrix& pattern, const Permutation& tau) {
  const auto n = static_cast<Eigen::Index>(tau.size());
  BoolMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = pattern(tau[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

bool is_block_upper_triangular(const BoolMatrix& pattern, const std::vector<int>& blocks) {
  std::vector<int> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) block_of.insert(block_of.end(), static_cast<std::size_t>(blocks[b]), static_cast<int>(b));
  if (static_cast<Eigen::Index>(block_of.size()) != pattern.rows()) return false;
  for (Eigen::Index i = 0; i < pattern.rows(); ++i) {
    for (Eigen::Index j = 0; j < pattern.cols(); ++j) {
      if (pattern(i, j) && block_of[static_cast<std::size_t>(i)] > block_of[static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

}  // namespace incalg
