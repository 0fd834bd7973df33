#include "incalg/ring.hpp"

#include <charconv>
#include <sstream>

#include "incalg/errors.hpp"

namespace incalg {

namespace {

std::int64_t parse_positive(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError("malformed ring spec '" + std::string(whole) + "'");
  return value;
}

int dim_of(const RingSpec& spec) { return spec.is_matrix() ? spec.order() : 1; }

ZMatrix bind_matrix(const ZMatrix& m, std::int64_t modulus) {
  ZMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).bind(modulus);
  }
  return out;
}

/// Fraction-free (Bareiss) determinant over the integers.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::int64_t mod_of(const BigInt& v, std::int64_t m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

/// Inverse over Z/m for arbitrary m: det must be a unit, then adj(A)·det^{-1}.
ZMatrix invert_over_zmod(const ZMatrix& a, std::int64_t m) {
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<std::vector<BigInt>> lifted(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lifted[i][j] = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).value();
  }
  const ModInt det(mod_of(bareiss_determinant(lifted), m), m);
  if (std::gcd(det.value(), m) != 1) {
    throw Error(ErrorCode::NotUnit, "matrix determinant " + std::to_string(det.value()) +
                                        " is not a unit modulo " + std::to_string(m));
  }
  const ModInt det_inv = det.inverse();
  ZMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // adj(A)(i, j) = (-1)^{i+j} det(minor deleting row j, column i)
      std::vector<std::vector<BigInt>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<BigInt> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != i) row.push_back(lifted[r][c]);
        }
        minor.push_back(std::move(row));
      }
      BigInt cof = bareiss_determinant(std::move(minor));
      if ((i + j) % 2 == 1) cof = -cof;
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = ModInt(mod_of(cof, m), m) * det_inv;
    }
  }
  return out;
}

template <typename M>
bool is_scalar_matrix(const M& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i == j ? !(m(i, j) == m(0, 0)) : !is_zero(m(i, j))) return false;
    }
  }
  return true;
}

template <typename M>
bool all_zero(const M& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingSpec

RingSpec RingSpec::integers_mod(std::int64_t modulus) {
  if (modulus < 2) throw ParseError("modulus must be >= 2, got " + std::to_string(modulus));
  RingSpec s;
  s.modulus_ = modulus;
  return s;
}

RingSpec RingSpec::matrices(int order, const RingSpec& base) {
  if (order < 1) throw ParseError("matrix order must be >= 1");
  if (base.is_matrix()) throw ParseError("matrix rings over matrix rings are not supported");
  RingSpec s = base;
  s.order_ = order;
  return s;
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.rfind("Zmod:", 0) == 0) return integers_mod(parse_positive(text.substr(5), text));
  if (text.rfind("Mat:", 0) == 0) {
    const auto rest = text.substr(4);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParseError("malformed ring spec '" + std::string(text) + "'");
    const auto order = parse_positive(rest.substr(0, colon), text);
    const auto base_text = rest.substr(colon + 1);
    if (base_text.rfind("Mat:", 0) == 0) throw ParseError("nested matrix rings are not supported");
    return matrices(static_cast<int>(order), parse(base_text));
  }
  throw ParseError("unknown ring spec '" + std::string(text) + "'");
}

RingSpec RingSpec::base() const {
  RingSpec s = *this;
  s.order_ = 0;
  return s;
}

std::string RingSpec::str() const {
  const std::string scalar = modulus_ == 0 ? "Q" : "Zmod:" + std::to_string(modulus_);
  return order_ == 0 ? scalar : "Mat:" + std::to_string(order_) + ":" + scalar;
}

// ---------------------------------------------------------------------------
// RingElem

RingElem::RingElem(const RingSpec& spec, Payload payload) : spec_(spec), payload_(std::move(payload)) {
  const auto bad = [&](const std::string& what) {
    throw Error(ErrorCode::Mismatch, what + " for ring " + spec_.str());
  };
  if (!spec_.is_matrix()) {
    if (spec_.over_rationals()) {
      if (!std::holds_alternative<Rational>(payload_)) bad("expected a rational");
    } else {
      if (std::holds_alternative<Rational>(payload_)) {
        // integral rationals are accepted as residues
        const auto& q = std::get<Rational>(payload_);
        payload_ = ModInt(mod_of(q.numerator(), spec_.modulus()), spec_.modulus()) /
                   ModInt(mod_of(q.denominator(), spec_.modulus()), spec_.modulus());
      } else if (!std::holds_alternative<ModInt>(payload_)) {
        bad("expected a residue");
      }
      payload_ = std::get<ModInt>(payload_).bind(spec_.modulus());
    }
    return;
  }
  const auto k = spec_.order();
  if (spec_.over_rationals()) {
    auto* m = std::get_if<QMatrix>(&payload_);
    if (m == nullptr) bad("expected a rational matrix");
    if (m->rows() != k || m->cols() != k) bad("matrix shape mismatch");
  } else {
    auto* m = std::get_if<ZMatrix>(&payload_);
    if (m == nullptr) bad("expected a residue matrix");
    if (m->rows() != k || m->cols() != k) bad("matrix shape mismatch");
    *m = bind_matrix(*m, spec_.modulus());
  }
}

RingElem RingElem::zero(const RingSpec& spec) { return from_int(spec, 0); }
RingElem RingElem::one(const RingSpec& spec) { return from_int(spec, 1); }

RingElem RingElem::from_int(const RingSpec& spec, std::int64_t n) { return from_rational(spec, Rational(n)); }

RingElem RingElem::from_rational(const RingSpec& spec, const Rational& q) {
  const RingElem scalar(spec.base(), Payload(q));
  if (!spec.is_matrix()) return scalar;
  const auto k = spec.order();
  if (spec.over_rationals()) return RingElem(spec, QMatrix(QMatrix::Identity(k, k) * scalar.as_rational()));
  return RingElem(spec, ZMatrix(ZMatrix::Identity(k, k) * scalar.as_modint()));
}

bool RingElem::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, ModInt>) {
          return incalg::is_zero(v);
        } else {
          return all_zero(v);
        }
      },
      payload_);
}

bool RingElem::is_one() const { return *this == one(spec_); }

RingElem RingElem::entry(int i, int j) const {
  if (const auto* q = std::get_if<QMatrix>(&payload_)) return RingElem(spec_.base(), Payload((*q)(i, j)));
  if (const auto* z = std::get_if<ZMatrix>(&payload_)) return RingElem(spec_.base(), Payload((*z)(i, j)));
  throw Error(ErrorCode::Mismatch, "entry() on a scalar ring element");
}

RingElem RingElem::operator-() const {
  RingElem out = *this;
  std::visit([](auto& v) { v = -v; }, out.payload_);
  return out;
}

namespace {

template <typename Op>
void combine(RingElem::Payload& lhs, const RingElem::Payload& rhs, Op op) {
  std::visit(
      [&](auto& a) {
        using T = std::decay_t<decltype(a)>;
        const auto* b = std::get_if<T>(&rhs);
        if (b == nullptr) throw Error(ErrorCode::Mismatch, "ring element kinds differ");
        if constexpr (std::is_same_v<T, QMatrix> || std::is_same_v<T, ZMatrix>) {
          if (a.rows() != b->rows()) throw Error(ErrorCode::Mismatch, "matrix orders differ");
        }
        op(a, *b);
      },
      lhs);
}

void require_same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) throw Error(ErrorCode::Mismatch, "rings differ: " + a.str() + " vs " + b.str());
}

}  // namespace

RingElem& RingElem::operator+=(const RingElem& o) {
  require_same_ring(spec_, o.spec_);
  combine(payload_, o.payload_, [](auto& a, const auto& b) { a = a + b; });
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  require_same_ring(spec_, o.spec_);
  combine(payload_, o.payload_, [](auto& a, const auto& b) { a = a - b; });
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) {
  require_same_ring(spec_, o.spec_);
  combine(payload_, o.payload_, [](auto& a, const auto& b) {
    using T = std::decay_t<decltype(a)>;
    if constexpr (std::is_same_v<T, QMatrix> || std::is_same_v<T, ZMatrix>) {
      a = T(a * b);
    } else {
      a = a * b;
    }
  });
  if (auto* z = std::get_if<ZMatrix>(&payload_)) *z = bind_matrix(*z, spec_.modulus());
  return *this;
}

bool operator==(const RingElem& a, const RingElem& b) {
  if (!(a.spec_ == b.spec_)) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto* y = std::get_if<T>(&b.payload_);
        if (y == nullptr) return false;
        if constexpr (std::is_same_v<T, QMatrix> || std::is_same_v<T, ZMatrix>) {
          return x.rows() == y->rows() && x.cols() == y->cols() && x == *y;
        } else {
          return x == *y;
        }
      },
      a.payload_);
}

std::string RingElem::str() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return v.str();
        } else if constexpr (std::is_same_v<T, ModInt>) {
          return std::to_string(v.value());
        } else {
          std::ostringstream os;
          os << '[';
          for (Eigen::Index i = 0; i < v.rows(); ++i) {
            os << (i ? ",[" : "[");
            for (Eigen::Index j = 0; j < v.cols(); ++j) os << (j ? "," : "") << v(i, j);
            os << ']';
          }
          os << ']';
          return os.str();
        }
      },
      payload_);
}

// ---------------------------------------------------------------------------
// Unit group, center, radical

RingElem invert_unit(const RingElem& a) {
  const auto& spec = a.spec();
  return std::visit(
      [&](const auto& v) -> RingElem {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          if (v.is_zero()) throw Error(ErrorCode::NotUnit, "0 is not a unit in Q");
          return RingElem(spec, Rational(1) / v);
        } else if constexpr (std::is_same_v<T, ModInt>) {
          return RingElem(spec, v.inverse());
        } else if constexpr (std::is_same_v<T, QMatrix>) {
          auto inv = linalg::inverse(v);
          if (!inv) throw Error(ErrorCode::NotUnit, "singular rational matrix");
          return RingElem(spec, std::move(*inv));
        } else {
          if (is_prime(spec.modulus())) {
            auto inv = linalg::inverse(v);
            if (!inv) throw Error(ErrorCode::NotUnit, "singular matrix over Z/" + std::to_string(spec.modulus()));
            return RingElem(spec, std::move(*inv));
          }
          return RingElem(spec, invert_over_zmod(v, spec.modulus()));
        }
      },
      a.payload());
}

bool is_unit(const RingElem& a) {
  try {
    invert_unit(a);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotUnit) return false;
    throw;
  }
}

bool is_central(const RingElem& a) {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, QMatrix> || std::is_same_v<T, ZMatrix>) {
          return is_scalar_matrix(v);
        } else {
          return true;
        }
      },
      a.payload());
}

bool in_radical(const RingElem& a) {
  const auto modulus = a.spec().modulus();
  return std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return v.is_zero();
        } else if constexpr (std::is_same_v<T, ModInt>) {
          return v.value() % radical_of(modulus) == 0;
        } else if constexpr (std::is_same_v<T, QMatrix>) {
          return all_zero(v);
        } else {
          const auto rad = radical_of(modulus);
          for (Eigen::Index i = 0; i < v.rows(); ++i) {
            for (Eigen::Index j = 0; j < v.cols(); ++j) {
              if (v(i, j).value() % rad != 0) return false;
            }
          }
          return true;
        }
      },
      a.payload());
}

// ---------------------------------------------------------------------------
// Block packing

RingElem pack_block(const RingSpec& spec, int n, const std::vector<RingElem>& entries) {
  if (static_cast<int>(entries.size()) != n * n) throw Error(ErrorCode::Mismatch, "block entry count");
  if (n == 1) return entries.front();
  const int k = dim_of(spec);
  const RingSpec block_spec = RingSpec::matrices(n * k, spec.base());
  const auto fill = [&](auto& m) {
    for (int bi = 0; bi < n; ++bi) {
      for (int bj = 0; bj < n; ++bj) {
        const RingElem& e = entries[static_cast<std::size_t>(bi * n + bj)];
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) {
            const RingElem s = spec.is_matrix() ? e.entry(i, j) : e;
            using S = typename std::decay_t<decltype(m)>::Scalar;
            m(bi * k + i, bj * k + j) = std::get<S>(s.payload());
          }
        }
      }
    }
  };
  if (spec.over_rationals()) {
    QMatrix m(n * k, n * k);
    fill(m);
    return RingElem(block_spec, std::move(m));
  }
  ZMatrix m(n * k, n * k);
  fill(m);
  return RingElem(block_spec, std::move(m));
}

std::vector<RingElem> unpack_block(const RingSpec& spec, int n, const RingElem& block) {
  if (n == 1) return {RingElem(spec, block.payload())};
  const int k = dim_of(spec);
  std::vector<RingElem> out;
  out.reserve(static_cast<std::size_t>(n * n));
  const auto cut = [&](const auto& m) {
    using M = std::decay_t<decltype(m)>;
    for (int bi = 0; bi < n; ++bi) {
      for (int bj = 0; bj < n; ++bj) {
        if (spec.is_matrix()) {
          out.emplace_back(spec, RingElem::Payload(M(m.block(bi * k, bj * k, k, k))));
        } else {
          out.emplace_back(spec, RingElem::Payload(m(bi, bj)));
        }
      }
    }
  };
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, QMatrix> || std::is_same_v<T, ZMatrix>) {
          cut(v);
        } else {
          throw Error(ErrorCode::Mismatch, "unpack_block expects a matrix");
        }
      },
      block.payload());
  return out;
}

}  // namespace incalg
