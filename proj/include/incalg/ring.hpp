#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "incalg/linalg.hpp"
#include "incalg/modint.hpp"
#include "incalg/rational.hpp"

namespace incalg {

/// Coefficient ring: Q, Z/n, or M(k, Q | Z/n). Matrix rings do not nest.
class RingSpec {
 public:
  RingSpec() = default;

  static RingSpec rationals() { return RingSpec(); }
  static RingSpec integers_mod(std::int64_t modulus);
  static RingSpec matrices(int order, const RingSpec& base);

  /// "Q", "Zmod:<n>", "Mat:<k>:Q", "Mat:<k>:Zmod:<n>". Throws ParseError.
  static RingSpec parse(std::string_view text);

  bool is_matrix() const { return order_ > 0; }
  /// Matrix order k, or 0 for a scalar ring.
  int order() const { return order_; }
  /// Residue modulus of the scalar base, or 0 when the base is Q.
  std::int64_t modulus() const { return modulus_; }
  bool over_rationals() const { return modulus_ == 0; }

  /// The scalar ring underneath (itself for scalar rings). Also the center C(R).
  RingSpec base() const;
  bool is_commutative() const { return order_ <= 1; }
  /// True when C(R) is a field: base Q or Z/p with p prime.
  bool center_is_field() const { return modulus_ == 0 || is_prime(modulus_); }

  std::string str() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  int order_ = 0;
  std::int64_t modulus_ = 0;
};

using QMatrix = linalg::Matrix<Rational>;
using ZMatrix = linalg::Matrix<ModInt>;

/// An exact element of a RingSpec. Scalars are held as Rational or ModInt,
/// matrix-ring elements as Eigen matrices over those.
class RingElem {
 public:
  using Payload = std::variant<Rational, ModInt, QMatrix, ZMatrix>;

  /// Rational zero.
  RingElem() = default;
  /// Validates and normalises `payload` against `spec` (binds residues, checks shape).
  RingElem(const RingSpec& spec, Payload payload);

  static RingElem zero(const RingSpec& spec);
  static RingElem one(const RingSpec& spec);
  /// n·1 in the ring.
  static RingElem from_int(const RingSpec& spec, std::int64_t n);
  /// A central (scalar) element from a rational; for Z/n the rational must be integral
  /// or have a denominator prime to n.
  static RingElem from_rational(const RingSpec& spec, const Rational& q);

  const RingSpec& spec() const { return spec_; }
  const Payload& payload() const { return payload_; }

  bool is_zero() const;
  bool is_one() const;

  /// Scalar ring only: the value as a field scalar.
  const Rational& as_rational() const { return std::get<Rational>(payload_); }
  const ModInt& as_modint() const { return std::get<ModInt>(payload_); }

  /// Matrix ring only: entry (i, j) as an element of base().
  RingElem entry(int i, int j) const;

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend bool operator==(const RingElem& a, const RingElem& b);

  std::string str() const;

 private:
  RingSpec spec_;
  Payload payload_{Rational(0)};
};

/// Inverse of a unit. Throws Error(NotUnit).
RingElem invert_unit(const RingElem& a);
bool is_unit(const RingElem& a);
/// Membership in the center C(R): always for scalar rings, scalar matrices for M(k, .).
bool is_central(const RingElem& a);
/// Membership in the Jacobson radical J(R).
bool in_radical(const RingElem& a);

/// Packs an n×n array of R-entries (row-major) into one element of M(n·k, base),
/// i.e. the block matrix ring M(n, R) flattened. For n = 1 over a scalar ring the
/// entry itself is returned.
RingElem pack_block(const RingSpec& spec, int n, const std::vector<RingElem>& entries);
/// Inverse of pack_block.
std::vector<RingElem> unpack_block(const RingSpec& spec, int n, const RingElem& block);

}  // namespace incalg
