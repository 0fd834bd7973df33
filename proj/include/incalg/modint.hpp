#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>

#include <Eigen/Core>

#include "incalg/errors.hpp"

namespace incalg {

/// Residue class modulo a runtime modulus.
///
/// A ModInt built from a bare integer has modulus 0: it is an unbound integer
/// literal that adopts the modulus of whatever it is combined with. This is
/// what lets Eigen's Scalar(0) / Scalar(1) initialisation work for residues
/// whose modulus is only known at runtime.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::int64_t value) : value_(value) {}  // NOLINT: unbound literal
  ModInt(std::int64_t value, std::int64_t modulus) : value_(reduce(value, modulus)), modulus_(modulus) {}

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }
  bool bound() const { return modulus_ != 0; }

  /// Binds an unbound literal to `modulus`; a bound value must already agree.
  ModInt bind(std::int64_t modulus) const {
    if (modulus_ != 0 && modulus_ != modulus) throw Error(ErrorCode::Mismatch, "residue moduli differ");
    return ModInt(value_, modulus);
  }

  bool is_zero() const { return value_ == 0; }

  /// Multiplicative inverse by the extended Euclidean algorithm.
  ModInt inverse() const {
    if (modulus_ == 0) {
      if (value_ == 1 || value_ == -1) return *this;
      throw Error(ErrorCode::NotUnit, "unbound integer " + std::to_string(value_) + " is not a unit");
    }
    std::int64_t r0 = modulus_, r1 = value_, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::int64_t tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    if (r0 != 1) {
      throw Error(ErrorCode::NotUnit,
                  std::to_string(value_) + " is not a unit modulo " + std::to_string(modulus_));
    }
    return ModInt(t0, modulus_);
  }

  ModInt operator-() const { return ModInt(-value_, modulus_, Raw{}); }

  ModInt& operator+=(const ModInt& o) {
    const auto m = joint(o);
    *this = ModInt(value_ + o.value_, m, Raw{});
    return *this;
  }
  ModInt& operator-=(const ModInt& o) {
    const auto m = joint(o);
    *this = ModInt(value_ - o.value_, m, Raw{});
    return *this;
  }
  ModInt& operator*=(const ModInt& o) {
    const auto m = joint(o);
    const __int128 p = static_cast<__int128>(value_) * o.value_;
    *this = m == 0 ? ModInt(static_cast<std::int64_t>(p)) : ModInt(static_cast<std::int64_t>(p % m), m);
    return *this;
  }
  ModInt& operator/=(const ModInt& o) {
    const auto m = joint(o);
    return *this *= o.bind_or_keep(m).inverse();
  }

  friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
  friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
  friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
  friend ModInt operator/(ModInt a, const ModInt& b) { return a /= b; }

  friend bool operator==(const ModInt& a, const ModInt& b) {
    const auto m = a.joint(b);
    return reduce(a.value_, m) == reduce(b.value_, m);
  }

 private:
  struct Raw {};
  ModInt(std::int64_t value, std::int64_t modulus, Raw) : value_(reduce(value, modulus)), modulus_(modulus) {}

  static std::int64_t reduce(std::int64_t v, std::int64_t m) {
    if (m == 0) return v;
    v %= m;
    return v < 0 ? v + m : v;
  }

  std::int64_t joint(const ModInt& o) const {
    if (modulus_ == 0) return o.modulus_;
    if (o.modulus_ != 0 && o.modulus_ != modulus_) throw Error(ErrorCode::Mismatch, "residue moduli differ");
    return modulus_;
  }

  ModInt bind_or_keep(std::int64_t m) const { return m == 0 ? *this : bind(m); }

  std::int64_t value_ = 0;
  std::int64_t modulus_ = 0;
};

inline bool is_zero(const ModInt& a) { return a.is_zero(); }

inline std::ostream& operator<<(std::ostream& os, const ModInt& a) { return os << a.value(); }

/// True iff n >= 2 is prime (trial division; moduli here are small).
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Product of the distinct primes dividing n.
inline std::int64_t radical_of(std::int64_t n) {
  std::int64_t rad = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      rad *= d;
      while (n % d == 0) n /= d;
    }
  }
  return n > 1 ? rad * n : rad;
}

}  // namespace incalg

namespace Eigen {

template <>
struct NumTraits<incalg::ModInt> : GenericNumTraits<incalg::ModInt> {
  using Real = incalg::ModInt;
  using NonInteger = incalg::ModInt;
  using Literal = incalg::ModInt;
  using Nested = incalg::ModInt;

  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
  static inline int digits() { return 0; }
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
};

}  // namespace Eigen
