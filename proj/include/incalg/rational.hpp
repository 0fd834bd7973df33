#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace incalg {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer with expression templates off (plays well with Eigen).
using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Exact rational number, always in lowest terms with positive denominator.
///
/// A thin value wrapper over Boost.Multiprecision. Boost's own number<> type is
/// too eager in its converting constructors to sit inside Eigen 3.4 under
/// C++20, so only the arithmetic surface needed here is exposed.
class Rational {
 public:
  using Impl = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT: literals 0 and 1 must convert
  Rational(std::int64_t num, std::int64_t den) : value_(Impl(num) / Impl(den)) {}
  explicit Rational(const BigInt& value) : value_(value) {}
  explicit Rational(Impl value) : value_(std::move(value)) {}

  /// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or q == 0.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return mp::numerator(value_); }
  BigInt denominator() const { return mp::denominator(value_); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// Canonical text: "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const { return Rational(Impl(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) { value_ /= o.value_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  const Impl& impl() const { return value_; }

 private:
  Impl value_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace incalg

namespace Eigen {

template <>
struct NumTraits<incalg::Rational> : GenericNumTraits<incalg::Rational> {
  using Real = incalg::Rational;
  using NonInteger = incalg::Rational;
  using Literal = incalg::Rational;
  using Nested = incalg::Rational;

  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
  static inline int digits() { return 0; }
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };
};

}  // namespace Eigen
