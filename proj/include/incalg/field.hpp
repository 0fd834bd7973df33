#pragma once

#include <cstdint>
#include <string>

#include "incalg/errors.hpp"
#include "incalg/linalg.hpp"
#include "incalg/ring.hpp"

namespace incalg {

/// Dispatches `fn` on the scalar type of the center field C(R): Rational for Q,
/// ModInt for Z/p. `fn` receives a prototype zero carrying the modulus.
/// Throws Error(CenterNotField) when C(R) = Z/n with n composite.
template <class Fn>
decltype(auto) with_center_field(const RingSpec& ring, Fn&& fn) {
  if (ring.over_rationals()) return fn(Rational(0));
  if (!is_prime(ring.modulus())) {
    throw Error(ErrorCode::CenterNotField, "center of " + ring.str() + " is not a field");
  }
  return fn(ModInt(0, ring.modulus()));
}

inline Rational field_scalar(const Rational&, std::int64_t v) { return Rational(v); }
inline ModInt field_scalar(const ModInt& proto, std::int64_t v) { return ModInt(v, proto.modulus()); }

/// A central element of `ring` from a field scalar of its center.
inline RingElem central_from(const RingSpec& ring, const Rational& a) { return RingElem::from_rational(ring, a); }
inline RingElem central_from(const RingSpec& ring, const ModInt& a) { return RingElem::from_int(ring, a.value()); }

/// The field scalar carried by a central element (the diagonal entry for scalar matrices).
inline RingElem center_value(const RingElem& a) { return a.spec().is_matrix() ? a.entry(0, 0) : a; }

}  // namespace incalg
