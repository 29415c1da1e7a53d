#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cychom/scalar.hpp"

namespace cychom {

/// The ground ring: the integers, the rationals, or a prime field F_p.
///
/// Every element handed out by a RingSpec is in canonical form: integers for
/// Z, reduced fractions for Q, and representatives in [0, p) for F_p.
class RingSpec {
 public:
  enum class Kind { integers, rationals, prime_field };

  static RingSpec integers() { return RingSpec(Kind::integers, 0); }
  static RingSpec rationals() { return RingSpec(Kind::rationals, 0); }
  /// Throws RingError unless p is a prime below 2^31.
  static RingSpec prime_field(std::int64_t p);
  /// Accepts "Z", "Q", "F5", "F_5", "GF(5)" (case-insensitive).
  static RingSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::int64_t characteristic() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != Kind::integers; }
  bool is_integers() const noexcept { return kind_ == Kind::integers; }
  std::string name() const;

  /// Maps an exact rational into the ring. Throws RingError for a
  /// non-integer over Z, or a denominator divisible by p over F_p.
  Scalar from(const Scalar& x) const;
  bool is_canonical(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  bool is_unit(const Scalar& a) const;
  /// Throws RingError when a is not a unit.
  Scalar inverse(const Scalar& a) const;
  /// The unique q with q*b = a; throws RingError when it does not exist.
  Scalar divide_exact(const Scalar& a, const Scalar& b) const;
  /// b divides a in this ring.
  bool divides(const Scalar& b, const Scalar& a) const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  RingSpec(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

}  // namespace cychom
