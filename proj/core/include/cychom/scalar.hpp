#pragma once

// Exact rational scalars with an inline fast path for machine-size integers.

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cychom {

/// An exact rational number.
///
/// Values that are integers fitting in 64 bits live inline; everything else
/// is promoted to a shared, immutable GMP rational. Copies are cheap and the
/// representation is always canonical: a promoted value is never a small
/// integer.
class Scalar {
 public:
  Scalar() noexcept = default;
  Scalar(int value) noexcept : small_(value) {}
  Scalar(long value) noexcept : small_(value) {}
  Scalar(long long value) noexcept : small_(value) {}
  explicit Scalar(const mpz_class& value);
  explicit Scalar(const mpq_class& value);

  /// Parses "12", "-3", "7/4" (optionally with surrounding spaces).
  static Scalar parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  bool is_small() const noexcept { return !big_; }
  std::int64_t small_value() const noexcept { return small_; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  /// Requires is_integer().
  mpz_class to_mpz() const;
  std::string to_string() const;

  Scalar abs() const;
  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Exact rational division; throws on division by zero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  static Scalar from_mpq(mpq_class value);

  std::int64_t small_ = 0;
  std::shared_ptr<const mpq_class> big_;
};

// Integer helpers. All arguments must be integers.

/// Quotient rounded toward negative infinity.
Scalar floor_div(const Scalar& a, const Scalar& b);
/// a - floor_div(a, b) * b, so the result has the sign of b.
Scalar floor_mod(const Scalar& a, const Scalar& b);
/// Nonnegative gcd; gcd(0, 0) = 0.
Scalar gcd(const Scalar& a, const Scalar& b);

struct ExtendedGcd {
  Scalar g;  // nonnegative
  Scalar s;
  Scalar t;  // g = s*a + t*b
};
ExtendedGcd extended_gcd(const Scalar& a, const Scalar& b);

/// True when b divides a exactly (b != 0).
bool divides(const Scalar& b, const Scalar& a);

inline std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace cychom
