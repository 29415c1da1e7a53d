#include "cychom/scalar.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "cychom/errors.hpp"

namespace cychom {

namespace {

mpz_class mpz_from_int64(std::int64_t v) {
  mpz_class z;
  // mpz_set_si takes a long, which is 64 bits on the supported platforms.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

bool mpz_fits_int64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Scalar::Scalar(const mpz_class& value) : Scalar(from_mpq(mpq_class(value))) {}

Scalar::Scalar(const mpq_class& value) : Scalar(from_mpq(value)) {}

Scalar Scalar::from_mpq(mpq_class value) {
  value.canonicalize();
  Scalar out;
  if (value.get_den() == 1 && mpz_fits_int64(value.get_num())) {
    out.small_ = mpz_get_si(value.get_num_mpz_t());
  } else {
    out.big_ = std::make_shared<const mpq_class>(std::move(value));
  }
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw ParseError("empty number");
  if (s.front() == '+') s.erase(0, 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || (ch == '-' && i == 0);
    if (!ok) throw ParseError("malformed number '" + std::string(text) + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed number '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return from_mpq(std::move(q));
}

bool Scalar::is_integer() const { return !big_ || big_->get_den() == 1; }

int Scalar::sign() const {
  if (!big_) return (small_ > 0) - (small_ < 0);
  return sgn(*big_);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from_int64(small_));
}

mpz_class Scalar::to_mpz() const {
  if (!big_) return mpz_from_int64(small_);
  if (big_->get_den() != 1) throw RingError("non-integer value " + to_string());
  return big_->get_num();
}

std::string Scalar::to_string() const {
  if (!big_) return std::to_string(small_);
  return big_->get_str();
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::operator-() const {
  if (!big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(std::int64_t{0}, small_, &r)) return Scalar(static_cast<long long>(r));
  }
  return from_mpq(-to_mpq());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Scalar(static_cast<long long>(r));
  }
  return Scalar::from_mpq(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(a.small_, b.small_, &r)) return Scalar(static_cast<long long>(r));
  }
  return Scalar::from_mpq(a.to_mpq() - b.to_mpq());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Scalar(static_cast<long long>(r));
  }
  return Scalar::from_mpq(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw RingError("division by zero");
  if (!a.big_ && !b.big_ && b.small_ != -1 && a.small_ % b.small_ == 0) {
    return Scalar(static_cast<long long>(a.small_ / b.small_));
  }
  return Scalar::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (!a.big_ || !b.big_) return false;  // canonical form: mixed representations differ
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = cmp(a.to_mpq(), b.to_mpq());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar floor_div(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw RingError("division by zero");
  if (a.is_small() && b.is_small() && b.small_value() != -1) {
    std::int64_t x = a.small_value();
    std::int64_t y = b.small_value();
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return Scalar(static_cast<long long>(q));
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Scalar(q);
}

Scalar floor_mod(const Scalar& a, const Scalar& b) { return a - floor_div(a, b) * b; }

Scalar gcd(const Scalar& a, const Scalar& b) {
  if (a.is_small() && b.is_small() && a.small_value() != std::numeric_limits<std::int64_t>::min() &&
      b.small_value() != std::numeric_limits<std::int64_t>::min()) {
    std::int64_t x = a.small_value() < 0 ? -a.small_value() : a.small_value();
    std::int64_t y = b.small_value() < 0 ? -b.small_value() : b.small_value();
    while (y != 0) {
      std::int64_t r = x % y;
      x = y;
      y = r;
    }
    return Scalar(static_cast<long long>(x));
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Scalar(g);
}

ExtendedGcd extended_gcd(const Scalar& a, const Scalar& b) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return {Scalar(g), Scalar(s), Scalar(t)};
}

bool divides(const Scalar& b, const Scalar& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_small() && b.is_small()) {
    if (b.small_value() == -1) return true;
    return a.small_value() % b.small_value() == 0;
  }
  return mpz_divisible_p(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t()) != 0;
}

}  // namespace cychom
