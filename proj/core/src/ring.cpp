#include "cychom/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "cychom/errors.hpp"

namespace cychom {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

RingSpec RingSpec::prime_field(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    throw RingError("F_p requires a prime p below 2^31, got " + std::to_string(p));
  }
  return RingSpec(Kind::prime_field, p);
}

RingSpec RingSpec::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  if (s == "Z" || s == "ZZ" || s == "INTEGERS") return integers();
  if (s == "Q" || s == "QQ" || s == "RATIONALS") return rationals();
  std::string digits;
  if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
    digits = s.substr(3, s.size() - 4);
  } else if (s.rfind("F_", 0) == 0) {
    digits = s.substr(2);
  } else if (s.rfind("F", 0) == 0) {
    digits = s.substr(1);
  } else {
    throw ParseError("unknown ring '" + std::string(text) + "' (expected Z, Q or Fp)");
  }
  std::int64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("unknown ring '" + std::string(text) + "' (expected Z, Q or Fp)");
  }
  return prime_field(p);
}

std::string RingSpec::name() const {
  switch (kind_) {
    case Kind::integers:
      return "Z";
    case Kind::rationals:
      return "Q";
    case Kind::prime_field:
      return "F" + std::to_string(p_);
  }
  return "?";
}

Scalar RingSpec::from(const Scalar& x) const {
  switch (kind_) {
    case Kind::rationals:
      return x;
    case Kind::integers:
      if (!x.is_integer()) throw RingError("value " + x.to_string() + " is not an integer");
      return x;
    case Kind::prime_field: {
      if (x.is_small()) {
        std::int64_t r = x.small_value() % p_;
        if (r < 0) r += p_;
        return Scalar(static_cast<long long>(r));
      }
      mpq_class q = x.to_mpq();
      mpz_class pz(static_cast<long>(p_));
      mpz_class num, den;
      mpz_mod(num.get_mpz_t(), q.get_num_mpz_t(), pz.get_mpz_t());
      mpz_mod(den.get_mpz_t(), q.get_den_mpz_t(), pz.get_mpz_t());
      if (den == 0) throw RingError("denominator of " + x.to_string() + " vanishes in " + name());
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
      mpz_class r = (num * inv) % pz;
      return Scalar(r);
    }
  }
  return x;
}

bool RingSpec::is_canonical(const Scalar& x) const {
  switch (kind_) {
    case Kind::rationals:
      return true;
    case Kind::integers:
      return x.is_integer();
    case Kind::prime_field:
      return x.is_small() && x.small_value() >= 0 && x.small_value() < p_;
  }
  return false;
}

Scalar RingSpec::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime_field) {
    std::int64_t s = a.small_value() + b.small_value();
    if (s >= p_) s -= p_;
    return Scalar(static_cast<long long>(s));
  }
  return a + b;
}

Scalar RingSpec::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime_field) {
    std::int64_t s = a.small_value() - b.small_value();
    if (s < 0) s += p_;
    return Scalar(static_cast<long long>(s));
  }
  return a - b;
}

Scalar RingSpec::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::prime_field) {
    return Scalar(static_cast<long long>((a.small_value() * b.small_value()) % p_));
  }
  return a * b;
}

Scalar RingSpec::neg(const Scalar& a) const {
  if (kind_ == Kind::prime_field) {
    return a.is_zero() ? a : Scalar(static_cast<long long>(p_ - a.small_value()));
  }
  return -a;
}

bool RingSpec::is_unit(const Scalar& a) const {
  if (kind_ == Kind::integers) return a.is_small() && (a.small_value() == 1 || a.small_value() == -1);
  return !a.is_zero();
}

Scalar RingSpec::inverse(const Scalar& a) const {
  if (!is_unit(a)) throw RingError(a.to_string() + " is not a unit in " + name());
  switch (kind_) {
    case Kind::integers:
      return a;
    case Kind::rationals:
      return Scalar(1) / a;
    case Kind::prime_field: {
      // extended Euclid on machine integers
      std::int64_t t = 0, new_t = 1, r = p_, new_r = a.small_value();
      while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
      }
      if (t < 0) t += p_;
      return Scalar(static_cast<long long>(t));
    }
  }
  return a;
}

Scalar RingSpec::divide_exact(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::integers) {
    if (!cychom::divides(b, a)) throw RingError(b.to_string() + " does not divide " + a.to_string());
    return a / b;
  }
  return mul(a, inverse(b));
}

bool RingSpec::divides(const Scalar& b, const Scalar& a) const {
  if (kind_ == Kind::integers) return cychom::divides(b, a);
  return !b.is_zero() || a.is_zero();
}

}  // namespace cychom
