#pragma once

// Exact scalars: arbitrary-precision rationals or residues modulo a prime.
//
// A Scalar carries the Field it lives in so that generic code (matrices,
// path sums) can build zeros and ones without an external context.  Mixing
// scalars from different fields is a logic error and throws.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace regrade {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The coefficient field: the rationals (characteristic 0) or F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }

  static Field prime(std::uint32_t p) {
    if (!is_prime(p))
      throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
  }

  /// Parses "q" (rationals) or "pN" (F_N).
  static Field parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.size() >= 2 && (text[0] == 'p' || text[0] == 'P')) {
      std::uint64_t p = 0;
      for (char c : text.substr(1)) {
        if (c < '0' || c > '9' || p > 0xffffffffULL)
          throw std::invalid_argument("bad field specifier '" + std::string(text) + "'");
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
      }
      if (p > 0xffffffffULL)
        throw std::invalid_argument("field characteristic too large");
      return prime(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("bad field specifier '" + std::string(text) +
                                "' (expected q or pN)");
  }

  /// The prime used when no field is given; REGRADE_DEFAULT_PRIME overrides it.
  static Field default_prime() {
    if (const char* env = std::getenv("REGRADE_DEFAULT_PRIME"); env != nullptr && *env != '\0')
      return prime(static_cast<std::uint32_t>(std::strtoul(env, nullptr, 10)));
    return prime(kDefaultPrime);
  }

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  std::string to_string() const { return p_ == 0 ? "q" : "p" + std::to_string(p_); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() = default;

  Scalar(Field field, long long value) : field_(field) {
    if (field_.is_rational()) {
      q_ = value;
    } else {
      const auto p = static_cast<long long>(field_.characteristic());
      long long r = value % p;
      if (r < 0) r += p;
      r_ = static_cast<std::uint64_t>(r);
    }
  }

  /// Maps a rational into the field; throws std::domain_error when the
  /// denominator vanishes mod p.
  Scalar(Field field, const Rational& value) : field_(field) {
    if (field_.is_rational()) {
      q_ = value;
      return;
    }
    const BigInt p = field_.characteristic();
    BigInt num = boost::multiprecision::numerator(value) % p;
    BigInt den = boost::multiprecision::denominator(value) % p;
    if (num < 0) num += p;
    if (den == 0)
      throw std::domain_error("denominator of " + value.str() + " vanishes in " +
                              field_.to_string());
    Scalar n(field_, 0), d(field_, 0);
    n.r_ = static_cast<std::uint64_t>(num);
    d.r_ = static_cast<std::uint64_t>(den);
    *this = n / d;
  }

  static Scalar zero(Field field) { return Scalar(field, 0); }
  static Scalar one(Field field) { return Scalar(field, 1); }

  const Field& field() const { return field_; }
  bool is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
  bool is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

  /// Only meaningful over the rationals.
  const Rational& rational() const { return q_; }
  /// Only meaningful over F_p.
  std::uint64_t residue() const { return r_; }

  Scalar operator-() const {
    Scalar out = *this;
    if (field_.is_rational())
      out.q_ = -q_;
    else if (r_ != 0)
      out.r_ = field_.characteristic() - r_;
    return out;
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (field_.is_rational())
      q_ += o.q_;
    else
      r_ = (r_ + o.r_) % field_.characteristic();
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (field_.is_rational())
      q_ *= o.q_;
    else
      r_ = (r_ * o.r_) % field_.characteristic();
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar out = *this;
    if (field_.is_rational()) {
      out.q_ = 1 / q_;
      return out;
    }
    // Fermat: r^(p-2).
    const std::uint64_t p = field_.characteristic();
    std::uint64_t base = r_, exp = p - 2, acc = 1;
    while (exp > 0) {
      if (exp & 1) acc = acc * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    out.r_ = acc;
    return out;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
  }

  /// `num/den` (or `num`) over the rationals, the residue in [0, p) over F_p.
  std::string to_string() const { return field_.is_rational() ? q_.str() : std::to_string(r_); }

 private:
  void check(const Scalar& o) const {
    if (field_ != o.field_)
      throw std::logic_error("scalar field mismatch: " + field_.to_string() + " vs " +
                             o.field_.to_string());
  }

  Field field_;
  Rational q_;
  std::uint64_t r_ = 0;
};

}  // namespace regrade
