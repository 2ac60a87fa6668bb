#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace facering {

/// An exact field element. Over Q the value is a canonical rational; over
/// F_p it is the residue in [0, p). Arithmetic goes through Field, which
/// knows the characteristic.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

/// Coefficient field: Q (characteristic 0) or F_p.
class Field {
 public:
  Field() = default;

  /// Throws InvalidField unless characteristic is 0 or prime.
  static Field of_characteristic(std::uint64_t characteristic);
  static Field rationals() { return Field(); }

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  Scalar from_mpq(const mpq_class& v) const;

  /// Parses "a" or "a/b" with optional sign. Over F_p the denominator is
  /// inverted mod p.
  Scalar parse(std::string_view text) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  Scalar reduce(const mpz_class& v) const;

  std::uint64_t p_ = 0;
};

}  // namespace facering
