#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ranklab {

/// Exact rational number, always held in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) == 1, so zero is 0/1.
///
/// Text syntax accepted by `parse` (and produced by `to_string`):
///   [+-]digits | [+-]digits "." digits | [+-]digits "/" digits
/// Decimals are converted exactly. Exponents are rejected.
class Scalar {
 public:
  Scalar() = default;

  template <std::signed_integral I>
  Scalar(I v) : value_(static_cast<signed long>(v)) {}  // NOLINT(implicit)

  template <std::unsigned_integral I>
  Scalar(I v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(implicit)

  /// num/den reduced to canonical form. Throws DomainError when den == 0.
  static Scalar ratio(std::int64_t num, std::int64_t den);
  static Scalar parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_canonical() const;

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;
  /// Nearest double; lossy, for reporting and the float benchmark path only.
  double to_double() const { return value_.get_d(); }

  Scalar operator-() const { return Scalar(mpq_class(-value_)); }
  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.value_ + b.value_)); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.value_ - b.value_)); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.value_ * b.value_)); }
  /// Throws DomainError on division by zero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit Scalar(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

Scalar parse_scalar(std::string_view text);
inline Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
inline Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
inline std::strong_ordering compare(const Scalar& a, const Scalar& b) { return a <=> b; }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// A Scalar or +infinity. Used for minimum gaps, which are infinite when the
/// gap set is empty.
class ExtendedScalar {
 public:
  ExtendedScalar(Scalar v) : value_(std::move(v)), infinite_(false) {}  // NOLINT(implicit)
  static ExtendedScalar infinity() { return ExtendedScalar(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Throws DomainError when infinite.
  const Scalar& value() const;

  /// infinity is >= every Scalar.
  bool at_least(const Scalar& bound) const { return infinite_ || value_ >= bound; }
  /// "inf" or the scalar text.
  std::string to_string() const;

  friend bool operator==(const ExtendedScalar& a, const ExtendedScalar& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  ExtendedScalar() : infinite_(true) {}

  Scalar value_;
  bool infinite_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedScalar& s);

}  // namespace ranklab
