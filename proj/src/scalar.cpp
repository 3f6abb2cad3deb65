#include "ranklab/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "ranklab/errors.hpp"

namespace ranklab {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class digits_to_mpz(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Scalar Scalar::ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(mpz_class(static_cast<signed long>(num)), mpz_class(static_cast<signed long>(den)));
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::parse(std::string_view text) {
  const std::string token(text);
  if (text.empty()) throw ParseError(token, "empty text");

  bool negative = false;
  std::string_view body = text;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.find_first_of("eE") != std::string_view::npos) {
    throw ParseError(token, "scientific notation is not accepted");
  }

  mpz_class num;
  mpz_class den = 1;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto p = body.substr(0, slash);
    const auto q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw ParseError(token, "expected p/q with integer p and positive integer q");
    num = digits_to_mpz(p);
    den = digits_to_mpz(q);
    if (den == 0) throw ParseError(token, "zero denominator");
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) throw ParseError(token, "expected digits on both sides of '.'");
    num = digits_to_mpz(std::string(whole) + std::string(frac));
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(body)) throw ParseError(token, "not a number");
    num = digits_to_mpz(body);
  }
  if (negative) num = -num;

  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

bool Scalar::is_canonical() const {
  if (sgn(denominator()) <= 0) return false;
  mpz_class g;
  mpz_class a = abs(numerator());
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), denominator().get_mpz_t());
  return g == 1;
}

std::string Scalar::to_string() const { return value_.get_str(10); }

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Scalar(mpq_class(a.value_ / b.value_));
}

Scalar parse_scalar(std::string_view text) { return Scalar::parse(text); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

const Scalar& ExtendedScalar::value() const {
  if (infinite_) throw DomainError("value() of infinite ExtendedScalar");
  return value_;
}

std::string ExtendedScalar::to_string() const { return infinite_ ? "inf" : value_.to_string(); }

std::ostream& operator<<(std::ostream& os, const ExtendedScalar& s) { return os << s.to_string(); }

}  // namespace ranklab
