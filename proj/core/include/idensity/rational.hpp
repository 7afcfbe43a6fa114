#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace idensity {

/// Exact rational; always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Renders as `p/q` in lowest terms, including integers (`1/1`, `0/1`).
std::string to_string(const Rational& value);

/// Accepts `p`, `-p`, `p/q`, `-p/q` with decimal digits.
Rational parse_rational(std::string_view text);

/// A rational extended by the two infinities.
class ExtReal {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtReal() : kind_(Kind::Finite), value_(0) {}
  ExtReal(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT

  static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }

  /// Precondition: is_finite().
  const Rational& value() const;

  ExtReal operator-() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

 private:
  explicit ExtReal(Kind kind) : kind_(kind), value_(0) {}

  Kind kind_;
  Rational value_;
};

/// Sum where defined; +inf + -inf throws std::domain_error.
ExtReal operator+(const ExtReal& a, const ExtReal& b);

std::string to_string(const ExtReal& value);
ExtReal parse_ext_real(std::string_view text);
std::ostream& operator<<(std::ostream& os, const ExtReal& value);

}  // namespace idensity
