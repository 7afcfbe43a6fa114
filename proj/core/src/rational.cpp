#include "idensity/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "idensity/error.hpp"

namespace idensity {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnsupportedSparseIntersection: return "UnsupportedSparseIntersection";
    case ErrorCode::NormalizationOverflow: return "NormalizationOverflow";
    case ErrorCode::PartitionViolation: return "PartitionViolation";
    case ErrorCode::GrammarOverflow: return "GrammarOverflow";
    case ErrorCode::MalformedInterval: return "MalformedInterval";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::InvariantBreach: return "InvariantBreach";
    case ErrorCode::GoldenMismatch: return "GoldenMismatch";
  }
  return "Unknown";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto fail = [&](std::size_t col) -> Rational {
    throw ParseError("malformed rational '" + std::string(text) + "'", 1, col + 1);
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t num_end = digits(i);
  if (num_end == i) return fail(i);
  Integer num(std::string(text.substr(i, num_end - i)));
  Integer den(1);
  if (num_end < text.size()) {
    if (text[num_end] != '/') return fail(num_end);
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size()) return fail(num_end + 1);
    den = Integer(std::string(text.substr(num_end + 1, den_end - num_end - 1)));
    if (den == 0) return fail(num_end + 1);
  }
  Rational r(negative ? Integer(-num) : num, den);
  r.canonicalize();
  return r;
}

const Rational& ExtReal::value() const {
  if (kind_ != Kind::Finite) throw std::domain_error("infinite ExtReal has no rational value");
  return value_;
}

ExtReal ExtReal::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    case Kind::Finite: break;
  }
  return ExtReal(Rational(-value_));
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtReal::Kind::Finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ != ExtReal::Kind::Finite) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.is_finite() && b.is_finite()) return ExtReal(Rational(a.value() + b.value()));
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
    throw std::domain_error("+inf + -inf is undefined");
  return a.is_finite() ? b : a;
}

std::string to_string(const ExtReal& value) {
  if (value.is_pos_inf()) return "+inf";
  if (value.is_neg_inf()) return "-inf";
  return to_string(value.value());
}

ExtReal parse_ext_real(std::string_view text) {
  if (text == "+inf" || text == "inf") return ExtReal::pos_inf();
  if (text == "-inf") return ExtReal::neg_inf();
  return ExtReal(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const ExtReal& value) {
  return os << to_string(value);
}

}  // namespace idensity
