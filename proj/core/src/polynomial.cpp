#include "idensity/polynomial.hpp"

#include <algorithm>

#include "idensity/error.hpp"

namespace idensity {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::identity() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

const Rational& Polynomial::coefficient(unsigned i) const {
  static const Rational zero(0);
  return i < coefficients_.size() ? coefficients_[i] : zero;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coefficients_.size(), b.coefficients_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) v[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) v[i] += b.coefficients_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v = coefficients_;
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coefficients_.size() + b.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      v[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(v));
}

void Polynomial::divide(const Polynomial& dividend, const Polynomial& divisor, Polynomial& quotient,
                        Polynomial& remainder) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients_;
  const int dd = divisor.degree();
  std::vector<Rational> quo(std::max(0, dividend.degree() - dd + 1), Rational(0));
  for (int i = dividend.degree(); i >= dd; --i) {
    Rational factor = rem[i] / divisor.leading();
    quo[i - dd] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= factor * divisor.coefficients_[j];
  }
  quotient = Polynomial(std::move(quo));
  remainder = Polynomial(std::move(rem));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divide(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational lead = a.leading();
  for (auto& c : a.coefficients_) c /= lead;
  return a;
}

Polynomial::NegativeSet Polynomial::negative_naturals() const {
  NegativeSet out;
  if (is_zero()) return out;
  out.eventually = leading() < 0;
  // Every real root has |x| < 1 + max |c_i / c_lead|.
  Rational bound(0);
  for (int i = 0; i < degree(); ++i) {
    Rational ratio = abs(coefficients_[i] / leading());
    if (ratio > bound) bound = ratio;
  }
  bound += 1;
  Integer ceil_bound;
  mpz_cdiv_q(ceil_bound.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  if (ceil_bound > static_cast<unsigned long>(kMaxEnumeratedIndex)) {
    throw Error(ErrorCode::NormalizationOverflow,
                "root bound of " + to_string() + " exceeds " + std::to_string(kMaxEnumeratedIndex));
  }
  out.bound = static_cast<Natural>(ceil_bound.get_ui());
  for (Natural n = 1; n <= out.bound; ++n) {
    if ((*this)(Rational(static_cast<unsigned long>(n))) < 0) out.below_bound.push_back(n);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coefficients_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + idensity::to_string(c) + ")";
    if (i >= 1) out += "*n";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

RationalFunction RationalFunction::reduced() const {
  Polynomial g = Polynomial::gcd(numerator, denominator);
  RationalFunction out{numerator, denominator};
  if (!g.is_zero() && g.degree() > 0) {
    Polynomial q, r;
    Polynomial::divide(numerator, g, q, r);
    out.numerator = q;
    Polynomial::divide(denominator, g, q, r);
    out.denominator = q;
  }
  Rational lead = out.denominator.leading();
  out.numerator = out.numerator * Polynomial::constant(Rational(1 / lead));
  out.denominator = out.denominator * Polynomial::constant(Rational(1 / lead));
  return out;
}

}  // namespace idensity
