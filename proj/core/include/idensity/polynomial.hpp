#pragma once

#include <string>
#include <vector>

#include "idensity/index_set.hpp"
#include "idensity/rational.hpp"

namespace idensity {

/// Dense univariate polynomial with exact rational coefficients,
/// coefficients_[i] multiplies n^i. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  /// The variable n.
  static Polynomial identity();
  static Polynomial monomial(const Rational& c, unsigned degree);

  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const Rational& coefficient(unsigned i) const;
  const Rational& leading() const { return coefficients_.back(); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational operator()(const Rational& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division; precondition: divisor nonzero.
  static void divide(const Polynomial& dividend, const Polynomial& divisor, Polynomial& quotient,
                     Polynomial& remainder);
  /// Monic greatest common divisor (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  /// Natural numbers n >= 1 with p(n) < 0, described as a finite exception
  /// list plus the sign for all larger n. Uses the Cauchy root bound; throws
  /// Error(NormalizationOverflow) when that bound exceeds kMaxEnumeratedIndex.
  struct NegativeSet {
    bool eventually = false;           // p(n) < 0 for every n > bound
    Natural bound = 0;
    std::vector<Natural> below_bound;  // n in [1, bound] with p(n) < 0
  };
  NegativeSet negative_naturals() const;

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

/// Quotient of polynomials with a denominator that is positive for n >= 1.
struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;

  Rational operator()(const Rational& x) const { return numerator(x) / denominator(x); }

  /// Cancels the polynomial gcd and makes the denominator's leading
  /// coefficient 1.
  RationalFunction reduced() const;
};

}  // namespace idensity
