#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "idensity/index_set.hpp"
#include "idensity/polynomial.hpp"
#include "idensity/rational.hpp"

namespace idensity {

/// How a law approaches its limit. Every non-constant law is strictly
/// monotone in its variable for v >= 1, so FromAbove means every value lies
/// strictly above the limit.
enum class Approach { FromAbove, FromBelow, Exact };

std::string_view approach_name(Approach a);

/// Value law of one sequence piece, as a function of a variable v that is
/// either the index n or the rank of n inside a fixed IndexSet.
///
///   Constant          d
///   Rational1         c / (a v + b)
///   ShiftedRational1  d + c / (a v + b)
///   PowerDecay        d + c / v^k
///   Linear            a v + b
///
/// Construction canonicalizes degenerate coefficients (e.g. c = 0 gives a
/// Constant) and rejects denominators that vanish or go negative for v >= 1.
class ValueExpr {
 public:
  enum class Form { Constant, Rational1, ShiftedRational1, PowerDecay, Linear };

  static ValueExpr constant(Rational d);
  static ValueExpr rational1(Rational c, Rational a, Rational b);
  static ValueExpr shifted_rational1(Rational d, Rational c, Rational a, Rational b);
  static ValueExpr power_decay(Rational c, unsigned k, Rational d = Rational(0));
  static ValueExpr linear(Rational a, Rational b);

  /// Same law with v = rank of n inside `base`.
  ValueExpr over_rank_in(const IndexSet& base) const;

  Form form() const { return form_; }
  bool uses_rank() const { return rank_base_ != nullptr; }
  const IndexSet* rank_base() const { return rank_base_ ? &rank_base_->set : nullptr; }

  const Rational& offset() const { return d_; }
  const Rational& coefficient() const { return c_; }
  const Rational& slope() const { return a_; }
  const Rational& intercept() const { return b_; }
  unsigned power() const { return k_; }

  /// Value at variable value v >= 1.
  Rational at(Natural v) const;
  /// Value at index n (resolving rank when needed).
  Rational eval(Natural n) const;

  ExtReal limit() const;
  Approach approach() const;
  /// inf and sup over v >= 1 (one of them is the limit unless constant).
  ExtReal infimum() const;
  ExtReal supremum() const;

  ValueExpr negated() const;
  ValueExpr shifted(const Rational& by) const;
  /// Pointwise sum; throws Error(GrammarOverflow) when the sum has no law.
  friend ValueExpr operator+(const ValueExpr& x, const ValueExpr& y);

  /// N(v)/D(v) with D > 0 for v >= 1. Valid for index-variable laws only.
  RationalFunction as_rational_function() const;
  /// Inverse of as_rational_function for reduced functions that fit the
  /// grammar; throws Error(GrammarOverflow) otherwise.
  static ValueExpr from_rational_function(const RationalFunction& f);

  /// `const 1`, `1/(2*n+1)`, `1+1/(2*n+1)`, `1/rank^2`, `3*n-1`, ...
  std::string to_string() const;
  /// `rank`, when present, refers to `piece`.
  static ValueExpr parse(std::string_view text, const std::optional<IndexSet>& piece = std::nullopt);

  friend bool operator==(const ValueExpr& x, const ValueExpr& y);

 private:
  struct RankBase {
    IndexSet set;
    NormalForm form;
  };

  ValueExpr() = default;
  bool same_variable(const ValueExpr& other) const;

  Form form_ = Form::Constant;
  Rational d_{0}, c_{0}, a_{0}, b_{0};
  unsigned k_ = 0;
  std::shared_ptr<const RankBase> rank_base_;
};

}  // namespace idensity
