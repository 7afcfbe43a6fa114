#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idensity/ideal.hpp"
#include "idensity/index_set.hpp"
#include "idensity/value_expr.hpp"

namespace idensity {

struct Piece {
  IndexSet set;
  ValueExpr law;
};

/// Real sequence x_1, x_2, ... given by a partition of N into IndexSets,
/// each carrying a value law.
class PiecewiseSequence {
 public:
  /// Throws Error(PartitionViolation) unless the pieces are pairwise
  /// disjoint and cover N.
  explicit PiecewiseSequence(std::vector<Piece> pieces);
  /// Skips the overlap and cover checks; for pieces built disjoint by
  /// construction, where the quadratic check would dominate.
  static PiecewiseSequence assume_partition(std::vector<Piece> pieces);
  static PiecewiseSequence single(const ValueExpr& law);
  static PiecewiseSequence constant(const Rational& value);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const NormalForm& piece_form(std::size_t i) const { return forms_[i]; }

  /// Index of the piece containing n (n >= 1).
  std::size_t piece_of(Natural n) const;
  Rational eval(Natural n) const;

  /// One `SET => LAW` line per piece.
  std::string to_string() const;
  /// Lines `SET => LAW`; blank lines and `#` comments are skipped.
  static PiecewiseSequence parse(std::string_view text);

 private:
  PiecewiseSequence() = default;

  std::vector<Piece> pieces_;
  std::vector<NormalForm> forms_;
};

struct PieceLimit {
  ExtReal limit;
  Approach approach;
  bool in_ideal;
};

std::vector<PieceLimit> piece_limits(const PiecewiseSequence& seq, Ideal ideal);

/// sup B_x, B_x = {b : {k : x_k > b} not in I}.
ExtReal i_limsup(const PiecewiseSequence& seq, Ideal ideal);
/// inf A_x, A_x = {a : {k : x_k < a} not in I}.
ExtReal i_liminf(const PiecewiseSequence& seq, Ideal ideal);

/// Membership of b in B_x and of a in A_x, including the boundary case where
/// a piece limit equals the threshold.
bool in_upper_thresholds(const PiecewiseSequence& seq, Ideal ideal, const Rational& b);
bool in_lower_thresholds(const PiecewiseSequence& seq, Ideal ideal, const Rational& a);

/// The I-limit when it exists (finite and I-limsup = I-liminf).
std::optional<Rational> is_i_convergent(const PiecewiseSequence& seq, Ideal ideal);
bool is_i_bounded(const PiecewiseSequence& seq, Ideal ideal);

/// {k : |x_k - center| >= eps} belongs to I; decided piecewise.
bool deviation_set_in_ideal(const PiecewiseSequence& seq, Ideal ideal, const Rational& center,
                            const Rational& eps);

enum class CombineOp { Sum, Negate, Shift };

PiecewiseSequence sum(const PiecewiseSequence& a, const PiecewiseSequence& b);
PiecewiseSequence negate(const PiecewiseSequence& a);
PiecewiseSequence shift(const PiecewiseSequence& a, const Rational& by);
/// Negate and Shift ignore `b`; Shift uses `by`. Throws Error(GrammarOverflow)
/// when a pointwise sum leaves the law grammar.
PiecewiseSequence combine(const PiecewiseSequence& a, const PiecewiseSequence& b, CombineOp op,
                          const Rational& by = Rational(0));

}  // namespace idensity
