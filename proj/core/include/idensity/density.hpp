#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idensity/ideal.hpp"
#include "idensity/interval_set.hpp"
#include "idensity/sequence.hpp"

namespace idensity {

/// On `set`, J_n = [anchor - left(n), anchor + right(n)].
struct GeneratorPiece {
  IndexSet set;
  ValueExpr left;
  ValueExpr right;
};

/// Family of closed windows J_n about a fixed anchor point, with arm lengths
/// given piecewise over N.
class IntervalGenerator {
 public:
  /// Throws Error(InvalidGenerator) unless the pieces partition N, every arm
  /// is a law in n (not a rank), arms are >= 0 and left + right > 0.
  IntervalGenerator(Rational anchor, std::vector<GeneratorPiece> pieces);
  static IntervalGenerator symmetric(Rational anchor, const ValueExpr& arm);

  const Rational& anchor() const { return anchor_; }
  const std::vector<GeneratorPiece>& pieces() const { return pieces_; }
  const GeneratorPiece& piece_at(Natural n) const;

  Window window(Natural n) const;
  Rational length(Natural n) const;

  /// `anchor p` followed by `SET => LEFT ; RIGHT` lines.
  std::string to_string() const;
  static IntervalGenerator parse(std::string_view text);

 private:
  Rational anchor_;
  std::vector<GeneratorPiece> pieces_;
  std::vector<NormalForm> forms_;
};

/// {n : lambda(J_n) < 1/n}.
IndexSet script_s(const IntervalGenerator& gen);
/// script_s(gen) lies in the filter of `ideal`.
bool validate_generator(const IntervalGenerator& gen, Ideal ideal);

/// Behaviour of E immediately left and right of p: whether E fills a
/// one-sided neighbourhood, and how far that neighbourhood reaches (capped
/// at 1).
struct LocalSignature {
  bool left_full;
  bool right_full;
  Rational left_reach;
  Rational right_reach;
  bool point_in;
};

LocalSignature local_signature(const Rational& p, const IntervalSet& e);

/// n -> lambda(E & J_n) / lambda(J_n) as a piecewise sequence. Throws
/// Error(GrammarOverflow) when an eventual ratio has no law.
PiecewiseSequence ratio_sequence(const IntervalGenerator& gen, const IntervalSet& e);

/// (I-liminf, I-limsup) of the ratio sequence. Throws Error(InvalidGenerator)
/// when the generator is not admissible for `ideal`.
std::pair<ExtReal, ExtReal> i_density_along(const IntervalGenerator& gen, const IntervalSet& e, Ideal ideal);

enum class DensityOutcome { One, Zero, NotExist };
std::string_view outcome_name(DensityOutcome outcome);

struct DensityClassification {
  DensityOutcome outcome;
  Rational lower;
  Rational upper;
  /// For NotExist: admissible generators realizing `lower` and `upper`.
  std::vector<IntervalGenerator> witnesses;
};

DensityClassification classify_i_density(const Rational& p, const IntervalSet& e, Ideal ideal);

/// Points where E has I-density 1.
IntervalSet theta(const IntervalSet& e, Ideal ideal);
/// p is an I-dispersion point of E (the complement has I-density 1 there).
bool is_dispersion_point(const Rational& p, const IntervalSet& e, Ideal ideal);

/// Ordinary symmetric density lim lambda(E & [p-h,p+h]) / 2h.
Rational classical_density(const Rational& p, const IntervalSet& e);

/// Windows [p - 1/(2n+1), p + 1/(2n+1)] off the squares and [p - n, p + n]
/// on them.
IntervalGenerator square_blowup_generator(const Rational& p);

}  // namespace idensity
