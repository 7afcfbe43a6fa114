#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "idensity/interval_set.hpp"
#include "idensity/sequence.hpp"

namespace idensity {

/// Seeded generator of random inputs for property runs. Uses raw
/// mt19937_64 output only, so a seed gives the same inputs on every
/// platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool chance(unsigned percent) { return below(100) < percent; }

  /// k/den with k in [lo*den, hi*den].
  Rational grid_point(std::int64_t lo, std::int64_t hi, std::int64_t den);

  /// 0-4 intervals (some degenerate) with endpoints on a 1/4 grid in
  /// [-4, 4]; complemented one time in five.
  IntervalSet interval_set();
  /// A point near the structure of `e`: an endpoint or a grid point.
  Rational point_near(const IntervalSet& e);

  /// Union of progressions with a small common modulus plus finite
  /// corrections. No sparse atoms.
  IndexSet periodic_set();
  /// periodic_set() combined with at most one sparse atom.
  IndexSet index_set();

  /// A law in n (or in the rank of `piece` when given, sometimes).
  ValueExpr law(const IndexSet* piece = nullptr);
  /// Laws whose pairwise sums mostly stay in the grammar.
  ValueExpr summable_law();

  /// Random partition of N (periodic pieces, optionally one sparse and one
  /// finite carve-out) with random laws.
  PiecewiseSequence sequence(bool summable = false);
  /// Two sequences sharing the same sparse kind, so their sum can refine.
  std::pair<PiecewiseSequence, PiecewiseSequence> sequence_pair();

 private:
  SparseAtom sparse_atom();
  PiecewiseSequence sequence_with(const SparseAtom& atom, bool summable);

  std::mt19937_64 engine_;
};

}  // namespace idensity
