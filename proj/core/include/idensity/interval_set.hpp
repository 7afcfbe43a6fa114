#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "idensity/rational.hpp"

namespace idensity {

/// Interval with rational endpoints. lo == hi is allowed only as the closed
/// singleton {lo}.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
  static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
  static Interval point(const Rational& x) { return {x, x, true, true}; }

  bool degenerate() const { return lo == hi; }
  bool contains(const Rational& x) const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed window [lo, hi] about a point.
struct Window {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
};

/// Finite union of rational intervals, or the complement in R of one.
///
/// The representation is canonical: intervals are sorted, pairwise disjoint
/// and never mergeable ([0,1] | [1,2] is stored as [0,2], while (0,1) | (1,2)
/// stays split). Equal sets therefore compare equal structurally.
class IntervalSet {
 public:
  /// The empty set.
  IntervalSet() = default;

  /// Throws Error(MalformedInterval) when some lo > hi.
  static IntervalSet from_intervals(const std::vector<Interval>& raw, bool complemented = false);
  static IntervalSet empty() { return {}; }
  static IntervalSet real_line();
  static IntervalSet of(const Interval& i) { return from_intervals({i}); }
  static IntervalSet points(const std::vector<Rational>& xs);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool complemented() const { return complemented_; }

  bool contains(const Rational& x) const;
  bool is_empty() const { return !complemented_ && intervals_.empty(); }
  bool is_real_line() const { return complemented_ && intervals_.empty(); }

  /// Lebesgue measure; +inf for complemented sets.
  ExtReal measure() const;
  /// lambda(A & J), finite even for complemented A.
  Rational measure_in_window(const Window& window) const;
  /// lambda(A) = 0.
  bool is_null() const;

  IntervalSet complement() const;
  friend IntervalSet operator|(const IntervalSet& a, const IntervalSet& b);
  friend IntervalSet operator&(const IntervalSet& a, const IntervalSet& b);
  friend IntervalSet operator-(const IntervalSet& a, const IntervalSet& b);
  friend IntervalSet operator^(const IntervalSet& a, const IntervalSet& b);
  bool subset_of(const IntervalSet& other) const;

  /// All interval endpoints, sorted and distinct.
  std::vector<Rational> breakpoints() const;

  /// `[0,1] | (2,3] | {5}`, prefixed by `co ` when complemented; `{}` is
  /// the empty set and `co {}` (or `R`) the real line.
  std::string to_string() const;
  static IntervalSet parse(std::string_view text);

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  friend class MembershipPattern;

  std::vector<Interval> intervals_;
  bool complemented_ = false;
};

enum class SetOp { Union, Intersect, Subtract, SymmetricDifference };
IntervalSet boolean(const IntervalSet& a, const IntervalSet& b, SetOp op);

/// Membership of a set sampled at its breakpoints and on the open gaps
/// between them. gaps[0] is (-inf, x_0), gaps[i] is (x_{i-1}, x_i) and
/// gaps.back() is (x_last, +inf). Any such pattern with equal outer gaps
/// names exactly one IntervalSet.
class MembershipPattern {
 public:
  std::vector<Rational> points;
  std::vector<bool> at_point;
  std::vector<bool> gaps;

  /// Pattern of `set` refined to the given sorted distinct breakpoints,
  /// which must include the set's own.
  static MembershipPattern sample(const IntervalSet& set, const std::vector<Rational>& points);
  IntervalSet build() const;
};

}  // namespace idensity
