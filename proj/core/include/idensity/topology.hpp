#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "idensity/density.hpp"

namespace idensity {

enum class LemmaStatus { Pass, Fail, Vacuous };
std::string_view status_name(LemmaStatus status);

struct LemmaReport {
  std::string name;
  std::string inputs;
  std::string expected;
  std::string computed;
  LemmaStatus status;

  /// Vacuous reports count as passing.
  bool pass() const { return status != LemmaStatus::Fail; }
};

/// A is open in the density topology: A is contained in theta(A).
bool is_ti_open(const IntervalSet& a, Ideal ideal);
/// Open in the usual topology of R.
bool is_usual_open(const IntervalSet& a);

/// Runs every theta law on (A, B); laws whose hypothesis fails are reported
/// as Vacuous.
std::vector<LemmaReport> check_theta_lemmas(const IntervalSet& a, const IntervalSet& b, Ideal ideal);

/// Finite intersection and union of the family are again open. Throws
/// Error(PreconditionViolation) listing members that are not open.
LemmaReport check_finite_closure(const std::vector<IntervalSet>& family, Ideal ideal);

/// B = C | D with C open in the density topology and D null.
struct BorelDecomposition {
  IntervalSet open_part;
  IntervalSet null_part;
};

/// Throws Error(InvariantBreach) when a postcondition fails.
BorelDecomposition borel_decompose(const IntervalSet& b, Ideal ideal);

}  // namespace idensity
