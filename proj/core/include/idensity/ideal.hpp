#pragma once

#include <string>
#include <string_view>

#include "idensity/index_set.hpp"

namespace idensity {

/// The two admissible ideals on N used throughout: finite sets, and sets of
/// natural density zero.
class Ideal {
 public:
  enum class Kind { Fin, NaturalDensityZero };

  constexpr explicit Ideal(Kind kind) : kind_(kind) {}
  static constexpr Ideal fin() { return Ideal(Kind::Fin); }
  static constexpr Ideal density_zero() { return Ideal(Kind::NaturalDensityZero); }

  /// Accepts `fin` and `d`.
  static Ideal parse(std::string_view name);

  constexpr Kind kind() const { return kind_; }
  std::string name() const { return kind_ == Kind::Fin ? "fin" : "d"; }

  bool contains(const NormalForm& form) const;
  bool contains(const IndexSet& set) const;

  /// s belongs to the dual filter iff its complement belongs to the ideal.
  bool in_filter(const IndexSet& set) const;

  friend constexpr bool operator==(Ideal, Ideal) = default;

 private:
  Kind kind_;
};

}  // namespace idensity
