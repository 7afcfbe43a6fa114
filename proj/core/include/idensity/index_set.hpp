#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "idensity/rational.hpp"

namespace idensity {

/// Elements of N. N starts at 1.
using Natural = std::uint64_t;

enum class SparseKind : std::uint8_t { Squares, Cubes, Powers };

/// Zero-density named subsets of N: {m^2}, {m^3} (m >= 1) and {b^k} (k >= 1).
struct SparseAtom {
  SparseKind kind = SparseKind::Squares;
  Natural base = 0;  // only meaningful for Powers; >= 2

  static SparseAtom squares() { return {SparseKind::Squares, 0}; }
  static SparseAtom cubes() { return {SparseKind::Cubes, 0}; }
  static SparseAtom powers_of(Natural base);

  bool contains(Natural n) const;
  /// 1-based position of n in the atom; precondition contains(n).
  Natural rank(Natural n) const;
  /// All members <= limit in increasing order.
  std::vector<Natural> members_upto(Natural limit) const;
  std::string to_string() const;

  friend auto operator<=>(const SparseAtom&, const SparseAtom&) = default;
};

struct IndexSetNode;

/// Symbolic subset of N: a Boolean expression over finite sets, arithmetic
/// progressions and sparse atoms. Immutable; copies share structure.
class IndexSet {
 public:
  enum class BinaryOp : std::uint8_t { Union, Intersection, Difference };

  /// The empty set.
  IndexSet();

  static IndexSet naturals();
  static IndexSet empty() { return IndexSet(); }
  static IndexSet finite(std::vector<Natural> elements);
  static IndexSet progression(Natural first, Natural step);
  /// {n : n >= first}.
  static IndexSet tail(Natural first) { return progression(first, 1); }
  static IndexSet sparse(SparseAtom atom);
  static IndexSet squares() { return sparse(SparseAtom::squares()); }
  static IndexSet cubes() { return sparse(SparseAtom::cubes()); }
  static IndexSet powers_of(Natural base) { return sparse(SparseAtom::powers_of(base)); }

  friend IndexSet operator|(const IndexSet& a, const IndexSet& b);
  friend IndexSet operator&(const IndexSet& a, const IndexSet& b);
  friend IndexSet operator-(const IndexSet& a, const IndexSet& b);
  IndexSet operator~() const;

  const IndexSetNode& node() const { return *node_; }

  /// Structural recursion; complement is relative to N. contains(0) is false.
  bool contains(Natural n) const;

  /// Textual grammar: `AP(3,3)`, `SQUARES`, `CUBES`, `POW(2)`, `FIN{1,5,9}`,
  /// `NAT`, with `~` > `&`,`\` > `|` and parentheses.
  std::string to_string() const;
  static IndexSet parse(std::string_view text);

  /// Structural equality of expression trees.
  friend bool operator==(const IndexSet& a, const IndexSet& b);

 private:
  explicit IndexSet(std::shared_ptr<const IndexSetNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const IndexSetNode> node_;
};

struct FiniteAtom {
  std::vector<Natural> elements;  // sorted, unique, all >= 1
};

struct ProgressionAtom {
  Natural first = 1;  // >= 1
  Natural step = 1;   // >= 1
};

struct BinaryNode {
  IndexSet::BinaryOp op;
  IndexSet lhs;
  IndexSet rhs;
};

struct ComplementNode {
  IndexSet operand;
};

struct IndexSetNode {
  std::variant<FiniteAtom, ProgressionAtom, SparseAtom, BinaryNode, ComplementNode> value;
};

/// Canonical decided form of an IndexSet.
///
/// For n > threshold the set is given by a table indexed by the residue
/// n mod modulus and by the pattern of sparse atoms containing n; a finite
/// list of corrections fixes the values below the threshold. Cells that can
/// hold only finitely many elements are stored as false and their members
/// appear among the additions.
struct NormalForm {
  Natural modulus = 1;
  std::vector<SparseAtom> kinds;     // sorted, distinct
  std::vector<std::uint8_t> table;   // table[pattern * modulus + residue]
  std::vector<Natural> additions;    // members where the rule says no
  std::vector<Natural> removals;     // non-members where the rule says yes

  /// Bit i set iff kinds[i] contains n.
  std::uint32_t pattern(Natural n) const;
  bool rule(Natural n) const;
  bool contains(Natural n) const;
  bool cell(std::uint32_t pattern, Natural residue) const {
    return table[static_cast<std::size_t>(pattern) * modulus + residue] != 0;
  }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Limits on explicit enumeration during normalization.
inline constexpr Natural kMaxEnumeratedIndex = 1'000'000;
inline constexpr Natural kMaxModulus = Natural{1} << 20;

/// Throws Error(UnsupportedSparseIntersection) when the set positively
/// intersects two distinct sparse atoms, Error(NormalizationOverflow) when
/// the modulus or the explicit prefix exceed the limits above.
NormalForm normal_form(const IndexSet& set);

/// Canonical expression of the normal form; extensionally equal and
/// idempotent.
IndexSet normalize(const IndexSet& set);
IndexSet to_index_set(const NormalForm& form);

/// lim |{k in s : k <= n}| / n, exact.
Rational natural_density(const NormalForm& form);
Rational natural_density(const IndexSet& set);

bool is_finite(const NormalForm& form);
bool is_finite(const IndexSet& set);
bool is_empty(const NormalForm& form);

/// |{k in s : k <= limit}|, exact. Cost is O(sqrt(limit)) for sets with
/// sparse atoms and O(modulus) otherwise.
Natural count_upto(const NormalForm& form, Natural limit);

/// Elements <= limit in increasing order (brute force over the tree).
std::vector<Natural> enumerate_upto(const IndexSet& set, Natural limit);

Natural isqrt(Natural n);
Natural icbrt(Natural n);

}  // namespace idensity
