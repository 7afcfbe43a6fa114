#include "idensity/density.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "idensity/error.hpp"

namespace idensity {
namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidGenerator, what); }

// Largest index explicitly tabulated before the eventual laws take over.
constexpr Natural kMaxPrefix = 100'000;

// Where a nonnegative law vanishes: nowhere, only at n = 1, or everywhere.
enum class Zeros { None, AtOne, All };

Zeros zeros_of(const ValueExpr& law) {
  switch (law.approach()) {
    case Approach::Exact: return law.offset() == 0 ? Zeros::All : Zeros::None;
    case Approach::FromAbove: return Zeros::None;
    case Approach::FromBelow: return law.at(1) == 0 ? Zeros::AtOne : Zeros::None;
  }
  return Zeros::None;
}

void check_arms(const GeneratorPiece& piece, const NormalForm& form) {
  for (const ValueExpr* arm : {&piece.left, &piece.right}) {
    if (arm->uses_rank()) invalid("generator arm '" + arm->to_string() + "' must be a law in n");
    if (arm->infimum() < ExtReal(Rational(0))) {
      invalid("generator arm '" + arm->to_string() + "' takes negative values");
    }
  }
  Zeros l = zeros_of(piece.left), r = zeros_of(piece.right);
  if (l == Zeros::None || r == Zeros::None) return;
  bool clash = (l == Zeros::All && r == Zeros::All) || form.contains(1);
  if (clash) invalid("windows on '" + piece.set.to_string() + "' have zero length");
}

// Natural n with pred(n), where pred is false then true; throws past the cap.
template <class Pred>
Natural first_true(Pred pred) {
  if (pred(1)) return 1;
  Natural lo = 1, hi = 2;
  while (!pred(hi)) {
    lo = hi;
    if (hi > kMaxEnumeratedIndex) {
      throw Error(ErrorCode::NormalizationOverflow, "eventual regime starts beyond the enumeration cap");
    }
    hi *= 2;
  }
  while (hi - lo > 1) {
    Natural mid = lo + (hi - lo) / 2;
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

// lambda(E & [p, p + u]) (or [p - u, p] when `leftward`) is affine in u on
// each segment between consecutive breakpoint distances.
struct Arm {
  Rational offset;  // alpha
  Rational slope;   // beta in {0, 1}
  Natural from;     // law stays on the segment for n >= from
};

Arm eventual_arm(const Rational& p, const IntervalSet& e, const ValueExpr& law, bool leftward) {
  std::vector<Rational> dist{Rational(0)};
  for (const auto& x : e.breakpoints()) {
    if (leftward ? x < p : x > p) dist.push_back(leftward ? Rational(p - x) : Rational(x - p));
  }
  std::sort(dist.begin(), dist.end());
  const std::size_t m = dist.size() - 1;
  auto point_at = [&](const Rational& d) { return leftward ? Rational(p - d) : Rational(p + d); };
  std::vector<Rational> slope(m + 1), value(m + 1);
  value[0] = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    Rational probe = i < m ? Rational((dist[i] + dist[i + 1]) / 2) : Rational(dist[i] + 1);
    slope[i] = e.contains(point_at(probe)) ? 1 : 0;
    if (i < m) value[i + 1] = value[i] + slope[i] * (dist[i + 1] - dist[i]);
  }

  const ExtReal lim = law.limit();
  std::size_t seg = m;
  if (lim.is_finite()) {
    seg = 0;
    for (std::size_t i = 0; i <= m; ++i) {
      bool ok = law.approach() == Approach::FromBelow ? dist[i] < lim.value() : dist[i] <= lim.value();
      if (ok) seg = i;
    }
  }
  auto on_segment = [&](Natural n) {
    Rational v = law.at(n);
    if (v < dist[seg]) return false;
    return seg == m || v <= dist[seg + 1];
  };
  return {value[seg] - slope[seg] * dist[seg], slope[seg], first_true(on_segment)};
}

ValueExpr parse_arm(std::string_view text, const IndexSet& piece, std::size_t line_no, std::size_t column) {
  try {
    return ValueExpr::parse(text, piece);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), line_no, column);
  }
}

}  // namespace

IntervalGenerator::IntervalGenerator(Rational anchor, std::vector<GeneratorPiece> pieces)
    : anchor_(std::move(anchor)), pieces_(std::move(pieces)) {
  std::vector<Piece> probe;
  for (const auto& p : pieces_) probe.push_back({p.set, ValueExpr::constant(Rational(0))});
  try {
    PiecewiseSequence check(std::move(probe));
    for (std::size_t i = 0; i < pieces_.size(); ++i) forms_.push_back(check.piece_form(i));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PartitionViolation) throw;
    invalid(std::string("generator pieces: ") + e.what());
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) check_arms(pieces_[i], forms_[i]);
}

IntervalGenerator IntervalGenerator::symmetric(Rational anchor, const ValueExpr& arm) {
  return IntervalGenerator(std::move(anchor), {GeneratorPiece{IndexSet::naturals(), arm, arm}});
}

const GeneratorPiece& IntervalGenerator::piece_at(Natural n) const {
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].contains(n)) return pieces_[i];
  }
  throw Error(ErrorCode::PreconditionViolation, "no window for index " + std::to_string(n));
}

Window IntervalGenerator::window(Natural n) const {
  const auto& piece = piece_at(n);
  return {anchor_ - piece.left.at(n), anchor_ + piece.right.at(n)};
}

Rational IntervalGenerator::length(Natural n) const { return window(n).length(); }

std::string IntervalGenerator::to_string() const {
  std::string out = "anchor " + idensity::to_string(anchor_) + "\n";
  for (const auto& p : pieces_) {
    out += p.set.to_string() + " => " + p.left.to_string() + " ; " + p.right.to_string() + "\n";
  }
  return out;
}

IntervalGenerator IntervalGenerator::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<Rational> anchor;
  std::vector<GeneratorPiece> pieces;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (!anchor) {
      if (line.compare(start, 6, "anchor") != 0) throw ParseError("generator: expected 'anchor p'", line_no, start + 1);
      std::string value = line.substr(start + 6);
      value.erase(0, value.find_first_not_of(" \t"));
      value.erase(value.find_last_not_of(" \t\r") + 1);
      try {
        anchor = parse_rational(value);
      } catch (const Error&) {
        throw ParseError("generator: bad anchor '" + value + "'", line_no, start + 7);
      }
      continue;
    }
    auto arrow = line.find("=>");
    auto semi = line.find(';');
    if (arrow == std::string::npos || semi == std::string::npos || semi < arrow) {
      throw ParseError("generator: expected 'SET => LEFT ; RIGHT'", line_no, start + 1);
    }
    IndexSet set;
    try {
      set = IndexSet::parse(std::string_view(line).substr(0, arrow));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), line_no, e.column());
    }
    auto left = parse_arm(std::string_view(line).substr(arrow + 2, semi - arrow - 2), set, line_no, arrow + 3);
    auto right = parse_arm(std::string_view(line).substr(semi + 1), set, line_no, semi + 2);
    pieces.push_back({set, left, right});
  }
  if (!anchor) throw ParseError("generator: missing anchor", std::max<std::size_t>(line_no, 1), 1);
  if (pieces.empty()) throw ParseError("generator: no pieces", std::max<std::size_t>(line_no, 1), 1);
  return IntervalGenerator(*anchor, std::move(pieces));
}

IndexSet script_s(const IntervalGenerator& gen) {
  IndexSet out;
  for (const auto& piece : gen.pieces()) {
    RationalFunction l = piece.left.as_rational_function();
    RationalFunction r = piece.right.as_rational_function();
    Polynomial num = l.numerator * r.denominator + r.numerator * l.denominator;
    Polynomial den = l.denominator * r.denominator;
    // lambda(J_n) < 1/n  <=>  n * num(n) - den(n) < 0, since den > 0
    auto neg = (Polynomial::identity() * num - den).negative_naturals();
    IndexSet solutions = IndexSet::finite(neg.below_bound);
    if (neg.eventually) solutions = solutions | IndexSet::tail(neg.bound + 1);
    out = out | (piece.set & solutions);
  }
  return normalize(out);
}

bool validate_generator(const IntervalGenerator& gen, Ideal ideal) { return ideal.in_filter(script_s(gen)); }

LocalSignature local_signature(const Rational& p, const IntervalSet& e) {
  std::optional<Rational> below, above;
  for (const auto& x : e.breakpoints()) {
    if (x < p) below = x;
    if (x > p && !above) above = x;
  }
  Rational one(1);
  Rational left_reach = below ? std::min(one, Rational(p - *below)) : one;
  Rational right_reach = above ? std::min(one, Rational(*above - p)) : one;
  return {e.contains(Rational(p - left_reach / 2)), e.contains(Rational(p + right_reach / 2)), left_reach,
          right_reach, e.contains(p)};
}

PiecewiseSequence ratio_sequence(const IntervalGenerator& gen, const IntervalSet& e) {
  const Rational& p = gen.anchor();
  std::vector<Piece> out;
  std::map<Rational, std::vector<Natural>> prefix;
  for (const auto& piece : gen.pieces()) {
    Arm al = eventual_arm(p, e, piece.left, true);
    Arm ar = eventual_arm(p, e, piece.right, false);
    RationalFunction l = piece.left.as_rational_function();
    RationalFunction r = piece.right.as_rational_function();
    Polynomial num = Polynomial::constant(al.offset + ar.offset) * l.denominator * r.denominator +
                     Polynomial::constant(al.slope) * l.numerator * r.denominator +
                     Polynomial::constant(ar.slope) * r.numerator * l.denominator;
    Polynomial den = l.numerator * r.denominator + r.numerator * l.denominator;
    ValueExpr law = ValueExpr::from_rational_function({num, den});

    Natural from = std::max(al.from, ar.from);
    if (from > kMaxPrefix) {
      throw Error(ErrorCode::NormalizationOverflow, "ratio prefix longer than " + std::to_string(kMaxPrefix));
    }
    IndexSet eventual = piece.set;
    if (from > 1) {
      NormalForm before = normal_form(piece.set - IndexSet::tail(from));
      for (Natural n = 1; n < from; ++n) {
        if (!before.contains(n)) continue;
        prefix[e.measure_in_window(gen.window(n)) / gen.length(n)].push_back(n);
      }
      eventual = piece.set & IndexSet::tail(from);
      if (is_empty(normal_form(eventual))) continue;
    }
    out.push_back({eventual, law});
  }
  for (auto& [value, indices] : prefix) {
    out.push_back({IndexSet::finite(std::move(indices)), ValueExpr::constant(value)});
  }
  return PiecewiseSequence::assume_partition(std::move(out));
}

std::pair<ExtReal, ExtReal> i_density_along(const IntervalGenerator& gen, const IntervalSet& e, Ideal ideal) {
  if (!validate_generator(gen, ideal)) {
    invalid("generator is not admissible for the " + ideal.name() + " ideal: {n : lambda(J_n) < 1/n} is " +
            script_s(gen).to_string());
  }
  PiecewiseSequence ratios = ratio_sequence(gen, e);
  return {i_liminf(ratios, ideal), i_limsup(ratios, ideal)};
}

std::string_view outcome_name(DensityOutcome outcome) {
  switch (outcome) {
    case DensityOutcome::One: return "One";
    case DensityOutcome::Zero: return "Zero";
    case DensityOutcome::NotExist: return "NotExist";
  }
  return "?";
}

DensityClassification classify_i_density(const Rational& p, const IntervalSet& e, Ideal ideal) {
  LocalSignature sig = local_signature(p, e);
  if (sig.left_full && sig.right_full) return {DensityOutcome::One, Rational(1), Rational(1), {}};
  if (!sig.left_full && !sig.right_full) return {DensityOutcome::Zero, Rational(0), Rational(0), {}};

  // One side full, the other empty: windows hugging either side realize
  // ratio 1 and ratio 0 from the first index on.
  auto hug = [&](bool left) {
    const Rational& reach = left ? sig.left_reach : sig.right_reach;
    ValueExpr arm = ValueExpr::rational1(reach, Rational(1), Rational(1));
    ValueExpr none = ValueExpr::constant(Rational(0));
    return IntervalGenerator(p, {GeneratorPiece{IndexSet::naturals(), left ? arm : none, left ? none : arm}});
  };
  IntervalGenerator empty_side = hug(!sig.left_full);
  IntervalGenerator full_side = hug(sig.left_full);
  for (const auto* g : {&empty_side, &full_side}) {
    if (!validate_generator(*g, ideal)) throw Error(ErrorCode::InvariantBreach, "witness generator not admissible");
  }
  return {DensityOutcome::NotExist, Rational(0), Rational(1), {empty_side, full_side}};
}

IntervalSet theta(const IntervalSet& e, Ideal ideal) {
  (void)ideal;  // the answer is the same for both ideals on finite unions
  MembershipPattern pat = MembershipPattern::sample(e, e.breakpoints());
  for (std::size_t i = 0; i < pat.points.size(); ++i) pat.at_point[i] = pat.gaps[i] && pat.gaps[i + 1];
  return pat.build();
}

bool is_dispersion_point(const Rational& p, const IntervalSet& e, Ideal ideal) {
  return classify_i_density(p, e.complement(), ideal).outcome == DensityOutcome::One;
}

Rational classical_density(const Rational& p, const IntervalSet& e) {
  LocalSignature sig = local_signature(p, e);
  Rational d(static_cast<int>(sig.left_full) + static_cast<int>(sig.right_full), 2);
  d.canonicalize();
  return d;
}

IntervalGenerator square_blowup_generator(const Rational& p) {
  ValueExpr small = ValueExpr::rational1(Rational(1), Rational(2), Rational(1));
  ValueExpr big = ValueExpr::linear(Rational(1), Rational(0));
  return IntervalGenerator(p, {GeneratorPiece{IndexSet::naturals() - IndexSet::squares(), small, small},
                               GeneratorPiece{IndexSet::squares(), big, big}});
}

}  // namespace idensity
