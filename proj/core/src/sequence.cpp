#include "idensity/sequence.hpp"

#include <algorithm>
#include <sstream>

#include "idensity/error.hpp"

namespace idensity {

PiecewiseSequence::PiecewiseSequence(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw Error(ErrorCode::PartitionViolation, "a sequence needs at least one piece");
  forms_.reserve(pieces_.size());
  IndexSet cover = pieces_.front().set;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    forms_.push_back(normal_form(pieces_[i].set));
    if (i > 0) cover = cover | pieces_[i].set;
    for (std::size_t j = 0; j < i; ++j) {
      if (!is_empty(normal_form(pieces_[j].set & pieces_[i].set))) {
        throw Error(ErrorCode::PartitionViolation, "pieces '" + pieces_[j].set.to_string() + "' and '" +
                                                       pieces_[i].set.to_string() + "' overlap");
      }
    }
  }
  if (!(normal_form(cover) == normal_form(IndexSet::naturals()))) {
    throw Error(ErrorCode::PartitionViolation, "pieces do not cover N");
  }
}

PiecewiseSequence PiecewiseSequence::assume_partition(std::vector<Piece> pieces) {
  if (pieces.empty()) throw Error(ErrorCode::PartitionViolation, "a sequence needs at least one piece");
  PiecewiseSequence out;
  out.pieces_ = std::move(pieces);
  for (const auto& p : out.pieces_) out.forms_.push_back(normal_form(p.set));
  return out;
}

PiecewiseSequence PiecewiseSequence::single(const ValueExpr& law) {
  return PiecewiseSequence({Piece{IndexSet::naturals(), law}});
}

PiecewiseSequence PiecewiseSequence::constant(const Rational& value) {
  return single(ValueExpr::constant(value));
}

std::size_t PiecewiseSequence::piece_of(Natural n) const {
  std::size_t found = pieces_.size();
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (!forms_[i].contains(n)) continue;
    if (found != pieces_.size()) {
      throw Error(ErrorCode::PartitionViolation, std::to_string(n) + " lies in several pieces");
    }
    found = i;
  }
  if (found == pieces_.size()) {
    throw Error(ErrorCode::PartitionViolation, std::to_string(n) + " lies in no piece");
  }
  return found;
}

Rational PiecewiseSequence::eval(Natural n) const {
  if (n == 0) throw Error(ErrorCode::PreconditionViolation, "sequences are indexed from 1");
  return pieces_[piece_of(n)].law.eval(n);
}

std::string PiecewiseSequence::to_string() const {
  std::string out;
  for (const auto& p : pieces_) out += p.set.to_string() + " => " + p.law.to_string() + "\n";
  return out;
}

PiecewiseSequence PiecewiseSequence::parse(std::string_view text) {
  std::vector<Piece> pieces;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto arrow = line.find("=>");
    if (arrow == std::string::npos) throw ParseError("sequence: expected 'SET => LAW'", line_no, 1);
    IndexSet set;
    try {
      set = IndexSet::parse(std::string_view(line).substr(0, arrow));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), line_no, e.column());
    }
    try {
      pieces.push_back({set, ValueExpr::parse(std::string_view(line).substr(arrow + 2), set)});
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), line_no, arrow + 3);
    }
  }
  if (pieces.empty()) throw ParseError("sequence: no pieces", line_no == 0 ? 1 : line_no, 1);
  return PiecewiseSequence(std::move(pieces));
}

std::vector<PieceLimit> piece_limits(const PiecewiseSequence& seq, Ideal ideal) {
  std::vector<PieceLimit> out;
  out.reserve(seq.pieces().size());
  for (std::size_t i = 0; i < seq.pieces().size(); ++i) {
    const auto& law = seq.pieces()[i].law;
    out.push_back({law.limit(), law.approach(), ideal.contains(seq.piece_form(i))});
  }
  return out;
}

ExtReal i_limsup(const PiecewiseSequence& seq, Ideal ideal) {
  ExtReal best = ExtReal::neg_inf();
  bool any = false;
  for (const auto& p : piece_limits(seq, ideal)) {
    if (p.in_ideal) continue;
    if (!any || p.limit > best) best = p.limit;
    any = true;
  }
  // A partition of N always has a piece outside a nontrivial ideal.
  if (!any) throw Error(ErrorCode::InvariantBreach, "every piece lies in the ideal");
  return best;
}

ExtReal i_liminf(const PiecewiseSequence& seq, Ideal ideal) {
  ExtReal best = ExtReal::pos_inf();
  bool any = false;
  for (const auto& p : piece_limits(seq, ideal)) {
    if (p.in_ideal) continue;
    if (!any || p.limit < best) best = p.limit;
    any = true;
  }
  if (!any) throw Error(ErrorCode::InvariantBreach, "every piece lies in the ideal");
  return best;
}

bool in_upper_thresholds(const PiecewiseSequence& seq, Ideal ideal, const Rational& b) {
  const ExtReal threshold(b);
  for (const auto& p : piece_limits(seq, ideal)) {
    if (p.in_ideal) continue;
    if (p.limit > threshold) return true;
    if (p.limit == threshold && p.approach == Approach::FromAbove) return true;
  }
  return false;
}

bool in_lower_thresholds(const PiecewiseSequence& seq, Ideal ideal, const Rational& a) {
  const ExtReal threshold(a);
  for (const auto& p : piece_limits(seq, ideal)) {
    if (p.in_ideal) continue;
    if (p.limit < threshold) return true;
    if (p.limit == threshold && p.approach == Approach::FromBelow) return true;
  }
  return false;
}

std::optional<Rational> is_i_convergent(const PiecewiseSequence& seq, Ideal ideal) {
  ExtReal hi = i_limsup(seq, ideal);
  ExtReal lo = i_liminf(seq, ideal);
  if (hi.is_finite() && hi == lo) return hi.value();
  return std::nullopt;
}

bool is_i_bounded(const PiecewiseSequence& seq, Ideal ideal) {
  for (const auto& p : piece_limits(seq, ideal)) {
    if (!p.in_ideal && !p.limit.is_finite()) return false;
  }
  return true;
}

bool deviation_set_in_ideal(const PiecewiseSequence& seq, Ideal ideal, const Rational& center,
                            const Rational& eps) {
  if (eps <= 0) throw Error(ErrorCode::PreconditionViolation, "eps must be positive");
  for (const auto& p : piece_limits(seq, ideal)) {
    if (p.in_ideal) continue;
    if (!p.limit.is_finite()) return false;
    Rational gap = p.limit.value() - center;
    if (abs(gap) > eps) return false;
    if (abs(gap) < eps) continue;
    // Limit sits exactly eps away: the deviation set is the whole piece
    // unless the values approach from the center's side.
    Approach towards_center = gap > 0 ? Approach::FromBelow : Approach::FromAbove;
    if (p.approach != towards_center) return false;
  }
  return true;
}

PiecewiseSequence sum(const PiecewiseSequence& a, const PiecewiseSequence& b) {
  std::vector<Piece> pieces;
  for (const auto& x : a.pieces()) {
    for (const auto& y : b.pieces()) {
      IndexSet common = x.set & y.set;
      NormalForm form = normal_form(common);
      if (is_empty(form)) continue;
      pieces.push_back({to_index_set(form), x.law + y.law});
    }
  }
  return PiecewiseSequence(std::move(pieces));
}

PiecewiseSequence negate(const PiecewiseSequence& a) {
  std::vector<Piece> pieces;
  for (const auto& p : a.pieces()) pieces.push_back({p.set, p.law.negated()});
  return PiecewiseSequence(std::move(pieces));
}

PiecewiseSequence shift(const PiecewiseSequence& a, const Rational& by) {
  std::vector<Piece> pieces;
  for (const auto& p : a.pieces()) pieces.push_back({p.set, p.law.shifted(by)});
  return PiecewiseSequence(std::move(pieces));
}

PiecewiseSequence combine(const PiecewiseSequence& a, const PiecewiseSequence& b, CombineOp op,
                          const Rational& by) {
  switch (op) {
    case CombineOp::Sum: return sum(a, b);
    case CombineOp::Negate: return negate(a);
    case CombineOp::Shift: return shift(a, by);
  }
  return a;
}

}  // namespace idensity
