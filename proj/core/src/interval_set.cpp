#include "idensity/interval_set.hpp"

#include <algorithm>
#include <cctype>

#include "idensity/error.hpp"

namespace idensity {
namespace {

// Interval that may be unbounded on either side; only the parser produces
// these.
struct RawInterval {
  ExtReal lo;
  ExtReal hi;
  bool lo_closed;
  bool hi_closed;

  bool contains(const Rational& x) const {
    ExtReal e(x);
    if (lo.is_finite() && (lo_closed ? e < lo : e <= lo)) return false;
    if (hi.is_finite() && (hi_closed ? e > hi : e >= hi)) return false;
    return true;
  }
};

void validate(const RawInterval& r) {
  if (r.lo > r.hi) {
    throw Error(ErrorCode::MalformedInterval, "interval with lo > hi: " + to_string(r.lo) + " > " + to_string(r.hi));
  }
  if (r.lo == r.hi && !(r.lo_closed && r.hi_closed)) {
    throw Error(ErrorCode::MalformedInterval, "degenerate interval at " + to_string(r.lo) + " must be closed");
  }
  if ((!r.lo.is_finite() && r.lo_closed) || (!r.hi.is_finite() && r.hi_closed)) {
    throw Error(ErrorCode::MalformedInterval, "infinite endpoints must be open");
  }
  if (r.lo.is_pos_inf() || r.hi.is_neg_inf()) {
    throw Error(ErrorCode::MalformedInterval, "interval lies outside R");
  }
}

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

// Sample point inside gap i of a sorted breakpoint list.
Rational gap_sample(const std::vector<Rational>& pts, std::size_t i) {
  if (i == 0) return pts.front() - 1;
  if (i == pts.size()) return pts.back() + 1;
  return midpoint(pts[i - 1], pts[i]);
}

void sort_unique(std::vector<Rational>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

IntervalSet build_raw(const std::vector<RawInterval>& raw, bool complemented) {
  std::vector<Rational> pts;
  bool left_out = false, right_out = false;
  for (const auto& r : raw) {
    validate(r);
    if (r.lo.is_finite()) pts.push_back(r.lo.value());
    else left_out = true;
    if (r.hi.is_finite()) pts.push_back(r.hi.value());
    else right_out = true;
  }
  if (left_out != right_out) {
    throw Error(ErrorCode::MalformedInterval, "a half-line is not a finite union of bounded intervals or its complement");
  }
  sort_unique(pts);
  auto member = [&](const Rational& x) {
    bool in = std::any_of(raw.begin(), raw.end(), [&](const RawInterval& r) { return r.contains(x); });
    return in != complemented;
  };
  MembershipPattern pat;
  pat.points = pts;
  for (const auto& p : pts) pat.at_point.push_back(member(p));
  if (pts.empty()) {
    pat.gaps.push_back(left_out != complemented);
  } else {
    for (std::size_t i = 0; i <= pts.size(); ++i) {
      if (i == 0 || i == pts.size()) pat.gaps.push_back(left_out != complemented);
      else pat.gaps.push_back(member(gap_sample(pts, i)));
    }
  }
  return pat.build();
}

std::string render_number(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

class SetParser {
 public:
  explicit SetParser(std::string_view text) : text_(text) {}

  IntervalSet run() {
    skip();
    bool complemented = false;
    if (peek_word("co")) {
      pos_ += 2;
      complemented = true;
      skip();
    }
    std::vector<RawInterval> items;
    if (peek_word("R")) {
      ++pos_;
      complemented = !complemented;
    } else if (text_.substr(pos_, 2) == "{}") {
      pos_ += 2;
    } else {
      item(items);
      skip();
      while (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        skip();
        item(items);
        skip();
      }
    }
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    try {
      return build_raw(items, complemented);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MalformedInterval) throw;
      throw Error(ErrorCode::MalformedInterval, std::string(e.what()) + " in '" + std::string(text_) + "'");
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("interval set: " + what, 1, pos_ + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_word(std::string_view w) const {
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    return end == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[end]));
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  ExtReal number() {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    if (text_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      return text_[start] == '-' ? ExtReal::neg_inf() : ExtReal::pos_inf();
    }
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
    try {
      return ExtReal(parse_rational(text_.substr(start, pos_ - start)));
    } catch (const Error&) {
      pos_ = start;
      fail("expected a rational number");
    }
  }

  void item(std::vector<RawInterval>& out) {
    if (pos_ >= text_.size()) fail("expected an interval");
    char open = text_[pos_];
    if (open == '{') {
      ++pos_;
      while (true) {
        std::size_t at = pos_;
        ExtReal x = number();
        if (!x.is_finite()) {
          pos_ = at;
          fail("singleton must be finite");
        }
        out.push_back({x, x, true, true});
        skip();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect('}');
        return;
      }
    }
    if (open != '[' && open != '(') fail("expected '[', '(' or '{'");
    ++pos_;
    ExtReal lo = number();
    expect(',');
    ExtReal hi = number();
    skip();
    if (pos_ >= text_.size() || (text_[pos_] != ']' && text_[pos_] != ')')) fail("expected ']' or ')'");
    char close = text_[pos_++];
    out.push_back({lo, hi, open == '[', close == ']'});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool Interval::contains(const Rational& x) const {
  if (lo_closed ? x < lo : x <= lo) return false;
  if (hi_closed ? x > hi : x >= hi) return false;
  return true;
}

MembershipPattern MembershipPattern::sample(const IntervalSet& set, const std::vector<Rational>& points) {
  MembershipPattern pat;
  pat.points = points;
  for (const auto& p : points) pat.at_point.push_back(set.contains(p));
  if (points.empty()) {
    pat.gaps.push_back(set.complemented());
    return pat;
  }
  for (std::size_t i = 0; i <= points.size(); ++i) {
    if (i == 0 || i == points.size()) pat.gaps.push_back(set.complemented());
    else pat.gaps.push_back(set.contains(gap_sample(points, i)));
  }
  return pat;
}

IntervalSet MembershipPattern::build() const {
  if (gaps.size() != points.size() + 1 || at_point.size() != points.size() || gaps.front() != gaps.back()) {
    throw Error(ErrorCode::InvariantBreach, "membership pattern has inconsistent shape");
  }
  const bool flip = gaps.front();
  // Work on the bounded side (outer gaps excluded) and record the flip.
  std::vector<Rational> pts;
  std::vector<bool> at, gp;
  gp.push_back(false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool here = at_point[i] != flip;
    bool after = gaps[i + 1] != flip;
    // A breakpoint that changes nothing is dropped.
    if (here == gp.back() && here == after) continue;
    pts.push_back(points[i]);
    at.push_back(here);
    gp.push_back(after);
  }
  IntervalSet out;
  out.complemented_ = flip;
  bool running = false;
  Interval cur;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (at[i] && !running) {
      cur.lo = pts[i];
      cur.lo_closed = true;
      running = true;
    } else if (!at[i] && running) {
      cur.hi = pts[i];
      cur.hi_closed = false;
      out.intervals_.push_back(cur);
      running = false;
    }
    if (gp[i + 1] && !running) {
      cur.lo = pts[i];
      cur.lo_closed = false;
      running = true;
    } else if (!gp[i + 1] && running) {
      cur.hi = pts[i];
      cur.hi_closed = true;
      out.intervals_.push_back(cur);
      running = false;
    }
  }
  return out;
}

IntervalSet IntervalSet::from_intervals(const std::vector<Interval>& raw, bool complemented) {
  std::vector<RawInterval> items;
  items.reserve(raw.size());
  for (const auto& i : raw) items.push_back({ExtReal(i.lo), ExtReal(i.hi), i.lo_closed, i.hi_closed});
  return build_raw(items, complemented);
}

IntervalSet IntervalSet::real_line() {
  IntervalSet s;
  s.complemented_ = true;
  return s;
}

IntervalSet IntervalSet::points(const std::vector<Rational>& xs) {
  std::vector<Interval> raw;
  for (const auto& x : xs) raw.push_back(Interval::point(x));
  return from_intervals(raw);
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::partition_point(intervals_.begin(), intervals_.end(),
                                 [&](const Interval& i) { return i.hi < x; });
  bool in = it != intervals_.end() && it->contains(x);
  return in != complemented_;
}

ExtReal IntervalSet::measure() const {
  if (complemented_) return ExtReal::pos_inf();
  Rational total(0);
  for (const auto& i : intervals_) total += i.hi - i.lo;
  return total;
}

Rational IntervalSet::measure_in_window(const Window& window) const {
  if (window.lo > window.hi) throw Error(ErrorCode::MalformedInterval, "window with lo > hi");
  Rational overlap(0);
  for (const auto& i : intervals_) {
    Rational lo = std::max(i.lo, window.lo);
    Rational hi = std::min(i.hi, window.hi);
    if (hi > lo) overlap += hi - lo;
  }
  return complemented_ ? window.length() - overlap : overlap;
}

bool IntervalSet::is_null() const {
  if (complemented_) return false;
  return std::all_of(intervals_.begin(), intervals_.end(), [](const Interval& i) { return i.degenerate(); });
}

IntervalSet IntervalSet::complement() const {
  IntervalSet out = *this;
  out.complemented_ = !complemented_;
  return out;
}

std::vector<Rational> IntervalSet::breakpoints() const {
  std::vector<Rational> pts;
  for (const auto& i : intervals_) {
    pts.push_back(i.lo);
    if (!i.degenerate()) pts.push_back(i.hi);
  }
  sort_unique(pts);
  return pts;
}

IntervalSet boolean(const IntervalSet& a, const IntervalSet& b, SetOp op) {
  std::vector<Rational> pts = a.breakpoints();
  auto more = b.breakpoints();
  pts.insert(pts.end(), more.begin(), more.end());
  sort_unique(pts);
  auto pa = MembershipPattern::sample(a, pts);
  auto pb = MembershipPattern::sample(b, pts);
  auto apply = [op](bool x, bool y) {
    switch (op) {
      case SetOp::Union: return x || y;
      case SetOp::Intersect: return x && y;
      case SetOp::Subtract: return x && !y;
      case SetOp::SymmetricDifference: return x != y;
    }
    return false;
  };
  MembershipPattern out;
  out.points = pts;
  for (std::size_t i = 0; i < pts.size(); ++i) out.at_point.push_back(apply(pa.at_point[i], pb.at_point[i]));
  for (std::size_t i = 0; i < pa.gaps.size(); ++i) out.gaps.push_back(apply(pa.gaps[i], pb.gaps[i]));
  return out.build();
}

IntervalSet operator|(const IntervalSet& a, const IntervalSet& b) { return boolean(a, b, SetOp::Union); }
IntervalSet operator&(const IntervalSet& a, const IntervalSet& b) { return boolean(a, b, SetOp::Intersect); }
IntervalSet operator-(const IntervalSet& a, const IntervalSet& b) { return boolean(a, b, SetOp::Subtract); }
IntervalSet operator^(const IntervalSet& a, const IntervalSet& b) {
  return boolean(a, b, SetOp::SymmetricDifference);
}

bool IntervalSet::subset_of(const IntervalSet& other) const { return (*this - other).is_empty(); }

std::string IntervalSet::to_string() const {
  std::string body;
  for (const auto& i : intervals_) {
    if (!body.empty()) body += " | ";
    if (i.degenerate()) {
      body += "{" + render_number(i.lo) + "}";
      continue;
    }
    body += i.lo_closed ? "[" : "(";
    body += render_number(i.lo) + "," + render_number(i.hi);
    body += i.hi_closed ? "]" : ")";
  }
  if (body.empty()) body = "{}";
  return complemented_ ? "co " + body : body;
}

IntervalSet IntervalSet::parse(std::string_view text) { return SetParser(text).run(); }

}  // namespace idensity
