#include "idensity/value_expr.hpp"

#include <regex>

#include "idensity/error.hpp"

namespace idensity {

std::string_view approach_name(Approach a) {
  switch (a) {
    case Approach::FromAbove: return "FromAbove";
    case Approach::FromBelow: return "FromBelow";
    case Approach::Exact: return "Exact";
  }
  return "?";
}

namespace {

[[noreturn]] void overflow(const std::string& what) { throw Error(ErrorCode::GrammarOverflow, what); }

void check_denominator(const Rational& a, const Rational& b) {
  // a*v + b > 0 for every v >= 1
  if (a < 0 || a + b <= 0) {
    overflow("denominator " + to_string(a) + "*v+" + to_string(b) + " is not positive for all v >= 1");
  }
}

}  // namespace

ValueExpr ValueExpr::constant(Rational d) {
  ValueExpr e;
  e.form_ = Form::Constant;
  e.d_ = std::move(d);
  return e;
}

ValueExpr ValueExpr::rational1(Rational c, Rational a, Rational b) {
  return shifted_rational1(Rational(0), std::move(c), std::move(a), std::move(b));
}

ValueExpr ValueExpr::shifted_rational1(Rational d, Rational c, Rational a, Rational b) {
  check_denominator(a, b);
  if (c == 0) return constant(d);
  if (a == 0) return constant(Rational(d + c / b));
  if (b == 0) return power_decay(Rational(c / a), 1, std::move(d));
  // scale to coprime integer a, b so that equal laws compare equal
  Integer l = lcm(Integer(a.get_den()), Integer(b.get_den()));
  Integer g = gcd(Integer(a.get_num() * (l / a.get_den())), Integer(b.get_num() * (l / b.get_den())));
  Rational scale(l, g);
  scale.canonicalize();
  a *= scale;
  b *= scale;
  c *= scale;
  ValueExpr e;
  e.form_ = d == 0 ? Form::Rational1 : Form::ShiftedRational1;
  e.d_ = std::move(d);
  e.c_ = std::move(c);
  e.a_ = std::move(a);
  e.b_ = std::move(b);
  return e;
}

ValueExpr ValueExpr::power_decay(Rational c, unsigned k, Rational d) {
  if (k == 0) overflow("power decay needs k >= 1");
  if (c == 0) return constant(d);
  ValueExpr e;
  e.form_ = Form::PowerDecay;
  e.d_ = std::move(d);
  e.c_ = std::move(c);
  e.k_ = k;
  return e;
}

ValueExpr ValueExpr::linear(Rational a, Rational b) {
  if (a == 0) return constant(b);
  ValueExpr e;
  e.form_ = Form::Linear;
  e.a_ = std::move(a);
  e.b_ = std::move(b);
  return e;
}

ValueExpr ValueExpr::over_rank_in(const IndexSet& base) const {
  ValueExpr e = *this;
  if (form_ == Form::Constant) return e;
  e.rank_base_ = std::make_shared<const RankBase>(RankBase{base, normal_form(base)});
  return e;
}

Rational ValueExpr::at(Natural v) const {
  Rational x(static_cast<unsigned long>(v));
  switch (form_) {
    case Form::Constant: return d_;
    case Form::Rational1:
    case Form::ShiftedRational1: return d_ + c_ / (a_ * x + b_);
    case Form::PowerDecay: {
      Rational p(1);
      for (unsigned i = 0; i < k_; ++i) p *= x;
      return d_ + c_ / p;
    }
    case Form::Linear: return a_ * x + b_;
  }
  return d_;
}

Rational ValueExpr::eval(Natural n) const {
  if (!rank_base_) return at(n);
  Natural v = count_upto(rank_base_->form, n);
  if (v == 0) {
    throw Error(ErrorCode::PreconditionViolation,
                "index " + std::to_string(n) + " precedes every element of the rank base " +
                    rank_base_->set.to_string());
  }
  return at(v);
}

ExtReal ValueExpr::limit() const {
  if (form_ == Form::Linear) return a_ > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
  return ExtReal(d_);
}

Approach ValueExpr::approach() const {
  switch (form_) {
    case Form::Constant: return Approach::Exact;
    case Form::Linear: return a_ > 0 ? Approach::FromBelow : Approach::FromAbove;
    default: return c_ > 0 ? Approach::FromAbove : Approach::FromBelow;
  }
}

ExtReal ValueExpr::infimum() const {
  switch (approach()) {
    case Approach::Exact: return ExtReal(d_);
    case Approach::FromAbove: return limit();
    case Approach::FromBelow: return ExtReal(at(1));
  }
  return limit();
}

ExtReal ValueExpr::supremum() const {
  switch (approach()) {
    case Approach::Exact: return ExtReal(d_);
    case Approach::FromAbove: return ExtReal(at(1));
    case Approach::FromBelow: return limit();
  }
  return limit();
}

ValueExpr ValueExpr::negated() const {
  ValueExpr e = *this;
  e.d_ = -d_;
  e.c_ = -c_;
  if (form_ == Form::Linear) {
    e.a_ = -a_;
    e.b_ = -b_;
  }
  return e;
}

ValueExpr ValueExpr::shifted(const Rational& by) const {
  ValueExpr e = *this;
  switch (form_) {
    case Form::Linear: e.b_ += by; break;
    default: e.d_ += by; break;
  }
  if (e.form_ == Form::Rational1 && e.d_ != 0) e.form_ = Form::ShiftedRational1;
  if (e.form_ == Form::ShiftedRational1 && e.d_ == 0) e.form_ = Form::Rational1;
  return e;
}

bool ValueExpr::same_variable(const ValueExpr& other) const {
  if (!rank_base_ || !other.rank_base_) return !rank_base_ && !other.rank_base_;
  return rank_base_ == other.rank_base_ || rank_base_->form == other.rank_base_->form;
}

ValueExpr operator+(const ValueExpr& x, const ValueExpr& y) {
  using Form = ValueExpr::Form;
  if (x.form_ == Form::Constant) return y.shifted(x.d_);
  if (y.form_ == Form::Constant) return x.shifted(y.d_);
  if (!x.same_variable(y)) overflow("sum of laws over different variables");

  auto keep_variable = [&](ValueExpr e) {
    if (e.form_ != Form::Constant) e.rank_base_ = x.rank_base_;
    return e;
  };
  if (x.form_ == Form::Linear && y.form_ == Form::Linear) {
    return keep_variable(ValueExpr::linear(x.a_ + y.a_, x.b_ + y.b_));
  }
  if (x.form_ == Form::PowerDecay && y.form_ == Form::PowerDecay && x.k_ == y.k_) {
    return keep_variable(ValueExpr::power_decay(x.c_ + y.c_, x.k_, x.d_ + y.d_));
  }
  // d + c/(a v + b) families; c/v is the denominator (1, 0).
  auto mobius = [](const ValueExpr& e, Rational& d, Rational& c, Rational& a, Rational& b) {
    if (e.form_ == Form::Rational1 || e.form_ == Form::ShiftedRational1) {
      d = e.d_, c = e.c_, a = e.a_, b = e.b_;
      return true;
    }
    if (e.form_ == Form::PowerDecay && e.k_ == 1) {
      d = e.d_, c = e.c_, a = 1, b = 0;
      return true;
    }
    return false;
  };
  Rational d1, c1, a1, b1, d2, c2, a2, b2;
  if (mobius(x, d1, c1, a1, b1) && mobius(y, d2, c2, a2, b2) && a1 * b2 == a2 * b1) {
    Rational scale = a1 / a2;  // (a1 v + b1) = scale * (a2 v + b2)
    return keep_variable(ValueExpr::shifted_rational1(d1 + d2, c1 + c2 * scale, a1, b1));
  }
  overflow("sum of '" + x.to_string() + "' and '" + y.to_string() + "' leaves the law grammar");
}

RationalFunction ValueExpr::as_rational_function() const {
  if (rank_base_) overflow("rank-indexed law has no closed form in n");
  switch (form_) {
    case Form::Constant: return {Polynomial::constant(d_), Polynomial::constant(Rational(1))};
    case Form::Rational1:
    case Form::ShiftedRational1: {
      Polynomial den({b_, a_});
      return {Polynomial::constant(d_) * den + Polynomial::constant(c_), den};
    }
    case Form::PowerDecay: {
      Polynomial den = Polynomial::monomial(Rational(1), k_);
      return {Polynomial::monomial(d_, k_) + Polynomial::constant(c_), den};
    }
    case Form::Linear: return {Polynomial({b_, a_}), Polynomial::constant(Rational(1))};
  }
  return {};
}

ValueExpr ValueExpr::from_rational_function(const RationalFunction& raw) {
  RationalFunction f = raw.reduced();
  const Polynomial& num = f.numerator;
  const Polynomial& den = f.denominator;
  if (den.degree() == 0) {
    if (num.degree() <= 0) return constant(num.coefficient(0));
    if (num.degree() == 1) return linear(num.coefficient(1), num.coefficient(0));
  } else if (den.degree() == 1 && num.degree() <= 1) {
    const Rational& beta = den.coefficient(0);
    const Rational& u = num.coefficient(1);
    return shifted_rational1(u, num.coefficient(0) - u * beta, Rational(1), beta);
  } else if (den == Polynomial::monomial(Rational(1), static_cast<unsigned>(den.degree())) &&
             num.degree() <= den.degree()) {
    bool sparse = true;
    for (int i = 1; i < den.degree(); ++i) sparse = sparse && num.coefficient(i) == 0;
    if (sparse) {
      return power_decay(num.coefficient(0), static_cast<unsigned>(den.degree()),
                         num.coefficient(static_cast<unsigned>(den.degree())));
    }
  }
  overflow("(" + num.to_string() + ")/(" + den.to_string() + ") has no law in the grammar");
}

namespace {

std::string number(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_string(r);
}

std::string signed_term(const Rational& r) {
  return r < 0 ? "-" + number(Rational(-r)) : "+" + number(r);
}

}  // namespace

std::string ValueExpr::to_string() const {
  const std::string v = rank_base_ ? "rank" : "n";
  auto den = [&] {
    std::string s = a_ == 1 ? v : number(a_) + "*" + v;
    if (b_ != 0) s += signed_term(b_);
    return s;
  };
  switch (form_) {
    case Form::Constant: return "const " + number(d_);
    case Form::Rational1: return number(c_) + "/(" + den() + ")";
    case Form::ShiftedRational1: return number(d_) + signed_term(c_) + "/(" + den() + ")";
    case Form::PowerDecay: {
      std::string tail = "/" + v + (k_ == 1 ? "" : "^" + std::to_string(k_));
      if (d_ == 0) return number(c_) + tail;
      return number(d_) + signed_term(c_) + tail;
    }
    case Form::Linear: {
      std::string s = a_ == 1 ? v : a_ == -1 ? "-" + v : number(a_) + "*" + v;
      if (b_ != 0) s += signed_term(b_);
      return s;
    }
  }
  return "?";
}

ValueExpr ValueExpr::parse(std::string_view text, const std::optional<IndexSet>& piece) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.rfind("-n", 0) == 0 || s.rfind("-rank", 0) == 0) s.insert(1, "1*");
  static const std::string R = R"((-?\d+(?:/\d+)?))";
  static const std::string U = R"((\d+(?:/\d+)?))";
  static const std::string V = R"((n|rank))";
  static const std::string DEN = R"(\((?:)" + R + R"(\*)?)" + V + R"((?:([+-]))" + U + R"()?\))";
  static const std::regex kConst("^const" + R + "$");
  static const std::regex kRational("^" + R + "/" + DEN + "$");
  static const std::regex kShifted("^" + R + "([+-])" + U + "/" + DEN + "$");
  static const std::regex kPower("^" + R + "/" + V + R"((?:\^(\d+))?$)");
  static const std::regex kShiftedPower("^" + R + "([+-])" + U + "/" + V + R"((?:\^(\d+))?$)");
  static const std::regex kLinear("^(?:" + R + R"(\*)?)" + V + R"((?:([+-]))" + U + ")?$");

  auto rat = [](const std::ssub_match& m, const Rational& fallback = Rational(0)) {
    return m.matched ? parse_rational(m.str()) : fallback;
  };
  auto signed_rat = [&](const std::ssub_match& sign, const std::ssub_match& m) {
    Rational r = rat(m);
    return sign.matched && sign.str() == "-" ? Rational(-r) : r;
  };

  std::smatch m;
  ValueExpr e;
  std::string variable;
  try {
    if (std::regex_match(s, m, kConst)) {
      return constant(rat(m[1]));
    } else if (std::regex_match(s, m, kRational)) {
      variable = m[3];
      e = rational1(rat(m[1]), rat(m[2], Rational(1)), signed_rat(m[4], m[5]));
    } else if (std::regex_match(s, m, kShifted)) {
      variable = m[5];
      Rational c = signed_rat(m[2], m[3]);
      e = shifted_rational1(rat(m[1]), c, rat(m[4], Rational(1)), signed_rat(m[6], m[7]));
    } else if (std::regex_match(s, m, kPower)) {
      variable = m[2];
      unsigned k = m[3].matched ? static_cast<unsigned>(std::stoul(m[3])) : 1u;
      e = power_decay(rat(m[1]), k);
    } else if (std::regex_match(s, m, kShiftedPower)) {
      variable = m[4];
      unsigned k = m[5].matched ? static_cast<unsigned>(std::stoul(m[5])) : 1u;
      e = power_decay(signed_rat(m[2], m[3]), k, rat(m[1]));
    } else if (std::regex_match(s, m, kLinear)) {
      variable = m[2];
      e = linear(rat(m[1], Rational(1)), signed_rat(m[3], m[4]));
    } else {
      throw ParseError("value law: cannot parse '" + std::string(text) + "'", 1, 1);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(std::string("value law: ") + err.what(), 1, 1);
  }
  if (variable == "rank") {
    if (!piece) throw ParseError("value law: 'rank' needs an enclosing piece", 1, 1);
    return e.over_rank_in(*piece);
  }
  return e;
}

bool operator==(const ValueExpr& x, const ValueExpr& y) {
  return x.form_ == y.form_ && x.d_ == y.d_ && x.c_ == y.c_ && x.a_ == y.a_ && x.b_ == y.b_ &&
         x.k_ == y.k_ && x.same_variable(y);
}

}  // namespace idensity
