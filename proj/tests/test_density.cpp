#include <doctest.h>

#include "idensity/density.hpp"
#include "idensity/error.hpp"
#include "idensity/sampling.hpp"

using namespace idensity;

namespace {

const Ideal kD = Ideal::density_zero();
const Ideal kFin = Ideal::fin();

IntervalSet P(const char* text) { return IntervalSet::parse(text); }
Rational R(long p, long q = 1) { return make_rational(p, q); }
ValueExpr L(const char* text) { return ValueExpr::parse(text); }

IntervalGenerator one_sided(const char* left, const char* right) {
  return IntervalGenerator(R(0), {GeneratorPiece{IndexSet::naturals(), L(left), L(right)}});
}

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvariantBreach;
}

// Random generator whose arms share one law family per piece, so the ratio
// sequence stays in the grammar. Some draws are not admissible.
IntervalGenerator random_generator(Sampler& sampler, const Rational& anchor) {
  std::vector<GeneratorPiece> pieces;
  auto piece = [&](IndexSet set) {
    Rational cl = sampler.grid_point(0, 2, 2), cr = sampler.grid_point(0, 2, 2);
    if (cl == 0 && cr == 0) cr = R(1, 2);
    ValueExpr l = ValueExpr::constant(cl), r = ValueExpr::constant(cr);
    switch (sampler.below(5)) {
      case 0:
      case 1: {
        Rational a(static_cast<long>(sampler.between(2, 4))), b(static_cast<long>(sampler.between(0, 3)));
        l = ValueExpr::rational1(cl, a, b);
        r = ValueExpr::rational1(cr, a, b);
        break;
      }
      case 2: {
        auto k = static_cast<unsigned>(sampler.between(2, 3));
        l = ValueExpr::power_decay(cl, k, R(0));
        r = ValueExpr::power_decay(cr, k, R(0));
        break;
      }
      case 3: break;
      default:
        l = ValueExpr::linear(R(1), R(0));
        r = ValueExpr::linear(R(1), R(0));
    }
    pieces.push_back({std::move(set), l, r});
  };
  if (sampler.chance(40)) {
    piece(IndexSet::naturals() - IndexSet::squares());
    piece(IndexSet::squares());
  } else {
    piece(IndexSet::naturals());
  }
  return IntervalGenerator(anchor, pieces);
}

}  // namespace

TEST_SUITE("density") {
  TEST_CASE("windows and the admissibility set") {
    IntervalGenerator k = square_blowup_generator(R(0));
    CHECK(normal_form(script_s(k)) == normal_form(IndexSet::naturals() - IndexSet::squares()));
    IntervalGenerator sym = IntervalGenerator::symmetric(R(0), L("1/(2*n+1)"));
    CHECK(normal_form(script_s(sym)) == normal_form(IndexSet::naturals()));
    IntervalGenerator wide = IntervalGenerator::symmetric(R(0), L("const 1"));
    CHECK(is_empty(normal_form(script_s(wide))));
    CHECK(validate_generator(k, kD));
    CHECK_FALSE(validate_generator(k, kFin));
    CHECK_FALSE(validate_generator(wide, kD));
    CHECK((k.window(4).lo == R(-4) && k.window(4).hi == R(4)));
    CHECK((k.window(3).lo == R(-1, 7) && k.window(3).hi == R(1, 7)));
  }

  TEST_CASE("admissibility set matches the inequality numerically") {
    Sampler sampler(41);
    for (int i = 0; i < 60; ++i) {
      IntervalGenerator g = random_generator(sampler, R(0));
      IndexSet s = script_s(g);
      for (Natural n = 1; n <= 1000; ++n) {
        CHECK(s.contains(n) == (g.length(n) * static_cast<unsigned long>(n) < 1));
      }
    }
  }

  TEST_CASE("invalid generators") {
    CHECK(code_of([] { one_sided("-1/n", "1/n"); }) == ErrorCode::InvalidGenerator);
    CHECK(code_of([] { one_sided("const 0", "const 0"); }) == ErrorCode::InvalidGenerator);
    CHECK(code_of([] { one_sided("n-1", "1-1/n"); }) == ErrorCode::InvalidGenerator);
    CHECK(code_of([] {
            IntervalGenerator(R(0), {GeneratorPiece{IndexSet::squares(), L("1/n"), L("1/n")}});
          }) == ErrorCode::InvalidGenerator);
    CHECK(code_of([] {
            IndexSet sq = IndexSet::squares();
            IntervalGenerator(R(0), {GeneratorPiece{sq, ValueExpr::parse("1/rank", sq), L("1/n")},
                                     GeneratorPiece{IndexSet::naturals() - sq, L("1/n"), L("1/n")}});
          }) == ErrorCode::InvalidGenerator);
    // zero at n = 1 only is fine when 1 is not in the piece
    IntervalGenerator ok(R(0), {GeneratorPiece{IndexSet::finite({1}), L("1/n"), L("1/n")},
                                GeneratorPiece{IndexSet::tail(2), L("n-1"), L("1-1/n")}});
    CHECK(ok.length(2) == R(3, 2));
    CHECK(code_of([&] { i_density_along(square_blowup_generator(R(0)), P("(-1,1)"), kFin); }) ==
          ErrorCode::InvalidGenerator);
  }

  TEST_CASE("generator text format") {
    IntervalGenerator g = IntervalGenerator::parse("anchor 1/2\nNAT \\ SQUARES => 1/(2*n+1) ; 1/(2*n+1)\nSQUARES => n ; n\n");
    CHECK(g.anchor() == R(1, 2));
    CHECK(IntervalGenerator::parse(g.to_string()).to_string() == g.to_string());
    CHECK_THROWS_AS(IntervalGenerator::parse("NAT => 1/n ; 1/n"), ParseError);
    try {
      IntervalGenerator::parse("anchor 0\nNAT => 1/n 1/n");
      FAIL("missing separator");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }

  TEST_CASE("local signature") {
    LocalSignature a = local_signature(R(0), P("(-1,1)"));
    CHECK((a.left_full && a.right_full && a.left_reach == 1 && a.right_reach == 1));
    LocalSignature b = local_signature(R(0), P("[0,1]"));
    CHECK((!b.left_full && b.right_full && b.left_reach == 1 && b.right_reach == 1 && b.point_in));
    LocalSignature c = local_signature(R(2), P("[0,1]"));
    CHECK((!c.left_full && !c.right_full && c.left_reach == 1 && c.right_reach == 1 && !c.point_in));
    LocalSignature d = local_signature(R(0), P("(-1,1/4) | (1/4,1)"));
    CHECK(d.right_reach == R(1, 4));
  }

  TEST_CASE("ratio sequences") {
    PiecewiseSequence x = ratio_sequence(square_blowup_generator(R(0)), P("(-1,1)"));
    for (Natural n = 1; n <= 400; ++n) {
      Natural m = isqrt(n);
      CHECK(x.eval(n) == (m * m == n ? make_rational(1, static_cast<std::int64_t>(n)) : R(1)));
    }
    // [0,1] stands in for the half-line [0,inf): both look the same near 0
    IntervalGenerator sym = IntervalGenerator::symmetric(R(0), L("1/(2*n+1)"));
    PiecewiseSequence half = ratio_sequence(sym, P("[0,1]"));
    for (Natural n = 1; n <= 100; ++n) CHECK(half.eval(n) == R(1, 2));
    PiecewiseSequence full = ratio_sequence(square_blowup_generator(R(3)), IntervalSet::real_line());
    for (Natural n = 1; n <= 100; ++n) CHECK(full.eval(n) == 1);
  }

  TEST_CASE("ratio sequences agree with direct measurement") {
    Sampler sampler(42);
    for (int i = 0; i < 150; ++i) {
      IntervalSet e = sampler.interval_set();
      Rational p = sampler.point_near(e);
      IntervalGenerator g = random_generator(sampler, p);
      PiecewiseSequence x = ratio_sequence(g, e);
      for (Natural n = 1; n <= 300; ++n) {
        Rational direct = e.measure_in_window(g.window(n)) / g.length(n);
        if (x.eval(n) != direct) {
          FAIL_CHECK("E = " << e.to_string() << ", n = " << n << "\n" << g.to_string());
          break;
        }
      }
    }
  }

  TEST_CASE("density along a generator") {
    auto k = i_density_along(square_blowup_generator(R(0)), P("(-1,1)"), kD);
    CHECK((k.first == ExtReal(R(1)) && k.second == ExtReal(R(1))));
    auto sym = i_density_along(IntervalGenerator::symmetric(R(0), L("1/(2*n+1)")), P("[0,1]"), kD);
    CHECK((sym.first == ExtReal(R(1, 2)) && sym.second == ExtReal(R(1, 2))));
    auto right = i_density_along(one_sided("const 0", "1/(n+1)"), P("[0,1]"), kD);
    CHECK((right.first == ExtReal(R(1)) && right.second == ExtReal(R(1))));
    // unequal arms give a weighted mean of the two sides
    auto skew = i_density_along(one_sided("1/(4*n+4)", "3/(4*n+4)"), P("[0,1]"), kFin);
    CHECK((skew.first == ExtReal(R(3, 4)) && skew.second == ExtReal(R(3, 4))));
    auto drift = i_density_along(one_sided("1/(4*n+4)", "1/(4*n)"), P("[0,1]"), kFin);
    CHECK((drift.first == ExtReal(R(1, 2)) && drift.second == ExtReal(R(1, 2))));
  }

  TEST_CASE("classification") {
    CHECK(classify_i_density(R(0), P("(-1,1)"), kD).outcome == DensityOutcome::One);
    DensityClassification edge = classify_i_density(R(0), P("[0,1]"), kD);
    CHECK(edge.outcome == DensityOutcome::NotExist);
    CHECK(edge.lower == 0);
    CHECK(edge.upper == 1);
    REQUIRE(edge.witnesses.size() == 2);
    CHECK(classify_i_density(R(2), P("[0,1]"), kFin).outcome == DensityOutcome::Zero);
    CHECK(classify_i_density(R(1), P("(0,1) | (1,2)"), kD).outcome == DensityOutcome::One);
    CHECK(classify_i_density(R(1), P("{1}"), kD).outcome == DensityOutcome::Zero);
  }

  TEST_CASE("theta") {
    CHECK(theta(P("[0,1] | [1,2]"), kD) == P("(0,2)"));
    CHECK(theta(P("{0} | {1}"), kD).is_empty());
    CHECK(theta(P("co {0}"), kD).is_real_line());
    CHECK(theta(P("[0,1]"), kD) == P("(0,1)"));
    CHECK(theta(P("co [0,1]"), kFin) == P("co [0,1]"));
    CHECK(theta(P("(0,1) | (1,2)"), kD) == P("(0,2)"));
  }

  TEST_CASE("dispersion and classical density") {
    CHECK(is_dispersion_point(R(2), P("[0,1]"), kD));
    CHECK_FALSE(is_dispersion_point(R(1, 2), P("[0,1]"), kD));
    CHECK_FALSE(is_dispersion_point(R(0), P("[0,1]"), kD));
    CHECK(classical_density(R(0), P("[0,1]")) == R(1, 2));
    CHECK(classical_density(R(1, 2), P("[0,1]")) == 1);
    CHECK(classical_density(R(2), P("[0,1]")) == 0);
  }

  TEST_CASE("classification laws on random sets") {
    Sampler sampler(43);
    for (int i = 0; i < 200; ++i) {
      IntervalSet a = sampler.interval_set(), b = sampler.interval_set();
      Rational p = sampler.point_near(a);
      for (const Ideal ideal : {kFin, kD}) {
        DensityClassification ca = classify_i_density(p, a, ideal);
        CHECK(ca.lower <= ca.upper);
        CHECK((ca.outcome == DensityOutcome::One) == (ca.lower == 1 && ca.upper == 1));
        CHECK((ca.outcome == DensityOutcome::Zero) == (ca.lower == 0 && ca.upper == 0));
        // complement criterion
        DensityClassification cc = classify_i_density(p, a.complement(), ideal);
        CHECK((ca.outcome != DensityOutcome::NotExist) == (ca.upper + cc.upper == 1));
        // additivity on disjoint sets, subtraction on nested ones
        IntervalSet bd = b - a;
        DensityClassification cb = classify_i_density(p, bd, ideal);
        if (ca.outcome != DensityOutcome::NotExist && cb.outcome != DensityOutcome::NotExist) {
          DensityClassification cu = classify_i_density(p, a | bd, ideal);
          REQUIRE(cu.outcome != DensityOutcome::NotExist);
          CHECK(cu.lower == ca.lower + cb.lower);
        }
        IntervalSet outer = a | b;
        DensityClassification co = classify_i_density(p, outer, ideal);
        DensityClassification cdiff = classify_i_density(p, outer - a, ideal);
        if (co.outcome != DensityOutcome::NotExist && ca.outcome != DensityOutcome::NotExist) {
          REQUIRE(cdiff.outcome != DensityOutcome::NotExist);
          CHECK(cdiff.lower == co.lower - ca.lower);
        }
      }
    }
  }

  TEST_CASE("witnesses realize the bounds") {
    Sampler sampler(44);
    int seen = 0;
    for (int i = 0; i < 300 && seen < 80; ++i) {
      IntervalSet e = sampler.interval_set();
      auto pts = e.breakpoints();
      if (pts.empty()) continue;
      Rational p = pts[sampler.below(pts.size())];
      for (const Ideal ideal : {kFin, kD}) {
        DensityClassification c = classify_i_density(p, e, ideal);
        if (c.outcome != DensityOutcome::NotExist) continue;
        ++seen;
        REQUIRE(c.witnesses.size() == 2);
        CHECK(validate_generator(c.witnesses[0], ideal));
        CHECK(validate_generator(c.witnesses[1], ideal));
        auto lo = i_density_along(c.witnesses[0], e, ideal);
        auto hi = i_density_along(c.witnesses[1], e, ideal);
        CHECK((lo.first == ExtReal(c.lower) && lo.second == ExtReal(c.lower)));
        CHECK((hi.first == ExtReal(c.upper) && hi.second == ExtReal(c.upper)));
      }
    }
    CHECK(seen >= 40);
  }

  TEST_CASE("density points do not depend on the generator") {
    Sampler sampler(45);
    for (int i = 0; i < 40; ++i) {
      IntervalSet e = sampler.interval_set();
      Rational p = sampler.point_near(e);
      DensityClassification c = classify_i_density(p, e, kD);
      if (c.outcome == DensityOutcome::NotExist) continue;
      ExtReal want(c.lower);
      int tried = 0;
      for (int j = 0; j < 40 && tried < 20; ++j) {
        IntervalGenerator g = random_generator(sampler, p);
        if (!validate_generator(g, kD)) continue;
        ++tried;
        auto [lo, hi] = i_density_along(g, e, kD);
        CHECK(lo == want);
        CHECK(hi == want);
      }
    }
  }

  TEST_CASE("non-shrinking windows on an ideal piece change nothing") {
    Sampler sampler(46);
    for (int i = 0; i < 100; ++i) {
      IntervalSet e = sampler.interval_set();
      Rational p = sampler.point_near(e);
      IntervalGenerator base = IntervalGenerator::symmetric(p, L("1/(2*n+1)"));
      IntervalGenerator wild(p, {GeneratorPiece{IndexSet::naturals() - IndexSet::squares(), L("1/(2*n+1)"), L("1/(2*n+1)")},
                                 GeneratorPiece{IndexSet::squares(), L("const 5"), L("const 1/3")}});
      CHECK(i_density_along(base, e, kD) == i_density_along(wild, e, kD));
    }
  }

  TEST_CASE("Lebesgue density theorem on the interval algebra") {
    Sampler sampler(47);
    for (int i = 0; i < 500; ++i) {
      IntervalSet e = sampler.interval_set();
      CHECK((e ^ theta(e, kD)).is_null());
    }
  }
}
