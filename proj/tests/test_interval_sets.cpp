#include <doctest.h>

#include "idensity/error.hpp"
#include "idensity/interval_set.hpp"
#include "idensity/sampling.hpp"

using namespace idensity;

namespace {

IntervalSet P(const char* text) { return IntervalSet::parse(text); }
Rational R(long p, long q = 1) { return make_rational(p, q); }

// Probe points: every breakpoint, points just beside it, and a coarse grid.
std::vector<Rational> probes(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Rational> out;
  for (const auto* s : {&a, &b}) {
    for (const auto& x : s->breakpoints()) {
      out.push_back(x);
      out.push_back(x - R(1, 1000));
      out.push_back(x + R(1, 1000));
    }
  }
  for (long k = -48; k <= 48; ++k) out.push_back(R(k, 8));
  return out;
}

}  // namespace

TEST_SUITE("interval_sets") {
  TEST_CASE("canonical form") {
    CHECK(P("[0,1] | [1,2]") == P("[0,2]"));
    CHECK(P("[0,1] | [1,2]").intervals().size() == 1);
    CHECK(P("(0,1) | (1,2)").intervals().size() == 2);
    CHECK_FALSE(P("(0,1) | (1,2)").contains(R(1)));
    CHECK(P("[3,3]").to_string() == "{3}");
    CHECK(P("[0,1) | {1}") == P("[0,1]"));
    CHECK(P("{} ").is_empty());
    CHECK(P("co {}").is_real_line());
    CHECK(P("R").is_real_line());
    CHECK(P("(-inf,0] | [1,inf)") == P("co (0,1)"));
    CHECK(P("co [0,1]").complement() == P("[0,1]"));
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(IntervalSet::from_intervals({{R(2), R(1), true, true}}), Error);
    try {
      P("[2,1]");
      FAIL("expected MalformedInterval");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedInterval);
    }
    try {
      P("[0,inf)");
      FAIL("a half-line is not representable");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedInterval);
    }
    try {
      P("[0,1] | (2,x)");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.column() == 12);
    }
  }

  TEST_CASE("measure") {
    CHECK(P("[0,1] | [2,5/2]").measure() == ExtReal(R(3, 2)));
    CHECK(P("{3}").measure() == ExtReal(R(0)));
    CHECK(P("co [0,1]").measure().is_pos_inf());
  }

  TEST_CASE("boolean operations") {
    CHECK((P("[0,1]") & P("[1,2]")) == P("{1}"));
    CHECK((P("[0,2]") ^ P("[1,3]")) == P("[0,1) | (2,3]"));
    CHECK((IntervalSet::real_line() - P("{0}")) == P("co {0}"));
    CHECK((P("co [0,1]") | P("[0,1]")).is_real_line());
    CHECK((P("co [0,1]") & P("(1/2,2)")) == P("(1,2)"));
    CHECK(P("[0,1]").complement().complement() == P("[0,1]"));
  }

  TEST_CASE("measure in a window") {
    CHECK(P("[0,1]").measure_in_window({R(-1), R(1, 2)}) == R(1, 2));
    CHECK(P("co [0,1]").measure_in_window({R(0), R(2)}) == R(1));
    CHECK(P("(-1,1)").measure_in_window({R(-1, 9), R(1, 9)}) == R(2, 9));
  }

  TEST_CASE("null sets") {
    CHECK(P("{0} | {1}").is_null());
    CHECK_FALSE(P("[0,1]").is_null());
    CHECK_FALSE(P("co {0}").is_null());
    CHECK(P("{}").is_null());
  }

  TEST_CASE("boolean operations agree with pointwise membership") {
    Sampler sampler(31);
    for (int i = 0; i < 300; ++i) {
      IntervalSet a = sampler.interval_set(), b = sampler.interval_set();
      IntervalSet u = a | b, n = a & b, d = a - b, x = a ^ b, c = a.complement();
      for (const auto& p : probes(a, b)) {
        bool ia = a.contains(p), ib = b.contains(p);
        CHECK(u.contains(p) == (ia || ib));
        CHECK(n.contains(p) == (ia && ib));
        CHECK(d.contains(p) == (ia && !ib));
        CHECK(x.contains(p) == (ia != ib));
        CHECK(c.contains(p) == !ia);
      }
    }
  }

  TEST_CASE("measure laws") {
    Sampler sampler(32);
    for (int i = 0; i < 300; ++i) {
      IntervalSet a = sampler.interval_set(), b = sampler.interval_set();
      IntervalSet b_minus = b - a;
      CHECK((a | b_minus).measure() == a.measure() + b_minus.measure());
      Rational lo = sampler.grid_point(-5, 5, 8);
      Window j{lo, lo + sampler.grid_point(0, 4, 8)};
      CHECK(a.measure_in_window(j) + b.measure_in_window(j) ==
            (a | b).measure_in_window(j) + (a & b).measure_in_window(j));
      CHECK(a.measure_in_window(j) + a.complement().measure_in_window(j) == j.length());
    }
  }

  TEST_CASE("null symmetric difference is an equivalence") {
    Sampler sampler(33);
    for (int i = 0; i < 300; ++i) {
      IntervalSet a = sampler.interval_set();
      // perturb by points so that equivalent sets actually occur
      IntervalSet b = a ^ IntervalSet::points({sampler.grid_point(-4, 4, 4)});
      IntervalSet c = sampler.chance(50) ? b ^ IntervalSet::points({sampler.grid_point(-4, 4, 4)})
                                         : sampler.interval_set();
      CHECK((a ^ a).is_null());
      CHECK((a ^ b).is_null() == (b ^ a).is_null());
      if ((a ^ b).is_null() && (b ^ c).is_null()) CHECK((a ^ c).is_null());
    }
  }

  TEST_CASE("render and parse round trip") {
    Sampler sampler(34);
    for (int i = 0; i < 500; ++i) {
      IntervalSet a = sampler.interval_set();
      CHECK(IntervalSet::parse(a.to_string()) == a);
      CHECK(IntervalSet::from_intervals(a.intervals(), a.complemented()) == a);
    }
  }
}
