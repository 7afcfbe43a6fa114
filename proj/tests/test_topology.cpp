#include <doctest.h>

#include "idensity/error.hpp"
#include "idensity/sampling.hpp"
#include "idensity/topology.hpp"

using namespace idensity;

namespace {

const Ideal kD = Ideal::density_zero();
const Ideal kFin = Ideal::fin();

IntervalSet P(const char* text) { return IntervalSet::parse(text); }

// A partner for `a` that makes the lemma hypotheses hold often.
IntervalSet related(Sampler& sampler, const IntervalSet& a) {
  switch (sampler.below(5)) {
    case 0: return a | sampler.interval_set();
    case 1: return a & sampler.interval_set();
    case 2: return a ^ IntervalSet::points({sampler.grid_point(-4, 4, 4)});
    case 3: return a;
    default: return sampler.interval_set();
  }
}

}  // namespace

TEST_SUITE("topology") {
  TEST_CASE("open sets") {
    CHECK(is_ti_open(P("(0,1)"), kD));
    CHECK(is_ti_open(P("(0,1) | (1,2)"), kD));
    CHECK_FALSE(is_ti_open(P("[0,1]"), kD));
    CHECK_FALSE(is_ti_open(P("{0}"), kFin));
    CHECK(is_ti_open(P("co {0}"), kD));
    CHECK(is_ti_open(P("{}"), kD));
    CHECK(is_ti_open(IntervalSet::real_line(), kFin));
    CHECK(is_usual_open(P("co [0,1]")));
    CHECK_FALSE(is_usual_open(P("co (0,1)")));
  }

  TEST_CASE("lemma reports on fixed inputs") {
    auto reports = check_theta_lemmas(P("(0,1)"), P("(0,1) | {5}"), kD);
    REQUIRE(reports.size() == 7);
    for (const auto& r : reports) CHECK_MESSAGE(r.pass(), r.name << ": " << r.computed);
    int vacuous = 0;
    for (const auto& r : check_theta_lemmas(P("[0,1]"), P("[2,3]"), kD)) {
      CHECK(r.pass());
      vacuous += r.status == LemmaStatus::Vacuous ? 1 : 0;
    }
    CHECK(vacuous > 0);
    CHECK(status_name(LemmaStatus::Fail) == "FAIL");
  }

  TEST_CASE("finite closure") {
    LemmaReport r = check_finite_closure({P("(0,1)"), P("(1/2,2)"), P("co [0,1]")}, kD);
    CHECK(r.status == LemmaStatus::Pass);
    try {
      check_finite_closure({P("(0,1)"), P("[0,1]")}, kD);
      FAIL("expected a precondition violation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PreconditionViolation);
    }
  }

  TEST_CASE("Borel decomposition examples") {
    BorelDecomposition b = borel_decompose(P("(0,1) | {5}"), kD);
    CHECK(b.open_part == P("(0,1)"));
    CHECK(b.null_part == P("{5}"));
    BorelDecomposition c = borel_decompose(P("[0,1]"), kFin);
    CHECK(c.open_part == P("(0,1)"));
    CHECK(c.null_part == P("{0} | {1}"));
  }

  TEST_CASE("theta laws on random pairs") {
    Sampler sampler(51);
    for (int i = 0; i < 400; ++i) {
      IntervalSet a = sampler.interval_set();
      IntervalSet b = related(sampler, a);
      for (const Ideal ideal : {kFin, kD}) {
        for (const auto& r : check_theta_lemmas(a, b, ideal)) {
          CHECK_MESSAGE(r.pass(), r.name << " on " << r.inputs << ": expected " << r.expected << ", got "
                                         << r.computed);
        }
      }
    }
  }

  TEST_CASE("theta laws checked directly") {
    Sampler sampler(52);
    for (int i = 0; i < 400; ++i) {
      IntervalSet a = sampler.interval_set();
      IntervalSet b = related(sampler, a);
      IntervalSet ta = theta(a, kD), tb = theta(b, kD);
      CHECK(theta(ta, kD) == ta);
      if (a.subset_of(b)) CHECK(ta.subset_of(tb));
      CHECK(theta(a & b, kD) == (ta & tb));
      CHECK((ta & theta(a.complement(), kD)).is_empty());
      if ((a ^ b).is_null()) CHECK(ta == tb);
      if (a.is_null()) CHECK(ta.is_empty());
      CHECK(is_usual_open(ta));
    }
  }

  TEST_CASE("density-open coincides with usual-open on interval sets") {
    Sampler sampler(53);
    for (int i = 0; i < 1000; ++i) {
      IntervalSet a = sampler.interval_set();
      for (const Ideal ideal : {kFin, kD}) CHECK(is_ti_open(a, ideal) == is_usual_open(a));
    }
  }

  TEST_CASE("Borel decompositions are sound") {
    Sampler sampler(54);
    for (int i = 0; i < 500; ++i) {
      IntervalSet b = sampler.interval_set();
      BorelDecomposition d = borel_decompose(b, kD);
      CHECK((d.open_part | d.null_part) == b);
      CHECK(is_ti_open(d.open_part, kD));
      CHECK(d.null_part.is_null());
    }
  }
}
