#include <doctest.h>

#include "idensity/error.hpp"
#include "idensity/ideal.hpp"
#include "idensity/sampling.hpp"

using namespace idensity;

namespace {

IndexSet P(const char* text) { return IndexSet::parse(text); }

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvariantBreach;
}

}  // namespace

TEST_SUITE("ideal_core") {
  TEST_CASE("membership follows set semantics") {
    CHECK(IndexSet::progression(3, 3).contains(9));
    CHECK_FALSE(IndexSet::squares().contains(10));
    CHECK_FALSE((~IndexSet::squares()).contains(4));
    CHECK_FALSE(IndexSet::naturals().contains(0));
    CHECK(P("POW(2)").contains(2));
    CHECK_FALSE(P("POW(2)").contains(1));
    CHECK(P("CUBES").contains(27));
  }

  TEST_CASE("normalization examples") {
    CHECK(normal_form(P("AP(1,2) | AP(2,2)")) == normal_form(IndexSet::naturals()));
    CHECK(normalize(P("AP(1,2) | AP(2,2)")).to_string() == "NAT");
    IndexSet off = normalize(IndexSet::naturals() - IndexSet::squares());
    CHECK(off.to_string() == "NAT \\ SQUARES");
    CHECK(code_of([] { normal_form(P("SQUARES & CUBES")); }) == ErrorCode::UnsupportedSparseIntersection);
    CHECK(code_of([] { normal_form(P("SQUARES \\ CUBES")); }) == ErrorCode::UnsupportedSparseIntersection);
    // a union of two kinds keeps every cell an up-set, so it is accepted
    CHECK(natural_density(P("SQUARES | CUBES")) == 0);
    CHECK(code_of([] { normal_form(IndexSet::progression(1, Natural{1} << 21)); }) ==
          ErrorCode::NormalizationOverflow);
  }

  TEST_CASE("natural density") {
    CHECK(natural_density(IndexSet::progression(3, 3)) == Rational(1, 3));
    CHECK(natural_density(IndexSet::squares()) == 0);
    CHECK(natural_density(IndexSet::naturals() - IndexSet::squares()) == 1);
    CHECK(natural_density(P("AP(2,4) | AP(3,6) | FIN{1,2,3}")) == Rational(5, 12));
    CHECK(natural_density(P("~AP(1,3) \\ POW(2)")) == Rational(2, 3));
  }

  TEST_CASE("finiteness") {
    CHECK(is_finite(P("FIN{1,5,9}")));
    CHECK_FALSE(is_finite(IndexSet::squares()));
    CHECK(is_finite(P("SQUARES & AP(2,4)")));
    CHECK(is_finite(P("POW(2) & AP(3,3)")));
    CHECK(is_finite(P("POW(2) & AP(1,2)")));
    CHECK_FALSE(is_finite(P("POW(3) & AP(1,2)")));
    CHECK_FALSE(is_finite(P("POW(2) & AP(2,3)")));
    CHECK(is_finite(P("CUBES & AP(4,9)")));
    CHECK(is_finite(P("EMPTY")));
  }

  TEST_CASE("ideal and filter membership") {
    const Ideal d = Ideal::density_zero(), fin = Ideal::fin();
    CHECK(d.contains(IndexSet::squares()));
    CHECK_FALSE(fin.contains(IndexSet::squares()));
    CHECK_FALSE(d.contains(IndexSet::naturals()));
    CHECK(d.in_filter(IndexSet::naturals() - IndexSet::squares()));
    CHECK_FALSE(fin.in_filter(IndexSet::naturals() - IndexSet::squares()));
    CHECK(d.in_filter(IndexSet::naturals()));
    CHECK(Ideal::parse("fin") == fin);
    CHECK(code_of([] { Ideal::parse("maximal"); }) == ErrorCode::Parse);
  }

  TEST_CASE("grammar round trip and errors") {
    for (const char* text : {"AP(3,3)", "SQUARES", "FIN{1,5,9}", "POW(2)", "NAT \\ SQUARES", "~(AP(1,2) | CUBES)",
                             "AP(2,4) & ~POW(3) | FIN{7}"}) {
      IndexSet s = P(text);
      CHECK(normal_form(P(s.to_string().c_str())) == normal_form(s));
    }
    try {
      P("AP(3,) | SQUARES");
      FAIL("parse should fail");
    } catch (const ParseError& e) {
      CHECK(e.column() == 6);
    }
    CHECK(code_of([] { P("FIN{0}"); }) == ErrorCode::Parse);
    CHECK(code_of([] { P("POW(1)"); }) == ErrorCode::Parse);
  }

  TEST_CASE("normal form is extensionally sound and idempotent") {
    Sampler sampler(11);
    for (int i = 0; i < 500; ++i) {
      IndexSet s = sampler.index_set();
      IndexSet n = normalize(s);
      for (Natural k = 1; k <= 10'000; ++k) {
        if (s.contains(k) != n.contains(k)) {
          FAIL_CHECK(s.to_string() << " vs " << n.to_string() << " at " << k);
          break;
        }
      }
      CHECK(normalize(n) == n);
      CHECK(normal_form(n) == normal_form(s));
    }
  }

  TEST_CASE("counting agrees with membership") {
    Sampler sampler(12);
    for (int i = 0; i < 100; ++i) {
      IndexSet s = sampler.index_set();
      NormalForm f = normal_form(s);
      Natural brute = 0;
      for (Natural k = 1; k <= 3000; ++k) brute += s.contains(k) ? 1 : 0;
      CHECK(count_upto(f, 3000) == brute);
      CHECK(enumerate_upto(s, 3000).size() == brute);
    }
  }

  TEST_CASE("ideal axioms on representable sets") {
    Sampler sampler(13);
    for (const Ideal ideal : {Ideal::fin(), Ideal::density_zero()}) {
      for (int i = 0; i < 200; ++i) {
        IndexSet a = sampler.index_set(), b = sampler.index_set();
        try {
          if (ideal.contains(a) && ideal.contains(b)) CHECK(ideal.contains(a | b));
          if (ideal.contains(a)) CHECK(ideal.contains(a & sampler.periodic_set()));
          if (Ideal::fin().contains(a)) CHECK(Ideal::density_zero().contains(a));
          CHECK_FALSE((ideal.contains(a) && ideal.in_filter(a)));
          CHECK(ideal.contains(IndexSet::finite({1, 2, 3})));
          CHECK_FALSE(ideal.contains(IndexSet::naturals()));
        } catch (const Error& e) {
          // two different sparse kinds met in an intersection
          CHECK(e.code() == ErrorCode::UnsupportedSparseIntersection);
        }
      }
    }
  }
}
