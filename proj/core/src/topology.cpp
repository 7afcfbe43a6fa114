#include "idensity/topology.hpp"

#include "idensity/error.hpp"

namespace idensity {
namespace {

LemmaReport report(std::string name, std::string inputs, std::string expected, std::string computed, bool hypothesis,
                   bool holds) {
  LemmaStatus status = !hypothesis ? LemmaStatus::Vacuous : holds ? LemmaStatus::Pass : LemmaStatus::Fail;
  return {std::move(name), std::move(inputs), std::move(expected), std::move(computed), status};
}

std::string show(const IntervalSet& s) { return s.to_string(); }

}  // namespace

std::string_view status_name(LemmaStatus status) {
  switch (status) {
    case LemmaStatus::Pass: return "pass";
    case LemmaStatus::Fail: return "FAIL";
    case LemmaStatus::Vacuous: return "vacuous";
  }
  return "?";
}

bool is_ti_open(const IntervalSet& a, Ideal ideal) { return a.subset_of(theta(a, ideal)); }

bool is_usual_open(const IntervalSet& a) {
  MembershipPattern pat = MembershipPattern::sample(a, a.breakpoints());
  for (std::size_t i = 0; i < pat.points.size(); ++i) {
    if (pat.at_point[i] && !(pat.gaps[i] && pat.gaps[i + 1])) return false;
  }
  return true;
}

std::vector<LemmaReport> check_theta_lemmas(const IntervalSet& a, const IntervalSet& b, Ideal ideal) {
  const std::string ab = "A = " + show(a) + "; B = " + show(b);
  const IntervalSet ta = theta(a, ideal), tb = theta(b, ideal);
  const std::string both = "theta(A) = " + show(ta) + "; theta(B) = " + show(tb);
  std::vector<LemmaReport> out;

  out.push_back(report("null symmetric difference", ab, "lambda(A ^ B) = 0 => theta(A) = theta(B)", both,
                       (a ^ b).is_null(), ta == tb));

  IntervalSet tta = theta(ta, ideal);
  out.push_back(report("idempotence", "A = " + show(a), "theta(theta(A)) = theta(A)",
                       "theta(theta(A)) = " + show(tta) + "; theta(A) = " + show(ta), true, tta == ta));

  out.push_back(report("monotonicity", ab, "A subset B => theta(A) subset theta(B)", both, a.subset_of(b),
                       ta.subset_of(tb)));

  IntervalSet tab = theta(a & b, ideal);
  out.push_back(report("intersection law", ab, "theta(A & B) = theta(A) & theta(B)",
                       "theta(A & B) = " + show(tab) + "; theta(A) & theta(B) = " + show(ta & tb), true,
                       tab == (ta & tb)));

  out.push_back(report("null difference", ab, "lambda(A \\ B) = 0 => theta(A) subset theta(B)", both,
                       (a - b).is_null(), ta.subset_of(tb)));

  IntervalSet tca = theta(a.complement(), ideal);
  out.push_back(report("null set", "A = " + show(a), "lambda(A) = 0 => theta(A) = {} and theta(co A) = R",
                       "theta(A) = " + show(ta) + "; theta(co A) = " + show(tca), a.is_null(),
                       ta.is_empty() && tca.is_real_line()));

  out.push_back(report("complement disjointness", "A = " + show(a), "theta(A) & theta(co A) = {}",
                       "theta(A) & theta(co A) = " + show(ta & tca), true, (ta & tca).is_empty()));
  return out;
}

LemmaReport check_finite_closure(const std::vector<IntervalSet>& family, Ideal ideal) {
  std::string bad, inputs;
  IntervalSet meet = IntervalSet::real_line(), join;
  for (const auto& s : family) {
    if (!inputs.empty()) inputs += "; ";
    inputs += show(s);
    if (!is_ti_open(s, ideal)) bad += (bad.empty() ? "" : "; ") + show(s);
    meet = meet & s;
    join = join | s;
  }
  if (!bad.empty()) throw Error(ErrorCode::PreconditionViolation, "not open in the density topology: " + bad);
  bool meet_open = is_ti_open(meet, ideal), join_open = is_ti_open(join, ideal);
  std::string computed = "intersection " + show(meet) + (meet_open ? " open" : " NOT open") + "; union " +
                         show(join) + (join_open ? " open" : " NOT open");
  return report("finite closure", inputs, "finite intersection and union are open", computed, true,
                meet_open && join_open);
}

BorelDecomposition borel_decompose(const IntervalSet& b, Ideal ideal) {
  IntervalSet c = b & theta(b, ideal);
  IntervalSet d = b - c;
  auto breach = [&](const std::string& what) {
    throw Error(ErrorCode::InvariantBreach, "decomposition of " + show(b) + ": " + what);
  };
  if (!((c | d) == b)) breach("parts do not reunite");
  if (!(c & d).is_empty()) breach("parts overlap");
  if (!is_ti_open(c, ideal)) breach("open part " + show(c) + " is not open");
  if (!d.is_null()) breach("null part " + show(d) + " has positive measure");
  return {c, d};
}

}  // namespace idensity
