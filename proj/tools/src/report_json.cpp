#include "report_json.hpp"

namespace idensity::cli {

json to_json(const Rational& value) { return to_string(value); }

json to_json(const ExtReal& value) { return to_string(value); }

json to_json(const IndexSet& set) {
  NormalForm form = normal_form(set);
  return {{"expr", set.to_string()},
          {"normal_form", to_index_set(form).to_string()},
          {"modulus", form.modulus},
          {"density", to_json(natural_density(form))},
          {"finite", is_finite(form)}};
}

json to_json(const ValueExpr& law) {
  return {{"law", law.to_string()},
          {"limit", to_json(law.limit())},
          {"approach", std::string(approach_name(law.approach()))}};
}

json to_json(const PiecewiseSequence& seq, Ideal ideal) {
  json pieces = json::array();
  auto limits = piece_limits(seq, ideal);
  for (std::size_t i = 0; i < seq.pieces().size(); ++i) {
    const auto& p = seq.pieces()[i];
    pieces.push_back({{"set", p.set.to_string()},
                      {"law", p.law.to_string()},
                      {"limit", to_json(limits[i].limit)},
                      {"approach", std::string(approach_name(limits[i].approach))},
                      {"in_ideal", limits[i].in_ideal}});
  }
  return pieces;
}

json to_json(const IntervalSet& set) {
  json intervals = json::array();
  for (const auto& i : set.intervals()) {
    intervals.push_back({{"lo", to_json(i.lo)},
                         {"hi", to_json(i.hi)},
                         {"lo_closed", i.lo_closed},
                         {"hi_closed", i.hi_closed}});
  }
  return {{"text", set.to_string()},
          {"complemented", set.complemented()},
          {"intervals", intervals},
          {"measure", to_json(set.measure())}};
}

json to_json(const IntervalGenerator& gen, Ideal ideal) {
  json pieces = json::array();
  for (const auto& p : gen.pieces()) {
    pieces.push_back({{"set", p.set.to_string()}, {"left", p.left.to_string()}, {"right", p.right.to_string()}});
  }
  return {{"anchor", to_json(gen.anchor())},
          {"pieces", pieces},
          {"script_s", to_json(script_s(gen))},
          {"admissible", validate_generator(gen, ideal)}};
}

json to_json(const LocalSignature& sig) {
  return {{"left_full", sig.left_full},
          {"right_full", sig.right_full},
          {"left_reach", to_json(sig.left_reach)},
          {"right_reach", to_json(sig.right_reach)},
          {"point_in", sig.point_in}};
}

json to_json(const DensityClassification& c, const IntervalSet& e, Ideal ideal) {
  json witnesses = json::array();
  for (const auto& w : c.witnesses) {
    auto [lo, hi] = i_density_along(w, e, ideal);
    json entry = to_json(w, ideal);
    entry["i_liminf"] = to_json(lo);
    entry["i_limsup"] = to_json(hi);
    witnesses.push_back(entry);
  }
  return {{"outcome", std::string(outcome_name(c.outcome))},
          {"lower", to_json(c.lower)},
          {"upper", to_json(c.upper)},
          {"witnesses", witnesses}};
}

json to_json(const LemmaReport& report) {
  return {{"name", report.name},
          {"inputs", report.inputs},
          {"expected", report.expected},
          {"computed", report.computed},
          {"status", std::string(status_name(report.status))},
          {"pass", report.pass()}};
}

json to_json(const BorelDecomposition& d) {
  return {{"open_part", to_json(d.open_part)}, {"null_part", to_json(d.null_part)}};
}

}  // namespace idensity::cli
