#pragma once

#include <json.hpp>

#include "idensity/density.hpp"
#include "idensity/topology.hpp"

namespace idensity::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const Rational& value);
json to_json(const ExtReal& value);
json to_json(const IndexSet& set);
json to_json(const ValueExpr& law);
json to_json(const PiecewiseSequence& seq, Ideal ideal);
json to_json(const IntervalSet& set);
json to_json(const IntervalGenerator& gen, Ideal ideal);
json to_json(const LocalSignature& sig);
json to_json(const DensityClassification& c, const IntervalSet& e, Ideal ideal);
json to_json(const LemmaReport& report);
json to_json(const BorelDecomposition& d);

}  // namespace idensity::cli
