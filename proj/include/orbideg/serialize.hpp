#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbideg/circle_map.hpp"
#include "orbideg/degree.hpp"
#include "orbideg/slice_lift.hpp"
#include "orbideg/strata.hpp"
#include "orbideg/verify.hpp"

namespace orbideg {

using Json = nlohmann::ordered_json;

/// Command-line settings. Defaults are part of the public contract.
struct CliConfig {
  std::string format = "json";  // json | text
  std::uint64_t cap = 10'000'000;
  double residual = 1e-9;
  double derivative_threshold = 1e-8;
  double fd_step = 1e-5;
  std::uint64_t seed = 0;

  NumericTolerances tolerances() const;
  EnumerationConfig enumeration() const;
};

Json to_json(const CliConfig& c);
/// Reads the keys that are present and keeps defaults for the rest;
/// unknown keys and malformed values are InvalidInput.
CliConfig config_from_json(const Json& j);

/// Weights given as "1,3" (whitespace tolerated). InvalidInput otherwise.
Weights parse_weights(const std::string& text);
/// Exact value "0,1/3" on the given weights.
WpsPoint parse_value(const Weights& r, const std::string& text);

Json to_json(const WpsPoint& x);
WpsPoint point_from_json(const Json& j);
Json to_json(const MonomialMap& f);
/// Reads {"q": [...], "r": [...], "e": [...]}; any "d" is ignored.
MonomialMap map_from_json(const Json& j);
Json to_json(const PreimageRecord& r);
Json to_json(const DegreeResult& d);
Json to_json(const StrataReport& s);
Json to_json(const LiftEvaluation& l);
Json to_json(const CircleDegree& d);
Json to_json(const PropertyReport& r);
Json to_json(const std::vector<PropertyReport>& reports);

}  // namespace orbideg
