#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "hbq/cases.hpp"
#include "hbq/estimator.hpp"
#include "hbq/gap.hpp"
#include "hbq/geometry.hpp"
#include "hbq/pricebook.hpp"

namespace hbq {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Body of POST /v1/estimate and input of `hbq estimate`.
struct EstimateRequest {
  BuildingSpec spec;
  std::optional<FloorPlanLayout> layout;
  EstimateOptions options;
  /// Applied on top of the store's snapshot for this request only.
  std::map<Material, Money> overrides;
};

// Readers take the dotted path of the value they parse so that errors name
// the exact offending field ("spec.storeys", "layout.walls[3].a"). All throw
// Error(validation_error) except where noted.

json to_json(const FeatureSelection& f);
FeatureSelection feature_from_json(const json& j, const std::string& path);

json to_json(const BuildingSpec& spec);
BuildingSpec spec_from_json(const json& j, const std::string& path = "spec");

json to_json(const FloorPlanLayout& layout);
FloorPlanLayout layout_from_json(const json& j, const std::string& path = "layout");

json to_json(const EstimateOptions& options);
EstimateOptions options_from_json(const json& j, const std::string& path = "options");

/// {material: price, ...}; prices must be positive.
std::map<Material, Money> overrides_from_json(const json& j, const std::string& path = "overrides");

/// Accepts {spec, layout?, options?, overrides?} or a bare spec document.
EstimateRequest request_from_json(const json& j);
json to_json(const EstimateRequest& request);

/// [{room, kind, name?, required_m2, actual_m2}], one per room below its minimum.
json room_findings_to_json(const FloorPlanLayout& layout);

json to_json(const WallModel& wall);
WallModel wall_from_json(const json& j, const std::string& path);

json to_json(const BoQLine& line);
BoQLine line_from_json(const json& j, const std::string& path);

/// Lines, category subtotals, totals and provenance (engine version,
/// pricebook version, mode).
json to_json(const Estimate& estimate);
/// Restores lines and totals verbatim and rebuilds the takeoff from the
/// recorded spec, options and wall model.
Estimate estimate_from_json(const json& j);

json to_json(const GapReport& report);
json to_json(const CaseFixture& fixture);
json to_json(const CaseRun& run);

/// Rates as seen by clients: defaults and overrides. Resolved prices depend
/// on the region and live in regions_to_json.
json pricebook_to_json(const PriceBook& book);
/// Per region: multipliers, resolved material prices and labour rate.
json regions_to_json(const PriceBook& book);

/// {"error": {"code", "message", "field"?, "line"?}}
json error_to_json(const Error& e);

json parse_json_text(const std::string& text, const std::string& what = "document");

}  // namespace hbq
