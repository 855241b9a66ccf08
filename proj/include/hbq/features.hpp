#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbq/building.hpp"
#include "hbq/geometry.hpp"
#include "hbq/money.hpp"
#include "hbq/pricebook.hpp"

namespace hbq {

inline constexpr double kTileWastage = 1.10;

/// A priced feature. Quantity-priced features (tiles, paint, compound wall,
/// ceiling) carry quantity, unit and unit price; package features are lumpsums.
struct FeatureCostLine {
  FeatureKind feature = FeatureKind::septic;
  std::string description;
  Category category = Category::finishes;
  std::optional<Material> material;
  Quantity quantity;
  std::string unit;
  Money unit_price;
  Money cost;
  bool lumpsum = true;
};

/// Graded tank for the bedroom band plus the fixed soakaway.
Money septic_cost(int bedrooms, const PriceBook& book);

struct HvacCounts {
  int ac_units = 0;
  int fans = 0;
  Money cost;
};

/// One AC per bedroom plus the living room, bedrooms + 2 fans. Counts given
/// on the spec's hvac selection take precedence.
HvacCounts hvac_counts_and_cost(const BuildingSpec& spec, const PriceBook& book);

/// area x grade price x 1.10, rounded half-up to whole GHS. The area must be
/// positive.
Money tiles_cost(double area_m2, Grade grade, const PriceBook& book,
                 Region region = Region::greater_accra);

/// One line per selected feature in selection order. `wall` is per storey.
/// Throws missing_parameter when a selection lacks a required parameter.
std::vector<FeatureCostLine> feature_costs(const BuildingSpec& spec, const WallModel& wall,
                                           const PriceBook& book);

/// One flight per floor transition.
Money staircase_allowance(int storeys, const PriceBook& book);

/// Doors-and-windows allowance by bedroom count, linear between and beyond anchors.
Money doors_windows_allowance(int bedrooms, const PriceBook& book);

/// Package extras (as opposed to the completeness items septic, HVAC, tiles
/// and paint) may be placed after contingency.
bool is_package_extra(FeatureKind kind);

}  // namespace hbq
