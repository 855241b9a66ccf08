#pragma once

#include <cstdint>

#include "hbq/building.hpp"
#include "hbq/money.hpp"
#include "hbq/pricebook.hpp"

namespace hbq {

struct PlumbingQuantities {
  int bathrooms = 0;
  int storeys = 1;
  double pvc_half_m = 0.0;
  double pvc_threequarter_m = 0.0;
  double pvc_4in_m = 0.0;
  std::int64_t wc = 0;
  std::int64_t basins = 0;
  std::int64_t showers = 0;
  std::int64_t fitting_sets = 0;
  std::int64_t tanks = 0;
  /// 1 + 0.25 per storey above the ground floor.
  Ratio storey_cost_factor = Ratio::one();
};

struct ElectricalQuantities {
  int room_count = 0;
  int storeys = 1;
  double cable_2_5_m = 0.0;
  double cable_4_m = 0.0;
  double cable_6_m = 0.0;
  std::int64_t switches = 0;
  std::int64_t sockets = 0;
  std::int64_t light_fittings = 0;
  std::int64_t mcbs = 0;
  std::int64_t distribution_boards = 0;
};

PlumbingQuantities plumbing(const BuildingSpec& spec);

/// Calibrated lumpsum for the bathroom count times the storey factor.
/// Throws missing_calibration when the book has no plumbing anchors.
Money plumbing_cost(const PlumbingQuantities& q, const PriceBook& book);

ElectricalQuantities electrical(const BuildingSpec& spec);

/// Calibrated lumpsum keyed by (room_count, storeys). Linear between anchors
/// of the same storey count; otherwise the nearest anchor scaled by room
/// ratio. Throws missing_calibration when the book has no anchors.
Money electrical_cost(const ElectricalQuantities& q, const PriceBook& book);

}  // namespace hbq
