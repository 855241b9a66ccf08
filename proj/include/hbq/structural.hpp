#pragma once

#include <cstdint>

#include "hbq/building.hpp"
#include "hbq/geometry.hpp"

namespace hbq {

inline constexpr double kBlocksPerM2 = 10.9;
inline constexpr double kDefaultCutWastage = 0.05;
inline constexpr double kStoreyComplexityStep = 0.15;
inline constexpr double kTripVolumeM3 = 5.5;

struct CementBags {
  std::int64_t foundation = 0;
  std::int64_t mortar = 0;
  std::int64_t plaster = 0;
  std::int64_t screed = 0;

  std::int64_t total() const { return foundation + mortar + plaster + screed; }
};

/// Unrounded trip fractions per sub-use; `trips` is the single ceil of their sum.
struct SandTrips {
  double foundation = 0.0;
  double mortar = 0.0;
  double plaster = 0.0;
  double screed = 0.0;
  std::int64_t trips = 0;
};

struct SandAndStone {
  SandTrips sand;
  double stone_m3 = 0.0;
};

/// 6 m pieces.
struct RebarPieces {
  std::int64_t y10 = 0;
  std::int64_t y12 = 0;
  std::int64_t y16 = 0;
  std::int64_t y20 = 0;
};

struct RoofingQuantities {
  double roof_area_m2 = 0.0;
  std::int64_t sheets = 0;
  std::int64_t timber_boardfeet = 0;
  std::int64_t nails_kg = 0;
  std::int64_t ridge_caps = 0;
};

struct StructuralQuantities {
  std::int64_t blocks = 0;
  CementBags cement;
  SandAndStone sand_stone;
  RebarPieces rebar;
  RoofingQuantities roofing;
};

/// Sum over storeys of each storey's complexity factor: storey i (0 = ground)
/// carries 1 + 0.15 i. 1 storey -> 1.0, 2 -> 2.15, 3 -> 3.45.
double storey_block_weight(int storeys);

/// Blocks for `storeys` copies of the per-storey `wall`.
std::int64_t blocks(const WallModel& wall, int storeys, double w_cut = kDefaultCutWastage,
                    double blocks_per_m2 = kBlocksPerM2);

/// Each component is ceiled separately; the total is their sum.
CementBags cement(const BuildingSpec& spec, const WallModel& wall, std::int64_t block_count);

SandAndStone sand_and_stone(const BuildingSpec& spec, const WallModel& wall,
                            std::int64_t block_count);

RebarPieces rebar(const BuildingSpec& spec);

RoofingQuantities roofing(const BuildingSpec& spec);

StructuralQuantities structural_takeoff(const BuildingSpec& spec, const WallModel& wall,
                                        double w_cut = kDefaultCutWastage);

}  // namespace hbq
