#include "hbq/structural.hpp"

#include <cmath>

#include "hbq/money.hpp"

namespace hbq {

double storey_block_weight(int storeys) {
  double weight = 0.0;
  for (int i = 0; i < storeys; ++i) weight += 1.0 + kStoreyComplexityStep * i;
  return weight;
}

std::int64_t blocks(const WallModel& wall, int storeys, double w_cut, double blocks_per_m2) {
  return ceil_count(wall.net_wall_area_m2 * blocks_per_m2 * (1.0 + w_cut) *
                    storey_block_weight(storeys));
}

CementBags cement(const BuildingSpec& spec, const WallModel& wall, std::int64_t block_count) {
  const double plastered = wall.gross_wall_area_m2 * spec.storeys;
  CementBags c;
  c.foundation = ceil_count(spec.footprint_m2() * 4.0);
  c.mortar = ceil_count(static_cast<double>(block_count) / 100.0 * 1.2);
  c.plaster = ceil_count(plastered * 2.0 * 0.6);
  c.screed = ceil_count(spec.total_area_m2 * spec.storeys * 2.0);
  return c;
}

SandAndStone sand_and_stone(const BuildingSpec& spec, const WallModel& wall,
                            std::int64_t block_count) {
  const double plastered = wall.gross_wall_area_m2 * spec.storeys;
  SandAndStone s;
  s.sand.foundation = spec.footprint_m2() * 0.18 / kTripVolumeM3;
  s.sand.mortar = static_cast<double>(block_count) / 1000.0 * 2.5;
  s.sand.plaster = plastered * 2.0 / 100.0 * 3.0;
  s.sand.screed = spec.total_area_m2 * spec.storeys * 0.15 / kTripVolumeM3;
  s.sand.trips = ceil_count(s.sand.foundation + s.sand.mortar + s.sand.plaster + s.sand.screed);
  s.stone_m3 =
      spec.footprint_m2() * 0.18 * (1.0 + kStoreyComplexityStep * (spec.storeys - 1));
  return s;
}

RebarPieces rebar(const BuildingSpec& spec) {
  const double fp = spec.footprint_m2();
  const int n = spec.storeys;
  RebarPieces r;
  r.y12 = ceil_count(12.0 * fp * (n >= 2 ? 1.4 : 1.0));
  r.y16 = ceil_count(4.0 * fp * n);
  r.y10 = ceil_count(3.0 * fp * n);
  r.y20 = n > 1 ? ceil_count(0.5 * fp * n) : 0;
  return r;
}

RoofingQuantities roofing(const BuildingSpec& spec) {
  RoofingQuantities q;
  q.roof_area_m2 = spec.footprint_m2() * 1.2;
  q.sheets = ceil_count(q.roof_area_m2 * 0.45);
  q.timber_boardfeet = ceil_count(q.roof_area_m2 * 15.0);
  q.nails_kg = ceil_count(static_cast<double>(q.sheets) * 0.15);
  q.ridge_caps = ceil_count(std::sqrt(spec.total_area_m2) * 0.5);
  return q;
}

StructuralQuantities structural_takeoff(const BuildingSpec& spec, const WallModel& wall,
                                        double w_cut) {
  StructuralQuantities q;
  q.blocks = blocks(wall, spec.storeys, w_cut);
  q.cement = cement(spec, wall, q.blocks);
  q.sand_stone = sand_and_stone(spec, wall, q.blocks);
  q.rebar = rebar(spec);
  q.roofing = roofing(spec);
  return q;
}

}  // namespace hbq
