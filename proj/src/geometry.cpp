#include "hbq/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "hbq/error.hpp"

namespace hbq {

namespace {

void require_positive(double v, const std::string& field) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::validation_error, "must be positive", field);
  }
}

std::string indexed(const char* list, std::size_t i, const char* member) {
  return std::string(list) + "[" + std::to_string(i) + "]." + member;
}

}  // namespace

void FloorPlanLayout::validate() const {
  require_positive(scale, "scale");
  for (std::size_t i = 0; i < walls.size(); ++i) {
    require_positive(walls[i].dim_a, indexed("walls", i, "a"));
    require_positive(walls[i].dim_b, indexed("walls", i, "b"));
  }
  for (std::size_t i = 0; i < windows.size(); ++i) {
    require_positive(windows[i].width_m, indexed("windows", i, "w_m"));
    require_positive(windows[i].height_m, indexed("windows", i, "h_m"));
  }
  for (std::size_t i = 0; i < rooms.size(); ++i) {
    require_positive(rooms[i].area_m2, indexed("rooms", i, "area_m2"));
  }
}

RectangularApproximation RectangularApproximation::compute(double footprint_m2, int bedrooms) {
  if (!(footprint_m2 > 0.0)) {
    throw Error(ErrorCode::non_positive_footprint, "footprint must be positive", "footprint_m2");
  }
  RectangularApproximation r;
  r.footprint_m2 = footprint_m2;
  r.width_m = std::sqrt(footprint_m2 / r.aspect_ratio);
  r.length_m = r.aspect_ratio * r.width_m;
  r.external_perimeter_m = 2.0 * (r.width_m + r.length_m);
  const double extra_bedrooms = std::max(0, bedrooms - 2);
  r.internal_partition_m =
      r.external_perimeter_m * kPartitionBaseFactor * (1.0 + kBedroomIncrement * extra_bedrooms);
  return r;
}

WallModel wall_model_from_layout(const FloorPlanLayout& layout, double wall_height_m) {
  layout.validate();
  WallModel w;
  w.source = WallSource::geometry;
  w.wall_height_m = wall_height_m;
  for (const auto& seg : layout.walls) {
    w.total_wall_length_m += std::max(seg.dim_a, seg.dim_b) * layout.scale;
  }
  w.gross_wall_area_m2 = w.total_wall_length_m * wall_height_m;
  for (const auto& win : layout.windows) w.opening_area_m2 += win.width_m * win.height_m;
  if (w.opening_area_m2 > w.gross_wall_area_m2) {
    throw Error(ErrorCode::openings_exceed_gross,
                "window area " + std::to_string(w.opening_area_m2) + " m2 exceeds wall area " +
                    std::to_string(w.gross_wall_area_m2) + " m2",
                "windows");
  }
  w.net_wall_area_m2 = w.gross_wall_area_m2 - w.opening_area_m2;
  return w;
}

WallModel wall_model_from_formula(double footprint_m2, int bedrooms, double wall_height_m) {
  const auto rect = RectangularApproximation::compute(footprint_m2, bedrooms);
  WallModel w;
  w.source = WallSource::formula;
  w.wall_height_m = wall_height_m;
  w.total_wall_length_m = rect.total_wall_length_m();
  w.gross_wall_area_m2 = w.total_wall_length_m * wall_height_m;
  w.net_wall_area_m2 = w.gross_wall_area_m2;
  return w;
}

std::vector<ComplianceFinding> check_room_minimums(const FloorPlanLayout& layout) {
  std::vector<ComplianceFinding> findings;
  for (std::size_t i = 0; i < layout.rooms.size(); ++i) {
    const Room& room = layout.rooms[i];
    double required = 0.0;
    if (room.kind == RoomKind::living) required = kMinLivingRoomM2;
    else if (room.kind == RoomKind::bedroom_main) required = kMinMainBedroomM2;
    else continue;
    if (room.area_m2 < required) findings.push_back({i, room.kind, required, room.area_m2});
  }
  return findings;
}

const char* to_string(RoomKind kind) {
  switch (kind) {
    case RoomKind::living: return "living";
    case RoomKind::bedroom_main: return "bedroom_main";
    case RoomKind::bedroom: return "bedroom";
    case RoomKind::kitchen: return "kitchen";
    case RoomKind::bath: return "bath";
    case RoomKind::other: return "other";
  }
  return "other";
}

RoomKind parse_room_kind(const std::string& text, const std::string& field) {
  for (auto k : {RoomKind::living, RoomKind::bedroom_main, RoomKind::bedroom, RoomKind::kitchen,
                 RoomKind::bath, RoomKind::other}) {
    if (text == to_string(k)) return k;
  }
  throw Error(ErrorCode::validation_error, "unknown room kind '" + text + "'", field);
}

}  // namespace hbq
