#pragma once

#include <string>
#include <vector>

namespace hbq {

inline constexpr double kDefaultWallHeightM = 3.0;

/// A wall drawn as a rectangle in layout units; its longer side is the
/// wall's run length.
struct WallSegment {
  double dim_a = 0.0;
  double dim_b = 0.0;
};

struct Opening {
  double width_m = 0.0;
  double height_m = 0.0;
};

/// Positional metadata only. Walls arrive already split at doors, so doors
/// never enter the takeoff.
struct DoorRecord {
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
};

enum class RoomKind { living, bedroom_main, bedroom, kitchen, bath, other };

struct Room {
  RoomKind kind = RoomKind::other;
  double area_m2 = 0.0;
  std::string name;
};

/// One typical floor. Multi-storey buildings repeat it on every storey.
struct FloorPlanLayout {
  double scale = 0.0;  // metres per layout unit
  std::vector<WallSegment> walls;
  std::vector<Opening> windows;
  std::vector<DoorRecord> doors;
  std::vector<Room> rooms;

  /// Throws validation_error with the offending field path.
  void validate() const;
};

enum class WallSource { geometry, formula };

/// Wall quantities for a single storey.
struct WallModel {
  double total_wall_length_m = 0.0;
  double wall_height_m = kDefaultWallHeightM;
  double gross_wall_area_m2 = 0.0;
  double opening_area_m2 = 0.0;
  double net_wall_area_m2 = 0.0;
  WallSource source = WallSource::formula;
};

/// Rectangle standing in for the plan when no layout exists.
struct RectangularApproximation {
  static constexpr double kAspectRatio = 1.4;
  static constexpr double kPartitionBaseFactor = 0.40;
  static constexpr double kBedroomIncrement = 0.15;

  double footprint_m2 = 0.0;
  double aspect_ratio = kAspectRatio;
  double width_m = 0.0;
  double length_m = 0.0;
  double external_perimeter_m = 0.0;
  double internal_partition_m = 0.0;

  static RectangularApproximation compute(double footprint_m2, int bedrooms);
  double total_wall_length_m() const { return external_perimeter_m + internal_partition_m; }
};

WallModel wall_model_from_layout(const FloorPlanLayout& layout,
                                 double wall_height_m = kDefaultWallHeightM);

/// Windows are not deducted in formula mode.
WallModel wall_model_from_formula(double footprint_m2, int bedrooms,
                                  double wall_height_m = kDefaultWallHeightM);

/// Ghana Building Code GS 1207:2018 minimum room areas.
inline constexpr double kMinLivingRoomM2 = 13.47;
inline constexpr double kMinMainBedroomM2 = 11.15;

struct ComplianceFinding {
  std::size_t room_index = 0;
  RoomKind kind = RoomKind::other;
  double required_m2 = 0.0;
  double actual_m2 = 0.0;
};

/// One finding per room below its minimum; a room exactly at the minimum passes.
std::vector<ComplianceFinding> check_room_minimums(const FloorPlanLayout& layout);

const char* to_string(RoomKind kind);
RoomKind parse_room_kind(const std::string& text, const std::string& field = {});

}  // namespace hbq
