#include "hbq/features.hpp"

#include <iterator>

namespace hbq {

namespace {

Money band_lookup(const std::map<int, Money>& bands, int key) {
  auto it = bands.upper_bound(key);
  if (it == bands.begin()) return it->second;
  return std::prev(it)->second;
}

template <typename K>
Money table_lookup(const std::map<K, Money>& table, K key, const std::string& field) {
  auto it = table.find(key);
  if (it == table.end()) {
    throw Error(ErrorCode::unknown_grade, "no price for '" + std::string(name(key)) + "'", field);
  }
  return it->second;
}

Category category_of(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::septic:
    case FeatureKind::hvac:
      return Category::hvac_septic;
    case FeatureKind::tiles:
    case FeatureKind::paint:
    case FeatureKind::kitchen:
    case FeatureKind::ceiling:
      return Category::finishes;
    case FeatureKind::compound_wall:
    case FeatureKind::external_works:
      return Category::external;
    case FeatureKind::solar:
    case FeatureKind::security:
    case FeatureKind::smart_home:
      return Category::services;
  }
  return Category::finishes;
}

FeatureCostLine priced_line(FeatureKind kind, std::string description, Material material,
                            Quantity quantity, std::string unit, Money unit_price) {
  FeatureCostLine line;
  line.feature = kind;
  line.description = std::move(description);
  line.category = category_of(kind);
  line.material = material;
  line.quantity = quantity;
  line.unit = std::move(unit);
  line.unit_price = unit_price;
  line.cost = extend(quantity, unit_price).rounded_to_ghs();
  line.lumpsum = false;
  return line;
}

FeatureCostLine lumpsum_line(FeatureKind kind, std::string description, Money cost) {
  FeatureCostLine line;
  line.feature = kind;
  line.description = std::move(description);
  line.category = category_of(kind);
  line.cost = cost;
  line.lumpsum = true;
  return line;
}

}  // namespace

bool is_package_extra(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::septic:
    case FeatureKind::hvac:
    case FeatureKind::tiles:
    case FeatureKind::paint:
      return false;
    default:
      return true;
  }
}

Money septic_cost(int bedrooms, const PriceBook& book) {
  return band_lookup(book.features.septic_tank, bedrooms) + book.features.soakaway;
}

HvacCounts hvac_counts_and_cost(const BuildingSpec& spec, const PriceBook& book) {
  HvacCounts h;
  h.ac_units = spec.bedrooms + 1;
  h.fans = spec.bedrooms + 2;
  if (const auto* sel = spec.find(FeatureKind::hvac)) {
    if (sel->ac_units) h.ac_units = *sel->ac_units;
    if (sel->fans) h.fans = *sel->fans;
  }
  h.cost = book.features.ac_unit * h.ac_units + book.features.ceiling_fan * h.fans;
  return h;
}

Money tiles_cost(double area_m2, Grade grade, const PriceBook& book, Region region) {
  if (!(area_m2 > 0.0)) {
    throw Error(ErrorCode::invalid_spec, "tiled area must be positive", "area_m2");
  }
  return extend(Quantity::of(area_m2 * kTileWastage),
                resolve_price(book, tile_material(grade), region))
      .rounded_to_ghs();
}

Money staircase_allowance(int storeys, const PriceBook& book) {
  return book.features.staircase_flight * (storeys > 1 ? storeys - 1 : 0);
}

Money doors_windows_allowance(int bedrooms, const PriceBook& book) {
  const auto& anchors = book.features.doors_windows;
  if (anchors.empty()) {
    throw Error(ErrorCode::missing_calibration, "no doors/windows anchors",
                "features.doors_windows");
  }
  if (auto it = anchors.find(bedrooms); it != anchors.end()) return it->second;
  if (anchors.size() == 1) return anchors.begin()->second;

  std::map<int, Money>::const_iterator lo;
  std::map<int, Money>::const_iterator hi;
  if (bedrooms < anchors.begin()->first) {
    lo = anchors.begin();
    hi = std::next(lo);
  } else if (bedrooms > anchors.rbegin()->first) {
    hi = std::prev(anchors.end());
    lo = std::prev(hi);
  } else {
    hi = anchors.upper_bound(bedrooms);
    lo = std::prev(hi);
  }
  const Money value =
      lo->second + scale(hi->second - lo->second, bedrooms - lo->first, hi->first - lo->first);
  return value.pesewas() > 0 ? value.rounded_to_ghs() : Money{};
}

std::vector<FeatureCostLine> feature_costs(const BuildingSpec& spec, const WallModel& wall,
                                           const PriceBook& book) {
  std::vector<FeatureCostLine> lines;
  const auto& t = book.features;
  for (std::size_t i = 0; i < spec.features.size(); ++i) {
    const FeatureSelection& sel = spec.features[i];
    const Grade grade = sel.grade.value_or(spec.finish);
    const std::string field = "features[" + std::to_string(i) + "]";
    const std::string grade_name(name(grade));

    switch (sel.kind) {
      case FeatureKind::septic:
        lines.push_back(lumpsum_line(sel.kind, "Septic tank + soakaway",
                                     septic_cost(spec.bedrooms, book)));
        break;
      case FeatureKind::hvac: {
        const auto h = hvac_counts_and_cost(spec, book);
        lines.push_back(lumpsum_line(sel.kind,
                                     "HVAC (" + std::to_string(h.ac_units) + " AC + " +
                                         std::to_string(h.fans) + " fans)",
                                     h.cost));
        break;
      }
      case FeatureKind::tiles: {
        const Material m = tile_material(grade);
        lines.push_back(priced_line(sel.kind, "Floor tiles (" + grade_name + ", +10% wastage)", m,
                                    Quantity::of(spec.total_area_m2 * kTileWastage), "m2",
                                    resolve_price(book, m, spec.region)));
        break;
      }
      case FeatureKind::paint: {
        const Material m = paint_material(grade);
        const double surface = wall.gross_wall_area_m2 * spec.storeys * 2.0;
        lines.push_back(priced_line(sel.kind, "Paint (" + grade_name + ", both faces)", m,
                                    Quantity::of(surface), "m2",
                                    resolve_price(book, m, spec.region)));
        break;
      }
      case FeatureKind::compound_wall: {
        if (!sel.perimeter_m) {
          throw Error(ErrorCode::missing_parameter, "compound wall needs perimeter_m",
                      field + ".perimeter_m");
        }
        const auto height = sel.height_class.value_or(WallHeightClass::medium);
        const Money rate = table_lookup(t.compound_wall_per_m, height, field + ".height_class");
        FeatureCostLine line = lumpsum_line(
            sel.kind, "Compound wall (" + std::string(name(height)) + ")", Money{});
        line.quantity = Quantity::of(*sel.perimeter_m);
        line.unit = "m";
        line.unit_price = rate;
        line.cost = extend(line.quantity, rate).rounded_to_ghs();
        line.lumpsum = false;
        lines.push_back(line);
        break;
      }
      case FeatureKind::ceiling: {
        if (!sel.ceiling_type) {
          throw Error(ErrorCode::missing_parameter, "ceiling needs ceiling_type",
                      field + ".ceiling_type");
        }
        const Money rate = table_lookup(t.ceiling_per_m2, *sel.ceiling_type, field + ".ceiling_type");
        FeatureCostLine line = lumpsum_line(
            sel.kind, "Ceiling works (" + std::string(name(*sel.ceiling_type)) + ")", Money{});
        line.quantity = Quantity::of(spec.total_area_m2);
        line.unit = "m2";
        line.unit_price = rate;
        line.cost = extend(line.quantity, rate).rounded_to_ghs();
        line.lumpsum = false;
        lines.push_back(line);
        break;
      }
      case FeatureKind::kitchen:
        lines.push_back(lumpsum_line(sel.kind, "Kitchen built-ins (" + grade_name + ")",
                                     table_lookup(t.kitchen, grade, field + ".grade")));
        break;
      case FeatureKind::solar:
        lines.push_back(lumpsum_line(sel.kind, "Solar power system (" + grade_name + ")",
                                     table_lookup(t.solar, grade, field + ".grade")));
        break;
      case FeatureKind::security:
        lines.push_back(lumpsum_line(sel.kind, "Security system (" + grade_name + ")",
                                     table_lookup(t.security, grade, field + ".grade")));
        break;
      case FeatureKind::smart_home:
        lines.push_back(lumpsum_line(sel.kind, "Smart home system (" + grade_name + ")",
                                     table_lookup(t.smart_home, grade, field + ".grade")));
        break;
      case FeatureKind::external_works:
        lines.push_back(lumpsum_line(sel.kind, "External works (" + grade_name + ")",
                                     table_lookup(t.external_works, grade, field + ".grade")));
        break;
    }
  }
  return lines;
}

}  // namespace hbq
