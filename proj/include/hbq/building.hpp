#pragma once

#include <optional>
#include <vector>

#include "hbq/types.hpp"

namespace hbq {

/// One optional feature with its feature-specific parameters. Fields that do
/// not apply to `kind` are ignored.
struct FeatureSelection {
  FeatureKind kind = FeatureKind::septic;
  std::optional<Grade> grade;  // falls back to the building finish
  std::optional<double> perimeter_m;              // compound_wall
  std::optional<WallHeightClass> height_class;    // compound_wall
  std::optional<CeilingType> ceiling_type;        // ceiling
  std::optional<int> ac_units;                    // hvac count overrides
  std::optional<int> fans;

  friend bool operator==(const FeatureSelection&, const FeatureSelection&) = default;
};

struct BuildingSpec {
  double total_area_m2 = 0.0;
  int storeys = 1;
  int bedrooms = 1;
  int bathrooms = 1;
  Style style = Style::traditional;
  Finish finish = Finish::standard;
  Region region = Region::greater_accra;
  std::vector<FeatureSelection> features;

  double footprint_m2() const { return total_area_m2 / storeys; }
  bool has(FeatureKind kind) const;
  const FeatureSelection* find(FeatureKind kind) const;

  /// Throws invalid_spec naming the field.
  void validate() const;

  friend bool operator==(const BuildingSpec&, const BuildingSpec&) = default;
};

}  // namespace hbq
