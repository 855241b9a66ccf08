#include "hbq/building.hpp"

#include <cmath>
#include <string>

namespace hbq {

bool BuildingSpec::has(FeatureKind kind) const { return find(kind) != nullptr; }

const FeatureSelection* BuildingSpec::find(FeatureKind kind) const {
  for (const auto& f : features) {
    if (f.kind == kind) return &f;
  }
  return nullptr;
}

void BuildingSpec::validate() const {
  if (!(total_area_m2 > 0.0) || !std::isfinite(total_area_m2)) {
    throw Error(ErrorCode::invalid_spec, "total area must be positive", "total_area_m2");
  }
  if (storeys < 1) throw Error(ErrorCode::invalid_spec, "at least one storey", "storeys");
  if (bedrooms < 1) throw Error(ErrorCode::invalid_spec, "at least one bedroom", "bedrooms");
  if (bathrooms < 1) throw Error(ErrorCode::invalid_spec, "at least one bathroom", "bathrooms");
  for (std::size_t i = 0; i < features.size(); ++i) {
    const std::string field = "features[" + std::to_string(i) + "]";
    for (std::size_t j = 0; j < i; ++j) {
      if (features[j].kind == features[i].kind) {
        throw Error(ErrorCode::invalid_spec, "feature selected twice", field);
      }
    }
    const auto& f = features[i];
    if (f.perimeter_m && !(*f.perimeter_m > 0.0)) {
      throw Error(ErrorCode::invalid_spec, "perimeter must be positive", field + ".perimeter_m");
    }
    if (f.ac_units && *f.ac_units < 0) {
      throw Error(ErrorCode::invalid_spec, "negative count", field + ".ac_units");
    }
    if (f.fans && *f.fans < 0) {
      throw Error(ErrorCode::invalid_spec, "negative count", field + ".fans");
    }
  }
}

}  // namespace hbq
