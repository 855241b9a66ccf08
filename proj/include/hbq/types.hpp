#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "hbq/error.hpp"

namespace hbq {

enum class Material {
  cement_bag_50kg,
  block_6in_hollow,
  block_6in_solid,
  rebar_y10,
  rebar_y12,
  rebar_y16,
  rebar_y20,
  roof_sheet_ibr_045,
  roof_timber_boardfoot,
  roof_nails_kg,
  ridge_cap,
  sand_trip,
  stone_m3,
  tile_basic_m2,
  tile_standard_m2,
  tile_luxury_m2,
  paint_basic_m2,
  paint_standard_m2,
  paint_luxury_m2,
};

/// Drives which regional multiplier applies.
enum class SupplyClass { manufactured, local };

enum class Region {
  greater_accra,
  ashanti,
  western,
  western_north,
  central,
  eastern,
  volta,
  oti,
  bono,
  bono_east,
  ahafo,
  northern,
  savannah,
  north_east,
  upper_east,
  upper_west,
};

enum class Grade { basic, standard, luxury };
using Finish = Grade;

enum class Style {
  traditional,
  modern,
  luxury,
  open_concept,
  loft_studio,
  townhouse,
  mediterranean,
  farmhouse,
  tiny_home,
  cottage,
  barndominium,
  craftsman,
};

enum class FeatureKind {
  septic,
  hvac,
  tiles,
  paint,
  compound_wall,
  solar,
  kitchen,
  security,
  ceiling,
  external_works,
  smart_home,
};

enum class WallHeightClass { low, medium, high };

enum class CeilingType { gypsum, pop, wood_acoustic };

enum class Category { shell, services, hvac_septic, finishes, external, labour, staircase, fees };

template <typename E>
struct EnumTable;

#define HBQ_ENUM_TABLE(E, N, ...)                                                  \
  template <>                                                                      \
  struct EnumTable<E> {                                                            \
    static constexpr const char* kind = #E;                                        \
    static constexpr std::array<std::pair<E, std::string_view>, N> entries{{__VA_ARGS__}}; \
  };

HBQ_ENUM_TABLE(Material, 19,
               {Material::cement_bag_50kg, "cement_bag_50kg"},
               {Material::block_6in_hollow, "block_6in_hollow"},
               {Material::block_6in_solid, "block_6in_solid"},
               {Material::rebar_y10, "rebar_y10"},
               {Material::rebar_y12, "rebar_y12"},
               {Material::rebar_y16, "rebar_y16"},
               {Material::rebar_y20, "rebar_y20"},
               {Material::roof_sheet_ibr_045, "roof_sheet_ibr_045"},
               {Material::roof_timber_boardfoot, "roof_timber_boardfoot"},
               {Material::roof_nails_kg, "roof_nails_kg"},
               {Material::ridge_cap, "ridge_cap"},
               {Material::sand_trip, "sand_trip"},
               {Material::stone_m3, "stone_m3"},
               {Material::tile_basic_m2, "tile_basic_m2"},
               {Material::tile_standard_m2, "tile_standard_m2"},
               {Material::tile_luxury_m2, "tile_luxury_m2"},
               {Material::paint_basic_m2, "paint_basic_m2"},
               {Material::paint_standard_m2, "paint_standard_m2"},
               {Material::paint_luxury_m2, "paint_luxury_m2"})

HBQ_ENUM_TABLE(SupplyClass, 2,
               {SupplyClass::manufactured, "manufactured"},
               {SupplyClass::local, "local"})

HBQ_ENUM_TABLE(Region, 16,
               {Region::greater_accra, "greater_accra"},
               {Region::ashanti, "ashanti"},
               {Region::western, "western"},
               {Region::western_north, "western_north"},
               {Region::central, "central"},
               {Region::eastern, "eastern"},
               {Region::volta, "volta"},
               {Region::oti, "oti"},
               {Region::bono, "bono"},
               {Region::bono_east, "bono_east"},
               {Region::ahafo, "ahafo"},
               {Region::northern, "northern"},
               {Region::savannah, "savannah"},
               {Region::north_east, "north_east"},
               {Region::upper_east, "upper_east"},
               {Region::upper_west, "upper_west"})

HBQ_ENUM_TABLE(Grade, 3,
               {Grade::basic, "basic"},
               {Grade::standard, "standard"},
               {Grade::luxury, "luxury"})

HBQ_ENUM_TABLE(Style, 12,
               {Style::traditional, "traditional"},
               {Style::modern, "modern"},
               {Style::luxury, "luxury"},
               {Style::open_concept, "open_concept"},
               {Style::loft_studio, "loft_studio"},
               {Style::townhouse, "townhouse"},
               {Style::mediterranean, "mediterranean"},
               {Style::farmhouse, "farmhouse"},
               {Style::tiny_home, "tiny_home"},
               {Style::cottage, "cottage"},
               {Style::barndominium, "barndominium"},
               {Style::craftsman, "craftsman"})

HBQ_ENUM_TABLE(FeatureKind, 11,
               {FeatureKind::septic, "septic"},
               {FeatureKind::hvac, "hvac"},
               {FeatureKind::tiles, "tiles"},
               {FeatureKind::paint, "paint"},
               {FeatureKind::compound_wall, "compound_wall"},
               {FeatureKind::solar, "solar"},
               {FeatureKind::kitchen, "kitchen"},
               {FeatureKind::security, "security"},
               {FeatureKind::ceiling, "ceiling"},
               {FeatureKind::external_works, "external_works"},
               {FeatureKind::smart_home, "smart_home"})

HBQ_ENUM_TABLE(WallHeightClass, 3,
               {WallHeightClass::low, "low"},
               {WallHeightClass::medium, "medium"},
               {WallHeightClass::high, "high"})

HBQ_ENUM_TABLE(CeilingType, 3,
               {CeilingType::gypsum, "gypsum"},
               {CeilingType::pop, "pop"},
               {CeilingType::wood_acoustic, "wood_acoustic"})

HBQ_ENUM_TABLE(Category, 8,
               {Category::shell, "shell"},
               {Category::services, "services"},
               {Category::hvac_septic, "hvac_septic"},
               {Category::finishes, "finishes"},
               {Category::external, "external"},
               {Category::labour, "labour"},
               {Category::staircase, "staircase"},
               {Category::fees, "fees"})

#undef HBQ_ENUM_TABLE

template <typename E>
constexpr std::string_view name(E value) {
  for (const auto& [e, n] : EnumTable<E>::entries) {
    if (e == value) return n;
  }
  return "?";
}

template <typename E>
constexpr const auto& all_values() {
  return EnumTable<E>::entries;
}

/// Throws Error(`code`) naming the offending text when no entry matches.
template <typename E>
E parse_enum(std::string_view text, ErrorCode code = ErrorCode::parse_error,
             const std::string& field = {}) {
  for (const auto& [e, n] : EnumTable<E>::entries) {
    if (n == text) return e;
  }
  throw Error(code, "unknown " + std::string(EnumTable<E>::kind) + " '" + std::string(text) + "'",
              field);
}

SupplyClass supply_class(Material material);

/// Tile and paint materials for a finish grade.
Material tile_material(Grade grade);
Material paint_material(Grade grade);

}  // namespace hbq
