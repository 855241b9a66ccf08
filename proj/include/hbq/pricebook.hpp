#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hbq/money.hpp"
#include "hbq/types.hpp"

namespace hbq {

struct RegionalMultipliers {
  Ratio manufactured = Ratio::one();
  Ratio local = Ratio::one();

  friend bool operator==(const RegionalMultipliers&, const RegionalMultipliers&) = default;
};

struct PriceOverride {
  Money price;
  std::string timestamp;  // ISO-8601

  friend bool operator==(const PriceOverride&, const PriceOverride&) = default;
};

struct FeeSchedule {
  Money design_base;
  Money permit_base;
  Money utility_connection;
  Ratio design_multi_factor = Ratio::one();
  Ratio permit_multi_factor = Ratio::one();

  friend bool operator==(const FeeSchedule&, const FeeSchedule&) = default;
};

/// Graded price tables for optional features and allowances.
/// Maps keyed by an integer are bedroom bands: a lookup takes the largest key
/// not above the bedroom count, or the smallest key when all are above it.
struct FeatureTables {
  std::map<int, Money> septic_tank;
  Money soakaway;
  Money ac_unit;
  Money ceiling_fan;
  Money staircase_flight;
  /// Anchors by bedroom count; interpolated and extrapolated linearly.
  std::map<int, Money> doors_windows;
  std::map<WallHeightClass, Money> compound_wall_per_m;
  std::map<CeilingType, Money> ceiling_per_m2;
  std::map<Grade, Money> kitchen;
  std::map<Grade, Money> solar;
  std::map<Grade, Money> security;
  std::map<Grade, Money> smart_home;
  std::map<Grade, Money> external_works;

  friend bool operator==(const FeatureTables&, const FeatureTables&) = default;
};

struct ElectricalAnchor {
  int rooms = 0;
  int storeys = 0;
  Money cost;

  friend bool operator==(const ElectricalAnchor&, const ElectricalAnchor&) = default;
};

/// Lumpsum anchors for the services that are priced by calibration rather
/// than by unit rates.
struct ServiceCalibration {
  std::map<int, Money> plumbing;  // by bathroom count
  Money plumbing_extra_bath;      // slope beyond the largest anchor
  std::vector<ElectricalAnchor> electrical;

  friend bool operator==(const ServiceCalibration&, const ServiceCalibration&) = default;
};

/// Flat per-m2 rates quoted by informal contractors.
struct InformalBand {
  Money low;
  Money high;

  friend bool operator==(const InformalBand&, const InformalBand&) = default;
};

using CategoryModifiers = std::map<Category, Ratio>;

/// Immutable snapshot of every rate the engine prices with. Copies are cheap
/// enough that a new version is produced by value for each override.
struct PriceBook {
  std::map<Material, Money> defaults;
  std::map<Material, PriceOverride> overrides;
  Money labour_per_m2;
  FeeSchedule fees;
  FeatureTables features;
  ServiceCalibration services;
  InformalBand informal_band;
  /// BoQ item ids that informal flat-rate quotes characteristically leave out.
  std::set<std::string> omitted_items;
  std::map<Region, RegionalMultipliers> regions;
  std::map<Style, CategoryModifiers> style_modifiers;
  std::map<Grade, CategoryModifiers> finish_modifiers;
  std::uint64_t version = 1;
  std::string timestamp;

  /// Throws Error(validation_error) naming the first offending field.
  void validate() const;

  /// Override if present, else default. Throws unknown_material.
  Money base_price(Material material) const;
  /// Throws unknown_region.
  const RegionalMultipliers& multipliers(Region region) const;
  /// Combined style x finish multiplier for one category (identity if unset).
  Ratio modifier(Style style, Grade finish, Category category) const;

  friend bool operator==(const PriceBook&, const PriceBook&) = default;
};

/// The shipped Greater Accra book (February 2026 market levels).
PriceBook default_pricebook();

/// (override ?? default) x regional factor for the material's supply class,
/// rounded half-up to the pesewa.
Money resolve_price(const PriceBook& book, Material material, Region region);

/// Labour rate per m2 of floor area with the local-materials factor applied.
Money resolve_labour_rate(const PriceBook& book, Region region);

/// New version with `material` overridden. The input book is untouched.
/// Throws non_positive_price.
PriceBook apply_override(const PriceBook& book, Material material, Money price,
                         std::string timestamp);

}  // namespace hbq
