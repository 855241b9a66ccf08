#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbq/building.hpp"
#include "hbq/geometry.hpp"
#include "hbq/money.hpp"
#include "hbq/pricebook.hpp"
#include "hbq/services.hpp"
#include "hbq/structural.hpp"

namespace hbq {

inline constexpr std::string_view kEngineVersion = "0.1.0";
inline constexpr std::int64_t kContingencyPercent = 15;

enum class ContingencyPlacement {
  all_inside,      // every feature is a variable cost under contingency
  extras_outside,  // package extras are added after contingency
};

struct EstimateOptions {
  double w_cut = kDefaultCutWastage;
  double wall_height_m = kDefaultWallHeightM;
  ContingencyPlacement placement = ContingencyPlacement::all_inside;
  bool case_compat = false;

  /// The flag bundle used to reproduce published case tables: no cutting
  /// wastage on blocks. Everything else stays at the documented formulas.
  static EstimateOptions case_compatible();

  friend bool operator==(const EstimateOptions&, const EstimateOptions&) = default;
};

struct BoQLine {
  std::string item;  // stable id, e.g. "cement_plaster"
  std::string description;
  Category category = Category::shell;
  Quantity quantity;
  std::string unit;
  std::optional<Material> material;  // set for lines priced from the material table
  Money unit_price;
  Money cost;  // whole GHS
  bool lumpsum = false;
  bool omitted_in_informal = false;
  bool after_contingency = false;

  friend bool operator==(const BoQLine&, const BoQLine&) = default;
};

/// Everything the pricing stage needs; independent of any price book.
struct Takeoff {
  BuildingSpec spec;
  EstimateOptions options;
  WallModel wall;  // per storey
  StructuralQuantities structural;
  PlumbingQuantities plumbing;
  ElectricalQuantities electrical;
};

struct Estimate {
  Takeoff takeoff;
  std::uint64_t pricebook_version = 0;
  std::string pricebook_timestamp;
  std::vector<BoQLine> lines;
  Money variable_subtotal;
  Money contingency;
  Money fixed_fees;
  Money after_contingency;
  Money total;
  Money rate_per_m2;

  WallSource mode() const { return takeoff.wall.source; }
  const BoQLine* find(std::string_view item) const;
  /// Cost of the named line, zero when absent.
  Money cost_of(std::string_view item) const;
};

Takeoff takeoff(const BuildingSpec& spec, const FloorPlanLayout* layout,
                const EstimateOptions& options);

/// Prices a takeoff. Throws unresolvable_material if the book cannot price a
/// material line.
Estimate price(const Takeoff& takeoff, const PriceBook& book);

/// Geometry mode when `layout` is given, rectangular approximation otherwise.
Estimate estimate(const BuildingSpec& spec, const FloorPlanLayout* layout, const PriceBook& book,
                  const EstimateOptions& options = {});

/// Same quantities, costs recomputed against `book`.
Estimate reprice(const Estimate& estimate, const PriceBook& book);

/// Sum of line costs per category (all categories present, zero-filled).
std::map<Category, Money> categorize(std::span<const BoQLine> lines);

}  // namespace hbq
