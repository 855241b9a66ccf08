#include "hbq/pricebook.hpp"

#include <type_traits>
#include <utility>

namespace hbq {

SupplyClass supply_class(Material material) {
  switch (material) {
    case Material::block_6in_hollow:
    case Material::block_6in_solid:
    case Material::roof_timber_boardfoot:
    case Material::sand_trip:
    case Material::stone_m3:
      return SupplyClass::local;
    default:
      return SupplyClass::manufactured;
  }
}

Material tile_material(Grade grade) {
  switch (grade) {
    case Grade::basic: return Material::tile_basic_m2;
    case Grade::standard: return Material::tile_standard_m2;
    case Grade::luxury: return Material::tile_luxury_m2;
  }
  throw Error(ErrorCode::unknown_grade, "no tile grade");
}

Material paint_material(Grade grade) {
  switch (grade) {
    case Grade::basic: return Material::paint_basic_m2;
    case Grade::standard: return Material::paint_standard_m2;
    case Grade::luxury: return Material::paint_luxury_m2;
  }
  throw Error(ErrorCode::unknown_grade, "no paint grade");
}

namespace {

void require_positive(Money m, const std::string& field) {
  if (m.pesewas() <= 0) {
    throw Error(ErrorCode::validation_error, "price must be positive, got " + m.to_string(),
                field);
  }
}

template <typename K>
void require_positive_map(const std::map<K, Money>& table, const std::string& prefix) {
  for (const auto& [key, price] : table) {
    if constexpr (std::is_enum_v<K>) {
      require_positive(price, prefix + "." + std::string(name(key)));
    } else {
      require_positive(price, prefix + "." + std::to_string(key));
    }
  }
}

void require_non_negative(Ratio r, const std::string& field) {
  if (r.micro() < 0) {
    throw Error(ErrorCode::validation_error, "factor must be non-negative", field);
  }
}

}  // namespace

void PriceBook::validate() const {
  for (const auto& [material, label] : all_values<Material>()) {
    auto it = defaults.find(material);
    if (it == defaults.end()) {
      throw Error(ErrorCode::validation_error, "missing default price",
                  "defaults." + std::string(label));
    }
    require_positive(it->second, "defaults." + std::string(label));
  }
  for (const auto& [material, ov] : overrides) {
    require_positive(ov.price, "overrides." + std::string(name(material)));
  }
  require_positive(labour_per_m2, "defaults.labour_per_m2");

  require_positive(fees.design_base, "fees.design_base");
  require_positive(fees.permit_base, "fees.permit_base");
  require_positive(fees.utility_connection, "fees.utility_connection");
  require_non_negative(fees.design_multi_factor, "fees.design_multi_factor");
  require_non_negative(fees.permit_multi_factor, "fees.permit_multi_factor");

  require_positive_map(features.septic_tank, "features.septic_tank");
  require_positive(features.soakaway, "features.soakaway");
  require_positive(features.ac_unit, "features.ac_unit");
  require_positive(features.ceiling_fan, "features.ceiling_fan");
  require_positive(features.staircase_flight, "features.staircase_flight");
  require_positive_map(features.doors_windows, "features.doors_windows");
  require_positive_map(features.compound_wall_per_m, "features.compound_wall");
  require_positive_map(features.ceiling_per_m2, "features.ceiling");
  require_positive_map(features.kitchen, "features.kitchen");
  require_positive_map(features.solar, "features.solar");
  require_positive_map(features.security, "features.security");
  require_positive_map(features.smart_home, "features.smart_home");
  require_positive_map(features.external_works, "features.external_works");
  if (features.septic_tank.empty()) {
    throw Error(ErrorCode::validation_error, "at least one band required",
                "features.septic_tank");
  }
  if (features.doors_windows.empty()) {
    throw Error(ErrorCode::validation_error, "at least one anchor required",
                "features.doors_windows");
  }

  require_positive_map(services.plumbing, "services.plumbing");
  require_positive(services.plumbing_extra_bath, "services.plumbing_extra_bath");
  for (const auto& a : services.electrical) {
    const std::string field =
        "services.electrical." + std::to_string(a.rooms) + "x" + std::to_string(a.storeys);
    if (a.rooms <= 0 || a.storeys <= 0) {
      throw Error(ErrorCode::validation_error, "anchor key must be positive", field);
    }
    require_positive(a.cost, field);
  }

  require_positive(informal_band.low, "informal_band.low");
  require_positive(informal_band.high, "informal_band.high");
  if (informal_band.low > informal_band.high) {
    throw Error(ErrorCode::validation_error, "low exceeds high", "informal_band");
  }

  for (const auto& [region, m] : regions) {
    const std::string field = "regions." + std::string(name(region));
    require_non_negative(m.manufactured, field);
    require_non_negative(m.local, field);
    if (region == Region::greater_accra && !(m == RegionalMultipliers{})) {
      throw Error(ErrorCode::validation_error, "Greater Accra is the 1.0 baseline", field);
    }
  }
  for (const auto& [style, mods] : style_modifiers) {
    for (const auto& [cat, r] : mods) {
      require_non_negative(r, "modifiers.style." + std::string(name(style)) + "." +
                                  std::string(name(cat)));
    }
  }
  for (const auto& [grade, mods] : finish_modifiers) {
    for (const auto& [cat, r] : mods) {
      require_non_negative(r, "modifiers.finish." + std::string(name(grade)) + "." +
                                  std::string(name(cat)));
    }
  }
}

Money PriceBook::base_price(Material material) const {
  if (auto it = overrides.find(material); it != overrides.end()) return it->second.price;
  if (auto it = defaults.find(material); it != defaults.end()) return it->second;
  throw Error(ErrorCode::unknown_material, "no price for " + std::string(name(material)));
}

const RegionalMultipliers& PriceBook::multipliers(Region region) const {
  auto it = regions.find(region);
  if (it == regions.end()) {
    throw Error(ErrorCode::unknown_region,
                "region '" + std::string(name(region)) + "' not in price book");
  }
  return it->second;
}

Ratio PriceBook::modifier(Style style, Grade finish, Category category) const {
  Ratio r = Ratio::one();
  if (auto s = style_modifiers.find(style); s != style_modifiers.end()) {
    if (auto c = s->second.find(category); c != s->second.end()) r = r * c->second;
  }
  if (auto f = finish_modifiers.find(finish); f != finish_modifiers.end()) {
    if (auto c = f->second.find(category); c != f->second.end()) r = r * c->second;
  }
  return r;
}

Money resolve_price(const PriceBook& book, Material material, Region region) {
  const RegionalMultipliers& m = book.multipliers(region);
  const Money base = book.base_price(material);
  return base * (supply_class(material) == SupplyClass::manufactured ? m.manufactured : m.local);
}

Money resolve_labour_rate(const PriceBook& book, Region region) {
  return book.labour_per_m2 * book.multipliers(region).local;
}

PriceBook apply_override(const PriceBook& book, Material material, Money price,
                         std::string timestamp) {
  if (price.pesewas() <= 0) {
    throw Error(ErrorCode::non_positive_price, "override must be positive, got " +
                                                   price.to_string(),
                "overrides." + std::string(name(material)));
  }
  PriceBook next = book;
  next.overrides[material] = PriceOverride{price, timestamp};
  next.version = book.version + 1;
  next.timestamp = std::move(timestamp);
  return next;
}

PriceBook default_pricebook() {
  PriceBook b;
  auto g = [](std::int64_t whole) { return Money::ghs(whole); };

  b.defaults = {
      {Material::cement_bag_50kg, g(101)},
      {Material::block_6in_hollow, Money::from_pesewas(860)},
      {Material::block_6in_solid, g(9)},
      {Material::rebar_y10, g(38)},
      {Material::rebar_y12, g(54)},
      {Material::rebar_y16, g(98)},
      {Material::rebar_y20, g(145)},
      {Material::roof_sheet_ibr_045, g(122)},
      {Material::roof_timber_boardfoot, g(25)},
      {Material::roof_nails_kg, g(30)},
      {Material::ridge_cap, g(85)},
      {Material::sand_trip, g(1350)},
      {Material::stone_m3, g(366)},
      {Material::tile_basic_m2, g(30)},
      {Material::tile_standard_m2, g(45)},
      {Material::tile_luxury_m2, g(150)},
      {Material::paint_basic_m2, g(22)},
      {Material::paint_standard_m2, g(30)},
      {Material::paint_luxury_m2, g(48)},
  };
  b.labour_per_m2 = g(900);

  b.fees.design_base = g(5000);
  b.fees.permit_base = g(3500);
  b.fees.utility_connection = g(4000);
  b.fees.design_multi_factor = Ratio::parse("1.3");
  b.fees.permit_multi_factor = Ratio::parse("1.2");

  auto& f = b.features;
  f.septic_tank = {{2, g(10000)}, {3, g(17500)}, {4, g(18000)}};
  f.soakaway = g(12000);
  f.ac_unit = g(4500);
  f.ceiling_fan = g(420);
  f.staircase_flight = g(8000);
  f.doors_windows = {{2, g(18500)}, {3, g(28000)}, {4, g(45000)}};
  f.compound_wall_per_m = {
      {WallHeightClass::low, g(500)}, {WallHeightClass::medium, g(650)}, {WallHeightClass::high, g(800)}};
  f.ceiling_per_m2 = {
      {CeilingType::pop, g(70)}, {CeilingType::gypsum, g(85)}, {CeilingType::wood_acoustic, g(160)}};
  f.kitchen = {{Grade::basic, g(12000)}, {Grade::standard, g(18000)}, {Grade::luxury, g(47500)}};
  f.solar = {{Grade::basic, g(15000)}, {Grade::standard, g(45000)}, {Grade::luxury, g(85000)}};
  f.security = {{Grade::basic, g(4500)}, {Grade::standard, g(9500)}, {Grade::luxury, g(18000)}};
  f.smart_home = {{Grade::basic, g(8000)}, {Grade::standard, g(22000)}, {Grade::luxury, g(45000)}};
  f.external_works = {{Grade::basic, g(20000)}, {Grade::standard, g(42000)}, {Grade::luxury, g(85000)}};

  b.services.plumbing = {{1, g(28500)}, {2, g(41500)}, {3, g(55000)}};
  b.services.plumbing_extra_bath = g(13500);
  b.services.electrical = {{4, 1, g(22400)}, {5, 1, g(32800)}, {12, 2, g(54400)}};

  b.informal_band = {g(3500), g(5000)};
  b.omitted_items = {"cement_plaster", "cement_screed", "rebar_y16", "rebar_y20",
                     "plumbing",       "electrical",    "hvac",      "septic"};

  auto r = [](const char* manufactured, const char* local) {
    return RegionalMultipliers{Ratio::parse(manufactured), Ratio::parse(local)};
  };
  b.regions = {
      {Region::greater_accra, r("1.00", "1.00")}, {Region::central, r("1.02", "0.98")},
      {Region::eastern, r("1.02", "0.98")},       {Region::western, r("1.04", "1.00")},
      {Region::ashanti, r("1.04", "0.97")},       {Region::volta, r("1.04", "0.97")},
      {Region::western_north, r("1.08", "0.97")}, {Region::bono, r("1.08", "0.95")},
      {Region::ahafo, r("1.08", "0.95")},         {Region::bono_east, r("1.10", "0.94")},
      {Region::oti, r("1.10", "0.94")},           {Region::northern, r("1.15", "0.90")},
      {Region::savannah, r("1.16", "0.90")},      {Region::north_east, r("1.17", "0.90")},
      {Region::upper_east, r("1.18", "0.90")},    {Region::upper_west, r("1.18", "0.90")},
  };

  b.version = 1;
  b.timestamp = "2026-02-01T00:00:00Z";
  return b;
}

}  // namespace hbq
