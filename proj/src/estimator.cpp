#include "hbq/estimator.hpp"

#include "hbq/features.hpp"

namespace hbq {

EstimateOptions EstimateOptions::case_compatible() {
  EstimateOptions o;
  o.w_cut = 0.0;
  o.case_compat = true;
  return o;
}

const BoQLine* Estimate::find(std::string_view item) const {
  for (const auto& line : lines) {
    if (line.item == item) return &line;
  }
  return nullptr;
}

Money Estimate::cost_of(std::string_view item) const {
  const BoQLine* line = find(item);
  return line ? line->cost : Money{};
}

Takeoff takeoff(const BuildingSpec& spec, const FloorPlanLayout* layout,
                const EstimateOptions& options) {
  spec.validate();
  Takeoff t;
  t.spec = spec;
  t.options = options;
  t.wall = layout ? wall_model_from_layout(*layout, options.wall_height_m)
                  : wall_model_from_formula(spec.footprint_m2(), spec.bedrooms,
                                            options.wall_height_m);
  t.structural = structural_takeoff(spec, t.wall, options.w_cut);
  t.plumbing = plumbing(spec);
  t.electrical = electrical(spec);
  return t;
}

namespace {

class LineBuilder {
 public:
  LineBuilder(const Takeoff& t, const PriceBook& book) : t_(t), book_(book) {}

  void material(std::string item, std::string description, Material m, Quantity q,
                std::string unit) {
    Money unit_price;
    try {
      unit_price = resolve_price(book_, m, t_.spec.region);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::unknown_material) throw;
      throw Error(ErrorCode::unresolvable_material, e.what(), std::string(name(m)));
    }
    BoQLine line;
    line.item = std::move(item);
    line.description = std::move(description);
    line.category = Category::shell;
    line.quantity = q;
    line.unit = std::move(unit);
    line.material = m;
    line.unit_price = unit_price;
    line.cost = extend(q, unit_price).rounded_to_ghs();
    push(std::move(line));
  }

  void lumpsum(std::string item, std::string description, Category category, Money cost,
               bool after = false) {
    BoQLine line;
    line.item = std::move(item);
    line.description = std::move(description);
    line.category = category;
    line.quantity = Quantity::count(1);
    line.unit = "sum";
    line.unit_price = cost.rounded_to_ghs();
    line.cost = cost.rounded_to_ghs();
    line.lumpsum = true;
    line.after_contingency = after;
    push(std::move(line));
  }

  void push(BoQLine line) {
    line.omitted_in_informal = book_.omitted_items.count(line.item) != 0;
    lines_.push_back(std::move(line));
  }

  std::vector<BoQLine>& lines() { return lines_; }

 private:
  const Takeoff& t_;
  const PriceBook& book_;
  std::vector<BoQLine> lines_;
};

std::string plural(std::int64_t n, const char* one, const char* many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

}  // namespace

Estimate price(const Takeoff& t, const PriceBook& book) {
  const BuildingSpec& spec = t.spec;
  const StructuralQuantities& s = t.structural;
  LineBuilder b(t, book);

  b.material("blocks", "Sandcrete blocks (6\" hollow)", Material::block_6in_hollow,
             Quantity::count(s.blocks), "blocks");
  b.material("cement_foundation", "Cement - foundation concrete", Material::cement_bag_50kg,
             Quantity::count(s.cement.foundation), "bags");
  b.material("cement_mortar", "Cement - block mortar", Material::cement_bag_50kg,
             Quantity::count(s.cement.mortar), "bags");
  b.material("cement_plaster", "Cement - plastering (both faces)", Material::cement_bag_50kg,
             Quantity::count(s.cement.plaster), "bags");
  b.material("cement_screed", "Cement - floor screed", Material::cement_bag_50kg,
             Quantity::count(s.cement.screed), "bags");
  b.material("sand", "Sand", Material::sand_trip, Quantity::count(s.sand_stone.sand.trips),
             "trips");
  b.material("stone", "Stone/hardcore", Material::stone_m3, Quantity::of(s.sand_stone.stone_m3),
             "m3");
  b.material("rebar_y12", "Y12 rebar (foundation grid, ring beams)", Material::rebar_y12,
             Quantity::count(s.rebar.y12), "pieces");
  b.material("rebar_y16", "Y16 rebar (columns)", Material::rebar_y16,
             Quantity::count(s.rebar.y16), "pieces");
  b.material("rebar_y10", "Y10 rebar (lintels, light reinforcement)", Material::rebar_y10,
             Quantity::count(s.rebar.y10), "pieces");
  if (s.rebar.y20 > 0) {
    b.material("rebar_y20", "Y20 rebar (multi-storey columns)", Material::rebar_y20,
               Quantity::count(s.rebar.y20), "pieces");
  }
  b.material("roof_sheets", "Roofing sheets (0.45 mm IBR)", Material::roof_sheet_ibr_045,
             Quantity::count(s.roofing.sheets), "sheets");
  b.material("roof_timber", "Roofing timber", Material::roof_timber_boardfoot,
             Quantity::count(s.roofing.timber_boardfeet), "board-ft");
  b.material("roof_nails", "Roofing nails", Material::roof_nails_kg,
             Quantity::count(s.roofing.nails_kg), "kg");
  b.material("ridge_caps", "Ridge caps", Material::ridge_cap,
             Quantity::count(s.roofing.ridge_caps), "pieces");

  if (spec.storeys > 1) {
    b.lumpsum("staircase", "Staircase (" + plural(spec.storeys - 1, "flight", "flights") + ")",
              Category::staircase, staircase_allowance(spec.storeys, book));
  }

  b.lumpsum("plumbing",
            "Plumbing (full system, " + plural(spec.bathrooms, "bathroom", "bathrooms") +
                (spec.storeys > 1 ? ", storey premium x" + t.plumbing.storey_cost_factor.to_string()
                                  : std::string()) +
                ")",
            Category::services, plumbing_cost(t.plumbing, book));
  b.lumpsum("electrical",
            "Electrical (full system, " + plural(t.electrical.room_count, "room", "rooms") + ", " +
                plural(t.electrical.distribution_boards, "DB", "DBs") + ")",
            Category::services, electrical_cost(t.electrical, book));

  const bool extras_outside = t.options.placement == ContingencyPlacement::extras_outside;
  for (const FeatureCostLine& f : feature_costs(spec, t.wall, book)) {
    BoQLine line;
    line.item = std::string(name(f.feature));
    line.description = f.description;
    line.category = f.category;
    line.after_contingency = extras_outside && is_package_extra(f.feature);
    if (f.lumpsum) {
      b.lumpsum(line.item, line.description, line.category, f.cost, line.after_contingency);
      continue;
    }
    line.quantity = f.quantity;
    line.unit = f.unit;
    line.material = f.material;
    line.unit_price = f.unit_price;
    line.cost = f.cost;
    b.push(std::move(line));
  }

  b.lumpsum("doors_windows",
            "Doors and windows (" + plural(spec.bedrooms, "bedroom", "bedrooms") + ")",
            Category::finishes, doors_windows_allowance(spec.bedrooms, book));

  {
    BoQLine labour;
    labour.item = "labour";
    labour.category = Category::labour;
    labour.quantity = Quantity::of(spec.total_area_m2);
    labour.unit = "m2";
    const Ratio storey_factor =
        Ratio::from_micro(Ratio::kScale + (spec.storeys - 1) * 150'000);
    labour.unit_price = resolve_labour_rate(book, spec.region) * storey_factor;
    labour.cost = extend(labour.quantity, labour.unit_price).rounded_to_ghs();
    labour.description =
        spec.storeys > 1 ? "Labour (x" + storey_factor.to_string() + " multi-storey)" : "Labour";
    b.push(std::move(labour));
  }

  // Style and finish modifiers scale pre-contingency category subtotals.
  {
    std::map<Category, Money> base;
    for (const auto& line : b.lines()) {
      if (!line.after_contingency) base[line.category] += line.cost;
    }
    for (const auto& [category, subtotal] : base) {
      const Ratio m = book.modifier(spec.style, spec.finish, category);
      if (m == Ratio::one()) continue;
      const Money delta =
          (subtotal * Ratio::from_micro(m.micro() - Ratio::kScale)).rounded_to_ghs();
      b.lumpsum("adjust_" + std::string(name(category)),
                "Style/finish adjustment (" + std::string(name(category)) + " x" + m.to_string() +
                    ")",
                category, delta);
    }
  }

  const bool multi = spec.storeys > 1;
  const auto& fees = book.fees;
  b.lumpsum("design_fee", multi ? "Design fee (x" + fees.design_multi_factor.to_string() + " multi-storey)" : "Design fee",
            Category::fees, multi ? fees.design_base * fees.design_multi_factor : fees.design_base);
  b.lumpsum("permit_fee", multi ? "Permit (x" + fees.permit_multi_factor.to_string() + " multi-storey)" : "Permit",
            Category::fees, multi ? fees.permit_base * fees.permit_multi_factor : fees.permit_base);
  b.lumpsum("utility_connections", "Utility connections", Category::fees,
            fees.utility_connection);

  Estimate e;
  e.takeoff = t;
  e.pricebook_version = book.version;
  e.pricebook_timestamp = book.timestamp;
  e.lines = std::move(b.lines());
  for (const auto& line : e.lines) {
    if (line.category == Category::fees) e.fixed_fees += line.cost;
    else if (line.after_contingency) e.after_contingency += line.cost;
    else e.variable_subtotal += line.cost;
  }
  e.contingency = scale(e.variable_subtotal, kContingencyPercent, 100).rounded_to_ghs();
  e.total = e.variable_subtotal + e.contingency + e.fixed_fees + e.after_contingency;
  const Quantity area = Quantity::of(spec.total_area_m2);
  e.rate_per_m2 = Money::from_pesewas(div_round_half_up(e.total.pesewas() * Quantity::kScale,
                                                        area.milli()))
                      .rounded_to_ghs();
  return e;
}

Estimate estimate(const BuildingSpec& spec, const FloorPlanLayout* layout, const PriceBook& book,
                  const EstimateOptions& options) {
  return price(takeoff(spec, layout, options), book);
}

Estimate reprice(const Estimate& estimate, const PriceBook& book) {
  return price(estimate.takeoff, book);
}

std::map<Category, Money> categorize(std::span<const BoQLine> lines) {
  std::map<Category, Money> out;
  for (const auto& [category, label] : all_values<Category>()) out[category] = Money{};
  for (const auto& line : lines) out[line.category] += line.cost;
  return out;
}

}  // namespace hbq
