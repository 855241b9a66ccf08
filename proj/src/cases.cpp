#include "hbq/cases.hpp"

#include <cmath>
#include <sstream>

namespace hbq {

bool Tolerance::accepts(double expected, double computed) const {
  const double diff = std::fabs(computed - expected);
  switch (kind) {
    case ToleranceKind::exact: return diff <= 1e-9;
    case ToleranceKind::absolute: return diff <= amount + 1e-9;
    case ToleranceKind::relative: return diff <= amount * std::fabs(expected) + 1e-9;
    case ToleranceKind::band: return computed >= lo - 1e-9 && computed <= hi + 1e-9;
    case ToleranceKind::report_only: return true;
  }
  return false;
}

std::string Tolerance::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ToleranceKind::exact: os << "exact"; break;
    case ToleranceKind::absolute: os << "+/-" << amount; break;
    case ToleranceKind::relative: os << "+/-" << amount * 100.0 << "%"; break;
    case ToleranceKind::band: os << "[" << lo << ", " << hi << "]"; break;
    case ToleranceKind::report_only: os << "report"; break;
  }
  return os.str();
}

namespace {

FeatureSelection feature(FeatureKind kind) {
  FeatureSelection f;
  f.kind = kind;
  return f;
}

std::vector<FeatureSelection> completeness_features(std::optional<int> fans = std::nullopt) {
  auto hvac = feature(FeatureKind::hvac);
  hvac.fans = fans;
  return {feature(FeatureKind::septic), hvac, feature(FeatureKind::tiles),
          feature(FeatureKind::paint)};
}

BuildingSpec house(double area, int storeys, int bedrooms, int bathrooms,
                   std::vector<FeatureSelection> features) {
  BuildingSpec s;
  s.total_area_m2 = area;
  s.storeys = storeys;
  s.bedrooms = bedrooms;
  s.bathrooms = bathrooms;
  s.style = Style::traditional;
  s.finish = Finish::standard;
  s.region = Region::greater_accra;
  s.features = std::move(features);
  return s;
}

const Tolerance kExact = Tolerance::exact();
const Tolerance kReport = Tolerance::report();
const Tolerance kPoint = Tolerance::absolute(1.0);
const Tolerance kLump = Tolerance::relative(0.15);
const Tolerance kResidual = Tolerance::absolute(0.5);

std::vector<CaseFixture> build_fixtures() {
  std::vector<CaseFixture> out;

  {
    CaseFixture a;
    a.id = "A";
    a.title = "Two-bedroom starter home, 75 m2, 1 storey, 1 bathroom";
    // The published HVAC lumpsum counts 3 fans, one fewer than the bedrooms + 2 rule.
    a.spec = house(75, 1, 2, 1, completeness_features(3));
    a.options = EstimateOptions::case_compatible();
    a.expected = {
        {"qty.blocks", 1609, kExact, ""},
        {"qty.cement_foundation", 300, kExact, ""},
        {"qty.cement_mortar", 20, kExact, ""},
        {"qty.cement_plaster", 178, kExact, ""},
        {"qty.cement_screed", 150, kExact, ""},
        {"cement_total", 847, kReport, "published total exceeds the four components"},
        {"qty.sand", 18, kExact, "documented sand formulas"},
        {"qty.sand", 24, kReport, "published trips, undocumented extra"},
        {"qty.stone", 13.5, kExact, ""},
        {"qty.rebar_y12", 900, kExact, ""},
        {"qty.rebar_y16", 300, kExact, ""},
        {"qty.rebar_y10", 225, kExact, ""},
        {"qty.roof_sheets", 41, kExact, ""},
        {"qty.roof_timber", 1350, kExact, ""},
        {"cost.blocks", 13837, kExact, ""},
        {"cost.cement_plaster", 17978, kExact, ""},
        {"cost.cement_screed", 15150, kExact, ""},
        {"cost.stone", 4941, kExact, ""},
        {"cost.rebar_y12", 48600, kExact, ""},
        {"cost.rebar_y16", 29400, kExact, ""},
        {"cost.rebar_y10", 8550, kExact, ""},
        {"cost.roof_sheets", 5002, kExact, ""},
        {"cost.roof_timber", 33750, kExact, ""},
        {"cost.plumbing", 28500, kExact, ""},
        {"cost.electrical", 22400, kExact, ""},
        {"cost.septic", 22000, kExact, ""},
        {"cost.hvac", 14760, kExact, ""},
        {"cost.tiles", 3713, kExact, ""},
        {"cost.paint", 8500, kLump, "back-fitted paint rate"},
        {"cost.doors_windows", 18500, kExact, ""},
        {"cost.labour", 67500, kExact, ""},
        {"fixed_fees", 12500, kExact, "sum of the three fee lines"},
        {"variable_subtotal", 447400, kReport, ""},
        {"contingency_residual", 0, kResidual, "15% of computed subtotal"},
        {"total", 519657, Tolerance::relative(0.05), ""},
        {"rate_per_m2", 6929, kReport, ""},
        {"gap_low_pct", 98, kPoint, ""},
        {"gap_high_pct", 39, kPoint, ""},
    };
    out.push_back(std::move(a));
  }

  {
    CaseFixture b;
    b.id = "B";
    b.title = "Three-bedroom family home, 120 m2, 1 storey, 2 bathrooms";
    b.spec = house(120, 1, 3, 2, completeness_features());
    b.options = EstimateOptions::case_compatible();
    b.expected = {
        {"qty.blocks", 2121, kPoint, "published figure rounds intermediates"},
        {"qty.cement_foundation", 480, kExact, ""},
        {"qty.cement_mortar", 26, kExact, ""},
        {"qty.cement_plaster", 234, kExact, ""},
        {"qty.cement_screed", 240, kExact, ""},
        {"cement_total", 1254, kReport, "published total exceeds the four components"},
        {"qty.sand", 25, kExact, "documented sand formulas"},
        {"qty.sand", 34, kReport, "published trips, undocumented extra"},
        {"qty.stone", 21.6, kExact, ""},
        {"qty.rebar_y12", 1440, kExact, ""},
        {"qty.rebar_y16", 480, kExact, ""},
        {"qty.rebar_y10", 360, kExact, ""},
        {"qty.roof_sheets", 65, kExact, ""},
        {"qty.roof_timber", 2160, kExact, ""},
        {"cost.plumbing", 41500, kExact, ""},
        {"cost.electrical", 32800, kExact, ""},
        {"cost.septic", 29500, kExact, ""},
        {"cost.hvac", 20100, kExact, ""},
        {"cost.tiles", 5940, kExact, ""},
        {"cost.paint", 12800, kLump, "back-fitted paint rate"},
        {"cost.doors_windows", 28000, kExact, ""},
        {"cost.labour", 108000, kExact, ""},
        {"fixed_fees", 12500, kExact, "sum of the three fee lines"},
        {"variable_subtotal", 619751, kReport, ""},
        {"contingency_residual", 0, kResidual, "15% of computed subtotal"},
        {"total", 789692, Tolerance::relative(0.05), ""},
        {"rate_per_m2", 6581, kReport, ""},
        {"gap_low_pct", 88, kPoint, ""},
        {"gap_high_pct", 32, kPoint, ""},
    };
    out.push_back(std::move(b));
  }

  {
    CaseFixture c;
    c.id = "C";
    c.title = "Four-bedroom family home, 200 m2, 2 storeys, 3 bathrooms";
    c.spec = house(200, 2, 4, 3, completeness_features());
    c.options = EstimateOptions::case_compatible();
    FeatureSelection wall = feature(FeatureKind::compound_wall);
    wall.perimeter_m = 90.0;
    wall.height_class = WallHeightClass::low;
    c.extras = {wall, feature(FeatureKind::kitchen), feature(FeatureKind::external_works)};
    c.expected = {
        {"qty.blocks", 4365, Tolerance::within(4365 * 0.9, 4365), "published count +0/-10%"},
        {"qty.cement_foundation", 400, kExact, ""},
        {"qty.cement_mortar", 53, kExact, ""},
        {"qty.cement_plaster", 444, kExact, ""},
        {"qty.cement_screed", 800, kExact, ""},
        {"cement_total", 2389, kReport, "published total exceeds the four components"},
        {"qty.sand", 48, kExact, "documented sand formulas"},
        {"qty.sand", 68, kReport, "published trips, undocumented extra"},
        {"qty.stone", 20.7, kExact, ""},
        {"qty.rebar_y12", 1680, kExact, ""},
        {"qty.rebar_y16", 800, kExact, ""},
        {"qty.rebar_y10", 600, kExact, ""},
        {"qty.rebar_y20", 100, kExact, ""},
        {"qty.roof_sheets", 54, kExact, ""},
        {"qty.roof_timber", 1800, kExact, ""},
        {"cost.staircase", 8000, kExact, ""},
        {"cost.plumbing", 68750, kExact, ""},
        {"cost.electrical", 54400, kExact, ""},
        {"cost.septic", 30000, kExact, ""},
        {"cost.hvac", 24580, kReport, "published lumpsum is 440 below 5 AC + 6 fans"},
        {"cost.tiles", 9900, kExact, ""},
        {"cost.paint", 20000, kLump, "back-fitted paint rate"},
        {"cost.doors_windows", 45000, kExact, ""},
        {"cost.labour", 207000, kExact, ""},
        {"cost.design_fee", 6500, kExact, ""},
        {"cost.permit_fee", 4200, kExact, ""},
        {"fixed_fees", 14700, kExact, ""},
        {"variable_subtotal", 1111842, kReport, ""},
        {"contingency", 166776, kReport, "published contingency on the published subtotal"},
        {"contingency_residual", 0, kResidual, "15% of computed subtotal"},
        {"total", 1293318, Tolerance::relative(0.01), ""},
        {"rate_per_m2", 6467, kReport, ""},
        {"gap_low_pct", 85, kPoint, ""},
        {"gap_high_pct", 29, kPoint, ""},
        {"extras.cost.compound_wall", 45000, kExact, ""},
        {"extras.cost.kitchen", 18000, kExact, ""},
        {"extras.cost.external_works", 42000, kExact, ""},
        {"extras.total", 1398318, Tolerance::relative(0.01), "extras added after contingency"},
    };
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

const std::vector<CaseFixture>& case_fixtures() {
  static const std::vector<CaseFixture> fixtures = build_fixtures();
  return fixtures;
}

const CaseFixture& find_case(std::string_view id) {
  for (const auto& f : case_fixtures()) {
    if (f.id == id) return f;
  }
  throw Error(ErrorCode::unknown_case, "no case '" + std::string(id) + "' (expected A, B or C)");
}

BuildingSpec with_extras(const CaseFixture& fixture) {
  BuildingSpec s = fixture.spec;
  s.features.insert(s.features.end(), fixture.extras.begin(), fixture.extras.end());
  return s;
}

double observe(const Estimate& e, const GapReport& g, std::string_view key) {
  auto starts = [&](std::string_view prefix) { return key.substr(0, prefix.size()) == prefix; };
  if (starts("qty.")) {
    const BoQLine* line = e.find(key.substr(4));
    return line ? line->quantity.value() : 0.0;
  }
  if (starts("cost.")) return e.cost_of(key.substr(5)).to_ghs_double();
  if (key == "cement_total") {
    return static_cast<double>(e.takeoff.structural.cement.total());
  }
  if (key == "variable_subtotal") return e.variable_subtotal.to_ghs_double();
  if (key == "contingency") return e.contingency.to_ghs_double();
  if (key == "contingency_residual") {
    return e.contingency.to_ghs_double() -
           e.variable_subtotal.to_ghs_double() * kContingencyPercent / 100.0;
  }
  if (key == "fixed_fees") return e.fixed_fees.to_ghs_double();
  if (key == "total") return e.total.to_ghs_double();
  if (key == "rate_per_m2") return e.rate_per_m2.to_ghs_double();
  if (key == "gap_low_pct") return g.gap_vs_low_pct();
  if (key == "gap_high_pct") return g.gap_vs_high_pct();
  if (key == "omitted_total") return g.omitted_total.to_ghs_double();
  throw Error(ErrorCode::validation_error, "unknown fixture key '" + std::string(key) + "'");
}

bool CaseRun::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

CaseRun run_case(const CaseFixture& fixture, const PriceBook& book) {
  CaseRun run;
  run.fixture = &fixture;
  run.estimate = estimate(fixture.spec, nullptr, book, fixture.options);
  run.gap = gap(run.estimate, book.informal_band);

  std::optional<Estimate> extras;
  std::optional<GapReport> extras_gap;
  if (!fixture.extras.empty()) {
    EstimateOptions o = fixture.options;
    o.placement = ContingencyPlacement::extras_outside;
    extras = estimate(with_extras(fixture), nullptr, book, o);
    extras_gap = gap(*extras, book.informal_band);
  }

  for (const auto& ev : fixture.expected) {
    CheckResult r;
    r.expected = ev;
    const std::string_view key = ev.key;
    if (key.substr(0, 7) == "extras.") {
      if (!extras) {
        throw Error(ErrorCode::validation_error, "fixture has no extras", ev.key);
      }
      r.computed = observe(*extras, *extras_gap, key.substr(7));
    } else {
      r.computed = observe(run.estimate, run.gap, key);
    }
    r.pass = ev.tolerance.accepts(ev.expected, r.computed);
    run.checks.push_back(std::move(r));
  }
  return run;
}

}  // namespace hbq
