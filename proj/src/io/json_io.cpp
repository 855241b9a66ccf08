#include "hbq/io/json_io.hpp"

#include <algorithm>
#include <cmath>

namespace hbq {

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::validation_error, msg, path);
}

std::string at(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& require(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) invalid(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) invalid(at(path, key), "required");
  return *it;
}

const json* optional_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) invalid(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) invalid(path, "expected a finite number");
  return v;
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) {
    if (j.is_number_float()) {
      const double v = j.get<double>();
      if (std::floor(v) == v && std::fabs(v) < 1e9) return static_cast<int>(v);
    }
    invalid(path, "expected an integer");
  }
  const auto v = j.get<std::int64_t>();
  if (v < -1'000'000'000 || v > 1'000'000'000) invalid(path, "out of range");
  return static_cast<int>(v);
}

std::string text(const json& j, const std::string& path) {
  if (!j.is_string()) invalid(path, "expected a string");
  return j.get<std::string>();
}

bool boolean(const json& j, const std::string& path) {
  if (!j.is_boolean()) invalid(path, "expected true or false");
  return j.get<bool>();
}

template <typename E>
E enumeration(const json& j, const std::string& path) {
  return parse_enum<E>(text(j, path), ErrorCode::validation_error, path);
}

Money money(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return Money::parse(j.get<std::string>());
    } catch (const Error&) {
      invalid(path, "expected an amount");
    }
  }
  return Money::from_ghs_double(number(j, path));
}

json money_json(Money m) {
  if (m.pesewas() % 100 == 0) return json(m.pesewas() / 100);
  return json(m.to_ghs_double());
}

json quantity_json(Quantity q) {
  if (q.milli() % Quantity::kScale == 0) return json(q.milli() / Quantity::kScale);
  return json(q.value());
}

json ratio_json(Ratio r) { return json(r.to_double()); }

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array");
  return j;
}

// Engine errors name fields relative to the object they validate.
template <typename F>
void relocate(const std::string& path, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.field().empty()) throw;
    const std::string& msg = e.message();
    throw Error(e.code(), msg, at(path, e.field()), e.line());
  }
}

}  // namespace

json to_json(const FeatureSelection& f) {
  json j{{"kind", name(f.kind)}};
  if (f.grade) j["grade"] = name(*f.grade);
  if (f.perimeter_m) j["perimeter_m"] = *f.perimeter_m;
  if (f.height_class) j["height_class"] = name(*f.height_class);
  if (f.ceiling_type) j["ceiling_type"] = name(*f.ceiling_type);
  if (f.ac_units) j["ac_units"] = *f.ac_units;
  if (f.fans) j["fans"] = *f.fans;
  return j;
}

FeatureSelection feature_from_json(const json& j, const std::string& path) {
  FeatureSelection f;
  if (j.is_string()) {
    f.kind = enumeration<FeatureKind>(j, path);
    return f;
  }
  if (!j.is_object()) invalid(path, "expected a feature name or object");
  static const char* known[] = {"kind",         "grade",    "perimeter_m", "height_class",
                                "ceiling_type", "ac_units", "fans"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      invalid(at(path, key), "unknown field");
    }
  }
  f.kind = enumeration<FeatureKind>(require(j, path, "kind"), at(path, "kind"));
  if (auto* v = optional_field(j, "grade")) f.grade = enumeration<Grade>(*v, at(path, "grade"));
  if (auto* v = optional_field(j, "perimeter_m")) f.perimeter_m = number(*v, at(path, "perimeter_m"));
  if (auto* v = optional_field(j, "height_class")) {
    f.height_class = enumeration<WallHeightClass>(*v, at(path, "height_class"));
  }
  if (auto* v = optional_field(j, "ceiling_type")) {
    f.ceiling_type = enumeration<CeilingType>(*v, at(path, "ceiling_type"));
  }
  if (auto* v = optional_field(j, "ac_units")) f.ac_units = integer(*v, at(path, "ac_units"));
  if (auto* v = optional_field(j, "fans")) f.fans = integer(*v, at(path, "fans"));
  return f;
}

json to_json(const BuildingSpec& s) {
  json features = json::array();
  for (const auto& f : s.features) features.push_back(to_json(f));
  return json{{"total_area_m2", s.total_area_m2},
              {"storeys", s.storeys},
              {"bedrooms", s.bedrooms},
              {"bathrooms", s.bathrooms},
              {"style", name(s.style)},
              {"finish", name(s.finish)},
              {"region", name(s.region)},
              {"features", features}};
}

BuildingSpec spec_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected an object");
  static const char* known[] = {"total_area_m2", "storeys", "bedrooms", "bathrooms",
                                "style",         "finish",  "region",   "features"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      invalid(at(path, key), "unknown field");
    }
  }
  BuildingSpec s;
  s.total_area_m2 = number(require(j, path, "total_area_m2"), at(path, "total_area_m2"));
  s.bedrooms = integer(require(j, path, "bedrooms"), at(path, "bedrooms"));
  s.bathrooms = integer(require(j, path, "bathrooms"), at(path, "bathrooms"));
  if (auto* v = optional_field(j, "storeys")) s.storeys = integer(*v, at(path, "storeys"));
  if (auto* v = optional_field(j, "style")) s.style = enumeration<Style>(*v, at(path, "style"));
  if (auto* v = optional_field(j, "finish")) s.finish = enumeration<Grade>(*v, at(path, "finish"));
  if (auto* v = optional_field(j, "region")) s.region = enumeration<Region>(*v, at(path, "region"));
  if (auto* v = optional_field(j, "features")) {
    const std::string fpath = at(path, "features");
    const json& list = array(*v, fpath);
    for (std::size_t i = 0; i < list.size(); ++i) {
      s.features.push_back(feature_from_json(list[i], at(fpath, i)));
    }
  }
  relocate(path, [&] { s.validate(); });
  return s;
}

json to_json(const FloorPlanLayout& l) {
  json walls = json::array();
  for (const auto& w : l.walls) walls.push_back({{"a", w.dim_a}, {"b", w.dim_b}});
  json windows = json::array();
  for (const auto& w : l.windows) windows.push_back({{"w_m", w.width_m}, {"h_m", w.height_m}});
  json doors = json::array();
  for (const auto& d : l.doors) doors.push_back({{"x", d.x}, {"y", d.y}, {"width", d.width}});
  json rooms = json::array();
  for (const auto& r : l.rooms) {
    json room{{"kind", to_string(r.kind)}, {"area_m2", r.area_m2}};
    if (!r.name.empty()) room["name"] = r.name;
    rooms.push_back(room);
  }
  return json{{"scale", l.scale}, {"walls", walls}, {"windows", windows}, {"doors", doors},
              {"rooms", rooms}};
}

FloorPlanLayout layout_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected an object");
  FloorPlanLayout l;
  l.scale = number(require(j, path, "scale"), at(path, "scale"));
  {
    const std::string p = at(path, "walls");
    const json& list = array(require(j, path, "walls"), p);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string e = at(p, i);
      l.walls.push_back({number(require(list[i], e, "a"), at(e, "a")),
                         number(require(list[i], e, "b"), at(e, "b"))});
    }
  }
  if (auto* v = optional_field(j, "windows")) {
    const std::string p = at(path, "windows");
    const json& list = array(*v, p);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string e = at(p, i);
      l.windows.push_back({number(require(list[i], e, "w_m"), at(e, "w_m")),
                           number(require(list[i], e, "h_m"), at(e, "h_m"))});
    }
  }
  if (auto* v = optional_field(j, "doors")) {
    const std::string p = at(path, "doors");
    const json& list = array(*v, p);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string e = at(p, i);
      DoorRecord d;
      if (auto* x = optional_field(list[i], "x")) d.x = number(*x, at(e, "x"));
      if (auto* y = optional_field(list[i], "y")) d.y = number(*y, at(e, "y"));
      if (auto* w = optional_field(list[i], "width")) d.width = number(*w, at(e, "width"));
      l.doors.push_back(d);
    }
  }
  if (auto* v = optional_field(j, "rooms")) {
    const std::string p = at(path, "rooms");
    const json& list = array(*v, p);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string e = at(p, i);
      Room r;
      r.kind = parse_room_kind(text(require(list[i], e, "kind"), at(e, "kind")), at(e, "kind"));
      r.area_m2 = number(require(list[i], e, "area_m2"), at(e, "area_m2"));
      if (auto* n = optional_field(list[i], "name")) r.name = text(*n, at(e, "name"));
      l.rooms.push_back(std::move(r));
    }
  }
  relocate(path, [&] { l.validate(); });
  return l;
}

json to_json(const EstimateOptions& o) {
  return json{{"w_cut", o.w_cut},
              {"wall_height_m", o.wall_height_m},
              {"contingency_placement", o.placement == ContingencyPlacement::all_inside
                                            ? "all_inside"
                                            : "extras_outside"},
              {"case_compat", o.case_compat}};
}

EstimateOptions options_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected an object");
  EstimateOptions o;
  if (auto* v = optional_field(j, "case_compat"); v && boolean(*v, at(path, "case_compat"))) {
    o = EstimateOptions::case_compatible();
  }
  if (auto* v = optional_field(j, "w_cut")) {
    o.w_cut = number(*v, at(path, "w_cut"));
    if (o.w_cut < 0.0 || o.w_cut > 1.0) invalid(at(path, "w_cut"), "must lie in [0, 1]");
  }
  if (auto* v = optional_field(j, "wall_height_m")) {
    o.wall_height_m = number(*v, at(path, "wall_height_m"));
    if (!(o.wall_height_m > 0.0)) invalid(at(path, "wall_height_m"), "must be positive");
  }
  if (auto* v = optional_field(j, "contingency_placement")) {
    const std::string p = at(path, "contingency_placement");
    const std::string s = text(*v, p);
    if (s == "all_inside") o.placement = ContingencyPlacement::all_inside;
    else if (s == "extras_outside") o.placement = ContingencyPlacement::extras_outside;
    else invalid(p, "expected all_inside or extras_outside");
  }
  return o;
}

std::map<Material, Money> overrides_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected an object");
  std::map<Material, Money> out;
  for (const auto& [key, value] : j.items()) {
    const std::string p = at(path, key);
    const Material m = parse_enum<Material>(key, ErrorCode::validation_error, p);
    const Money price = money(value, p);
    if (price.pesewas() <= 0) {
      throw Error(ErrorCode::non_positive_price, "price must be positive", p);
    }
    out[m] = price;
  }
  return out;
}

EstimateRequest request_from_json(const json& j) {
  if (!j.is_object()) invalid("", "expected an object");
  EstimateRequest r;
  if (!j.contains("spec")) {
    r.spec = spec_from_json(j, "");
    return r;
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "schema_version" && key != "spec" && key != "layout" && key != "options" &&
        key != "overrides") {
      invalid(key, "unknown field");
    }
  }
  if (auto* v = optional_field(j, "schema_version")) {
    if (integer(*v, "schema_version") != kSchemaVersion) {
      invalid("schema_version", "unsupported schema version");
    }
  }
  r.spec = spec_from_json(j.at("spec"), "spec");
  if (auto* v = optional_field(j, "layout")) r.layout = layout_from_json(*v, "layout");
  if (auto* v = optional_field(j, "options")) r.options = options_from_json(*v, "options");
  if (auto* v = optional_field(j, "overrides")) r.overrides = overrides_from_json(*v, "overrides");
  return r;
}

json to_json(const EstimateRequest& r) {
  json j{{"schema_version", kSchemaVersion}, {"spec", to_json(r.spec)},
         {"options", to_json(r.options)}};
  if (r.layout) j["layout"] = to_json(*r.layout);
  if (!r.overrides.empty()) {
    json o = json::object();
    for (const auto& [m, price] : r.overrides) o[std::string(name(m))] = money_json(price);
    j["overrides"] = o;
  }
  return j;
}

json room_findings_to_json(const FloorPlanLayout& layout) {
  json out = json::array();
  for (const auto& f : check_room_minimums(layout)) {
    json j = {{"room", f.room_index},
              {"kind", to_string(f.kind)},
              {"required_m2", f.required_m2},
              {"actual_m2", f.actual_m2}};
    if (const auto& n = layout.rooms[f.room_index].name; !n.empty()) j["name"] = n;
    out.push_back(std::move(j));
  }
  return out;
}

json to_json(const WallModel& w) {
  return json{{"source", w.source == WallSource::geometry ? "geometry" : "formula"},
              {"total_wall_length_m", w.total_wall_length_m},
              {"wall_height_m", w.wall_height_m},
              {"gross_wall_area_m2", w.gross_wall_area_m2},
              {"opening_area_m2", w.opening_area_m2},
              {"net_wall_area_m2", w.net_wall_area_m2}};
}

WallModel wall_from_json(const json& j, const std::string& path) {
  WallModel w;
  const std::string source = text(require(j, path, "source"), at(path, "source"));
  if (source == "geometry") w.source = WallSource::geometry;
  else if (source == "formula") w.source = WallSource::formula;
  else invalid(at(path, "source"), "expected geometry or formula");
  w.total_wall_length_m = number(require(j, path, "total_wall_length_m"), at(path, "total_wall_length_m"));
  w.wall_height_m = number(require(j, path, "wall_height_m"), at(path, "wall_height_m"));
  w.gross_wall_area_m2 = number(require(j, path, "gross_wall_area_m2"), at(path, "gross_wall_area_m2"));
  w.opening_area_m2 = number(require(j, path, "opening_area_m2"), at(path, "opening_area_m2"));
  w.net_wall_area_m2 = number(require(j, path, "net_wall_area_m2"), at(path, "net_wall_area_m2"));
  return w;
}

json to_json(const BoQLine& l) {
  json j{{"item", l.item},
         {"description", l.description},
         {"category", name(l.category)},
         {"quantity", quantity_json(l.quantity)},
         {"unit", l.unit},
         {"unit_price", money_json(l.unit_price)},
         {"cost", money_json(l.cost)},
         {"lumpsum", l.lumpsum},
         {"omitted_in_informal", l.omitted_in_informal},
         {"after_contingency", l.after_contingency}};
  if (l.material) j["material"] = name(*l.material);
  return j;
}

BoQLine line_from_json(const json& j, const std::string& path) {
  BoQLine l;
  l.item = text(require(j, path, "item"), at(path, "item"));
  if (auto* v = optional_field(j, "description")) l.description = text(*v, at(path, "description"));
  l.category = enumeration<Category>(require(j, path, "category"), at(path, "category"));
  l.quantity = Quantity::of(number(require(j, path, "quantity"), at(path, "quantity")));
  l.unit = text(require(j, path, "unit"), at(path, "unit"));
  l.unit_price = money(require(j, path, "unit_price"), at(path, "unit_price"));
  l.cost = money(require(j, path, "cost"), at(path, "cost"));
  if (auto* v = optional_field(j, "material")) l.material = enumeration<Material>(*v, at(path, "material"));
  if (auto* v = optional_field(j, "lumpsum")) l.lumpsum = boolean(*v, at(path, "lumpsum"));
  if (auto* v = optional_field(j, "omitted_in_informal")) {
    l.omitted_in_informal = boolean(*v, at(path, "omitted_in_informal"));
  }
  if (auto* v = optional_field(j, "after_contingency")) {
    l.after_contingency = boolean(*v, at(path, "after_contingency"));
  }
  return l;
}

json to_json(const Estimate& e) {
  json lines = json::array();
  for (const auto& l : e.lines) lines.push_back(to_json(l));
  json subtotals = json::object();
  for (const auto& [c, m] : categorize(e.lines)) subtotals[std::string(name(c))] = money_json(m);
  const auto& s = e.takeoff.structural;
  return json{
      {"schema_version", kSchemaVersion},
      {"engine_version", std::string(kEngineVersion)},
      {"pricebook", {{"version", e.pricebook_version}, {"timestamp", e.pricebook_timestamp}}},
      {"mode", e.mode() == WallSource::geometry ? "geometry" : "formula"},
      {"spec", to_json(e.takeoff.spec)},
      {"options", to_json(e.takeoff.options)},
      {"wall", to_json(e.takeoff.wall)},
      {"quantities",
       {{"blocks", s.blocks},
        {"cement_bags", s.cement.total()},
        {"sand_trips", s.sand_stone.sand.trips},
        {"stone_m3", s.sand_stone.stone_m3},
        {"roof_area_m2", s.roofing.roof_area_m2}}},
      {"lines", lines},
      {"category_subtotals", subtotals},
      {"variable_subtotal", money_json(e.variable_subtotal)},
      {"contingency", money_json(e.contingency)},
      {"contingency_percent", kContingencyPercent},
      {"after_contingency", money_json(e.after_contingency)},
      {"fixed_fees", money_json(e.fixed_fees)},
      {"total", money_json(e.total)},
      {"rate_per_m2", money_json(e.rate_per_m2)},
  };
}

Estimate estimate_from_json(const json& j) {
  if (!j.is_object()) invalid("", "expected an object");
  if (integer(require(j, "", "schema_version"), "schema_version") != kSchemaVersion) {
    invalid("schema_version", "unsupported schema version");
  }
  Estimate e;
  Takeoff& t = e.takeoff;
  t.spec = spec_from_json(require(j, "", "spec"), "spec");
  t.options = options_from_json(require(j, "", "options"), "options");
  t.wall = wall_from_json(require(j, "", "wall"), "wall");
  t.structural = structural_takeoff(t.spec, t.wall, t.options.w_cut);
  t.plumbing = plumbing(t.spec);
  t.electrical = electrical(t.spec);

  const json& pb = require(j, "", "pricebook");
  const json& version = require(pb, "pricebook", "version");
  if (!version.is_number_unsigned() && !version.is_number_integer()) {
    invalid("pricebook.version", "expected an integer");
  }
  e.pricebook_version = version.get<std::uint64_t>();
  if (auto* v = optional_field(pb, "timestamp")) {
    e.pricebook_timestamp = text(*v, "pricebook.timestamp");
  }
  const json& lines = array(require(j, "", "lines"), "lines");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    e.lines.push_back(line_from_json(lines[i], at("lines", i)));
  }
  e.variable_subtotal = money(require(j, "", "variable_subtotal"), "variable_subtotal");
  e.contingency = money(require(j, "", "contingency"), "contingency");
  e.fixed_fees = money(require(j, "", "fixed_fees"), "fixed_fees");
  if (auto* v = optional_field(j, "after_contingency")) e.after_contingency = money(*v, "after_contingency");
  e.total = money(require(j, "", "total"), "total");
  e.rate_per_m2 = money(require(j, "", "rate_per_m2"), "rate_per_m2");
  return e;
}

json to_json(const GapReport& g) {
  json omitted = json::array();
  for (const auto& o : g.omitted_lines) {
    omitted.push_back({{"item", o.item},
                       {"description", o.description},
                       {"category", name(o.category)},
                       {"cost", money_json(o.cost)}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"area_m2", g.area_m2},
              {"estimate_total", money_json(g.estimate_total)},
              {"rate_per_m2", money_json(g.rate_per_m2)},
              {"band", {{"low", money_json(g.band.low)}, {"high", money_json(g.band.high)}}},
              {"informal_low", money_json(g.informal_low)},
              {"informal_high", money_json(g.informal_high)},
              {"gap_vs_low", g.gap_vs_low},
              {"gap_vs_high", g.gap_vs_high},
              {"gap_vs_low_pct", g.gap_vs_low_pct()},
              {"gap_vs_high_pct", g.gap_vs_high_pct()},
              {"omitted_lines", omitted},
              {"omitted_total", money_json(g.omitted_total)}};
}

namespace {

json tolerance_json(const Tolerance& t) {
  switch (t.kind) {
    case ToleranceKind::exact: return {{"kind", "exact"}};
    case ToleranceKind::absolute: return {{"kind", "absolute"}, {"amount", t.amount}};
    case ToleranceKind::relative: return {{"kind", "relative"}, {"amount", t.amount}};
    case ToleranceKind::band: return {{"kind", "band"}, {"lo", t.lo}, {"hi", t.hi}};
    case ToleranceKind::report_only: return {{"kind", "report_only"}};
  }
  return {};
}

}  // namespace

json to_json(const CaseFixture& f) {
  json expected = json::array();
  for (const auto& e : f.expected) {
    json row{{"key", e.key}, {"expected", e.expected}, {"tolerance", tolerance_json(e.tolerance)}};
    if (!e.note.empty()) row["note"] = e.note;
    expected.push_back(row);
  }
  json extras = json::array();
  for (const auto& x : f.extras) extras.push_back(to_json(x));
  return json{{"schema_version", kSchemaVersion},
              {"id", f.id},
              {"title", f.title},
              {"spec", to_json(f.spec)},
              {"options", to_json(f.options)},
              {"extras", extras},
              {"expected", expected}};
}

json to_json(const CaseRun& run) {
  json checks = json::array();
  for (const auto& c : run.checks) {
    checks.push_back({{"key", c.expected.key},
                      {"expected", c.expected.expected},
                      {"computed", c.computed},
                      {"tolerance", tolerance_json(c.expected.tolerance)},
                      {"pass", c.pass}});
  }
  return json{{"id", run.fixture ? run.fixture->id : std::string()},
              {"passed", run.passed()},
              {"checks", checks},
              {"estimate", to_json(run.estimate)},
              {"gap", to_json(run.gap)}};
}

json pricebook_to_json(const PriceBook& b) {
  json defaults = json::object();
  for (const auto& [m, price] : b.defaults) defaults[std::string(name(m))] = money_json(price);
  json overrides = json::object();
  for (const auto& [m, ov] : b.overrides) {
    overrides[std::string(name(m))] = {{"price", money_json(ov.price)}, {"timestamp", ov.timestamp}};
  }
  json supply = json::object();
  for (const auto& [m, label] : all_values<Material>()) {
    supply[std::string(label)] = name(supply_class(m));
  }
  json omitted = json::array();
  for (const auto& item : b.omitted_items) omitted.push_back(item);
  return json{{"schema_version", kSchemaVersion},
              {"engine_version", std::string(kEngineVersion)},
              {"version", b.version},
              {"timestamp", b.timestamp},
              {"defaults", defaults},
              {"overrides", overrides},
              {"supply_class", supply},
              {"labour_per_m2", money_json(b.labour_per_m2)},
              {"fees",
               {{"design_base", money_json(b.fees.design_base)},
                {"permit_base", money_json(b.fees.permit_base)},
                {"utility_connection", money_json(b.fees.utility_connection)},
                {"design_multi_factor", ratio_json(b.fees.design_multi_factor)},
                {"permit_multi_factor", ratio_json(b.fees.permit_multi_factor)}}},
              {"informal_band",
               {{"low", money_json(b.informal_band.low)},
                {"high", money_json(b.informal_band.high)},
                {"omitted", omitted}}},
              {"regions", regions_to_json(b)}};
}

json regions_to_json(const PriceBook& b) {
  json out = json::array();
  for (const auto& [region, label] : all_values<Region>()) {
    auto it = b.regions.find(region);
    if (it == b.regions.end()) continue;
    json prices = json::object();
    for (const auto& [m, mlabel] : all_values<Material>()) {
      prices[std::string(mlabel)] = money_json(resolve_price(b, m, region));
    }
    out.push_back({{"region", label},
                   {"manufactured", ratio_json(it->second.manufactured)},
                   {"local", ratio_json(it->second.local)},
                   {"prices", prices},
                   {"labour_per_m2", money_json(resolve_labour_rate(b, region))}});
  }
  return out;
}

json error_to_json(const Error& e) {
  const std::string& msg = e.message();
  json err{{"code", to_string(e.code())}, {"message", msg}};
  if (!e.field().empty()) err["field"] = e.field();
  if (e.line() > 0) err["line"] = e.line();
  return json{{"error", err}};
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, "malformed " + what + " (byte " +
                                            std::to_string(e.byte) + ")");
  }
}

}  // namespace hbq
