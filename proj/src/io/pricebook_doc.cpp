#include "hbq/io/pricebook_doc.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace hbq {

namespace {

namespace pt = boost::property_tree;

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

// ptree forgets where keys came from; recover "section.key" -> line by a
// second pass over the (already syntax-checked) text.
std::map<std::string, unsigned long> key_lines(const std::string& text) {
  std::map<std::string, unsigned long> out;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  unsigned long n = 0;
  while (std::getline(in, raw)) {
    ++n;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == ';' || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      out[section] = n;
      continue;
    }
    const auto eq = line.find('=');
    if (eq != std::string::npos) out[section + "." + trim(line.substr(0, eq))] = n;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(const std::string& text) : lines_(key_lines(text)) {}

  [[noreturn]] void fail(ErrorCode code, const std::string& msg, const std::string& field) const {
    auto it = lines_.find(field);
    throw Error(code, msg, field, it == lines_.end() ? 0 : static_cast<int>(it->second));
  }

  template <typename F>
  auto guarded(const std::string& field, F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      if (!e.field().empty() && e.field() != field) throw;
      // Strip the code prefix so the message is not doubled.
      const std::string& msg = e.message();
      fail(ErrorCode::validation_error, msg, field);
    }
  }

  Money money(const std::string& field, const std::string& value) const {
    return guarded(field, [&] { return Money::parse(value); });
  }
  Ratio ratio(const std::string& field, const std::string& value) const {
    return guarded(field, [&] { return Ratio::parse(value); });
  }
  int integer(const std::string& field, const std::string& value) const {
    return guarded(field, [&] {
      std::size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(value, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != value.size()) {
        throw Error(ErrorCode::validation_error, "expected an integer, got '" + value + "'",
                    field);
      }
      return v;
    });
  }
  template <typename E>
  E enumeration(const std::string& field, const std::string& value) const {
    return guarded(field, [&] { return parse_enum<E>(value, ErrorCode::validation_error, field); });
  }

  void validate(const PriceBook& book) const {
    try {
      book.validate();
    } catch (const Error& e) {
      const std::string& msg = e.message();
      fail(e.code(), msg, e.field());
    }
  }

 private:
  std::map<std::string, unsigned long> lines_;
};

std::pair<std::string, std::string> split_once(const std::string& s, char sep) {
  const auto at = s.find(sep);
  if (at == std::string::npos) return {s, {}};
  return {trim(s.substr(0, at)), trim(s.substr(at + 1))};
}

void read_meta(const Reader& r, const pt::ptree& sec, PriceBook& b) {
  for (const auto& [key, node] : sec) {
    const std::string field = "meta." + key;
    const std::string value = trim(node.data());
    if (key == "version") {
      const int v = r.integer(field, value);
      if (v < 1) r.fail(ErrorCode::validation_error, "version must be >= 1", field);
      b.version = static_cast<std::uint64_t>(v);
    } else if (key == "timestamp") {
      b.timestamp = value;
    } else {
      r.fail(ErrorCode::validation_error, "unknown key", field);
    }
  }
}

void read_defaults(const Reader& r, const pt::ptree& sec, PriceBook& b) {
  for (const auto& [key, node] : sec) {
    const std::string field = "defaults." + key;
    const Money price = r.money(field, trim(node.data()));
    if (key == "labour_per_m2") {
      b.labour_per_m2 = price;
    } else {
      b.defaults[r.enumeration<Material>(field, key)] = price;
    }
  }
}

void read_overrides(const Reader& r, const pt::ptree& sec, PriceBook& b) {
  for (const auto& [key, node] : sec) {
    const std::string field = "overrides." + key;
    const Material m = r.enumeration<Material>(field, key);
    auto [price, stamp] = split_once(trim(node.data()), '@');
    b.overrides[m] = PriceOverride{r.money(field, price), stamp};
  }
}

void read_regions(const Reader& r, const pt::ptree& sec, PriceBook& b) {
  for (const auto& [key, node] : sec) {
    const std::string field = "regions." + key;
    const Region region = r.enumeration<Region>(field, key);
    auto [manufactured, local] = split_once(trim(node.data()), ',');
    if (local.empty()) {
      r.fail(ErrorCode::validation_error, "expected 'manufactured, local'", field);
    }
    b.regions[region] = RegionalMultipliers{r.ratio(field, manufactured), r.ratio(field, local)};
  }
}

void read_fees(const Reader& r, const pt::ptree& sec, PriceBook& b) {
  for (const auto& [key, node] : sec) {
    const std::string field = "fees." + key;
    const std::string value = trim(node.data());
    if (key == "design_base") b.fees.design_base = r.money(field, value);
    else if (key == "permit_base") b.fees.permit_base = r.money(field, value);
    else if (key == "utility_connection") b.fees.utility_connection = r.money(field, value);
    else if (key == "design_multi_factor") b.fees.design_multi_factor = r.ratio(field, value);
    else if (key == "permit_multi_factor") b.fees.permit_multi_factor = r.ratio(field, value);
    else r.fail(ErrorCode::validation_error, "unknown key", field);
  }
}

void read_features(const Reader& r, const pt::ptree& sec, PriceBook& b) {
  auto& f = b.features;
  for (const auto& [key, node] : sec) {
    const std::string field = "features." + key;
    const Money price = r.money(field, trim(node.data()));
    auto [table, sub] = split_once(key, '.');
    if (sub.empty()) {
      if (key == "soakaway") f.soakaway = price;
      else if (key == "ac_unit") f.ac_unit = price;
      else if (key == "ceiling_fan") f.ceiling_fan = price;
      else if (key == "staircase_flight") f.staircase_flight = price;
      else r.fail(ErrorCode::validation_error, "unknown key", field);
      continue;
    }
    if (table == "septic_tank") f.septic_tank[r.integer(field, sub)] = price;
    else if (table == "doors_windows") f.doors_windows[r.integer(field, sub)] = price;
    else if (table == "compound_wall") f.compound_wall_per_m[r.enumeration<WallHeightClass>(field, sub)] = price;
    else if (table == "ceiling") f.ceiling_per_m2[r.enumeration<CeilingType>(field, sub)] = price;
    else if (table == "kitchen") f.kitchen[r.enumeration<Grade>(field, sub)] = price;
    else if (table == "solar") f.solar[r.enumeration<Grade>(field, sub)] = price;
    else if (table == "security") f.security[r.enumeration<Grade>(field, sub)] = price;
    else if (table == "smart_home") f.smart_home[r.enumeration<Grade>(field, sub)] = price;
    else if (table == "external_works") f.external_works[r.enumeration<Grade>(field, sub)] = price;
    else r.fail(ErrorCode::validation_error, "unknown table", field);
  }
}

void read_services(const Reader& r, const pt::ptree& sec, PriceBook& b) {
  for (const auto& [key, node] : sec) {
    const std::string field = "services." + key;
    const Money price = r.money(field, trim(node.data()));
    auto [table, sub] = split_once(key, '.');
    if (key == "plumbing_extra_bath") {
      b.services.plumbing_extra_bath = price;
    } else if (table == "plumbing" && !sub.empty()) {
      b.services.plumbing[r.integer(field, sub)] = price;
    } else if (table == "electrical" && !sub.empty()) {
      auto [rooms, storeys] = split_once(sub, 'x');
      if (storeys.empty()) r.fail(ErrorCode::validation_error, "expected electrical.<rooms>x<storeys>", field);
      b.services.electrical.push_back({r.integer(field, rooms), r.integer(field, storeys), price});
    } else {
      r.fail(ErrorCode::validation_error, "unknown key", field);
    }
  }
}

void read_band(const Reader& r, const pt::ptree& sec, PriceBook& b) {
  for (const auto& [key, node] : sec) {
    const std::string field = "informal_band." + key;
    const std::string value = trim(node.data());
    if (key == "low") {
      b.informal_band.low = r.money(field, value);
    } else if (key == "high") {
      b.informal_band.high = r.money(field, value);
    } else if (key == "omitted") {
      b.omitted_items.clear();
      std::istringstream items(value);
      std::string item;
      while (std::getline(items, item, ',')) {
        item = trim(item);
        if (!item.empty()) b.omitted_items.insert(item);
      }
    } else {
      r.fail(ErrorCode::validation_error, "unknown key", field);
    }
  }
}

void read_modifiers(const Reader& r, const pt::ptree& sec, PriceBook& b) {
  for (const auto& [key, node] : sec) {
    const std::string field = "modifiers." + key;
    const Ratio value = r.ratio(field, trim(node.data()));
    auto [kind, rest] = split_once(key, '.');
    auto [which, category] = split_once(rest, '.');
    if (category.empty()) {
      r.fail(ErrorCode::validation_error, "expected style.<style>.<category> or finish.<grade>.<category>", field);
    }
    const Category c = r.enumeration<Category>(field, category);
    if (kind == "style") b.style_modifiers[r.enumeration<Style>(field, which)][c] = value;
    else if (kind == "finish") b.finish_modifiers[r.enumeration<Grade>(field, which)][c] = value;
    else r.fail(ErrorCode::validation_error, "unknown modifier kind", field);
  }
}

std::string money_text(Money m) {
  return m.pesewas() % 100 == 0 ? std::to_string(m.pesewas() / 100) : m.to_string();
}

std::string ratio_text(Ratio r) {
  std::string s = r.to_string();
  if (s.find('.') == std::string::npos) s += ".0";
  return s;
}

}  // namespace

PriceBook load_pricebook_text(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorCode::parse_error, e.message(), {}, e.line());
  }
  const Reader r(text);
  PriceBook b;
  // The document is the complete book; start from empty tables.
  b.version = 1;
  b.omitted_items.clear();
  for (const auto& [section, node] : tree) {
    if (node.empty() && !node.data().empty()) {
      r.fail(ErrorCode::parse_error, "key outside of any section", section);
    }
    if (section == "meta") read_meta(r, node, b);
    else if (section == "defaults") read_defaults(r, node, b);
    else if (section == "overrides") read_overrides(r, node, b);
    else if (section == "regions") read_regions(r, node, b);
    else if (section == "fees") read_fees(r, node, b);
    else if (section == "features") read_features(r, node, b);
    else if (section == "services") read_services(r, node, b);
    else if (section == "informal_band") read_band(r, node, b);
    else if (section == "modifiers") read_modifiers(r, node, b);
    else r.fail(ErrorCode::validation_error, "unknown section", section);
  }
  r.validate(b);
  return b;
}

PriceBook load_pricebook(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_pricebook_text(buf.str());
}

PriceBook load_pricebook_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
  return load_pricebook(in);
}

std::string save_pricebook(const PriceBook& b) {
  std::ostringstream o;
  o << "; hbq price book\n";
  o << "[meta]\n";
  o << "version = " << b.version << "\n";
  o << "timestamp = " << b.timestamp << "\n";

  o << "\n[defaults]\n";
  for (const auto& [m, label] : all_values<Material>()) {
    if (auto it = b.defaults.find(m); it != b.defaults.end()) {
      o << label << " = " << money_text(it->second) << "\n";
    }
  }
  o << "labour_per_m2 = " << money_text(b.labour_per_m2) << "\n";

  o << "\n[overrides]\n";
  for (const auto& [m, ov] : b.overrides) {
    o << name(m) << " = " << money_text(ov.price);
    if (!ov.timestamp.empty()) o << " @ " << ov.timestamp;
    o << "\n";
  }

  o << "\n; manufactured, local\n[regions]\n";
  for (const auto& [region, label] : all_values<Region>()) {
    if (auto it = b.regions.find(region); it != b.regions.end()) {
      o << label << " = " << ratio_text(it->second.manufactured) << ", "
        << ratio_text(it->second.local) << "\n";
    }
  }

  o << "\n[fees]\n";
  o << "design_base = " << money_text(b.fees.design_base) << "\n";
  o << "permit_base = " << money_text(b.fees.permit_base) << "\n";
  o << "utility_connection = " << money_text(b.fees.utility_connection) << "\n";
  o << "design_multi_factor = " << ratio_text(b.fees.design_multi_factor) << "\n";
  o << "permit_multi_factor = " << ratio_text(b.fees.permit_multi_factor) << "\n";

  const auto& f = b.features;
  o << "\n[features]\n";
  for (const auto& [k, v] : f.septic_tank) o << "septic_tank." << k << " = " << money_text(v) << "\n";
  o << "soakaway = " << money_text(f.soakaway) << "\n";
  o << "ac_unit = " << money_text(f.ac_unit) << "\n";
  o << "ceiling_fan = " << money_text(f.ceiling_fan) << "\n";
  o << "staircase_flight = " << money_text(f.staircase_flight) << "\n";
  for (const auto& [k, v] : f.doors_windows) o << "doors_windows." << k << " = " << money_text(v) << "\n";
  for (const auto& [k, v] : f.compound_wall_per_m) o << "compound_wall." << name(k) << " = " << money_text(v) << "\n";
  for (const auto& [k, v] : f.ceiling_per_m2) o << "ceiling." << name(k) << " = " << money_text(v) << "\n";
  auto graded = [&](const char* table, const std::map<Grade, Money>& m) {
    for (const auto& [k, v] : m) o << table << "." << name(k) << " = " << money_text(v) << "\n";
  };
  graded("kitchen", f.kitchen);
  graded("solar", f.solar);
  graded("security", f.security);
  graded("smart_home", f.smart_home);
  graded("external_works", f.external_works);

  o << "\n[services]\n";
  for (const auto& [k, v] : b.services.plumbing) o << "plumbing." << k << " = " << money_text(v) << "\n";
  o << "plumbing_extra_bath = " << money_text(b.services.plumbing_extra_bath) << "\n";
  for (const auto& a : b.services.electrical) {
    o << "electrical." << a.rooms << "x" << a.storeys << " = " << money_text(a.cost) << "\n";
  }

  o << "\n[informal_band]\n";
  o << "low = " << money_text(b.informal_band.low) << "\n";
  o << "high = " << money_text(b.informal_band.high) << "\n";
  o << "omitted = ";
  bool first = true;
  for (const auto& item : b.omitted_items) {
    o << (first ? "" : ", ") << item;
    first = false;
  }
  o << "\n";

  o << "\n[modifiers]\n";
  for (const auto& [style, mods] : b.style_modifiers) {
    for (const auto& [c, r] : mods) {
      o << "style." << name(style) << "." << name(c) << " = " << ratio_text(r) << "\n";
    }
  }
  for (const auto& [grade, mods] : b.finish_modifiers) {
    for (const auto& [c, r] : mods) {
      o << "finish." << name(grade) << "." << name(c) << " = " << ratio_text(r) << "\n";
    }
  }
  return o.str();
}

void save_pricebook_file(const PriceBook& book, const std::filesystem::path& path) {
  const std::string text = save_pricebook(book);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io_error, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::io_error, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorCode::io_error, "cannot replace " + path.string() + ": " + ec.message());
  }
}

}  // namespace hbq
