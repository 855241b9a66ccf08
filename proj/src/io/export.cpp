#include "hbq/io/export.hpp"

#include <iomanip>
#include <sstream>

#include "hbq/io/json_io.hpp"

namespace hbq {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

// 1,609 / 13.5 / 1,350.25
std::string quantity_display(Quantity q) {
  const std::int64_t whole = q.milli() / Quantity::kScale;
  std::string frac = std::to_string(std::abs(q.milli() % Quantity::kScale));
  if (q.milli() % Quantity::kScale == 0) return group_thousands(whole);
  frac.insert(0, 3 - frac.size(), '0');
  while (frac.back() == '0') frac.pop_back();
  return group_thousands(whole) + "." + frac;
}

// 8.60 / 101 / 1,350
std::string price_display(Money m) {
  const std::int64_t p = m.pesewas();
  if (p % 100 == 0) return group_thousands(p / 100);
  std::string cents = std::to_string(std::abs(p % 100));
  if (cents.size() == 1) cents.insert(0, "0");
  return group_thousands(p / 100) + "." + cents;
}

const char* category_title(Category c) {
  switch (c) {
    case Category::shell: return "Structural shell";
    case Category::services: return "Services (plumbing, electrical, systems)";
    case Category::hvac_septic: return "HVAC and septic";
    case Category::finishes: return "Finishes";
    case Category::external: return "External works";
    case Category::labour: return "Labour";
    case Category::staircase: return "Staircase";
    case Category::fees: return "Fixed fees";
  }
  return "?";
}

struct SummaryRow {
  std::string label;
  std::string value;
  bool strong = false;
};

std::vector<SummaryRow> summary_rows(const Estimate& e) {
  std::vector<SummaryRow> rows;
  for (const auto& [category, cost] : categorize(e.lines)) {
    if (category == Category::fees || cost.pesewas() == 0) continue;
    rows.push_back({category_title(category), cost.to_display()});
  }
  rows.push_back({"Variable subtotal", e.variable_subtotal.to_display()});
  rows.push_back({"Contingency (" + std::to_string(kContingencyPercent) + "%)",
                  e.contingency.to_display()});
  if (e.after_contingency.pesewas() != 0) {
    rows.push_back({"Extras after contingency", e.after_contingency.to_display()});
  }
  rows.push_back({"Fixed fees", e.fixed_fees.to_display()});
  rows.push_back({"Total", e.total.to_display(), true});
  rows.push_back({"Rate per m2", e.rate_per_m2.to_display()});
  return rows;
}

}  // namespace

ExportFormat parse_export_format(std::string_view text) {
  if (text == "csv") return ExportFormat::csv;
  if (text == "json" || text == "structured") return ExportFormat::json;
  if (text == "markdown" || text == "md") return ExportFormat::markdown;
  if (text == "table") return ExportFormat::table;
  throw Error(ErrorCode::unknown_format, "unknown export format '" + std::string(text) +
                                             "' (expected csv, json, markdown or table)");
}

std::string to_csv(const Estimate& e) {
  std::ostringstream o;
  o << "category,item,qty,unit,unit_price,cost,omitted_in_informal\n";
  for (const auto& l : e.lines) {
    o << csv_field(std::string(name(l.category))) << ',' << csv_field(l.item) << ','
      << l.quantity.to_string() << ',' << csv_field(l.unit) << ',' << l.unit_price.to_string()
      << ',' << l.cost.to_string() << ',' << (l.omitted_in_informal ? "true" : "false") << '\n';
  }
  return o.str();
}

std::string to_markdown(const Estimate& e) {
  std::ostringstream o;
  o << "| Item | Quantity | Unit | Unit Price (GHS) | Cost (GHS) |\n";
  o << "|------|---------:|------|-----------------:|-----------:|\n";
  for (const auto& l : e.lines) {
    o << "| " << md_cell(l.description) << " | " << quantity_display(l.quantity) << " | "
      << md_cell(l.unit) << " | " << price_display(l.unit_price) << " | " << l.cost.to_display()
      << " |\n";
  }
  o << "\n| Summary | Cost (GHS) |\n";
  o << "|---------|-----------:|\n";
  for (const auto& row : summary_rows(e)) {
    if (row.strong) {
      o << "| **" << row.label << "** | **" << row.value << "** |\n";
    } else {
      o << "| " << row.label << " | " << row.value << " |\n";
    }
  }
  return o.str();
}

std::string to_text_table(const Estimate& e) {
  std::size_t width = 4;
  for (const auto& l : e.lines) width = std::max(width, l.description.size());
  std::ostringstream o;
  o << std::left << std::setw(static_cast<int>(width)) << "Item" << "  " << std::right
    << std::setw(10) << "Quantity" << "  " << std::left << std::setw(8) << "Unit" << std::right
    << std::setw(12) << "Unit price" << std::setw(14) << "Cost (GHS)" << "\n";
  o << std::string(width + 2 + 10 + 2 + 8 + 12 + 14, '-') << "\n";
  for (const auto& l : e.lines) {
    o << std::left << std::setw(static_cast<int>(width)) << l.description << "  " << std::right
      << std::setw(10) << quantity_display(l.quantity) << "  " << std::left << std::setw(8)
      << l.unit << std::right << std::setw(12) << price_display(l.unit_price) << std::setw(14)
      << l.cost.to_display() << (l.omitted_in_informal ? " *" : "") << "\n";
  }
  o << std::string(width + 2 + 10 + 2 + 8 + 12 + 14, '-') << "\n";
  const auto rows = summary_rows(e);
  std::size_t label_width = 0;
  for (const auto& row : rows) label_width = std::max(label_width, row.label.size());
  for (const auto& row : rows) {
    o << std::left << std::setw(static_cast<int>(label_width)) << row.label << "  " << std::right
      << std::setw(14) << row.value << "\n";
  }
  o << "* usually left out of informal per-m2 quotes\n";
  return o.str();
}

std::string export_boq(const Estimate& e, ExportFormat format) {
  switch (format) {
    case ExportFormat::csv: return to_csv(e);
    case ExportFormat::json: return to_json(e).dump(2) + "\n";
    case ExportFormat::markdown: return to_markdown(e);
    case ExportFormat::table: return to_text_table(e);
  }
  throw Error(ErrorCode::unknown_format, "unknown export format");
}

namespace {

std::string signed_pct(int pct) { return (pct >= 0 ? "+" : "") + std::to_string(pct) + "%"; }

}  // namespace

std::string gap_to_markdown(const GapReport& g) {
  std::ostringstream o;
  o << "| Metric | Value |\n";
  o << "|--------|------:|\n";
  o << "| Floor area (m2) | " << quantity_display(Quantity::of(g.area_m2)) << " |\n";
  o << "| Estimate total (GHS) | " << g.estimate_total.to_display() << " |\n";
  o << "| Rate per m2 (GHS) | " << g.rate_per_m2.to_display() << " |\n";
  o << "| Informal quote low (GHS " << g.band.low.to_display() << "/m2) | "
    << g.informal_low.to_display() << " |\n";
  o << "| Informal quote high (GHS " << g.band.high.to_display() << "/m2) | "
    << g.informal_high.to_display() << " |\n";
  o << "| Completeness gap vs low | " << signed_pct(g.gap_vs_low_pct()) << " |\n";
  o << "| Completeness gap vs high | " << signed_pct(g.gap_vs_high_pct()) << " |\n";
  o << "\n| Omitted item | Cost (GHS) |\n";
  o << "|--------------|-----------:|\n";
  for (const auto& line : g.omitted_lines) {
    o << "| " << md_cell(line.description) << " | " << line.cost.to_display() << " |\n";
  }
  o << "| **Omitted total** | **" << g.omitted_total.to_display() << "** |\n";
  return o.str();
}

std::string gap_to_text(const GapReport& g) {
  std::ostringstream o;
  o << "Estimate total     GHS " << g.estimate_total.to_display() << " ("
    << g.rate_per_m2.to_display() << "/m2)\n";
  o << "Informal band      GHS " << g.informal_low.to_display() << " - "
    << g.informal_high.to_display() << " (" << g.band.low.to_display() << "-"
    << g.band.high.to_display() << "/m2)\n";
  o << "Gap vs low/high    " << signed_pct(g.gap_vs_low_pct()) << " / "
    << signed_pct(g.gap_vs_high_pct()) << "\n";
  o << "Omitted from informal quotes:\n";
  std::size_t width = 0;
  for (const auto& line : g.omitted_lines) width = std::max(width, line.description.size());
  for (const auto& line : g.omitted_lines) {
    o << "  " << std::left << std::setw(static_cast<int>(width)) << line.description << "  "
      << std::right << std::setw(10) << line.cost.to_display() << "\n";
  }
  o << "  " << std::left << std::setw(static_cast<int>(width)) << "Total" << "  " << std::right
    << std::setw(10) << g.omitted_total.to_display() << "\n";
  return o.str();
}

}  // namespace hbq
