#include <gtest/gtest.h>

#include "hbq/gap.hpp"
#include "hbq/io/export.hpp"
#include "hbq/io/json_io.hpp"
#include "support.hpp"

using namespace hbq;
using hbq::test::case_estimate;

namespace {

using Row = std::vector<std::string>;

// Minimal RFC 4180 reader, enough to check what to_csv writes.
std::vector<Row> read_csv(const std::string& text) {
  std::vector<Row> rows;
  Row row;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n') {
      row.push_back(std::move(cell));
      cell.clear();
      rows.push_back(std::move(row));
      row.clear();
    } else {
      cell += c;
    }
  }
  return rows;
}

std::string golden(const char* file) {
  return hbq::test::slurp(hbq::test::source_dir() / "tests" / "golden" / file);
}

}  // namespace

TEST(Export, CsvMatchesGolden) {
  EXPECT_EQ(to_csv(case_estimate("A", default_pricebook())), golden("case_a.csv"));
}

TEST(Export, MarkdownMatchesGolden) {
  EXPECT_EQ(to_markdown(case_estimate("A", default_pricebook())), golden("case_a.md"));
}

TEST(Export, OutputIsByteStable) {
  const PriceBook book = default_pricebook();
  for (const auto f : {ExportFormat::csv, ExportFormat::json, ExportFormat::markdown,
                       ExportFormat::table}) {
    EXPECT_EQ(export_boq(case_estimate("C", book), f), export_boq(case_estimate("C", book), f));
  }
}

TEST(Export, CsvParsesBack) {
  const Estimate e = case_estimate("B", default_pricebook());
  const auto rows = read_csv(to_csv(e));
  ASSERT_EQ(rows.size(), e.lines.size() + 1);
  EXPECT_EQ(rows[0], (Row{"category", "item", "qty", "unit", "unit_price", "cost",
                          "omitted_in_informal"}));
  Money sum;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].size(), 7u) << i;
    EXPECT_EQ(rows[i][1], e.lines[i - 1].item);
    sum += Money::parse(rows[i][5]);
  }
  EXPECT_EQ(sum, e.variable_subtotal + e.fixed_fees);
}

TEST(Export, CsvQuotesAwkwardText) {
  Estimate e = case_estimate("A", default_pricebook());
  e.lines.resize(1);
  e.lines[0].item = "odd, \"quoted\" item";
  e.lines[0].unit = "m\nx";
  const std::string text = to_csv(e);
  EXPECT_NE(text.find("\"odd, \"\"quoted\"\" item\""), std::string::npos);
  const auto rows = read_csv(text);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][1], "odd, \"quoted\" item");
  EXPECT_EQ(rows[1][3], "m\nx");
}

TEST(Export, JsonFormatIsTheEstimateDocument) {
  const Estimate e = case_estimate("A", default_pricebook());
  const json j = json::parse(export_boq(e, ExportFormat::json));
  EXPECT_EQ(j, to_json(e));
}

TEST(Export, TableMarksOmittedLines) {
  const std::string t = to_text_table(case_estimate("A", default_pricebook()));
  EXPECT_NE(t.find("Total"), std::string::npos);
  EXPECT_NE(t.find("496,292"), std::string::npos);
  std::size_t starred = 0;
  for (std::size_t at = t.find(" *\n"); at != std::string::npos; at = t.find(" *\n", at + 1)) {
    ++starred;
  }
  EXPECT_EQ(starred, 7u);
}

TEST(Export, FormatNames) {
  EXPECT_EQ(parse_export_format("csv"), ExportFormat::csv);
  EXPECT_EQ(parse_export_format("structured"), ExportFormat::json);
  EXPECT_EQ(parse_export_format("md"), ExportFormat::markdown);
  try {
    parse_export_format("xlsx");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_format);
  }
}

TEST(Export, GapRenderings) {
  const PriceBook book = default_pricebook();
  const GapReport g = gap(case_estimate("A", book), book.informal_band);
  const std::string md = gap_to_markdown(g);
  EXPECT_NE(md.find("| Completeness gap vs low | +89% |"), std::string::npos);
  EXPECT_NE(md.find("| **Omitted total** | **150,188** |"), std::string::npos);
  const std::string text = gap_to_text(g);
  EXPECT_NE(text.find("+89% / +32%"), std::string::npos);
}
