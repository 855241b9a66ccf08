#include <gtest/gtest.h>

#include <sstream>

#include "hbq/io/pricebook_doc.hpp"
#include "support.hpp"

using namespace hbq;

namespace {

Error load_error(const std::string& text) {
  try {
    load_pricebook_text(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "document loaded:\n" << text;
  return Error(ErrorCode::io_error, "none");
}

// Shipped book with one line replaced.
std::string edited(const std::string& from, const std::string& to) {
  std::string text = save_pricebook(default_pricebook());
  const auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST(PricebookDoc, RoundTripsDefaults) {
  const PriceBook book = default_pricebook();
  const std::string text = save_pricebook(book);
  EXPECT_EQ(load_pricebook_text(text), book);
  EXPECT_EQ(save_pricebook(load_pricebook_text(text)), text);
}

TEST(PricebookDoc, RoundTripsOverridesAndVersion) {
  PriceBook book = apply_override(default_pricebook(), Material::rebar_y12, Money::parse("55.50"),
                                  "2026-03-01T08:00:00Z");
  book = apply_override(book, Material::sand_trip, Money::ghs(1400), "2026-03-02T08:00:00Z");
  const PriceBook back = load_pricebook_text(save_pricebook(book));
  EXPECT_EQ(back, book);
  EXPECT_EQ(back.version, 3u);
  EXPECT_EQ(back.overrides.at(Material::rebar_y12).timestamp, "2026-03-01T08:00:00Z");
}

TEST(PricebookDoc, ShippedFileEqualsDefaults) {
  const auto path = hbq::test::source_dir() / "data" / "pricebook.ini";
  EXPECT_EQ(load_pricebook_file(path), default_pricebook());
  EXPECT_EQ(hbq::test::slurp(path), save_pricebook(default_pricebook()));
}

TEST(PricebookDoc, SyntaxErrorsCarryLine) {
  const Error e = load_error("[meta]\nversion = 1\nthis line has no equals\n");
  EXPECT_EQ(e.code(), ErrorCode::parse_error);
  EXPECT_EQ(e.line(), 3);
}

TEST(PricebookDoc, NegativePriceNamesFieldAndLine) {
  const std::string text = edited("rebar_y12 = 54\n", "rebar_y12 = -5\n");
  int line = 1;
  for (std::size_t i = 0; i < text.find("rebar_y12 = -5"); ++i) line += text[i] == '\n';
  const Error e = load_error(text);
  EXPECT_EQ(e.code(), ErrorCode::validation_error);
  EXPECT_EQ(e.field(), "defaults.rebar_y12");
  EXPECT_EQ(e.line(), line);
}

TEST(PricebookDoc, UnknownKeysRejected) {
  const Error e = load_error(edited("rebar_y12 = 54\n", "rebar_y12 = 54\nrebar_y99 = 10\n"));
  EXPECT_EQ(e.code(), ErrorCode::validation_error);
  EXPECT_EQ(e.field(), "defaults.rebar_y99");
  EXPECT_GT(e.line(), 0);

  const Error s = load_error(edited("[fees]", "[feez]"));
  EXPECT_EQ(s.code(), ErrorCode::validation_error);
}

TEST(PricebookDoc, BadValuesRejected) {
  EXPECT_EQ(load_error(edited("sand_trip = 1350\n", "sand_trip = lots\n")).field(),
            "defaults.sand_trip");
  EXPECT_EQ(load_error(edited("low = 3500\n", "low = 6000\n")).code(), ErrorCode::validation_error);
}

TEST(PricebookDoc, OverrideTimestampOptional) {
  const std::string text = edited("[overrides]\n", "[overrides]\nrebar_y12 = 60\n");
  const PriceBook b = load_pricebook_text(text);
  EXPECT_EQ(b.overrides.at(Material::rebar_y12).timestamp, "");
  EXPECT_EQ(save_pricebook(b), text);
  EXPECT_EQ(load_error(edited("[overrides]\n", "[overrides]\nrebar_y12 = 0 @ t\n")).field(),
            "overrides.rebar_y12");
}

TEST(PricebookDoc, OverrideParsed) {
  const PriceBook b =
      load_pricebook_text(edited("[overrides]\n", "[overrides]\nrebar_y12 = 60 @ 2026-03-01T00:00:00Z\n"));
  EXPECT_EQ(resolve_price(b, Material::rebar_y12, Region::greater_accra).whole_ghs(), 60);
}

TEST(PricebookDoc, MissingFileIsIoError) {
  try {
    load_pricebook_file("/nonexistent/pricebook.ini");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::io_error);
  }
}

TEST(PricebookDoc, SaveFileIsAtomicReplace) {
  const auto dir = std::filesystem::temp_directory_path() / "hbq_doc_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / "book.ini";
  save_pricebook_file(default_pricebook(), path);
  PriceBook b = apply_override(default_pricebook(), Material::stone_m3, Money::ghs(400), "t1");
  save_pricebook_file(b, path);
  EXPECT_EQ(load_pricebook_file(path), b);
  int files = 0;
  for ([[maybe_unused]] const auto& entry : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1);
  std::filesystem::remove_all(dir);
}
