#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "hbq/cli.hpp"
#include "hbq/io/json_io.hpp"
#include "hbq/io/pricebook_doc.hpp"
#include "hbq/io/store.hpp"
#include "support.hpp"

using namespace hbq;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome hbq_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec_path(const char* file) {
  return (hbq::test::source_dir() / "data" / "specs" / file).string();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ::unsetenv(kPricebookEnvVar);
    dir_ = std::filesystem::temp_directory_path() / "hbq_cli_test";
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override {
    ::unsetenv(kPricebookEnvVar);
    std::filesystem::remove_all(dir_);
  }
  std::string tmp(const char* name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, EstimateCsvMatchesGolden) {
  const Outcome r = hbq_cli({"estimate", "--spec", spec_path("case_a.json"), "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, hbq::test::slurp(hbq::test::source_dir() / "tests" / "golden" / "case_a.csv"));
}

TEST_F(CliTest, EstimateWritesFile) {
  const Outcome r = hbq_cli({"estimate", "--spec", spec_path("case_b.json"), "--format", "json", "-o",
                         tmp("b.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(hbq::test::slurp(tmp("b.json")));
  EXPECT_EQ(j.at("total"), 745768);
}

TEST_F(CliTest, OverrideFlagIsRunScoped) {
  const Outcome r = hbq_cli({"estimate", "--spec", spec_path("case_a.json"), "--format", "json",
                         "--override", "rebar_y12=55"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out).at("total"), 496292 + 900 + 135);
}

TEST_F(CliTest, LayoutSampleRunsInGeometryMode) {
  const auto sample = (hbq::test::source_dir() / "data" / "layouts" / "bungalow_3bed.json").string();
  const Outcome r = hbq_cli({"estimate", "--spec", sample, "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("mode"), "geometry");
  EXPECT_NEAR(j.at("wall").at("opening_area_m2").get<double>(), 6.84, 1e-9);
  // every room in the sample meets its minimum
  EXPECT_EQ(r.err, "");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(hbq_cli({}).code, kExitUsage);
  EXPECT_EQ(hbq_cli({"--help"}).code, kExitOk);
  EXPECT_EQ(hbq_cli({"estimate"}).code, kExitUsage);
  EXPECT_EQ(hbq_cli({"estimate", "--spec", spec_path("case_a.json"), "--format", "xml"}).code,
            kExitUsage);
  EXPECT_EQ(hbq_cli({"estimate", "--spec", tmp("nope.json")}).code, kExitFailure);
  EXPECT_EQ(hbq_cli({"frobnicate"}).code, kExitUsage);
}

TEST_F(CliTest, InvalidSpecNamesField) {
  {
    std::ofstream f(tmp("bad.json"));
    f << R"({"total_area_m2": 75, "bedrooms": 2, "bathrooms": 1, "storeys": -1})";
  }
  const Outcome r = hbq_cli({"estimate", "--spec", tmp("bad.json")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("storeys"), std::string::npos) << r.err;
}

TEST_F(CliTest, GapText) {
  const Outcome r = hbq_cli({"gap", "--spec", spec_path("case_a.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("+89% / +32%"), std::string::npos) << r.out;
  const Outcome custom = hbq_cli({"gap", "--spec", spec_path("case_a.json"), "--low", "4000",
                              "--high", "3000"});
  EXPECT_EQ(custom.code, kExitFailure);
}

TEST_F(CliTest, ExportRerendersSavedEstimate) {
  ASSERT_EQ(hbq_cli({"estimate", "--spec", spec_path("case_a.json"), "--format", "json", "-o",
                     tmp("a.json")})
                .code,
            kExitOk);
  const Outcome r = hbq_cli({"export", "--estimate", tmp("a.json"), "--format", "markdown"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, hbq::test::slurp(hbq::test::source_dir() / "tests" / "golden" / "case_a.md"));
}

TEST_F(CliTest, ReproduceReportsFailuresHonestly) {
  const Outcome r = hbq_cli({"reproduce", "A", "--format", "json"});
  const json j = json::parse(r.out);
  bool all = true;
  for (const auto& c : j.at("checks")) all = all && c.at("pass").get<bool>();
  EXPECT_EQ(r.code, all ? kExitOk : kExitFailure);
  EXPECT_EQ(hbq_cli({"reproduce", "Q"}).code, kExitFailure);
}

TEST_F(CliTest, PricesViaEnvironmentStore) {
  const std::string book = tmp("book.ini");
  ::setenv(kPricebookEnvVar, book.c_str(), 1);
  Outcome r = hbq_cli({"prices", "set", "rebar_y12", "55", "--timestamp", "2026-03-01T00:00:00Z"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(load_pricebook_file(book).version, 2u);

  r = hbq_cli({"prices", "set", "rebar_y12", "60", "--base-version", "1"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_EQ(load_pricebook_file(book).version, 2u);

  // estimate picks the store up from the environment too
  r = hbq_cli({"estimate", "--spec", spec_path("case_a.json"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out).at("pricebook").at("version"), 2);

  r = hbq_cli({"prices", "show", "--region", "northern"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("116.15"), std::string::npos) << r.out;
}

TEST_F(CliTest, PricesImportValidates) {
  const std::string book = tmp("book.ini");
  {
    std::ofstream f(tmp("bad.ini"));
    f << save_pricebook(default_pricebook()).replace(
        save_pricebook(default_pricebook()).find("rebar_y12 = 54"), 14, "rebar_y12 = -5");
  }
  Outcome r = hbq_cli({"prices", "--pricebook", book, "import", tmp("bad.ini")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("defaults.rebar_y12"), std::string::npos) << r.err;

  EXPECT_FALSE(std::filesystem::exists(book));
  EXPECT_EQ(hbq_cli({"prices", "--pricebook", book, "export"}).code, kExitFailure);

  // no store at all: the shipped book
  r = hbq_cli({"prices", "export"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, save_pricebook(default_pricebook()));

  {
    std::ofstream f(tmp("good.ini"));
    f << save_pricebook(apply_override(default_pricebook(), Material::stone_m3, Money::ghs(390), "t"));
  }
  r = hbq_cli({"prices", "--pricebook", book, "import", tmp("good.ini")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(load_pricebook_file(book).base_price(Material::stone_m3).whole_ghs(), 390);
}
