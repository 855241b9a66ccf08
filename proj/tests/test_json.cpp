#include <gtest/gtest.h>

#include "hbq/io/json_io.hpp"
#include "support.hpp"

using namespace hbq;
using hbq::test::Gen;

namespace {

Error request_error(const std::string& text) {
  try {
    request_from_json(parse_json_text(text));
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return Error(ErrorCode::io_error, "none");
}

}  // namespace

TEST(Json, SpecRoundTrip) {
  Gen gen(201);
  for (int i = 0; i < hbq::test::kPropertyRuns; ++i) {
    const BuildingSpec s = gen.spec();
    const json j = to_json(s);
    EXPECT_EQ(spec_from_json(json::parse(j.dump())), s) << j.dump();
  }
}

TEST(Json, SpecDefaults) {
  const BuildingSpec s =
      spec_from_json(json::parse(R"({"total_area_m2": 75, "bedrooms": 2, "bathrooms": 1})"));
  EXPECT_EQ(s.storeys, 1);
  EXPECT_EQ(s.style, Style::traditional);
  EXPECT_EQ(s.finish, Grade::standard);
  EXPECT_EQ(s.region, Region::greater_accra);
  EXPECT_TRUE(s.features.empty());
}

TEST(Json, FeaturesAsStringsOrObjects) {
  const BuildingSpec s = spec_from_json(json::parse(R"({
    "total_area_m2": 120, "bedrooms": 3, "bathrooms": 2,
    "features": ["septic", {"kind": "compound_wall", "perimeter_m": 90, "height_class": "low"},
                 {"kind": "hvac", "fans": 4}]})"));
  ASSERT_EQ(s.features.size(), 3u);
  EXPECT_EQ(s.features[0].kind, FeatureKind::septic);
  EXPECT_EQ(*s.features[1].perimeter_m, 90);
  EXPECT_EQ(*s.features[1].height_class, WallHeightClass::low);
  EXPECT_EQ(*s.features[2].fans, 4);
}

TEST(Json, FieldPathsInErrors) {
  struct Case {
    const char* body;
    const char* field;
  };
  const Case cases[] = {
      {R"({"spec": {"bedrooms": 2, "bathrooms": 1}})", "spec.total_area_m2"},
      {R"({"spec": {"total_area_m2": 75, "bedrooms": 2, "bathrooms": 1, "storeys": 0}})",
       "spec.storeys"},
      {R"({"spec": {"total_area_m2": "big", "bedrooms": 2, "bathrooms": 1}})",
       "spec.total_area_m2"},
      {R"({"spec": {"total_area_m2": 75, "bedrooms": 2, "bathrooms": 1, "region": "mars"}})",
       "spec.region"},
      {R"({"spec": {"total_area_m2": 75, "bedrooms": 2, "bathrooms": 1,
                    "features": ["septic", {"kind": "hvac", "colour": "red"}]}})",
       "spec.features[1].colour"},
      {R"({"spec": {"total_area_m2": 75, "bedrooms": 2, "bathrooms": 1},
           "layout": {"scale": 0.01, "walls": [{"a": 100, "b": 20}, {"a": -1, "b": 20}]}})",
       "layout.walls[1].a"},
      {R"({"spec": {"total_area_m2": 75, "bedrooms": 2, "bathrooms": 1},
           "options": {"w_cut": 2}})",
       "options.w_cut"},
      {R"({"spec": {"total_area_m2": 75, "bedrooms": 2, "bathrooms": 1},
           "overrides": {"rebar_y12": -5}})",
       "overrides.rebar_y12"},
  };
  for (const Case& c : cases) {
    const Error e = request_error(c.body);
    EXPECT_EQ(e.field(), c.field) << c.body << "\n" << e.what();
  }
}

TEST(Json, NegativePriceOverrideCode) {
  const Error e = request_error(R"({"spec": {"total_area_m2": 75, "bedrooms": 2, "bathrooms": 1},
                                   "overrides": {"rebar_y12": 0}})");
  EXPECT_EQ(e.code(), ErrorCode::non_positive_price);
}

TEST(Json, MalformedTextIsParseError) {
  try {
    parse_json_text("{\"spec\": ", "request body");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse_error);
  }
}

TEST(Json, BareSpecAccepted) {
  const EstimateRequest r = request_from_json(
      json::parse(R"({"total_area_m2": 75, "bedrooms": 2, "bathrooms": 1})"));
  EXPECT_EQ(r.spec.total_area_m2, 75);
  EXPECT_FALSE(r.layout);
  EXPECT_EQ(r.options, EstimateOptions{});
}

TEST(Json, RequestRoundTrip) {
  EstimateRequest r;
  r.spec = hbq::test::house(120, 1, 3, 2);
  r.options = EstimateOptions::case_compatible();
  r.options.placement = ContingencyPlacement::extras_outside;
  r.overrides[Material::rebar_y12] = Money::parse("55.5");
  FloorPlanLayout layout;
  layout.scale = 0.01;
  layout.walls = {{1000, 20}, {800, 20}};
  layout.windows = {{1.2, 1.2}};
  layout.rooms = {{RoomKind::living, 15.0, "lounge"}};
  r.layout = layout;
  const EstimateRequest back = request_from_json(json::parse(to_json(r).dump()));
  EXPECT_EQ(back.spec, r.spec);
  EXPECT_EQ(back.options, r.options);
  EXPECT_EQ(back.overrides, r.overrides);
  ASSERT_TRUE(back.layout);
  EXPECT_EQ(to_json(*back.layout), to_json(layout));
}

TEST(Json, EstimateRoundTrip) {
  for (const char* id : {"A", "B", "C"}) {
    const Estimate e = hbq::test::case_estimate(id, default_pricebook());
    const json j = to_json(e);
    EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
    EXPECT_EQ(j.at("mode"), "formula");
    const Estimate back = estimate_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.lines, e.lines) << id;
    EXPECT_EQ(back.total, e.total);
    EXPECT_EQ(back.contingency, e.contingency);
    EXPECT_EQ(back.takeoff.spec, e.takeoff.spec);
    EXPECT_EQ(to_json(back), j) << id;
  }
}

TEST(Json, ErrorDocument) {
  const json j = error_to_json(Error(ErrorCode::validation_error, "must be positive", "spec.bedrooms"));
  EXPECT_EQ(j.at("error").at("field"), "spec.bedrooms");
  EXPECT_EQ(j.at("error").at("message"), "must be positive");
  EXPECT_FALSE(j.at("error").contains("line"));
}
