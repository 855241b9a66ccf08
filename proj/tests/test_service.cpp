#include <gtest/gtest.h>

#include <thread>

#include "httplib.h"

#include "hbq/io/json_io.hpp"
#include "hbq/io/store.hpp"
#include "hbq/service.hpp"
#include "support.hpp"

using namespace hbq;

namespace {

const char* kCaseABody = R"({
  "schema_version": 1,
  "spec": {"total_area_m2": 75, "storeys": 1, "bedrooms": 2, "bathrooms": 1,
           "features": ["septic", {"kind": "hvac", "fans": 3}, "tiles", "paint"]},
  "options": {"case_compat": true}
})";

class ServiceTest : public ::testing::Test {
 protected:
  PriceBookStore store{default_pricebook()};
  Service service{store};

  json call(const std::string& method, const std::string& path, const std::string& body = "",
            int want = 200, const std::map<std::string, std::string>& query = {}) {
    const ApiResponse r = service.handle(method, path, body, query);
    EXPECT_EQ(r.status, want) << method << " " << path << "\n" << r.body;
    EXPECT_EQ(r.headers.at("X-Engine-Version"), kEngineVersion);
    EXPECT_EQ(r.headers.at("X-Pricebook-Version"), std::to_string(store.snapshot()->version));
    return json::parse(r.body);
  }
};

}  // namespace

TEST_F(ServiceTest, EstimateCaseA) {
  const json j = call("POST", "/v1/estimate", kCaseABody);
  EXPECT_EQ(j.at("total"), 496292);
  EXPECT_EQ(j.at("rate_per_m2"), 6617);
  EXPECT_EQ(j.at("mode"), "formula");
  EXPECT_EQ(j.at("pricebook").at("version"), 1);
  EXPECT_FALSE(j.contains("pricebook_overlay"));
}

TEST_F(ServiceTest, RequestOverridesDoNotLeak) {
  json body = json::parse(kCaseABody);
  body["overrides"] = {{"rebar_y12", 55}};
  const json j = call("POST", "/v1/estimate", body.dump());
  EXPECT_EQ(j.at("pricebook_overlay"), true);
  EXPECT_EQ(j.at("total").get<std::int64_t>(), 496292 + 900 + 135);
  EXPECT_EQ(store.snapshot()->version, 1u);
  EXPECT_EQ(call("POST", "/v1/estimate", kCaseABody).at("total"), 496292);
}

TEST_F(ServiceTest, LayoutEstimateReportsRoomMinimums) {
  json body = json::parse(kCaseABody);
  body["layout"] = {{"scale", 1.0},
                    {"walls", {{{"a", 10.25}, {"b", 0.15}}, {{"a", 7.32}, {"b", 0.15}}}},
                    {"rooms", {{{"kind", "living"}, {"area_m2", 13.47}},
                               {{"kind", "bedroom_main"}, {"area_m2", 10.0}, {"name", "master"}}}}};
  const json j = call("POST", "/v1/estimate", body.dump());
  EXPECT_EQ(j.at("mode"), "geometry");
  ASSERT_EQ(j.at("room_findings").size(), 1u);
  EXPECT_EQ(j.at("room_findings")[0].at("room"), 1);
  EXPECT_EQ(j.at("room_findings")[0].at("name"), "master");
  EXPECT_EQ(j.at("room_findings")[0].at("required_m2"), 11.15);
  EXPECT_FALSE(call("POST", "/v1/estimate", kCaseABody).contains("room_findings"));
}

TEST_F(ServiceTest, FieldErrorsAre400) {
  const json j = call("POST", "/v1/estimate",
                      R"({"spec": {"total_area_m2": 75, "bedrooms": 0, "bathrooms": 1}})", 400);
  EXPECT_EQ(j.at("error").at("field"), "spec.bedrooms");
  call("POST", "/v1/estimate", "not json", 400);
  call("GET", "/v1/estimate", "", 405);
}

TEST_F(ServiceTest, GapFromRequestOrEstimate) {
  const json g = call("POST", "/v1/gap", kCaseABody);
  EXPECT_EQ(g.at("omitted_total"), 150188);
  const json est = call("POST", "/v1/estimate", kCaseABody);
  json doc = est;
  doc["band"] = {{"low", 4000}, {"high", 6000}};
  const json g2 = call("POST", "/v1/gap", doc.dump());
  EXPECT_EQ(g2.at("informal_low"), 300000);
  json bad = est;
  bad["band"] = {{"low", 6000}, {"high", 4000}};
  EXPECT_EQ(call("POST", "/v1/gap", bad.dump(), 400).at("error").at("code"), "InvalidBand");
}

TEST_F(ServiceTest, OverridesBumpVersionAndConflict) {
  const json v2 = call("PUT", "/v1/pricebook/overrides",
                       R"({"base_version": 1, "timestamp": "2026-03-01T00:00:00Z",
                           "overrides": {"rebar_y12": 55}})");
  EXPECT_EQ(v2.at("version"), 2);
  const json conflict = call("PUT", "/v1/pricebook/overrides",
                             R"({"base_version": 1, "overrides": {"rebar_y12": 60}})", 409);
  EXPECT_EQ(conflict.at("error").at("current_version"), 2);
  call("PUT", "/v1/pricebook/overrides", R"({"overrides": {"rebar_y12": -1}})", 400);
  call("PUT", "/v1/pricebook/overrides", R"({"overrides": {}})", 400);
  EXPECT_EQ(store.snapshot()->version, 2u);

  const json est = call("POST", "/v1/estimate", kCaseABody);
  EXPECT_EQ(est.at("total"), 496292 + 900 + 135);
  EXPECT_EQ(est.at("pricebook").at("version"), 2);
}

TEST_F(ServiceTest, PricebookHistory) {
  store.apply_overrides({{Material::stone_m3, Money::ghs(400)}}, "t");
  const json now = call("GET", "/v1/pricebook");
  EXPECT_EQ(now.at("version"), 2);
  EXPECT_EQ(now.at("versions"), json::array({1, 2}));
  const json old = call("GET", "/v1/pricebook", "", 200, {{"version", "1"}});
  EXPECT_EQ(old.at("version"), 1);
  call("GET", "/v1/pricebook", "", 404, {{"version", "7"}});
  call("GET", "/v1/pricebook", "", 400, {{"version", "x"}});
}

TEST_F(ServiceTest, Regions) {
  const json all = call("GET", "/v1/regions");
  EXPECT_EQ(all.at("regions").size(), 16u);
  const json north = call("GET", "/v1/regions/northern");
  EXPECT_EQ(north.at("region"), "northern");
  EXPECT_EQ(north.at("prices").at("cement_bag_50kg"), 116.15);
  EXPECT_EQ(north.at("prices").at("sand_trip"), 1215);
  EXPECT_EQ(north.at("labour_per_m2"), 810);
  call("GET", "/v1/regions/atlantis", "", 404);
}

TEST_F(ServiceTest, Cases) {
  EXPECT_EQ(call("GET", "/v1/cases").at("cases").size(), 3u);
  const json a = call("GET", "/v1/cases/A", "", 200, {{"run", "1"}});
  EXPECT_TRUE(a.contains("run"));
  call("GET", "/v1/cases/Z", "", 404);
  call("GET", "/v1/nothing", "", 404);
}

TEST(ServiceHttp, RoundTripOverSocket) {
  PriceBookStore store(default_pricebook());
  Service service(store);
  httplib::Server server;
  service.mount(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto res = client.Post("/v1/estimate", kCaseABody, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("X-Engine-Version"), kEngineVersion);
  EXPECT_EQ(res->get_header_value("X-Pricebook-Version"), "1");
  EXPECT_EQ(json::parse(res->body).at("total"), 496292);

  auto put = client.Put("/v1/pricebook/overrides", R"({"overrides": {"sand_trip": 1400}})",
                        "application/json");
  ASSERT_TRUE(put);
  EXPECT_EQ(put->status, 200);
  EXPECT_EQ(put->get_header_value("X-Pricebook-Version"), "2");

  auto old = client.Get("/v1/pricebook?version=1");
  ASSERT_TRUE(old);
  EXPECT_EQ(json::parse(old->body).at("version"), 1);

  server.stop();
  worker.join();
}
