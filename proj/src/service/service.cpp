#include "hbq/service.hpp"

#include <iostream>
#include <regex>

#include "httplib.h"

#include "hbq/cases.hpp"
#include "hbq/io/json_io.hpp"

namespace hbq {

namespace {

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::unknown_case:
    case ErrorCode::unknown_region:
      return 404;
    case ErrorCode::version_conflict:
      return 409;
    case ErrorCode::io_error:
    case ErrorCode::missing_calibration:
      return 500;
    default:
      return 400;
  }
}

ApiResponse reply(int status, const json& body, std::uint64_t pricebook_version) {
  ApiResponse r;
  r.status = status;
  r.body = body.dump(2) + "\n";
  r.headers["Content-Type"] = "application/json";
  r.headers["X-Engine-Version"] = std::string(kEngineVersion);
  r.headers["X-Pricebook-Version"] = std::to_string(pricebook_version);
  return r;
}

ApiResponse failure(const Error& e, std::uint64_t pricebook_version) {
  json body = error_to_json(e);
  if (e.code() == ErrorCode::version_conflict) {
    body["error"]["current_version"] = pricebook_version;
    body["error"]["retry"] = "GET /v1/pricebook, then resend with the current base_version";
  }
  return reply(status_for(e.code()), body, pricebook_version);
}

ApiResponse not_found(const std::string& what, std::uint64_t v) {
  return reply(404, json{{"error", {{"code", "NotFound"}, {"message", what}}}}, v);
}

// Request-scoped overlay; the shared snapshot is never touched.
PriceBook with_overrides(const PriceBook& base, const std::map<Material, Money>& overrides) {
  PriceBook book = base;
  for (const auto& [m, price] : overrides) {
    book.overrides[m] = PriceOverride{price, base.timestamp};
  }
  return book;
}

json provenance(json body, std::uint64_t pricebook_version, bool overlay) {
  body["engine_version"] = std::string(kEngineVersion);
  body["pricebook_version"] = pricebook_version;
  if (overlay) body["pricebook_overlay"] = true;
  return body;
}

InformalBand band_from(const json& j, const InformalBand& fallback) {
  auto it = j.find("band");
  if (it == j.end() || it->is_null()) return fallback;
  if (!it->is_object()) throw Error(ErrorCode::validation_error, "expected an object", "band");
  InformalBand band = fallback;
  for (const char* key : {"low", "high"}) {
    auto v = it->find(key);
    if (v == it->end()) continue;
    const std::string field = std::string("band.") + key;
    if (!v->is_number()) throw Error(ErrorCode::validation_error, "expected a number", field);
    (std::string(key) == "low" ? band.low : band.high) = Money::from_ghs_double(v->get<double>());
  }
  return band;
}

}  // namespace

ApiResponse Service::handle(const std::string& method, const std::string& path,
                            const std::string& body,
                            const std::map<std::string, std::string>& query) const {
  const PriceBookStore::Snapshot snap = store_.snapshot();
  const std::uint64_t v = snap->version;
  static const std::regex kCase("/v1/cases/([^/]+)");
  static const std::regex kRegion("/v1/regions/([^/]+)");
  std::smatch m;
  try {
    if (path == "/v1/estimate") {
      if (method != "POST") return reply(405, json{{"error", {{"code", "MethodNotAllowed"}}}}, v);
      const EstimateRequest req = request_from_json(parse_json_text(body, "request body"));
      const PriceBook book = with_overrides(*snap, req.overrides);
      const FloorPlanLayout* layout = req.layout ? &*req.layout : nullptr;
      const Estimate e = estimate(req.spec, layout, book, req.options);
      json out = to_json(e);
      if (req.layout) out["room_findings"] = room_findings_to_json(*req.layout);
      if (!req.overrides.empty()) out["pricebook_overlay"] = true;
      return reply(200, out, v);
    }
    if (path == "/v1/gap") {
      if (method != "POST") return reply(405, json{{"error", {{"code", "MethodNotAllowed"}}}}, v);
      json doc = parse_json_text(body, "request body");
      const InformalBand band = band_from(doc, snap->informal_band);
      doc.erase("band");
      bool overlay = false;
      Estimate e;
      if (doc.contains("lines")) {
        e = estimate_from_json(doc);
      } else {
        const EstimateRequest req = request_from_json(doc);
        overlay = !req.overrides.empty();
        const PriceBook book = with_overrides(*snap, req.overrides);
        e = estimate(req.spec, req.layout ? &*req.layout : nullptr, book, req.options);
      }
      return reply(200, provenance(to_json(gap(e, band)), e.pricebook_version, overlay), v);
    }
    if (path == "/v1/pricebook") {
      if (method != "GET") return reply(405, json{{"error", {{"code", "MethodNotAllowed"}}}}, v);
      if (auto q = query.find("version"); q != query.end()) {
        std::uint64_t wanted = 0;
        try {
          wanted = std::stoull(q->second);
        } catch (const std::exception&) {
          throw Error(ErrorCode::validation_error, "expected an integer", "version");
        }
        auto old = store_.at_version(wanted);
        if (!old) return not_found("no price-book version " + q->second, v);
        return reply(200, pricebook_to_json(*old), v);
      }
      json out = pricebook_to_json(*snap);
      out["versions"] = store_.versions();
      return reply(200, out, v);
    }
    if (path == "/v1/pricebook/overrides") {
      if (method != "PUT") return reply(405, json{{"error", {{"code", "MethodNotAllowed"}}}}, v);
      const json doc = parse_json_text(body, "request body");
      if (!doc.is_object()) throw Error(ErrorCode::validation_error, "expected an object");
      std::optional<std::uint64_t> base;
      if (auto it = doc.find("base_version"); it != doc.end() && !it->is_null()) {
        if (!it->is_number_unsigned()) {
          throw Error(ErrorCode::validation_error, "expected a non-negative integer",
                      "base_version");
        }
        base = it->get<std::uint64_t>();
      }
      std::string stamp = now_iso8601();
      if (auto it = doc.find("timestamp"); it != doc.end()) {
        if (!it->is_string()) throw Error(ErrorCode::validation_error, "expected a string", "timestamp");
        stamp = it->get<std::string>();
      }
      auto it = doc.find("overrides");
      if (it == doc.end()) throw Error(ErrorCode::validation_error, "required", "overrides");
      const auto overrides = overrides_from_json(*it);
      if (overrides.empty()) {
        throw Error(ErrorCode::validation_error, "at least one override required", "overrides");
      }
      auto next = store_.apply_overrides(overrides, stamp, base);
      return reply(200, pricebook_to_json(*next), next->version);
    }
    if (path == "/v1/regions") {
      if (method != "GET") return reply(405, json{{"error", {{"code", "MethodNotAllowed"}}}}, v);
      return reply(200, json{{"regions", regions_to_json(*snap)}, {"pricebook_version", v}}, v);
    }
    if (std::regex_match(path, m, kRegion)) {
      if (method != "GET") return reply(405, json{{"error", {{"code", "MethodNotAllowed"}}}}, v);
      const std::string id = m[1];
      for (const auto& r : regions_to_json(*snap)) {
        if (r.at("region") == id) return reply(200, r, v);
      }
      return not_found("unknown region '" + id + "'", v);
    }
    if (path == "/v1/cases") {
      if (method != "GET") return reply(405, json{{"error", {{"code", "MethodNotAllowed"}}}}, v);
      json list = json::array();
      for (const auto& f : case_fixtures()) list.push_back({{"id", f.id}, {"title", f.title}});
      return reply(200, json{{"cases", list}}, v);
    }
    if (std::regex_match(path, m, kCase)) {
      if (method != "GET") return reply(405, json{{"error", {{"code", "MethodNotAllowed"}}}}, v);
      const CaseFixture& f = find_case(m[1].str());
      json out = to_json(f);
      if (auto q = query.find("run"); q != query.end() && q->second != "0") {
        out["run"] = to_json(run_case(f, *snap));
      }
      return reply(200, out, v);
    }
    return not_found("no route for " + path, v);
  } catch (const Error& e) {
    return failure(e, store_.snapshot()->version);
  }
}

void Service::mount(httplib::Server& server) const {
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, val] : req.params) query[k] = val;
    const ApiResponse r = handle(req.method, req.path, req.body, query);
    res.status = r.status;
    for (const auto& [k, val] : r.headers) {
      if (k != "Content-Type") res.set_header(k, val);
    }
    res.set_content(r.body, "application/json");
  };
  const std::string any = R"(/v1/.*)";
  server.Get(any, forward);
  server.Post(any, forward);
  server.Put(any, forward);
  server.Delete(any, forward);
}

bool serve(PriceBookStore& store, const std::string& host, int port) {
  httplib::Server server;
  Service service(store);
  service.mount(server);
  std::cerr << "hbq listening on " << host << ":" << port << "\n";
  return server.listen(host, port);
}

}  // namespace hbq
