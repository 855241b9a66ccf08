#pragma once

#include <map>
#include <string>

#include "hbq/io/store.hpp"

namespace httplib {
class Server;
}

namespace hbq {

struct ApiResponse {
  int status = 200;
  std::string body;  // JSON
  std::map<std::string, std::string> headers;
};

/// HTTP API over a price-book store. `handle` is transport-free so the routes
/// can be exercised without sockets; `mount` wires them into cpp-httplib.
///
///   POST /v1/estimate              EstimateRequest -> Estimate
///   POST /v1/gap                   Estimate | EstimateRequest [+ band] -> GapReport
///   GET  /v1/pricebook[?version=N] current (or historical) snapshot
///   PUT  /v1/pricebook/overrides   {base_version?, timestamp?, overrides} -> new snapshot
///   GET  /v1/regions, /v1/regions/{id}
///   GET  /v1/cases, /v1/cases/{id}[?run=1]
///
/// Every response carries X-Engine-Version and X-Pricebook-Version.
class Service {
 public:
  explicit Service(PriceBookStore& store) : store_(store) {}

  ApiResponse handle(const std::string& method, const std::string& path,
                     const std::string& body,
                     const std::map<std::string, std::string>& query = {}) const;

  void mount(httplib::Server& server) const;

 private:
  PriceBookStore& store_;
};

/// Blocks until the server stops. Returns false when the port cannot be bound.
bool serve(PriceBookStore& store, const std::string& host, int port);

}  // namespace hbq
