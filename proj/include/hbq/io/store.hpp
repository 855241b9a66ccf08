#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hbq/pricebook.hpp"

namespace hbq {

inline constexpr const char* kPricebookEnvVar = "HBQ_PRICEBOOK";

/// Path named by HBQ_PRICEBOOK, if set and non-empty.
std::optional<std::filesystem::path> pricebook_path_from_env();

/// Current UTC time, "YYYY-MM-DDTHH:MM:SSZ".
std::string now_iso8601();

/// Versioned price-book snapshots. Readers get shared immutable snapshots;
/// writers are serialized and each write appends one version. When backed by
/// a file, every write replaces the file atomically before it is published.
class PriceBookStore {
 public:
  using Snapshot = std::shared_ptr<const PriceBook>;

  explicit PriceBookStore(PriceBook initial,
                          std::optional<std::filesystem::path> backing = std::nullopt);

  /// Loads `path`, or seeds it with the default book when it does not exist.
  static std::unique_ptr<PriceBookStore> open(const std::filesystem::path& path);

  Snapshot snapshot() const;
  /// nullptr for versions never published by this store.
  Snapshot at_version(std::uint64_t version) const;
  std::vector<std::uint64_t> versions() const;

  /// All overrides land in one new version. With `base_version`, throws
  /// version_conflict unless it is still the current version.
  Snapshot apply_overrides(const std::map<Material, Money>& prices, std::string timestamp,
                           std::optional<std::uint64_t> base_version = std::nullopt);

  /// Publishes `book` as the next version (its own version number is ignored).
  Snapshot replace(PriceBook book);

  const std::optional<std::filesystem::path>& backing_path() const { return path_; }

 private:
  Snapshot publish(PriceBook next);

  mutable std::mutex mu_;
  std::vector<Snapshot> history_;
  std::optional<std::filesystem::path> path_;
};

}  // namespace hbq
