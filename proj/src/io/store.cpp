#include "hbq/io/store.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>

#include "hbq/io/pricebook_doc.hpp"

namespace hbq {

std::optional<std::filesystem::path> pricebook_path_from_env() {
  const char* value = std::getenv(kPricebookEnvVar);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::filesystem::path(value);
}

std::string now_iso8601() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

PriceBookStore::PriceBookStore(PriceBook initial, std::optional<std::filesystem::path> backing)
    : path_(std::move(backing)) {
  initial.validate();
  history_.push_back(std::make_shared<const PriceBook>(std::move(initial)));
}

std::unique_ptr<PriceBookStore> PriceBookStore::open(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    PriceBook book = default_pricebook();
    save_pricebook_file(book, path);
    return std::make_unique<PriceBookStore>(std::move(book), path);
  }
  return std::make_unique<PriceBookStore>(load_pricebook_file(path), path);
}

PriceBookStore::Snapshot PriceBookStore::snapshot() const {
  std::lock_guard lock(mu_);
  return history_.back();
}

PriceBookStore::Snapshot PriceBookStore::at_version(std::uint64_t version) const {
  std::lock_guard lock(mu_);
  for (const auto& s : history_) {
    if (s->version == version) return s;
  }
  return nullptr;
}

std::vector<std::uint64_t> PriceBookStore::versions() const {
  std::lock_guard lock(mu_);
  std::vector<std::uint64_t> out;
  for (const auto& s : history_) out.push_back(s->version);
  return out;
}

PriceBookStore::Snapshot PriceBookStore::publish(PriceBook next) {
  next.validate();
  if (path_) save_pricebook_file(next, *path_);
  history_.push_back(std::make_shared<const PriceBook>(std::move(next)));
  return history_.back();
}

PriceBookStore::Snapshot PriceBookStore::apply_overrides(const std::map<Material, Money>& prices,
                                                         std::string timestamp,
                                                         std::optional<std::uint64_t> base_version) {
  std::lock_guard lock(mu_);
  const PriceBook& current = *history_.back();
  if (base_version && *base_version != current.version) {
    throw Error(ErrorCode::version_conflict,
                "base version " + std::to_string(*base_version) + " is stale; current is " +
                    std::to_string(current.version) + ", re-read and retry",
                "base_version");
  }
  PriceBook next = current;
  for (const auto& [material, price] : prices) {
    next = apply_override(next, material, price, timestamp);
  }
  next.version = current.version + 1;
  next.timestamp = std::move(timestamp);
  return publish(std::move(next));
}

PriceBookStore::Snapshot PriceBookStore::replace(PriceBook book) {
  std::lock_guard lock(mu_);
  book.version = history_.back()->version + 1;
  return publish(std::move(book));
}

}  // namespace hbq
