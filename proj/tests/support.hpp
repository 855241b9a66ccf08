#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "hbq/building.hpp"
#include "hbq/cases.hpp"
#include "hbq/estimator.hpp"

namespace hbq {

inline void PrintTo(Money m, std::ostream* os) { *os << m.to_string() << " GHS"; }
inline void PrintTo(Ratio r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(Quantity q, std::ostream* os) { *os << q.to_string(); }

}  // namespace hbq

namespace hbq::test {

inline std::filesystem::path source_dir() { return HBQ_SOURCE_DIR; }

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline FeatureSelection pick(FeatureKind kind) {
  FeatureSelection f;
  f.kind = kind;
  return f;
}

inline BuildingSpec house(double area, int storeys, int bedrooms, int bathrooms) {
  BuildingSpec s;
  s.total_area_m2 = area;
  s.storeys = storeys;
  s.bedrooms = bedrooms;
  s.bathrooms = bathrooms;
  return s;
}

/// Spec of a published case (A, B or C) exactly as the fixture runs it.
inline const BuildingSpec& case_spec(const char* id) { return find_case(id).spec; }

inline Estimate case_estimate(const char* id, const PriceBook& book) {
  const CaseFixture& f = find_case(id);
  return estimate(f.spec, nullptr, book, f.options);
}

/// Seeded generator for property tests. Every draw is reproducible from the
/// seed printed by the failing assertion.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Area in whole square decimetres so decimal text round-trips exactly.
  double area() { return integer(3000, 60000) / 100.0; }

  BuildingSpec spec() {
    BuildingSpec s;
    s.total_area_m2 = area();
    s.storeys = integer(1, 3);
    s.bedrooms = integer(1, 6);
    s.bathrooms = integer(1, 5);
    s.finish = static_cast<Grade>(integer(0, 2));
    s.style = static_cast<Style>(integer(0, 11));
    s.region = static_cast<Region>(integer(0, 15));
    if (coin()) s.features.push_back(pick(FeatureKind::septic));
    if (coin()) s.features.push_back(pick(FeatureKind::hvac));
    if (coin()) s.features.push_back(pick(FeatureKind::tiles));
    if (coin()) s.features.push_back(pick(FeatureKind::paint));
    if (coin()) s.features.push_back(pick(FeatureKind::kitchen));
    if (coin()) s.features.push_back(pick(FeatureKind::solar));
    if (coin()) {
      FeatureSelection wall = pick(FeatureKind::compound_wall);
      wall.perimeter_m = integer(20, 200);
      wall.height_class = static_cast<WallHeightClass>(integer(0, 2));
      s.features.push_back(wall);
    }
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

inline constexpr int kPropertyRuns = 200;

}  // namespace hbq::test
