#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hbq/estimator.hpp"
#include "hbq/gap.hpp"

namespace hbq {

enum class ToleranceKind {
  exact,        // |computed - expected| <= 1e-9
  absolute,     // |computed - expected| <= amount
  relative,     // |computed - expected| <= amount * |expected|
  band,         // lo <= computed <= hi
  report_only,  // printed, never fails (documented deviation)
};

struct Tolerance {
  ToleranceKind kind = ToleranceKind::exact;
  double amount = 0.0;
  double lo = 0.0;
  double hi = 0.0;

  static Tolerance exact() { return {}; }
  static Tolerance absolute(double a) { return {ToleranceKind::absolute, a}; }
  static Tolerance relative(double r) { return {ToleranceKind::relative, r}; }
  static Tolerance within(double lo, double hi) { return {ToleranceKind::band, 0.0, lo, hi}; }
  static Tolerance report() { return {ToleranceKind::report_only}; }

  bool accepts(double expected, double computed) const;
  std::string describe() const;
};

/// One published figure. Keys address the estimate:
///   qty.<item>, cost.<item>, cement_total, variable_subtotal, contingency,
///   contingency_residual (contingency - 15% of subtotal, GHS), fixed_fees,
///   total, rate_per_m2, gap_low_pct, gap_high_pct, omitted_total.
/// A leading "extras." evaluates the key on the with-extras variant.
struct ExpectedValue {
  std::string key;
  double expected = 0.0;
  Tolerance tolerance;
  std::string note;
};

struct CaseFixture {
  std::string id;
  std::string title;
  BuildingSpec spec;
  EstimateOptions options;
  /// Optional extras added (after contingency) for the extras.* keys.
  std::vector<FeatureSelection> extras;
  std::vector<ExpectedValue> expected;
};

const std::vector<CaseFixture>& case_fixtures();

/// Throws unknown_case.
const CaseFixture& find_case(std::string_view id);

/// Estimate of the fixture's extras variant (spec + extras, extras after contingency).
BuildingSpec with_extras(const CaseFixture& fixture);

double observe(const Estimate& estimate, const GapReport& gap, std::string_view key);

struct CheckResult {
  ExpectedValue expected;
  double computed = 0.0;
  bool pass = true;
};

struct CaseRun {
  const CaseFixture* fixture = nullptr;
  Estimate estimate;
  GapReport gap;
  std::vector<CheckResult> checks;

  bool passed() const;
};

CaseRun run_case(const CaseFixture& fixture, const PriceBook& book);

}  // namespace hbq
