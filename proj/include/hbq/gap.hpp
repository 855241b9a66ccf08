#pragma once

#include <string>
#include <vector>

#include "hbq/estimator.hpp"

namespace hbq {

struct OmittedLine {
  std::string item;
  std::string description;
  Category category = Category::shell;
  Money cost;
};

/// Estimate against the informal flat-rate band for the same floor area.
struct GapReport {
  double area_m2 = 0.0;
  Money estimate_total;
  Money rate_per_m2;
  InformalBand band;  // per m2
  Money informal_low;
  Money informal_high;
  double gap_vs_low = 0.0;  // fraction, full precision
  double gap_vs_high = 0.0;
  std::vector<OmittedLine> omitted_lines;  // descending cost
  Money omitted_total;

  /// Whole percentage points, half away from zero.
  int gap_vs_low_pct() const;
  int gap_vs_high_pct() const;
};

/// Throws invalid_band unless 0 < low <= high.
GapReport gap(const Estimate& estimate, const InformalBand& band);

/// Lines flagged as omitted from informal quotes, most expensive first
/// (ties by item id).
std::vector<OmittedLine> omission_attribution(const Estimate& estimate);

}  // namespace hbq
