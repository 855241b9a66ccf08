#include "hbq/gap.hpp"

#include <algorithm>
#include <cmath>

namespace hbq {

int GapReport::gap_vs_low_pct() const { return static_cast<int>(std::lround(gap_vs_low * 100.0)); }

int GapReport::gap_vs_high_pct() const {
  return static_cast<int>(std::lround(gap_vs_high * 100.0));
}

std::vector<OmittedLine> omission_attribution(const Estimate& estimate) {
  std::vector<OmittedLine> out;
  for (const auto& line : estimate.lines) {
    if (line.omitted_in_informal) {
      out.push_back({line.item, line.description, line.category, line.cost});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const OmittedLine& a, const OmittedLine& b) {
    if (a.cost != b.cost) return a.cost > b.cost;
    return a.item < b.item;
  });
  return out;
}

GapReport gap(const Estimate& estimate, const InformalBand& band) {
  if (band.low.pesewas() <= 0 || band.high.pesewas() <= 0 || band.low > band.high) {
    throw Error(ErrorCode::invalid_band,
                "band must satisfy 0 < low <= high, got " + band.low.to_string() + ".." +
                    band.high.to_string());
  }
  GapReport r;
  r.area_m2 = estimate.takeoff.spec.total_area_m2;
  r.estimate_total = estimate.total;
  r.rate_per_m2 = estimate.rate_per_m2;
  r.band = band;
  const Quantity area = Quantity::of(r.area_m2);
  r.informal_low = extend(area, band.low);
  r.informal_high = extend(area, band.high);
  const auto total = static_cast<double>(estimate.total.pesewas());
  r.gap_vs_low = (total - static_cast<double>(r.informal_low.pesewas())) /
                 static_cast<double>(r.informal_low.pesewas());
  r.gap_vs_high = (total - static_cast<double>(r.informal_high.pesewas())) /
                  static_cast<double>(r.informal_high.pesewas());
  r.omitted_lines = omission_attribution(estimate);
  for (const auto& o : r.omitted_lines) r.omitted_total += o.cost;
  return r;
}

}  // namespace hbq
