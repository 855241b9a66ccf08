#include "hbq/services.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace hbq {

PlumbingQuantities plumbing(const BuildingSpec& spec) {
  const int b = spec.bathrooms;
  PlumbingQuantities q;
  q.bathrooms = b;
  q.storeys = spec.storeys;
  q.pvc_half_m = 25.0 * b + 20.0;
  q.pvc_threequarter_m = 15.0 * b + 10.0;
  q.pvc_4in_m = 8.0 * b + 15.0;
  q.wc = b;
  q.basins = b + 1;
  q.showers = b;
  q.fitting_sets = 6 * b + 8;
  q.tanks = spec.storeys > 1 ? 2 : 1;
  q.storey_cost_factor = Ratio::from_micro(Ratio::kScale + (spec.storeys - 1) * 250'000);
  return q;
}

Money plumbing_cost(const PlumbingQuantities& q, const PriceBook& book) {
  const auto& anchors = book.services.plumbing;
  if (anchors.empty()) {
    throw Error(ErrorCode::missing_calibration, "no plumbing anchors", "services.plumbing");
  }
  Money base;
  if (auto it = anchors.find(q.bathrooms); it != anchors.end()) {
    base = it->second;
  } else if (q.bathrooms > anchors.rbegin()->first) {
    base = anchors.rbegin()->second +
           book.services.plumbing_extra_bath * (q.bathrooms - anchors.rbegin()->first);
  } else if (q.bathrooms < anchors.begin()->first) {
    base = anchors.begin()->second;
  } else {
    auto hi = anchors.upper_bound(q.bathrooms);
    auto lo = std::prev(hi);
    base = lo->second + scale(hi->second - lo->second, q.bathrooms - lo->first,
                              hi->first - lo->first);
  }
  return (base * q.storey_cost_factor).rounded_to_ghs();
}

ElectricalQuantities electrical(const BuildingSpec& spec) {
  ElectricalQuantities q;
  q.storeys = spec.storeys;
  q.room_count = (spec.bedrooms + 2) * spec.storeys;
  const int rooms = q.room_count;
  q.cable_2_5_m = 35.0 * rooms;
  q.cable_4_m = 25.0 * rooms;
  q.cable_6_m = 15.0 * rooms;
  q.switches = 2 * rooms;
  q.sockets = 3 * rooms + spec.bathrooms;
  q.light_fittings = ceil_count(1.5 * rooms);
  q.mcbs = ceil_count(rooms * 0.5 + 4.0);
  q.distribution_boards = spec.storeys;
  return q;
}

Money electrical_cost(const ElectricalQuantities& q, const PriceBook& book) {
  const auto& all = book.services.electrical;
  if (all.empty()) {
    throw Error(ErrorCode::missing_calibration, "no electrical anchors", "services.electrical");
  }
  // Anchor set with the nearest storey count, ties to the higher count.
  int storeys = all.front().storeys;
  for (const auto& a : all) {
    const int d_best = std::abs(storeys - q.storeys);
    const int d = std::abs(a.storeys - q.storeys);
    if (d < d_best || (d == d_best && a.storeys > storeys)) storeys = a.storeys;
  }
  std::vector<ElectricalAnchor> set;
  for (const auto& a : all) {
    if (a.storeys == storeys) set.push_back(a);
  }
  std::sort(set.begin(), set.end(),
            [](const ElectricalAnchor& x, const ElectricalAnchor& y) { return x.rooms < y.rooms; });

  const int rooms = q.room_count;
  auto scaled = [&](const ElectricalAnchor& a) {
    return scale(a.cost, rooms, a.rooms).rounded_to_ghs();
  };
  if (storeys != q.storeys) {
    const auto nearest = std::min_element(set.begin(), set.end(), [&](const auto& x, const auto& y) {
      return std::abs(x.rooms - rooms) < std::abs(y.rooms - rooms);
    });
    return scaled(*nearest);
  }
  if (rooms <= set.front().rooms) return rooms == set.front().rooms ? set.front().cost : scaled(set.front());
  if (rooms >= set.back().rooms) return rooms == set.back().rooms ? set.back().cost : scaled(set.back());
  for (std::size_t i = 1; i < set.size(); ++i) {
    if (rooms <= set[i].rooms) {
      const auto& lo = set[i - 1];
      const auto& hi = set[i];
      return (lo.cost + scale(hi.cost - lo.cost, rooms - lo.rooms, hi.rooms - lo.rooms))
          .rounded_to_ghs();
    }
  }
  return set.back().cost;
}

}  // namespace hbq
