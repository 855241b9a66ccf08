#include <gtest/gtest.h>

#include "hbq/estimator.hpp"
#include "support.hpp"

using namespace hbq;
using hbq::test::case_estimate;

namespace {

struct CaseTotals {
  const char* id;
  std::int64_t shell;
  std::int64_t subtotal;
  std::int64_t contingency;
  std::int64_t fees;
  std::int64_t total;
  std::int64_t rate;
  std::int64_t labour;
};

void PrintTo(const CaseTotals& c, std::ostream* os) { *os << "case " << c.id; }

// Independent recomputation from the documented formulas and the shipped
// Greater Accra book, no cutting wastage.
constexpr CaseTotals kCases[] = {
    {"A", 234463, 420689, 63103, 12500, 496292, 6617, 67500},
    {"B", 360105, 637624, 95644, 12500, 745768, 6215, 108000},
    {"C", 540021, 1010289, 151543, 14700, 1176532, 5883, 207000},
};

}  // namespace

class CaseTotalsTest : public ::testing::TestWithParam<CaseTotals> {};

TEST_P(CaseTotalsTest, MatchesOracle) {
  const CaseTotals& c = GetParam();
  const Estimate e = case_estimate(c.id, default_pricebook());
  const auto cats = categorize(e.lines);
  EXPECT_EQ(cats.at(Category::shell).whole_ghs(), c.shell);
  EXPECT_EQ(e.variable_subtotal.whole_ghs(), c.subtotal);
  EXPECT_EQ(e.contingency.whole_ghs(), c.contingency);
  EXPECT_EQ(e.fixed_fees.whole_ghs(), c.fees);
  EXPECT_EQ(e.total.whole_ghs(), c.total);
  EXPECT_EQ(e.rate_per_m2.whole_ghs(), c.rate);
  EXPECT_EQ(e.cost_of("labour").whole_ghs(), c.labour);
  EXPECT_EQ(e.after_contingency.pesewas(), 0);
}

INSTANTIATE_TEST_SUITE_P(Cases, CaseTotalsTest, ::testing::ValuesIn(kCases),
                         [](const auto& info) { return std::string(info.param.id); });

TEST(Estimator, LinesAreWholeCedis) {
  for (const char* id : {"A", "B", "C"}) {
    for (const auto& l : case_estimate(id, default_pricebook()).lines) {
      EXPECT_EQ(l.cost.pesewas() % 100, 0) << id << " " << l.item;
    }
  }
}

TEST(Estimator, CaseALineCosts) {
  const Estimate e = case_estimate("A", default_pricebook());
  EXPECT_EQ(e.cost_of("blocks").whole_ghs(), 13837);
  EXPECT_EQ(e.cost_of("cement_foundation").whole_ghs(), 30300);
  EXPECT_EQ(e.cost_of("sand").whole_ghs(), 24300);
  EXPECT_EQ(e.cost_of("stone").whole_ghs(), 4941);
  EXPECT_EQ(e.cost_of("rebar_y12").whole_ghs(), 48600);
  EXPECT_EQ(e.cost_of("rebar_y16").whole_ghs(), 29400);
  EXPECT_EQ(e.cost_of("rebar_y20").whole_ghs(), 0);
  EXPECT_EQ(e.find("rebar_y20"), nullptr);
  EXPECT_EQ(e.cost_of("septic").whole_ghs(), 22000);
  EXPECT_EQ(e.cost_of("hvac").whole_ghs(), 14760);
  EXPECT_EQ(e.cost_of("tiles").whole_ghs(), 3713);
  EXPECT_EQ(e.cost_of("paint").whole_ghs(), 8853);
  EXPECT_EQ(e.cost_of("doors_windows").whole_ghs(), 18500);
  EXPECT_EQ(e.mode(), WallSource::formula);
}

TEST(Estimator, MultiStoreyFeesAndStaircase) {
  const Estimate c = case_estimate("C", default_pricebook());
  EXPECT_EQ(c.cost_of("design_fee").whole_ghs(), 6500);
  EXPECT_EQ(c.cost_of("permit_fee").whole_ghs(), 4200);
  EXPECT_EQ(c.cost_of("utility_connections").whole_ghs(), 4000);
  EXPECT_EQ(c.cost_of("staircase").whole_ghs(), 8000);
  EXPECT_EQ(c.cost_of("rebar_y20").whole_ghs(), 14500);
}

TEST(Estimator, ContingencyIsFifteenPercentOfSubtotal) {
  hbq::test::Gen gen(5);
  const PriceBook book = default_pricebook();
  for (int i = 0; i < hbq::test::kPropertyRuns; ++i) {
    const BuildingSpec s = gen.spec();
    const Estimate e = estimate(s, nullptr, book);
    const Money expect = scale(e.variable_subtotal, kContingencyPercent, 100).rounded_to_ghs();
    EXPECT_EQ(e.contingency, expect) << "run " << i;
    EXPECT_EQ(e.total, e.variable_subtotal + e.contingency + e.fixed_fees + e.after_contingency);
    Money sum;
    for (const auto& l : e.lines) {
      if (l.category != Category::fees && !l.after_contingency) sum += l.cost;
    }
    EXPECT_EQ(sum, e.variable_subtotal);
  }
}

TEST(Estimator, OverrideChangesOneLine) {
  const PriceBook base = default_pricebook();
  const PriceBook book = apply_override(base, Material::rebar_y12, Money::ghs(55), "2026-03-01T00:00:00Z");
  const Estimate before = case_estimate("A", base);
  const Estimate after = case_estimate("A", book);
  EXPECT_EQ(after.cost_of("rebar_y12").whole_ghs(), 49500);
  EXPECT_EQ(after.variable_subtotal - before.variable_subtotal, Money::ghs(900));
  EXPECT_EQ(after.pricebook_version, before.pricebook_version + 1);
  for (const auto& l : after.lines) {
    if (l.item == "rebar_y12") continue;
    EXPECT_EQ(l.cost, before.cost_of(l.item)) << l.item;
  }
}

TEST(Estimator, RepriceKeepsQuantities) {
  const Estimate a = case_estimate("A", default_pricebook());
  const PriceBook book =
      apply_override(default_pricebook(), Material::rebar_y16, Money::ghs(100), "2026-03-02T00:00:00Z");
  const Estimate r = reprice(a, book);
  EXPECT_EQ(r.cost_of("rebar_y16").whole_ghs(), 30000);
  ASSERT_EQ(r.lines.size(), a.lines.size());
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    EXPECT_EQ(r.lines[i].quantity, a.lines[i].quantity) << a.lines[i].item;
  }
  const Estimate fresh = estimate(a.takeoff.spec, nullptr, book, a.takeoff.options);
  EXPECT_EQ(r.lines, fresh.lines);
  EXPECT_EQ(r.total, fresh.total);
}

TEST(Estimator, CategorizeZeroFills) {
  const auto cats = categorize({});
  EXPECT_EQ(cats.size(), 8u);
  for (const auto& [c, m] : cats) EXPECT_EQ(m.pesewas(), 0) << name(c);
  const Estimate a = case_estimate("A", default_pricebook());
  Money sum;
  for (const auto& [c, m] : categorize(a.lines)) sum += m;
  EXPECT_EQ(sum, a.variable_subtotal + a.fixed_fees);
}

TEST(Estimator, Deterministic) {
  const PriceBook book = default_pricebook();
  hbq::test::Gen gen(17);
  for (int i = 0; i < 50; ++i) {
    const BuildingSpec s = gen.spec();
    const Estimate x = estimate(s, nullptr, book);
    const Estimate y = estimate(s, nullptr, book);
    EXPECT_EQ(x.lines, y.lines);
    EXPECT_EQ(x.total, y.total);
  }
}

TEST(Estimator, CaseCExtrasOutsideContingency) {
  const CaseFixture& f = find_case("C");
  EstimateOptions opt = f.options;
  opt.placement = ContingencyPlacement::extras_outside;
  const Estimate e = estimate(with_extras(f), nullptr, default_pricebook(), opt);
  EXPECT_EQ(e.after_contingency.whole_ghs(), 105000);
  EXPECT_EQ(e.variable_subtotal.whole_ghs(), 1010289);
  EXPECT_EQ(e.contingency.whole_ghs(), 151543);
  EXPECT_EQ(e.total.whole_ghs(), 1281532);
  EXPECT_EQ(e.rate_per_m2.whole_ghs(), 6408);
  EXPECT_TRUE(e.find("kitchen")->after_contingency);

  // all_inside puts the same extras under contingency
  const Estimate inside = estimate(with_extras(f), nullptr, default_pricebook(), f.options);
  EXPECT_EQ(inside.after_contingency.pesewas(), 0);
  EXPECT_EQ(inside.variable_subtotal.whole_ghs(), 1010289 + 105000);
}

TEST(Estimator, CuttingWastageDefault) {
  const CaseFixture& f = find_case("A");
  const Estimate e = estimate(f.spec, nullptr, default_pricebook());
  EXPECT_EQ(e.find("blocks")->quantity, Quantity::count(1689));
  EXPECT_EQ(e.total.whole_ghs(), 497200);
}

TEST(Estimator, UnpriceableMaterialFails) {
  PriceBook book = default_pricebook();
  book.defaults.erase(Material::cement_bag_50kg);
  try {
    case_estimate("A", book);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unresolvable_material);
  }
}
