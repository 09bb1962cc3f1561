// Copyright 2026 The fairmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fairmine/patternshield.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace fairmine {
namespace {

using testing::brute_channel;
using testing::brute_disc;
using testing::make_config;
using testing::random_table;

Schema credit_schema() {
  return Schema({{"Sex", {"female", "male"}, AttributeKind::kQuasiIdentifier, true},
                 {"Job", {"vet", "other"}, AttributeKind::kQuasiIdentifier, false},
                 {"Salary", {"sal", "low"}, AttributeKind::kQuasiIdentifier, false},
                 {"History", {"paid-delay", "ok"}, AttributeKind::kQuasiIdentifier, false},
                 {"Credit", {"No", "Yes"}, AttributeKind::kClass, false}});
}

class VetPatterns : public ::testing::Test {
 protected:
  VetPatterns() : s_(credit_schema()), ps_(s_, 1) {}

  Itemset p(std::vector<std::string> labels) const { return parse_itemset(s_, labels); }
  void set(std::vector<std::string> labels, std::size_t n) { ps_.set(p(labels), n); }

  ResolvedConfig config(Measure f, double alpha, std::size_t k = 1, bool grounded = false) const {
    ProtectionConfig c = make_config("Credit", "No", f, alpha, {{"Sex=female"}});
    c.k = k;
    if (grounded) c.legally_grounded_itemsets = {{"History=paid-delay"}};
    return resolve_config(c, s_, 1000);
  }

  PatternAudit audit_of(const PatternSet& ps, const ResolvedConfig& rc,
                        std::vector<std::string> labels) const {
    const Itemset target = p(labels);
    for (const PatternAudit& a : audit_pd_patterns(ps, rc)) {
      if (a.pattern == target) return a;
    }
    ADD_FAILURE() << "no audit for " << itemset_text(s_, target);
    return {};
  }

  Schema s_;
  PatternSet ps_;
};

TEST_F(VetPatterns, SalaryChannelBetweenTwoAnonymousPatterns) {
  set({"Job=vet", "Credit=Yes"}, 41);
  set({"Job=vet", "Salary=sal", "Credit=Yes"}, 40);
  EXPECT_EQ(channel_support(ps_, p({"Job=vet", "Credit=Yes"}),
                            p({"Job=vet", "Salary=sal", "Credit=Yes"})),
            1);
  const auto channels = find_channels(ps_, 8);
  ASSERT_EQ(channels.size(), 1u);
  EXPECT_EQ(channels[0].i, p({"Job=vet", "Credit=Yes"}));
  EXPECT_EQ(channels[0].j, p({"Job=vet", "Salary=sal", "Credit=Yes"}));
  EXPECT_EQ(channels[0].support, 1);

  std::vector<InferenceChannel> blocked;
  const PatternSet out = privacy_additive_sanitize(ps_, 8, &blocked);
  EXPECT_EQ(blocked.size(), 1u);
  EXPECT_EQ(out.support(p({"Job=vet", "Credit=Yes"})), 49u);
  EXPECT_EQ(out.support(p({"Job=vet", "Salary=sal", "Credit=Yes"})), 40u);
  EXPECT_TRUE(find_channels(out, 8).empty());
}

TEST_F(VetPatterns, PrivacySanitizationCanLowerDiscrimination) {
  set({"Sex=female", "Job=vet"}, 45);
  set({"Sex=female", "Job=vet", "Salary=sal"}, 42);
  set({"Sex=female", "Job=vet", "Credit=No"}, 32);
  set({"Sex=male", "Job=vet", "Credit=No"}, 16);
  set({"Sex=male", "Job=vet"}, 58);
  set({"Job=vet"}, 103);
  set({"Job=vet", "Credit=No"}, 48);
  const ResolvedConfig rc = config(Measure::kSlift, 1.25, 8);
  const auto before = audit_of(ps_, rc, {"Sex=female", "Job=vet", "Credit=No"});
  EXPECT_NEAR(before.value.value, (32.0 / 45) / (16.0 / 58), 1e-12);
  EXPECT_NEAR(before.value.value, 2.58, 0.005);

  const auto channels = find_channels(ps_, 8);
  ASSERT_EQ(channels.size(), 1u);
  EXPECT_EQ(channels[0].support, 3);

  const PatternSet out = privacy_additive_sanitize(ps_, 8);
  EXPECT_EQ(out.support(p({"Sex=female", "Job=vet"})), 53u);
  EXPECT_EQ(out.support(p({"Sex=male", "Job=vet"})), 58u);
  const auto after = audit_of(out, rc, {"Sex=female", "Job=vet", "Credit=No"});
  EXPECT_NEAR(after.value.value, (32.0 / 53) / (16.0 / 58), 1e-12);
  EXPECT_NEAR(after.value.value, 2.19, 0.005);
}

TEST_F(VetPatterns, PrivacySanitizationCanRaiseDiscrimination) {
  set({"Sex=male", "Job=vet"}, 58);
  set({"Sex=male", "Job=vet", "Salary=sal"}, 56);
  set({"Sex=female", "Job=vet", "Credit=No"}, 23);
  set({"Sex=male", "Job=vet", "Credit=No"}, 26);
  set({"Sex=female", "Job=vet"}, 45);
  set({"Job=vet"}, 103);
  set({"Job=vet", "Credit=No"}, 49);
  const ResolvedConfig rc = config(Measure::kSlift, 1.25, 8);
  const auto before = audit_of(ps_, rc, {"Sex=female", "Job=vet", "Credit=No"});
  EXPECT_NEAR(before.value.value, (23.0 / 45) / (26.0 / 58), 1e-12);
  EXPECT_FALSE(before.discriminatory);

  const PatternSet anon = privacy_additive_sanitize(ps_, 8);
  EXPECT_EQ(anon.support(p({"Sex=male", "Job=vet"})), 66u);
  const auto after = audit_of(anon, rc, {"Sex=female", "Job=vet", "Credit=No"});
  EXPECT_NEAR(after.value.value, (23.0 / 45) / (26.0 / 66), 1e-12);
  EXPECT_TRUE(after.discriminatory);

  SanitizeReport report;
  const PatternSet both = protect_patterns(ps_, 8, rc, PatternMode::kBoth, &report);
  EXPECT_TRUE(find_channels(both, 8).empty());
  EXPECT_TRUE(detect_disc_patterns(both, rc).empty());
  EXPECT_TRUE(report.unresolved.empty());
  EXPECT_FALSE(report.deltas.empty());
}

TEST_F(VetPatterns, SliftDeltaForVeterinarianWomen) {
  set({"Sex=female", "Job=vet"}, 34);
  set({"Sex=female", "Job=vet", "Credit=No"}, 20);
  set({"Job=vet"}, 81);
  set({"Job=vet", "Credit=No"}, 39);
  const ResolvedConfig rc = config(Measure::kSlift, 1.25);
  const auto d = delta_for(p({"Sex=female", "Job=vet", "Credit=No"}), ps_, rc);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->delta, 6u);
  EXPECT_EQ(d->target, p({"Sex=female", "Job=vet"}));
  EXPECT_NEAR(d->after, (20.0 / 40) / (19.0 / 47), 1e-12);
  EXPECT_LT(d->after, 1.25);

  PatternSet out = ps_;
  apply_delta(out, d->target, d->delta);
  EXPECT_EQ(out.support(p({"Sex=female", "Job=vet"})), 40u);
  EXPECT_EQ(out.support(p({"Job=vet"})), 87u);
  EXPECT_EQ(out.support(p({"Job=vet", "Credit=No"})), 39u);
  EXPECT_TRUE(detect_disc_patterns(out, rc).empty());
}

TEST_F(VetPatterns, ExplainabilityLostWhenContextSupportGrows) {
  set({"Sex=female", "Job=vet"}, 34);
  set({"Job=vet", "History=paid-delay", "Salary=sal"}, 59);
  set({"Sex=female", "Job=vet", "Credit=No"}, 20);
  set({"Job=vet", "History=paid-delay", "Credit=No"}, 37);
  set({"Job=vet", "History=paid-delay"}, 64);
  set({"Sex=female", "Job=vet", "History=paid-delay"}, 31);
  set({"Job=vet"}, 81);
  set({"Job=vet", "Credit=No"}, 39);
  const ResolvedConfig rc = config(Measure::kSlift, 1.25, 8, true);
  const auto a = audit_of(ps_, rc, {"Sex=female", "Job=vet", "Credit=No"});
  ASSERT_TRUE(a.discriminatory);
  EXPECT_TRUE(is_d_explainable(a, ps_, rc));
  EXPECT_TRUE(detect_unexplainable(ps_, rc).empty());

  // Blocking the history/salary channel adds k to p_ns and its subsets.
  const auto channels = find_channels(ps_, 8);
  bool history_channel = false;
  for (const auto& c : channels) {
    history_channel |= c.i == p({"Job=vet", "History=paid-delay"}) &&
                       c.j == p({"Job=vet", "History=paid-delay", "Salary=sal"}) && c.support == 5;
  }
  EXPECT_TRUE(history_channel);
  PatternSet anon = ps_;
  apply_delta(anon, p({"Job=vet", "History=paid-delay"}), 8);
  EXPECT_EQ(anon.support(p({"Job=vet", "History=paid-delay"})), 72u);
  const auto after = audit_of(anon, rc, {"Sex=female", "Job=vet", "Credit=No"});
  EXPECT_FALSE(is_d_explainable(after, anon, rc));
}

TEST_F(VetPatterns, ExplainabilityGainedWhenGroupSupportGrows) {
  set({"Sex=female", "Job=vet"}, 30);
  set({"Sex=female", "Job=vet", "Salary=sal"}, 29);
  set({"Sex=female", "Job=vet", "Credit=No"}, 29);
  set({"Job=vet", "History=paid-delay", "Credit=No"}, 23);
  set({"Job=vet", "History=paid-delay"}, 27);
  set({"Sex=female", "Job=vet", "History=paid-delay"}, 30);
  set({"Job=vet"}, 60);
  set({"Job=vet", "Credit=No"}, 40);
  const ResolvedConfig rc = config(Measure::kSlift, 1.25, 2, true);
  const auto a = audit_of(ps_, rc, {"Sex=female", "Job=vet", "Credit=No"});
  ASSERT_TRUE(a.discriminatory);
  EXPECT_FALSE(is_d_explainable(a, ps_, rc));

  const PatternSet anon = privacy_additive_sanitize(ps_, 2);
  EXPECT_EQ(anon.support(p({"Sex=female", "Job=vet"})), 32u);
  const auto after = audit_of(anon, rc, {"Sex=female", "Job=vet", "Credit=No"});
  EXPECT_TRUE(after.discriminatory);
  EXPECT_TRUE(is_d_explainable(after, anon, rc));
}

TEST_F(VetPatterns, UnexplainableSanitizationRestoresExplainability) {
  set({"Sex=female", "Job=vet"}, 30);
  set({"Sex=female", "Job=vet", "Credit=No"}, 29);
  set({"Job=vet", "History=paid-delay", "Credit=No"}, 23);
  set({"Job=vet", "History=paid-delay"}, 27);
  set({"Sex=female", "Job=vet", "History=paid-delay"}, 30);
  set({"Job=vet"}, 60);
  set({"Job=vet", "Credit=No"}, 40);
  const ResolvedConfig rc = config(Measure::kSlift, 1.25, 1, true);
  const auto bad = detect_unexplainable(ps_, rc);
  ASSERT_EQ(bad.size(), 1u);
  SanitizeReport report;
  const PatternSet out = unexplainable_sanitize(ps_, bad, rc, &report);
  EXPECT_TRUE(detect_unexplainable(out, rc).empty());
  EXPECT_TRUE(report.unresolved.empty());
}

TEST_F(VetPatterns, EliftDeltaRaisesContextDenialRate) {
  set({"Sex=female", "Job=vet"}, 34);
  set({"Sex=female", "Job=vet", "Credit=No"}, 20);
  set({"Job=vet"}, 81);
  set({"Job=vet", "Credit=No"}, 39);
  const ResolvedConfig rc = config(Measure::kElift, 1.1);
  const auto d = delta_for(p({"Sex=female", "Job=vet", "Credit=No"}), ps_, rc);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->target, p({"Job=vet", "Credit=No"}));
  const double p1 = 20.0 / 34;
  const double rhs = (p1 * 81 - 1.1 * 39) / (1.1 - p1);
  EXPECT_EQ(d->delta, static_cast<std::size_t>(std::floor(rhs)) + 1);
  PatternSet out = ps_;
  apply_delta(out, d->target, d->delta);
  EXPECT_EQ(out.support(p({"Sex=female", "Job=vet"})), 34u);
  EXPECT_TRUE(detect_disc_patterns(out, rc).empty());
}

TEST_F(VetPatterns, CliftComparesAgainstMostFavouredGroup) {
  set({"Sex=female", "Job=vet"}, 34);
  set({"Sex=female", "Job=vet", "Credit=No"}, 20);
  set({"Sex=male", "Job=vet"}, 47);
  set({"Sex=male", "Job=vet", "Credit=No"}, 19);
  set({"Job=vet"}, 81);
  set({"Job=vet", "Credit=No"}, 39);
  const ResolvedConfig rc = config(Measure::kClift, 1.25);
  const auto a = audit_of(ps_, rc, {"Sex=female", "Job=vet", "Credit=No"});
  EXPECT_NEAR(a.value.value, (20.0 / 34) / (19.0 / 47), 1e-12);
  const auto d = delta_for(a.pattern, ps_, rc);
  ASSERT_TRUE(d.has_value());
  const double rhs = 20.0 * 47 / (19.0 * 1.25) - 34;
  EXPECT_EQ(d->delta, static_cast<std::size_t>(std::ceil(rhs)));
}

TEST(SliftDelta, MatchesClosedForm) {
  const Schema s = credit_schema();
  std::mt19937 rng(3);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const ResolvedConfig rc = resolve_config(
      make_config("Credit", "No", Measure::kSlift, 1.3, {{"Sex=female"}}), s, 1000);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n1 = pick(5, 100);
    const std::size_t n2 = pick(5, 100);
    const std::size_t a1 = pick(1, n1);
    const std::size_t a2 = pick(1, n2);
    PatternSet ps(s, 1);
    ps.set(parse_itemset(s, {"Sex=female", "Job=vet"}), n1);
    ps.set(parse_itemset(s, {"Sex=female", "Job=vet", "Credit=No"}), a1);
    ps.set(parse_itemset(s, {"Job=vet"}), n1 + n2);
    ps.set(parse_itemset(s, {"Job=vet", "Credit=No"}), a1 + a2);
    const double rhs = static_cast<double>(a1 * n2) / (a2 * 1.3) - n1;
    const auto d = delta_for(parse_itemset(s, {"Sex=female", "Job=vet", "Credit=No"}), ps, rc);
    const double value = (static_cast<double>(a1) / n1) / (static_cast<double>(a2) / n2);
    if (value < 1.3 - 1e-9) {
      EXPECT_FALSE(d.has_value());
      continue;
    }
    if (std::abs(rhs - std::round(rhs)) < 1e-6) continue;  // boundary ties
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->delta, static_cast<std::size_t>(std::floor(rhs)) + 1);
    EXPECT_LT(d->after, 1.3);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Channels, MatchBruteForceOnRandomTables) {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 200; ++iter) {
    const DecisionTable t = random_table(rng, {4, 14, 2, 3, 3});
    const PatternSet ps = mine_frequent(t, 1);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    std::vector<std::pair<Itemset, Itemset>> expected;
    for (const auto& [j, sj] : ps.entries()) {
      for (const auto& [i, si] : ps.entries()) {
        if (!is_subset(i, j)) continue;
        const std::int64_t c = brute_channel(t, i, j);
        ASSERT_EQ(channel_support(ps, i, j), c);
        if (c > 0 && c < static_cast<std::int64_t>(k)) expected.emplace_back(i, j);
      }
    }
    const auto found = find_channels(ps, k);
    ASSERT_EQ(found.size(), expected.size());
    std::sort(expected.begin(), expected.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return itemset_less(x.first, y.first);
      return itemset_less(x.second, y.second);
    });
    for (std::size_t n = 0; n < found.size(); ++n) {
      EXPECT_EQ(found[n].i, expected[n].first);
      EXPECT_EQ(found[n].j, expected[n].second);
    }
  }
}

TEST(PrivacySanitize, BlocksAllChannelsByMultiplesOfK) {
  std::mt19937 rng(43);
  for (int iter = 0; iter < 200; ++iter) {
    const DecisionTable t = random_table(rng, {4, 20, 2, 4, 3});
    const std::size_t sigma = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const PatternSet ps = mine_frequent(t, sigma);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const PatternSet out = privacy_additive_sanitize(ps, k);
    ASSERT_TRUE(find_channels(out, k).empty());
    ASSERT_EQ(out.size(), ps.size());
    for (const auto& [items, supp] : ps.entries()) {
      const std::size_t now = *out.support(items);
      ASSERT_GE(now, supp);
      EXPECT_EQ((now - supp) % k, 0u);
    }
    EXPECT_EQ(privacy_additive_sanitize(out, k), out);
  }
}

ResolvedConfig random_config(const DecisionTable& t, Measure f, double alpha) {
  ProtectionConfig c = make_config("Y", "n", f, alpha, {{"X0=a"}});
  const auto& x1 = t.schema().attribute(t.schema().attribute_index("X1"));
  c.legally_grounded_itemsets = {{"X1=" + x1.domain.front()}};
  c.d = 0.8;
  return resolve_config(c, t.schema(), t.size());
}

TEST(Detection, MatchesIndependentDetector) {
  std::mt19937 rng(47);
  for (Measure f : {Measure::kSlift, Measure::kElift}) {
    for (int iter = 0; iter < 200; ++iter) {
      const DecisionTable t = random_table(rng, {6, 24, 2, 4, 3});
      const PatternSet ps = mine_frequent(t, 1);
      const ResolvedConfig rc = random_config(t, f, 1.2);
      std::vector<Itemset> got;
      for (const auto& a : detect_disc_patterns(ps, rc)) got.push_back(a.pattern);
      std::sort(got.begin(), got.end(), itemset_less);
      EXPECT_EQ(got, brute_disc(ps, rc)) << measure_name(f);
    }
  }
}

TEST(AntiDiscrimination, SinglePassSufficesForOneProtectedGroup) {
  std::mt19937 rng(53);
  for (Measure f : {Measure::kSlift, Measure::kElift}) {
    std::size_t sanitized = 0;
    for (int iter = 0; iter < 200; ++iter) {
      const DecisionTable t = random_table(rng, {6, 24, 2, 4, 3});
      const PatternSet ps = mine_frequent(t, 1);
      const ResolvedConfig rc = random_config(t, f, 1.2);
      const auto dd = detect_disc_patterns(ps, rc);
      if (dd.empty()) continue;
      SanitizeOptions once;
      once.max_rounds = 1;
      SanitizeReport report;
      const PatternSet out = antidisc_sanitize(ps, dd, rc, &report, once);
      if (!report.unresolved.empty()) continue;  // no finite delta exists
      EXPECT_TRUE(detect_disc_patterns(out, rc).empty()) << measure_name(f);
      EXPECT_EQ(report.new_discrimination, 0u);
      for (const auto& [items, supp] : ps.entries()) EXPECT_GE(*out.support(items), supp);
      ++sanitized;
    }
    EXPECT_GT(sanitized, 20u) << measure_name(f);
  }
}

TEST(AntiDiscrimination, FixpointCleansEveryMeasure) {
  std::mt19937 rng(59);
  for (Measure f : kAllMeasures) {
    const double alpha = is_chance_measure(f) ? 0.8 : is_difference_measure(f) ? 0.1 : 1.2;
    for (int iter = 0; iter < 80; ++iter) {
      const DecisionTable t = random_table(rng, {6, 24, 2, 4, 3});
      const PatternSet ps = mine_frequent(t, 1);
      const ResolvedConfig rc = random_config(t, f, alpha);
      SanitizeReport report;
      const PatternSet out = antidisc_sanitize(ps, detect_disc_patterns(ps, rc), rc, &report);
      std::vector<Itemset> left;
      for (const auto& a : detect_disc_patterns(out, rc)) left.push_back(a.pattern);
      std::sort(left.begin(), left.end(), itemset_less);
      std::sort(report.unresolved.begin(), report.unresolved.end(), itemset_less);
      EXPECT_EQ(left, report.unresolved) << measure_name(f);
    }
  }
}

TEST(Unexplainable, SanitizationLeavesNoUnexplainablePattern) {
  std::mt19937 rng(61);
  std::size_t exercised = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const DecisionTable t = random_table(rng, {8, 30, 3, 4, 2});
    const PatternSet ps = mine_frequent(t, 1);
    const ResolvedConfig rc = random_config(t, Measure::kSlift, 1.2);
    const auto bad = detect_unexplainable(ps, rc);
    if (bad.empty()) continue;
    SanitizeReport report;
    const PatternSet out = unexplainable_sanitize(ps, bad, rc, &report);
    std::vector<Itemset> left;
    for (const auto& a : detect_unexplainable(out, rc)) left.push_back(a.pattern);
    std::sort(left.begin(), left.end(), itemset_less);
    std::sort(report.unresolved.begin(), report.unresolved.end(), itemset_less);
    EXPECT_EQ(left, report.unresolved);
    ++exercised;
  }
  EXPECT_GT(exercised, 20u);
}

TEST(Both, AnonymousAndProtectiveTogether) {
  std::mt19937 rng(67);
  for (int iter = 0; iter < 120; ++iter) {
    const DecisionTable t = random_table(rng, {8, 30, 2, 4, 3});
    const PatternSet ps = mine_frequent(t, 2);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    const ResolvedConfig rc =
        random_config(t, iter % 2 ? Measure::kSlift : Measure::kElift, 1.2);
    SanitizeReport report;
    const PatternSet out = protect_patterns(ps, k, rc, PatternMode::kBoth, &report);
    EXPECT_TRUE(find_channels(out, k).empty());
    if (report.unresolved.empty()) {
      EXPECT_TRUE(detect_disc_patterns(out, rc).empty());
    }
  }
}

TEST(AntiDiscrimination, PingPongBetweenGroupsStaysBounded) {
  // Two protected groups share the context M=nm. Repairing one raises
  // supp(nm), which lowers the other group's p2 and raises its slift.
  const Schema s({{"Sex", {"f", "m"}, AttributeKind::kQuasiIdentifier, true},
                  {"Age", {"y", "o"}, AttributeKind::kQuasiIdentifier, true},
                  {"M", {"nm", "other"}, AttributeKind::kQuasiIdentifier, false},
                  {"C", {"no", "yes"}, AttributeKind::kClass, false}});
  PatternSet ps(s, 1);
  ps.set(parse_itemset(s, {"M=nm"}), 100);
  ps.set(parse_itemset(s, {"M=nm", "C=no"}), 90);
  ps.set(parse_itemset(s, {"Sex=f", "M=nm"}), 50);
  ps.set(parse_itemset(s, {"Sex=f", "M=nm", "C=no"}), 49);
  ps.set(parse_itemset(s, {"Age=y", "M=nm"}), 60);
  ps.set(parse_itemset(s, {"Age=y", "M=nm", "C=no"}), 59);
  const ResolvedConfig rc = resolve_config(
      make_config("C", "no", Measure::kSlift, 1.2, {{"Sex=f"}, {"Age=y"}}), s, 100);
  SanitizeReport report;
  const PatternSet out = antidisc_sanitize(ps, detect_disc_patterns(ps, rc), rc, &report);
  EXPECT_FALSE(report.unresolved.empty());
  EXPECT_LT(*out.support(parse_itemset(s, {"M=nm"})), 200u);
  std::vector<Itemset> left;
  for (const auto& a : detect_disc_patterns(out, rc)) left.push_back(a.pattern);
  std::sort(left.begin(), left.end(), itemset_less);
  std::sort(report.unresolved.begin(), report.unresolved.end(), itemset_less);
  EXPECT_EQ(left, report.unresolved);
}

TEST(SortByImpact, PatternsWithMoreSubsetsFirst) {
  PatternAudit a;
  a.pattern = {1, 5, 9};
  PatternAudit b;
  b.pattern = {1, 9};
  PatternAudit c;
  c.pattern = {2, 9};
  const auto sorted = sort_by_impact({c, b, a});
  ASSERT_EQ(sorted.size(), 3u);
  EXPECT_EQ(sorted[0].pattern, a.pattern);
  EXPECT_EQ(sorted[1].pattern, b.pattern);
  EXPECT_EQ(sorted[2].pattern, c.pattern);
}

}  // namespace
}  // namespace fairmine
