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

#include <random>

#include "fairmine/discrimination.hpp"
#include "fairmine/io.hpp"
#include "fairmine/latticegen.hpp"
#include "fairmine/miner.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace fairmine {
namespace {

using ::testing::ElementsAre;
using testing::brute_incognito;
using testing::random_lattice;
using testing::RandomLattice;
using testing::random_table;
using testing::source_path;
using testing::loans_table;

TEST(Lattice, TupleTextAndParsing) {
  const DecisionTable t = loans_table();
  const Lattice l(t, testing::loans_hierarchies());
  ASSERT_EQ(l.qi_count(), 2u);
  EXPECT_EQ(l.qi_name(0), "Sex");
  EXPECT_EQ(l.tuple_text({1, 2}), "<S1,R2>");
  EXPECT_EQ(l.parse_tuple("<S0,R1>"), (DomainTuple{0, 1}));
  EXPECT_EQ(l.all_tuples().size(), 6u);
  EXPECT_THROW(l.parse_tuple("<S3,R1>"), Error);
}

TEST(Incognito, LoansTableThreeAnonymousTuples) {
  const DecisionTable t = loans_table();
  const Lattice l(t, testing::loans_hierarchies());
  LatticeOptions o;
  o.k = 3;
  EXPECT_THAT(alpha_protective_incognito(l, o),
              ElementsAre(DomainTuple{0, 2}, DomainTuple{1, 1}, DomainTuple{1, 2}));
}

TEST(Incognito, LoansTableProtectiveUnderElift) {
  const DecisionTable t = loans_table();
  const Lattice l(t, testing::loans_hierarchies());
  const ProtectionConfig c = load_config(source_path("configs/loans_k3_elift.json"));
  const ResolvedConfig rc = resolve_config(c, t.schema(), t.size());
  const LatticeOptions o = lattice_options(l, rc);
  EXPECT_THAT(o.da, ElementsAre("Sex"));
  EXPECT_THAT(alpha_protective_incognito(l, o),
              ElementsAre(DomainTuple{1, 1}, DomainTuple{1, 2}));
}

TEST(PdNodes, GeneralizedDaLevelsStayPd) {
  const DecisionTable t = loans_table();
  const Lattice l(t, testing::loans_hierarchies());
  LatticeOptions o;
  o.da = {"Race", "Sex"};
  EXPECT_TRUE(is_pd_node(l, {{1}, {0}}, o));   // R0
  EXPECT_TRUE(is_pd_node(l, {{1}, {1}}, o));   // R1
  EXPECT_FALSE(is_pd_node(l, {{1}, {2}}, o));  // R2
  EXPECT_TRUE(is_pd_node(l, {{0}, {0}}, o));   // S0
  EXPECT_FALSE(is_pd_node(l, {{0}, {1}}, o));  // S1
}

TEST(Quality, LoansTableTuples) {
  const DecisionTable t = loans_table();
  const Lattice l(t, testing::loans_hierarchies());
  const QualityReport q11 = tuple_quality(l, {1, 1});
  EXPECT_EQ(q11.gh, 2u);
  EXPECT_DOUBLE_EQ(q11.dr, 0.5);
  const QualityReport q12 = tuple_quality(l, {1, 2});
  EXPECT_DOUBLE_EQ(q12.dr, 1.0);
  EXPECT_DOUBLE_EQ(q12.cm, 0.4);  // 4 of 10 records are denied
  EXPECT_EQ(select_minimal(l, {{1, 2}, {1, 1}, {0, 2}}, Criterion::kGh), (DomainTuple{0, 2}));
  EXPECT_EQ(select_minimal(l, {{1, 2}, {1, 1}}, Criterion::kDr), (DomainTuple{1, 1}));
}

TEST(Quality, PureGroupsHaveZeroClassificationMetric) {
  const DecisionTable t = testing::table_from({"A", "C"}, {{"x", "1"}, {"x", "1"}, {"y", "0"}}, {});
  GeneralizationHierarchy h;
  h.attribute = "A";
  h.level_names = {"A0", "A1"};
  h.maps = {{{"x", "*"}, {"y", "*"}}};
  const Lattice l(t, {h});
  EXPECT_DOUBLE_EQ(tuple_quality(l, {0}).cm, 0.0);
  EXPECT_NEAR(tuple_quality(l, {1}).cm, 1.0 / 3, 1e-12);
}

TEST(Incognito, MatchesBruteForceLattice) {
  std::mt19937 rng(2026);
  std::size_t protective_seen = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const RandomLattice rl = random_lattice(rng);
    const Lattice l(rl.table, rl.hierarchies);
    LatticeOptions o;
    o.k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    o.check_discrimination = true;
    o.measure = iter % 2 ? Measure::kSlift : Measure::kElift;
    o.alpha = 1.2;
    o.ms = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    o.tau = l.qi_count();
    o.da = {"X0"};
    o.negative_class = "n";
    const std::vector<DomainTuple> expected = brute_incognito(l, o);
    ASSERT_EQ(alpha_protective_incognito(l, o), expected) << "iteration " << iter;
    protective_seen += expected.size();
  }
  EXPECT_GT(protective_seen, 0u);
}

TEST(FrequencySet, RollUpMatchesDirectScan) {
  std::mt19937 rng(19);
  for (int iter = 0; iter < 50; ++iter) {
    const RandomLattice rl = random_lattice(rng);
    const Lattice l(rl.table, rl.hierarchies);
    for (const DomainTuple& dt : l.all_tuples()) {
      const LatticeNode n = full_node(dt);
      const FrequencySet base = frequency_set(l, n);
      for (const LatticeNode& g : direct_generalizations(l, n)) {
        const FrequencySet direct = frequency_set(l, g);
        const FrequencySet rolled = frequency_set(l, g, base);
        EXPECT_EQ(direct.cells, rolled.cells);
      }
    }
  }
}

TEST(Quality, DiscernibilityMonotoneAlongEdges) {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 50; ++iter) {
    const RandomLattice rl = random_lattice(rng);
    const Lattice l(rl.table, rl.hierarchies);
    for (const DomainTuple& dt : l.all_tuples()) {
      const double dr = tuple_quality(l, dt).dr;
      for (const LatticeNode& g : direct_generalizations(l, full_node(dt))) {
        EXPECT_GE(tuple_quality(l, g.levels).dr + 1e-12, dr);
      }
    }
  }
}

TEST(Quality, ClassificationMetricAgreesWithIndependentGroupBy) {
  std::mt19937 rng(29);
  for (int iter = 0; iter < 50; ++iter) {
    const RandomLattice rl = random_lattice(rng);
    const Lattice l(rl.table, rl.hierarchies);
    for (const DomainTuple& dt : l.all_tuples()) {
      const DecisionTable g = generalize(l, dt);
      const Schema& s = g.schema();
      std::map<std::vector<std::string>, std::map<std::string, std::size_t>> groups;
      for (std::size_t r = 0; r < g.size(); ++r) {
        std::vector<std::string> key;
        for (std::size_t a = 0; a < s.attribute_count(); ++a) {
          if (a != s.class_attribute()) key.push_back(s.attribute(a).domain[g.value(r, a)]);
        }
        ++groups[key][s.attribute(s.class_attribute()).domain[g.value(r, s.class_attribute())]];
      }
      std::size_t penalties = 0;
      for (const auto& [key, classes] : groups) {
        std::size_t n = 0;
        std::size_t best = 0;
        for (const auto& [c, m] : classes) {
          n += m;
          best = std::max(best, m);
        }
        penalties += n - best;
      }
      EXPECT_EQ(tuple_quality(l, dt).cm, static_cast<double>(penalties) / g.size());
    }
  }
}

}  // namespace
}  // namespace fairmine
