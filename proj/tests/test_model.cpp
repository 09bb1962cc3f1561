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

#include "fairmine/model.hpp"
#include "test_support.hpp"

namespace fairmine {
namespace {

using ::testing::ElementsAre;
using testing::loans_table;
using testing::table_from;

TEST(Schema, ItemIdsFollowAttributeAndValueOrder) {
  const DecisionTable t = loans_table();
  const Schema& s = t.schema();
  EXPECT_EQ(s.class_attribute(), s.attribute_index("Credit"));
  EXPECT_TRUE(s.attribute(s.attribute_index("Sex")).pd);
  const ItemId female = s.parse_item("Sex=Female");
  const ItemId male = s.parse_item("Sex=Male");
  EXPECT_LT(female, male);
  EXPECT_EQ(s.item_label(female), "Sex=Female");
  EXPECT_TRUE(s.is_class_item(s.parse_item("Credit=No")));
  EXPECT_EQ(s.other_class_item(s.parse_item("Credit=No")), s.parse_item("Credit=Yes"));
  EXPECT_THROW(s.parse_item("Sex=Other"), Error);
  EXPECT_THROW(s.parse_item("Sex"), Error);
}

TEST(Itemset, SetAlgebra) {
  const Itemset a{1, 3, 5};
  const Itemset b{3, 4};
  EXPECT_THAT(set_union(a, b), ElementsAre(1, 3, 4, 5));
  EXPECT_THAT(set_intersection(a, b), ElementsAre(3));
  EXPECT_THAT(set_difference(a, b), ElementsAre(1, 5));
  EXPECT_TRUE(is_subset({1, 5}, a));
  EXPECT_FALSE(is_subset({1, 4}, a));
  EXPECT_TRUE(itemset_less({9}, {1, 2}));
  EXPECT_TRUE(itemset_less({1, 2}, {1, 3}));
}

TEST(Itemset, MakeRejectsTwoValuesOfOneAttribute) {
  const DecisionTable t = loans_table();
  const Schema& s = t.schema();
  EXPECT_THROW(make_itemset(s, {s.parse_item("Sex=Female"), s.parse_item("Sex=Male")}), Error);
}

TEST(DecisionTable, SupportsAndAssignment) {
  DecisionTable t = loans_table();
  const Schema& s = t.schema();
  const Itemset female_no = parse_itemset(s, {"Sex=Female", "Credit=No"});
  EXPECT_EQ(t.support(parse_itemset(s, {"Sex=Female"})), 4u);
  EXPECT_EQ(t.support(female_no), 3u);
  EXPECT_EQ(t.support({}), 10u);
  EXPECT_EQ(t.support_negated(parse_itemset(s, {"Sex=Female"}), {}), 6u);
  // Record 5 is Female, Amer-Indian, Yes.
  t.assign(5, s.class_attribute(), 0);
  EXPECT_EQ(t.support(female_no), 4u);
  EXPECT_EQ(t.tids(s.parse_item("Credit=No")).count(), 5u);
}

TEST(Csv, QuotedFieldsAndMissingValues) {
  const auto rows = parse_csv("a,b\n\"x,1\",\"say \"\"hi\"\"\"\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][0], "x,1");
  EXPECT_EQ(rows[1][1], "say \"hi\"");

  TableOptions o;
  o.class_attribute = "C";
  LoadReport rep;
  const DecisionTable t = parse_table("A,C\nx,1\n?,0\ny,0\n", o, &rep);
  EXPECT_EQ(rep.rows_read, 3u);
  EXPECT_EQ(rep.rows_dropped, 1u);
  EXPECT_EQ(t.size(), 2u);
}

TEST(Csv, TableRoundTrip) {
  const DecisionTable t = loans_table();
  TableOptions o;
  o.class_attribute = "Credit";
  o.pd_attributes = {"Sex"};
  const DecisionTable again = parse_table(table_to_csv(t), o);
  EXPECT_EQ(again, t);
}

TEST(Csv, DeclaredDomainRejectsUnknownValue) {
  TableOptions o;
  o.class_attribute = "C";
  o.domains["A"] = {"x"};
  EXPECT_THROW(parse_table("A,C\ny,1\n", o), Error);
}

TEST(Hierarchy, GeneralizeAndValidate) {
  const auto hs = testing::loans_hierarchies();
  ASSERT_EQ(hs.size(), 2u);
  const GeneralizationHierarchy& race = hs[1];
  EXPECT_EQ(race.height(), 2u);
  EXPECT_EQ(race.generalize("Black", 1), "Colored");
  EXPECT_EQ(race.generalize("White", 2), "Any-race");
  EXPECT_EQ(race.generalize("Black", 0), "Black");
  EXPECT_THAT(race.level_domain(1), ElementsAre("Colored", "White"));
  EXPECT_EQ(race.level_name(1), "R1");
  EXPECT_THROW(race.generalize("Martian", 1), Error);
  GeneralizationHierarchy broken = race;
  broken.maps[1].erase("Colored");
  EXPECT_THROW(broken.validate(), Error);
}

TEST(SupportThreshold, ParseAndResolve) {
  const SupportThreshold f = SupportThreshold::parse("5%");
  EXPECT_TRUE(f.is_fraction);
  EXPECT_EQ(f.resolve(1000), 50u);
  EXPECT_EQ(f.resolve(1001), 51u);
  EXPECT_EQ(f.text(), "5%");
  const SupportThreshold c = SupportThreshold::parse("3");
  EXPECT_FALSE(c.is_fraction);
  EXPECT_EQ(c.resolve(10), 3u);
  EXPECT_THROW(SupportThreshold::parse("x"), ConfigError);
  EXPECT_THROW(SupportThreshold::parse("2.5"), ConfigError);
}

TEST(Measures, DirectionsByFamily) {
  EXPECT_EQ(measure_direction(Measure::kElift), Direction::kAtLeast);
  EXPECT_EQ(measure_direction(Measure::kSliftD), Direction::kAtLeast);
  EXPECT_EQ(measure_direction(Measure::kSliftC), Direction::kAtMost);
  EXPECT_EQ(measure_direction(Measure::kEliftC), Direction::kAtMost);
  EXPECT_EQ(parse_measure("olift"), Measure::kOlift);
  for (Measure m : {Measure::kElift, Measure::kSlift, Measure::kOlift, Measure::kClift,
                    Measure::kSliftD, Measure::kEliftD, Measure::kSliftC, Measure::kEliftC}) {
    EXPECT_EQ(parse_measure(measure_name(m)), m);
  }
  EXPECT_THROW(parse_measure("lift"), Error);
}

TEST(Config, ValidateRanges) {
  ProtectionConfig c = testing::make_config("Credit", "No", Measure::kElift, 1.2, {{"Sex=Female"}});
  EXPECT_NO_THROW(c.validate());
  c.alpha = 0.9;
  EXPECT_THROW(c.validate(), ConfigError);
  c.measure = Measure::kSliftC;
  EXPECT_NO_THROW(c.validate());
  c.alpha = 1.5;
  EXPECT_THROW(c.validate(), ConfigError);
  c = testing::make_config("Credit", "No", Measure::kElift, 1.2, {{"Sex=Female"}});
  c.d = 1.5;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Config, ResolveAgainstSchema) {
  const DecisionTable t = loans_table();
  ProtectionConfig c = testing::make_config("Credit", "No", Measure::kElift, 1.2, {{"Sex=Female"}});
  c.ms = SupportThreshold::parse("30%");
  const ResolvedConfig r = resolve_config(c, t.schema(), t.size());
  EXPECT_EQ(r.ms, 3u);
  EXPECT_EQ(r.negative_class, t.schema().parse_item("Credit=No"));
  EXPECT_EQ(r.pd_items, parse_itemset(t.schema(), {"Sex=Female"}));

  ProtectionConfig bad = c;
  bad.negative_class = "Maybe";
  EXPECT_THROW(resolve_config(bad, t.schema(), t.size()), ConfigError);
  bad = c;
  bad.protected_itemsets = {{"Race=Black"}};  // Race is not PD
  EXPECT_THROW(resolve_config(bad, t.schema(), t.size()), ConfigError);
  bad = c;
  bad.class_attribute = "Sex";
  EXPECT_THROW(resolve_config(bad, t.schema(), t.size()), ConfigError);
}

TEST(Config, ClassValueContainingEquals) {
  const DecisionTable t = testing::table_from(
      {"Sex", "Income"}, {{"f", "<=50K"}, {"m", ">50K"}, {"f", "<=50K"}}, {"Sex"});
  for (const char* neg : {"<=50K", "Income=<=50K"}) {
    const ProtectionConfig c =
        testing::make_config("Income", neg, Measure::kSlift, 1.2, {{"Sex=f"}});
    EXPECT_EQ(resolve_config(c, t.schema(), t.size()).negative_class,
              t.schema().parse_item("Income=<=50K"));
  }
}

TEST(Negation, ConvertibleOnlyForBinaryAttributes) {
  const DecisionTable t = loans_table();
  const Schema& s = t.schema();
  EXPECT_TRUE(can_convert_to_negation(s, parse_itemset(s, {"Sex=Female"})));
  EXPECT_FALSE(can_convert_to_negation(s, parse_itemset(s, {"Race=Black"})));
  const NegatedSelector sel = negate(parse_itemset(s, {"Sex=Female"}));
  std::size_t n = 0;
  for (std::size_t r = 0; r < t.size(); ++r) n += sel.matches(t, r);
  EXPECT_EQ(n, 6u);
}

}  // namespace
}  // namespace fairmine
