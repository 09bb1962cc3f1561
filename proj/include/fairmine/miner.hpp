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

// Apriori mining of frequent itemsets and classification rules, plus the
// 2x2 contingency counts every discrimination measure is built from.

#ifndef FAIRMINE_MINER_HPP_
#define FAIRMINE_MINER_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "fairmine/model.hpp"

namespace fairmine {

struct ItemsetOrder {
  bool operator()(const Itemset& a, const Itemset& b) const { return itemset_less(a, b); }
};

// Frequent itemsets with exact supports. The empty itemset is always stored
// and carries |D|, so every count needed by the measures stays inside the set.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(Schema schema, std::size_t sigma) : schema_(std::move(schema)), sigma_(sigma) {}

  const Schema& schema() const { return schema_; }
  std::size_t sigma() const { return sigma_; }
  void set_sigma(std::size_t s) { sigma_ = s; }

  std::size_t size() const { return supports_.size(); }
  bool contains(const Itemset& s) const { return supports_.count(s) != 0; }
  std::optional<std::size_t> support(const Itemset& s) const;
  // Absent patterns count as 0.
  std::size_t support_or_zero(const Itemset& s) const;
  std::size_t total() const { return support_or_zero({}); }

  void set(const Itemset& s, std::size_t support) { supports_[s] = support; }
  void add(const Itemset& s, std::size_t delta) { supports_[s] += delta; }
  const std::map<Itemset, std::size_t, ItemsetOrder>& entries() const { return supports_; }

  bool operator==(const PatternSet& o) const { return supports_ == o.supports_; }

 private:
  Schema schema_;
  std::size_t sigma_ = 1;
  std::map<Itemset, std::size_t, ItemsetOrder> supports_;
};

struct MineOptions {
  // Restricts mining to these attributes when non-empty.
  std::vector<std::size_t> attributes;
  // 0 means unbounded.
  std::size_t max_length = 0;
};

// Every itemset with support >= sigma, plus the empty itemset.
PatternSet mine_frequent(const DecisionTable& table, std::size_t sigma,
                         const MineOptions& options = {});

struct ClassificationRule {
  Itemset premise;
  ItemId conclusion = 0;
  bool operator==(const ClassificationRule&) const = default;
};

bool rule_less(const ClassificationRule& a, const ClassificationRule& b);

struct MinedRule {
  ClassificationRule rule;
  std::size_t support = 0;          // supp(X, C)
  std::size_t premise_support = 0;  // supp(X)
  double conf = 0.0;
};

// Frequent classification rules X -> C with non-empty X, supp(X,C) >= ms
// and conf >= min_conf. Without a conclusion both class values are used.
std::vector<MinedRule> mine_rules(const DecisionTable& table, std::size_t ms, double min_conf,
                                  std::optional<ItemId> conclusion = std::nullopt,
                                  const MineOptions& options = {});

// Rules read straight off a pattern set (premise and premise+class present).
std::vector<MinedRule> rules_from_patterns(const PatternSet& patterns, std::size_t ms,
                                           double min_conf,
                                           std::optional<ItemId> conclusion = std::nullopt);

// Cells of the 2x2 table of A, B -> C.
struct ContingencyCounts {
  std::size_t a1 = 0;  // supp(A,B,C)
  std::size_t n1 = 0;  // supp(A,B)
  std::size_t a2 = 0;  // supp(¬A,B,C)
  std::size_t n2 = 0;  // supp(¬A,B)
  std::size_t supp_bc = 0;
  std::size_t supp_b = 0;
  std::size_t total = 0;

  bool well_formed() const {
    return a1 <= n1 && a2 <= n2 && n1 + n2 == supp_b && a1 + a2 == supp_bc && supp_b <= total;
  }
};

ContingencyCounts contingency(const DecisionTable& table, const Itemset& a, const Itemset& b,
                              ItemId c);
// Same counts from supports alone; absent patterns count as 0.
ContingencyCounts contingency(const PatternSet& patterns, const Itemset& a, const Itemset& b,
                              ItemId c);

double confidence(const DecisionTable& table, const Itemset& premise, ItemId c);

}  // namespace fairmine

#endif  // FAIRMINE_MINER_HPP_
