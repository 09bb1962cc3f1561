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

#include "fairmine/miner.hpp"

#include <algorithm>
#include <unordered_set>

#include "fairmine/parallel.hpp"

namespace fairmine {

namespace {

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const {
    std::size_t h = 1469598103934665603ULL;
    for (ItemId id : s) {
      h ^= id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Level {
  std::vector<Itemset> sets;
  std::vector<TidSet> tids;
};

std::size_t sat_sub(std::size_t a, std::size_t b) { return a > b ? a - b : 0; }

}  // namespace

std::optional<std::size_t> PatternSet::support(const Itemset& s) const {
  auto it = supports_.find(s);
  if (it == supports_.end()) return std::nullopt;
  return it->second;
}

std::size_t PatternSet::support_or_zero(const Itemset& s) const {
  auto it = supports_.find(s);
  return it == supports_.end() ? 0 : it->second;
}

PatternSet mine_frequent(const DecisionTable& table, std::size_t sigma,
                         const MineOptions& options) {
  if (sigma < 1) throw Error("sigma must be at least 1");
  const Schema& schema = table.schema();
  PatternSet out(schema, sigma);
  out.set({}, table.size());

  std::vector<bool> allowed(schema.attribute_count(), options.attributes.empty());
  for (std::size_t a : options.attributes) allowed.at(a) = true;

  Level level;
  for (ItemId id = 0; id < schema.item_count(); ++id) {
    if (!allowed[schema.item_attribute(id)]) continue;
    const std::size_t s = table.tids(id).count();
    if (s >= sigma) {
      level.sets.push_back({id});
      level.tids.push_back(table.tids(id));
      out.set({id}, s);
    }
  }

  std::size_t length = 1;
  while (!level.sets.empty() && (options.max_length == 0 || length < options.max_length)) {
    std::unordered_set<Itemset, ItemsetHash> previous(level.sets.begin(), level.sets.end());

    // Join itemsets that share all but their last item; the level is sorted,
    // so such itemsets are contiguous.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Itemset> candidates;
    for (std::size_t i = 0; i < level.sets.size(); ++i) {
      const Itemset& x = level.sets[i];
      for (std::size_t j = i + 1; j < level.sets.size(); ++j) {
        const Itemset& y = level.sets[j];
        if (!std::equal(x.begin(), x.end() - 1, y.begin())) break;
        if (schema.item_attribute(x.back()) == schema.item_attribute(y.back())) continue;
        Itemset cand = x;
        cand.push_back(y.back());
        bool ok = true;
        for (std::size_t drop = 0; ok && drop + 2 < cand.size(); ++drop) {
          Itemset sub;
          sub.reserve(cand.size() - 1);
          for (std::size_t t = 0; t < cand.size(); ++t) {
            if (t != drop) sub.push_back(cand[t]);
          }
          ok = previous.count(sub) != 0;
        }
        if (!ok) continue;
        pairs.emplace_back(i, j);
        candidates.push_back(std::move(cand));
      }
    }

    std::vector<std::size_t> counts(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t c) {
      counts[c] = level.tids[pairs[c].first].intersect_count(level.tids[pairs[c].second]);
    });

    Level next;
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (counts[c] >= sigma) keep.push_back(c);
    }
    next.sets.reserve(keep.size());
    next.tids.resize(keep.size());
    for (std::size_t c : keep) {
      out.set(candidates[c], counts[c]);
      next.sets.push_back(std::move(candidates[c]));
    }
    parallel_for(keep.size(), [&](std::size_t t) {
      const auto& pr = pairs[keep[t]];
      next.tids[t] = level.tids[pr.first] & level.tids[pr.second];
    });
    level = std::move(next);
    ++length;
  }
  return out;
}

bool rule_less(const ClassificationRule& a, const ClassificationRule& b) {
  if (a.conclusion != b.conclusion) return a.conclusion < b.conclusion;
  return itemset_less(a.premise, b.premise);
}

std::vector<MinedRule> rules_from_patterns(const PatternSet& patterns, std::size_t ms,
                                           double min_conf, std::optional<ItemId> conclusion) {
  const Schema& schema = patterns.schema();
  std::vector<MinedRule> rules;
  for (const auto& [items, supp] : patterns.entries()) {
    if (items.size() < 2 || supp < ms) continue;
    for (ItemId id : items) {
      if (!schema.is_class_item(id)) continue;
      if (conclusion && *conclusion != id) continue;
      MinedRule r;
      r.rule.conclusion = id;
      r.rule.premise = set_difference(items, {id});
      r.support = supp;
      r.premise_support = patterns.support_or_zero(r.rule.premise);
      if (r.premise_support == 0) continue;
      r.conf = static_cast<double>(supp) / static_cast<double>(r.premise_support);
      // Slack keeps exact ratios such as 1/10 at a 10% threshold.
      if (r.conf + 1e-12 < min_conf) continue;
      rules.push_back(std::move(r));
    }
  }
  std::sort(rules.begin(), rules.end(),
            [](const MinedRule& a, const MinedRule& b) { return rule_less(a.rule, b.rule); });
  return rules;
}

std::vector<MinedRule> mine_rules(const DecisionTable& table, std::size_t ms, double min_conf,
                                  std::optional<ItemId> conclusion, const MineOptions& options) {
  MineOptions opts = options;
  if (!opts.attributes.empty() &&
      std::find(opts.attributes.begin(), opts.attributes.end(),
                table.schema().class_attribute()) == opts.attributes.end()) {
    opts.attributes.push_back(table.schema().class_attribute());
  }
  const PatternSet patterns = mine_frequent(table, std::max<std::size_t>(ms, 1), opts);
  return rules_from_patterns(patterns, ms, min_conf, conclusion);
}

ContingencyCounts contingency(const DecisionTable& table, const Itemset& a, const Itemset& b,
                              ItemId c) {
  ContingencyCounts k;
  const TidSet tb = table.tids(b);
  const TidSet tab = tb & table.tids(a);
  const TidSet& tc = table.tids(c);
  k.total = table.size();
  k.supp_b = tb.count();
  k.supp_bc = tb.intersect_count(tc);
  k.n1 = tab.count();
  k.a1 = tab.intersect_count(tc);
  k.n2 = k.supp_b - k.n1;
  k.a2 = k.supp_bc - k.a1;
  return k;
}

ContingencyCounts contingency(const PatternSet& patterns, const Itemset& a, const Itemset& b,
                              ItemId c) {
  ContingencyCounts k;
  const Itemset ab = set_union(a, b);
  k.total = patterns.total();
  k.supp_b = patterns.support_or_zero(b);
  k.supp_bc = patterns.support_or_zero(set_union(b, {c}));
  k.n1 = patterns.support_or_zero(ab);
  k.a1 = patterns.support_or_zero(set_union(ab, {c}));
  k.n2 = sat_sub(k.supp_b, k.n1);
  k.a2 = sat_sub(k.supp_bc, k.a1);
  return k;
}

double confidence(const DecisionTable& table, const Itemset& premise, ItemId c) {
  const TidSet t = table.tids(premise);
  const std::size_t s = t.count();
  if (s == 0) return 0.0;
  return static_cast<double>(t.intersect_count(table.tids(c))) / static_cast<double>(s);
}

}  // namespace fairmine
