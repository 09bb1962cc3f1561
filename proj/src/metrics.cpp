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

#include "fairmine/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "fairmine/parallel.hpp"
#include "fairmine/ruleshield.hpp"

namespace fairmine {

namespace {

using Rules = std::vector<ClassificationRule>;

Rules sorted(Rules r) {
  std::sort(r.begin(), r.end(), rule_less);
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

std::size_t intersection_size(const Rules& a, const Rules& b) {
  Rules out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        rule_less);
  return out.size();
}

std::optional<double> percent(double num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return 100.0 * num / static_cast<double>(den);
}

// (|X| - |X'|) / |X|, taken literally.
std::optional<double> prevention(const Rules& before, const Rules& after) {
  return percent(static_cast<double>(before.size()) - static_cast<double>(after.size()),
                 before.size());
}

std::optional<double> preservation(const Rules& before, const Rules& after) {
  return percent(static_cast<double>(intersection_size(before, after)), before.size());
}

bool subset_of(const Rules& small, const Rules& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end(), rule_less);
}

}  // namespace

RuleSnapshot rule_snapshot(const DecisionTable& table, const ResolvedConfig& config,
                           bool with_redlining, bool exempt_explainable) {
  const RuleDatabase db = extract_rules(table, config, with_redlining);
  RuleSnapshot s;
  for (const MinedRule& r : db.fr) s.fr.push_back(r.rule);
  const std::vector<RuleAudit> mr =
      exempt_explainable ? unexplained_mr(table, db, config) : db.audit.mr;
  for (const RuleAudit& a : mr) s.mr.push_back(a.rule.rule);
  for (const RuleAudit& a : db.audit.pr) s.pr.push_back(a.rule.rule);
  s.rr = redlining_rules(db.rr);
  s.fr = sorted(std::move(s.fr));
  s.mr = sorted(std::move(s.mr));
  s.pr = sorted(std::move(s.pr));
  s.rr = sorted(std::move(s.rr));
  for (const ClassificationRule& r : s.fr) {
    if (r.conclusion != config.negative_class || is_pd(r.premise, config.pd_items)) continue;
    if (!std::binary_search(s.rr.begin(), s.rr.end(), r, rule_less)) s.nr.push_back(r);
  }
  return s;
}

std::optional<double> misses_cost(const Rules& before, const Rules& after) {
  const Rules b = sorted(before);
  const Rules a = sorted(after);
  return percent(static_cast<double>(b.size() - intersection_size(b, a)), b.size());
}

std::optional<double> ghost_cost(const Rules& before, const Rules& after) {
  return misses_cost(after, before);
}

RuleUtilityReport rule_utility(const RuleSnapshot& before, const RuleSnapshot& after) {
  RuleUtilityReport r;
  r.ddpd = prevention(before.mr, after.mr);
  r.ddpp = preservation(before.pr, after.pr);
  r.idpd = prevention(before.rr, after.rr);
  r.idpp = preservation(before.nr, after.nr);
  r.mc = misses_cost(before.fr, after.fr);
  r.gc = ghost_cost(before.fr, after.fr);
  r.mr_not_subset = !subset_of(after.mr, before.mr);
  r.rr_not_subset = !subset_of(after.rr, before.rr);
  return r;
}

PatternUtilityReport pattern_utility(const PatternSet& fp, const PatternSet& tp,
                                     const ResolvedConfig& config) {
  PatternUtilityReport r;
  double signed_sum = 0.0;
  double abs_sum = 0.0;
  for (const auto& [s, supp] : fp.entries()) {
    if (s.empty()) continue;
    ++r.patterns;
    const std::size_t after = tp.support_or_zero(s);
    if (after != supp) ++r.changed;
    const double rel = (static_cast<double>(after) - static_cast<double>(supp)) /
                       static_cast<double>(supp);
    signed_sum += rel;
    abs_sum += std::fabs(rel);
  }
  if (r.patterns == 0) throw Error("pattern_utility: FP has no non-empty pattern");
  const auto n = static_cast<double>(r.patterns);
  r.changed_fraction = 100.0 * static_cast<double>(r.changed) / n;
  r.distortion_error = 100.0 * signed_sum / n;
  r.abs_distortion = 100.0 * abs_sum / n;

  std::set<Itemset, ItemsetOrder> before;
  for (const PatternAudit& a : detect_disc_patterns(fp, config)) before.insert(a.pattern);
  std::set<Itemset, ItemsetOrder> after;
  for (const PatternAudit& a : detect_disc_patterns(tp, config)) after.insert(a.pattern);
  std::set<Itemset, ItemsetOrder> protective;
  for (const PatternAudit& a : audit_pd_patterns(fp, config)) {
    if (!a.discriminatory) protective.insert(a.pattern);
  }
  r.disc_before = before.size();
  r.disc_after = after.size();
  std::size_t removed = 0;
  for (const Itemset& s : before) removed += after.count(s) == 0;
  std::size_t ghost = 0;
  for (const Itemset& s : after) ghost += protective.count(s);
  r.dpd = percent(static_cast<double>(removed), before.size());
  r.ndd = percent(static_cast<double>(ghost), after.size());
  return r;
}

QualityReport quality(const Lattice& lattice, const DomainTuple& dt) {
  return tuple_quality(lattice, dt);
}

double chi_square(double supp_x, double supp_c, double supp_xc, double n) {
  const double a = supp_xc;
  const double b = supp_x - supp_xc;
  const double c = supp_c - supp_xc;
  const double d = n - supp_x - supp_c + supp_xc;
  const double den = (a + b) * (c + d) * (a + c) * (b + d);
  if (den <= 0.0) return 0.0;
  const double diff = a * d - b * c;
  return n * diff * diff / den;
}

double max_chi_square(double supp_x, double supp_c, double n) {
  if (supp_x <= 0.0 || supp_c <= 0.0 || supp_x >= n || supp_c >= n) return 0.0;
  const double e = 1.0 / (supp_x * supp_c) + 1.0 / (supp_x * (n - supp_c)) +
                   1.0 / ((n - supp_x) * supp_c) + 1.0 / ((n - supp_x) * (n - supp_c));
  const double m = std::min(supp_x, supp_c) - supp_x * supp_c / n;
  return m * m * n * e;
}

CmarResult cmar_classify(const PatternSet& patterns, const DecisionTable& test) {
  const Schema& ps = patterns.schema();
  const Schema& ts = test.schema();
  const double n = static_cast<double>(patterns.total());

  struct Voter {
    // (test attribute, test value); value == npos never matches.
    std::vector<std::pair<std::size_t, std::size_t>> x;
    std::string cls;
    double weight = 0.0;  // chi^2 * chi^2 / max chi^2
  };
  std::vector<Voter> voters;
  std::map<std::string, std::size_t> class_support;
  for (const auto& [s, supp] : patterns.entries()) {
    std::optional<ItemId> c;
    Itemset x;
    for (ItemId id : s) {
      if (ps.is_class_item(id)) {
        c = id;
      } else {
        x.push_back(id);
      }
    }
    if (!c) continue;
    if (x.empty()) {
      class_support[ps.item_value_name(*c)] += supp;
      continue;
    }
    Voter v;
    v.cls = ps.item_value_name(*c);
    for (ItemId id : x) {
      const auto& attr = ps.attribute(ps.item_attribute(id)).name;
      const auto ta = ts.find_attribute(attr);
      if (!ta) throw Error("cmar_classify: attribute '" + attr + "' missing from test table");
      const auto& dom = ts.attribute(*ta).domain;
      const auto it = std::find(dom.begin(), dom.end(), ps.item_value_name(id));
      v.x.emplace_back(*ta, it == dom.end() ? std::string::npos
                                            : static_cast<std::size_t>(it - dom.begin()));
    }
    const double sx = static_cast<double>(patterns.support_or_zero(x));
    const double sc = static_cast<double>(patterns.support_or_zero({*c}));
    const double chi = chi_square(sx, sc, static_cast<double>(supp), n);
    const double mx = max_chi_square(sx, sc, n);
    v.weight = mx > 0.0 ? chi * chi / mx : 0.0;
    voters.push_back(std::move(v));
  }
  if (voters.empty()) throw Error("cmar_classify: no class-bearing pattern with a premise");

  std::string majority;
  std::size_t best = 0;
  for (const auto& [cls, s] : class_support) {
    if (majority.empty() || s > best) {
      majority = cls;
      best = s;
    }
  }
  if (majority.empty()) majority = voters.front().cls;

  const std::size_t cattr = ts.class_attribute();
  enum Kind : char { kUnanimous, kWeighted, kFallback };
  std::vector<char> kind(test.size());
  std::vector<char> hit(test.size());
  parallel_for(test.size(), [&](std::size_t r) {
    std::map<std::string, double> groups;
    for (const Voter& v : voters) {
      bool match = true;
      for (const auto& [a, val] : v.x) {
        if (test.value(r, a) != val) {
          match = false;
          break;
        }
      }
      if (match) groups[v.cls] += v.weight;
    }
    std::string predicted;
    if (groups.empty()) {
      kind[r] = kFallback;
      predicted = majority;
    } else if (groups.size() == 1) {
      kind[r] = kUnanimous;
      predicted = groups.begin()->first;
    } else {
      kind[r] = kWeighted;
      double top = -1.0;
      for (const auto& [cls, w] : groups) {
        if (w > top) {
          top = w;
          predicted = cls;
        }
      }
    }
    hit[r] = ts.attribute(cattr).domain[test.value(r, cattr)] == predicted;
  });

  CmarResult out;
  out.records = test.size();
  for (std::size_t r = 0; r < test.size(); ++r) {
    out.correct += hit[r];
    out.unanimous += kind[r] == kUnanimous;
    out.weighted += kind[r] == kWeighted;
    out.fallback += kind[r] == kFallback;
  }
  out.accuracy = out.records == 0 ? 0.0
                                  : static_cast<double>(out.correct) /
                                        static_cast<double>(out.records);
  return out;
}

}  // namespace fairmine
