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

#include "fairmine/discrimination.hpp"

#include <algorithm>
#include <cmath>

#include "fairmine/parallel.hpp"

namespace fairmine {

namespace {

constexpr double kSlack = 1e-12;

double ratio(std::size_t x, std::size_t y) {
  return static_cast<double>(x) / static_cast<double>(y);
}

MeasureValue undefined(Measure f) { return MeasureValue{f, 0.0, false}; }
MeasureValue defined(Measure f, double v) { return MeasureValue{f, v, true}; }

std::size_t measure_slot(Measure f) {
  for (std::size_t i = 0; i < kAllMeasures.size(); ++i) {
    if (kAllMeasures[i] == f) return i;
  }
  return 0;
}

bool less_labels(const Schema& schema, const Itemset& x, const Itemset& y) {
  return itemset_labels(schema, x) < itemset_labels(schema, y);
}

}  // namespace

ContingencyCounts contingency(const SupportSource& source, const Itemset& a, const Itemset& b,
                              ItemId c) {
  ContingencyCounts k;
  const Itemset ab = set_union(a, b);
  k.total = source.total();
  k.supp_b = source.support(b);
  k.supp_bc = source.support(set_union(b, {c}));
  k.n1 = source.support(ab);
  k.a1 = source.support(set_union(ab, {c}));
  k.n2 = k.supp_b > k.n1 ? k.supp_b - k.n1 : 0;
  k.a2 = k.supp_bc > k.a1 ? k.supp_bc - k.a1 : 0;
  return k;
}

double confidence(const SupportSource& source, const Itemset& premise, ItemId c) {
  const std::size_t s = source.support(premise);
  if (s == 0) return 0.0;
  return ratio(source.support(set_union(premise, {c})), s);
}

MeasureValue measure(const ContingencyCounts& k, Measure f) {
  if (k.n1 == 0) return undefined(f);
  const double p1 = ratio(k.a1, k.n1);
  const bool has2 = k.n2 > 0;
  const double p2 = has2 ? ratio(k.a2, k.n2) : 0.0;
  const double p = ratio(k.a1 + k.a2, k.n1 + k.n2);
  switch (f) {
    case Measure::kElift:
      return p > 0 ? defined(f, p1 / p) : undefined(f);
    case Measure::kSlift:
    case Measure::kClift:
      return has2 && p2 > 0 ? defined(f, p1 / p2) : undefined(f);
    case Measure::kOlift:
      if (!has2 || p2 <= 0 || p1 >= 1) return undefined(f);
      return defined(f, p1 * (1 - p2) / (p2 * (1 - p1)));
    case Measure::kSliftD:
      return has2 ? defined(f, p1 - p2) : undefined(f);
    case Measure::kEliftD:
      return defined(f, p1 - p);
    case Measure::kSliftC:
      return has2 && p2 < 1 ? defined(f, (1 - p1) / (1 - p2)) : undefined(f);
    case Measure::kEliftC:
      return p < 1 ? defined(f, (1 - p1) / (1 - p)) : undefined(f);
  }
  return undefined(f);
}

bool meets_alpha(double value, double alpha, Measure f) {
  const double slack = kSlack * std::max(1.0, std::fabs(alpha));
  if (measure_direction(f) == Direction::kAtMost) return value <= alpha + slack;
  return value >= alpha - slack;
}

bool is_alpha_discriminatory(const MeasureValue& v, double alpha) {
  return v.defined && meets_alpha(v.value, alpha, v.measure);
}

CliftResult most_favored_clift(const SupportSource& source, const Itemset& a, const Itemset& b,
                               ItemId c) {
  const Schema& schema = source.schema();
  CliftResult out;
  out.value = undefined(Measure::kClift);
  if (a.empty()) return out;

  std::vector<std::size_t> attrs;
  for (ItemId id : a) attrs.push_back(schema.item_attribute(id));

  // Odometer over the value combinations of A's attributes.
  std::vector<std::size_t> pos(attrs.size(), 0);
  std::optional<double> best_conf;
  std::size_t best_n = 0;
  std::size_t best_a = 0;
  for (;;) {
    Itemset combo;
    for (std::size_t i = 0; i < attrs.size(); ++i) combo.push_back(schema.item(attrs[i], pos[i]));
    std::sort(combo.begin(), combo.end());
    const Itemset cb = set_union(combo, b);
    const std::size_t n = source.support(cb);
    if (n > 0) {
      const std::size_t s = source.support(set_union(cb, {c}));
      const double conf = ratio(s, n);
      if (s > 0) {
        const bool better = !best_conf || conf < *best_conf ||
                            (conf == *best_conf && less_labels(schema, combo, *out.favored));
        if (better) {
          best_conf = conf;
          out.favored = combo;
          best_n = n;
          best_a = s;
        }
      }
    }
    std::size_t i = 0;
    for (; i < attrs.size(); ++i) {
      if (++pos[i] < schema.attribute(attrs[i]).domain.size()) break;
      pos[i] = 0;
    }
    if (i == attrs.size()) break;
  }

  const ContingencyCounts base = contingency(source, a, b, c);
  out.counts = base;
  if (!out.favored) return out;
  out.counts.a2 = best_a;
  out.counts.n2 = best_n;
  if (base.n1 == 0) return out;
  out.value = defined(Measure::kClift, ratio(base.a1, base.n1) / *best_conf);
  return out;
}

std::optional<double> elb(double gamma, double delta, double beta1, double beta2) {
  if (delta <= 0 || beta2 <= 0) return std::nullopt;
  const double fx = beta1 / beta2 * (beta2 + gamma - 1);
  return fx > 0 ? fx / delta : 0.0;
}

PdSplit split_pd(const Itemset& premise, const Itemset& pd_items) {
  PdSplit s;
  s.a = set_intersection(premise, pd_items);
  s.b = set_difference(premise, s.a);
  return s;
}

bool is_pd(const Itemset& premise, const Itemset& pd_items) {
  return !set_intersection(premise, pd_items).empty();
}

const MeasureValue& RuleAudit::value(Measure f) const { return values[measure_slot(f)]; }

RuleAudit audit_rule(const MinedRule& rule, const SupportSource& source,
                     const ResolvedConfig& config) {
  RuleAudit r;
  r.rule = rule;
  const PdSplit split = split_pd(rule.rule.premise, config.pd_items);
  r.a = split.a;
  r.b = split.b;
  r.counts = contingency(source, r.a, r.b, rule.rule.conclusion);
  for (std::size_t i = 0; i < kAllMeasures.size(); ++i) {
    const Measure f = kAllMeasures[i];
    if (f == Measure::kClift) {
      r.values[i] = most_favored_clift(source, r.a, r.b, rule.rule.conclusion).value;
    } else {
      r.values[i] = measure(r.counts, f);
    }
  }
  r.alpha_discriminatory = is_alpha_discriminatory(r.value(config.raw.measure), config.raw.alpha);
  return r;
}

AuditResult audit_rules(const std::vector<MinedRule>& rules, const SupportSource& source,
                        const ResolvedConfig& config) {
  std::vector<const MinedRule*> pd;
  for (const MinedRule& r : rules) {
    if (r.rule.conclusion == config.negative_class && is_pd(r.rule.premise, config.pd_items)) {
      pd.push_back(&r);
    }
  }
  std::vector<RuleAudit> audits(pd.size());
  parallel_for(pd.size(), [&](std::size_t i) { audits[i] = audit_rule(*pd[i], source, config); });
  AuditResult out;
  for (RuleAudit& a : audits) {
    (a.alpha_discriminatory ? out.mr : out.pr).push_back(std::move(a));
  }
  return out;
}

std::optional<RedliningAudit> redlining_check(const MinedRule& rule, const Itemset& a,
                                              const Itemset& d, const SupportSource& source,
                                              const ResolvedConfig& config) {
  const Itemset b = set_difference(rule.rule.premise, d);
  const Itemset db = rule.rule.premise;
  const std::size_t dba = source.support(set_union(db, a));
  if (dba == 0 || dba < config.ms) return std::nullopt;
  const std::size_t supp_db = source.support(db);
  const std::size_t supp_ab = source.support(set_union(a, b));
  if (supp_db == 0 || supp_ab == 0) return std::nullopt;
  RedliningAudit out;
  out.rule = rule;
  out.a = a;
  out.d = d;
  out.b = b;
  out.gamma = confidence(source, db, rule.rule.conclusion);
  out.delta = confidence(source, b, rule.rule.conclusion);
  out.beta1 = ratio(dba, supp_ab);
  out.beta2 = ratio(dba, supp_db);
  const auto e = elb(out.gamma, out.delta, out.beta1, out.beta2);
  if (!e) return std::nullopt;
  out.elb_value = *e;
  out.redlining = meets_alpha(*e, config.raw.alpha, Measure::kElift);
  return out;
}

std::vector<RedliningAudit> find_redlining(const std::vector<MinedRule>& rules,
                                           const SupportSource& source,
                                           const ResolvedConfig& config) {
  std::vector<const MinedRule*> pnd;
  for (const MinedRule& r : rules) {
    if (r.rule.conclusion == config.negative_class && !is_pd(r.rule.premise, config.pd_items)) {
      pnd.push_back(&r);
    }
  }
  std::vector<std::vector<RedliningAudit>> found(pnd.size());
  parallel_for(pnd.size(), [&](std::size_t i) {
    const Itemset& x = pnd[i]->rule.premise;
    if (x.size() >= 31) throw Error("premise too long for redlining enumeration");
    const std::uint32_t subsets = 1u << x.size();
    for (const Itemset& a : config.di_b) {
      for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        Itemset d;
        for (std::size_t t = 0; t < x.size(); ++t) {
          if (mask & (1u << t)) d.push_back(x[t]);
        }
        auto audit = redlining_check(*pnd[i], a, d, source, config);
        if (audit && audit->redlining) found[i].push_back(std::move(*audit));
      }
    }
  });
  std::vector<RedliningAudit> out;
  for (auto& v : found) {
    for (auto& r : v) out.push_back(std::move(r));
  }
  return out;
}

std::vector<ClassificationRule> redlining_rules(const std::vector<RedliningAudit>& rr) {
  std::vector<ClassificationRule> out;
  for (const auto& r : rr) {
    if (std::find(out.begin(), out.end(), r.rule.rule) == out.end()) out.push_back(r.rule.rule);
  }
  std::sort(out.begin(), out.end(), rule_less);
  return out;
}

std::vector<ClassificationRule> indirect_rules(const std::vector<RedliningAudit>& rr) {
  std::vector<ClassificationRule> out;
  for (const auto& r : rr) {
    const ClassificationRule ind = r.indirect();
    if (std::find(out.begin(), out.end(), ind) == out.end()) out.push_back(ind);
  }
  std::sort(out.begin(), out.end(), rule_less);
  return out;
}

DInstanceCheck d_instance(const Itemset& a, const Itemset& d, const Itemset& b, ItemId c,
                          double dval, const SupportSource& source) {
  DInstanceCheck out;
  const Itemset ab = set_union(a, b);
  out.conf_r = confidence(source, set_union(d, b), c);
  out.conf_r_prime = confidence(source, ab, c);
  const std::size_t supp_ab = source.support(ab);
  out.conf_r2 = supp_ab == 0 ? 0.0 : ratio(source.support(set_union(ab, d)), supp_ab);
  out.condition1 = out.conf_r + kSlack >= dval * out.conf_r_prime;
  out.condition2 = supp_ab > 0 && out.conf_r2 + kSlack >= dval;
  return out;
}

}  // namespace fairmine
