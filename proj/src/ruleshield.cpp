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

#include "fairmine/ruleshield.hpp"

#include <algorithm>

namespace fairmine {

namespace {

constexpr double kSlack = 1e-12;

bool same_rule(const ClassificationRule& x, const ClassificationRule& y) { return x == y; }

const RuleAudit* find_audit(const std::vector<RuleAudit>& mr, const ClassificationRule& r) {
  for (const RuleAudit& a : mr) {
    if (same_rule(a.rule.rule, r)) return &a;
  }
  return nullptr;
}

bool contains_rule(const std::vector<ClassificationRule>& rules, const ClassificationRule& r) {
  return std::find(rules.begin(), rules.end(), r) != rules.end();
}

// Non-redlining PND rules D,B -> C of FR that share the context B of r'.
std::vector<const MinedRule*> pnd_companions(const RuleDatabase& db, const RuleAudit& r,
                                             const std::vector<ClassificationRule>& redlining,
                                             const ResolvedConfig& config) {
  std::vector<const MinedRule*> out;
  for (const MinedRule& m : db.fr) {
    if (m.rule.conclusion != r.rule.rule.conclusion) continue;
    if (is_pd(m.rule.premise, config.pd_items)) continue;
    if (m.rule.premise.size() <= r.b.size() || !is_subset(r.b, m.rule.premise)) continue;
    if (contains_rule(redlining, m.rule)) continue;
    out.push_back(&m);
  }
  return out;
}

MeasureValue live_measure(const SupportSource& src, const Itemset& a, const Itemset& b, ItemId c,
                          Measure f) {
  if (f == Measure::kClift) return most_favored_clift(src, a, b, c).value;
  return measure(contingency(src, a, b, c), f);
}

}  // namespace

RuleDatabase extract_rules(const DecisionTable& table, const ResolvedConfig& config,
                           bool with_redlining) {
  RuleDatabase db;
  db.fr = mine_rules(table, config.ms, config.raw.min_conf);
  const TableSupport src(table);
  db.audit = audit_rules(db.fr, src, config);
  if (with_redlining) db.rr = find_redlining(db.fr, src, config);
  return db;
}

std::string approach_name(Approach a) {
  switch (a) {
    case Approach::kNone:
      return "none";
    case Approach::kDrp:
      return "drp";
    case Approach::kRg:
      return "rg";
  }
  return "drp";
}

std::vector<PlanEntry> select_approach(const DecisionTable& table, const RuleDatabase& db,
                                       const ResolvedConfig& config) {
  const TableSupport src(table);
  const std::vector<ClassificationRule> redlining = redlining_rules(db.rr);
  const double d = config.raw.d;
  std::vector<PlanEntry> plan;
  for (const RuleAudit& r : db.audit.mr) {
    PlanEntry e;
    e.rule = r;
    e.approach = Approach::kDrp;
    const ItemId c = r.rule.rule.conclusion;
    bool case1 = false;
    std::optional<double> best;
    for (const MinedRule* m : pnd_companions(db, r, redlining, config)) {
      const Itemset dset = set_difference(m->rule.premise, r.b);
      const DInstanceCheck chk = d_instance(r.a, dset, r.b, c, d, src);
      if (chk.holds()) {
        case1 = true;
        break;
      }
      if (!chk.condition2) continue;
      const double dif1 = d * chk.conf_r_prime - chk.conf_r;
      if (!best || dif1 < *best) {
        best = dif1;
        e.rb = *m;
      }
    }
    if (case1) {
      e.approach = Approach::kNone;
      e.rb.reset();
    } else if (best) {
      e.approach = Approach::kRg;
      e.dif1 = *best;
      const double dif_r = confidence(src, set_union(r.a, r.b), c) -
                           config.raw.alpha * confidence(src, r.b, c);
      if (dif_r < e.dif1) {
        e.approach = Approach::kDrp;
        e.rb.reset();
      }
    }
    plan.push_back(std::move(e));
  }
  return plan;
}

Transformer::Transformer(DecisionTable& table, const ResolvedConfig& config,
                         const std::vector<MinedRule>& frozen_fr)
    : table_(table), config_(config) {
  for (const MinedRule& m : frozen_fr) {
    premises_.push_back(m.rule.premise);
    rules_.push_back(m.rule);
  }
  active_.assign(rules_.size(), true);
}

void Transformer::retire(const ClassificationRule& r) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i] == r) active_[i] = false;
  }
}

std::vector<std::size_t> Transformer::order_by_impact(const TidSet& candidates) const {
  std::vector<std::size_t> impact(table_.size(), 0);
  for (std::size_t i = 0; i < premises_.size(); ++i) {
    if (!active_[i]) continue;
    TidSet hit = table_.tids(premises_[i]);
    hit &= candidates;
    hit.for_each([&](std::size_t rec) { ++impact[rec]; });
  }
  std::vector<std::size_t> order = candidates.members();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return impact[x] < impact[y]; });
  return order;
}

TidSet Transformer::negation(const Itemset& s) const { return table_.tids(s).complement(); }

void Transformer::flip_class(std::size_t record) {
  const std::size_t attr = table_.schema().class_attribute();
  const std::uint32_t from = table_.value(record, attr);
  const std::uint32_t to = from == 0 ? 1 : 0;
  table_.assign(record, attr, to);
  log_.push_back(Flip{record, attr, from, to});
}

void Transformer::flip_to(std::size_t record, const Itemset& items) {
  const Schema& schema = table_.schema();
  for (ItemId id : items) {
    const std::size_t attr = schema.item_attribute(id);
    const auto to = static_cast<std::uint32_t>(schema.item_value(id));
    const std::uint32_t from = table_.value(record, attr);
    if (from == to) continue;
    table_.assign(record, attr, to);
    log_.push_back(Flip{record, attr, from, to});
  }
}

bool Transformer::direct_violated(const RuleAudit& r) const {
  const TableSupport src(table_);
  const MeasureValue v =
      live_measure(src, r.a, r.b, r.rule.rule.conclusion, config_.raw.measure);
  return is_alpha_discriminatory(v, config_.raw.alpha);
}

double Transformer::live_elb(const RedliningAudit& rr) const {
  const TableSupport src(table_);
  const ItemId c = rr.rule.rule.conclusion;
  const Itemset db = set_union(rr.d, rr.b);
  const std::size_t supp_db = src.support(db);
  const std::size_t supp_ab = src.support(set_union(rr.a, rr.b));
  if (supp_db == 0 || supp_ab == 0) return 0.0;
  const std::size_t dba = src.support(set_union(db, rr.a));
  const double beta1 = static_cast<double>(dba) / static_cast<double>(supp_ab);
  const double beta2 = static_cast<double>(dba) / static_cast<double>(supp_db);
  const auto e = elb(confidence(src, db, c), confidence(src, rr.b, c), beta1, beta2);
  return e ? *e : 0.0;
}

std::optional<std::size_t> Transformer::direct(const RuleAudit& r, DrpMethod method) {
  const ItemId c = r.rule.rule.conclusion;
  const ItemId not_c = table_.schema().other_class_item(c);
  TidSet dc = table_.tids(r.b);
  dc &= negation(r.a);
  dc &= table_.tids(not_c);
  const std::vector<std::size_t> order = order_by_impact(dc);
  std::size_t changed = 0;
  while (direct_violated(r)) {
    if (changed == order.size()) return std::nullopt;
    const std::size_t rec = order[changed++];
    if (method == DrpMethod::kMethod1) {
      flip_to(rec, r.a);
    } else {
      flip_class(rec);
    }
  }
  return changed;
}

std::optional<std::size_t> Transformer::generalize(const RuleAudit& r, const MinedRule& rb) {
  const ItemId c = r.rule.rule.conclusion;
  const Itemset d = set_difference(rb.rule.premise, r.b);
  const Itemset ab = set_union(r.a, r.b);
  TidSet dc = table_.tids(ab);
  dc &= negation(d);
  dc &= table_.tids(c);
  const std::vector<std::size_t> order = order_by_impact(dc);
  const double dval = config_.raw.d;
  if (dval <= 0) return 0;
  std::size_t changed = 0;
  for (;;) {
    const TableSupport src(table_);
    const double target = confidence(src, rb.rule.premise, c) / dval;
    if (confidence(src, ab, c) <= target + kSlack) break;
    if (changed == order.size()) return std::nullopt;
    flip_class(order[changed++]);
  }
  return changed;
}

std::optional<std::size_t> Transformer::indirect(const RedliningAudit& rr, DrpMethod method) {
  const ItemId not_c = table_.schema().other_class_item(rr.rule.rule.conclusion);
  TidSet dc = table_.tids(rr.b);
  dc &= negation(rr.a);
  dc &= negation(rr.d);
  dc &= table_.tids(not_c);
  const std::vector<std::size_t> order = order_by_impact(dc);
  std::size_t changed = 0;
  while (meets_alpha(live_elb(rr), config_.raw.alpha, Measure::kElift)) {
    if (changed == order.size()) return std::nullopt;
    const std::size_t rec = order[changed++];
    if (method == DrpMethod::kMethod1) {
      flip_to(rec, rr.a);
    } else {
      flip_class(rec);
    }
  }
  return changed;
}

std::optional<std::size_t> Transformer::overlap(const RedliningAudit& rr, const RuleAudit& r) {
  const ItemId not_c = table_.schema().other_class_item(rr.rule.rule.conclusion);
  TidSet dc = table_.tids(rr.b);
  dc &= negation(rr.a);
  dc &= negation(rr.d);
  dc &= table_.tids(not_c);
  const std::vector<std::size_t> order = order_by_impact(dc);
  std::size_t changed = 0;
  // Runs until both requirements hold.
  while (meets_alpha(live_elb(rr), config_.raw.alpha, Measure::kElift) || direct_violated(r)) {
    if (changed == order.size()) return std::nullopt;
    flip_class(order[changed++]);
  }
  return changed;
}

namespace {

RuleOutcome outcome(const ClassificationRule& rule, std::string action,
                    const std::optional<std::size_t>& changed) {
  RuleOutcome o;
  o.rule = rule;
  o.action = std::move(action);
  o.resolved = changed.has_value();
  o.changed = changed.value_or(0);
  return o;
}

}  // namespace

std::vector<RuleOutcome> drp_pass(Transformer& t, const RuleDatabase& db, DrpMethod method) {
  const std::string action = method == DrpMethod::kMethod1 ? "drp1" : "drp2";
  std::vector<RuleOutcome> out;
  for (const RuleAudit& r : db.audit.mr) {
    t.retire(r.rule.rule);
    out.push_back(outcome(r.rule.rule, action, t.direct(r, method)));
  }
  return out;
}

std::vector<RuleOutcome> drp_rg_pass(Transformer& t, const std::vector<PlanEntry>& plan,
                                     DrpMethod method) {
  const std::string drp = method == DrpMethod::kMethod1 ? "drp1" : "drp2";
  std::vector<RuleOutcome> out;
  for (const PlanEntry& e : plan) {
    const ClassificationRule& rule = e.rule.rule.rule;
    t.retire(rule);
    switch (e.approach) {
      case Approach::kNone:
        out.push_back(outcome(rule, "none", std::size_t{0}));
        break;
      case Approach::kRg:
        out.push_back(outcome(rule, "rg", t.generalize(e.rule, *e.rb)));
        break;
      case Approach::kDrp:
        out.push_back(outcome(rule, drp, t.direct(e.rule, method)));
        break;
    }
  }
  return out;
}

std::vector<RuleOutcome> irp_pass(Transformer& t, const RuleDatabase& db, DrpMethod method) {
  const std::string action = method == DrpMethod::kMethod1 ? "irp1" : "irp2";
  std::vector<RuleOutcome> out;
  for (const RedliningAudit& rr : db.rr) {
    out.push_back(outcome(rr.rule.rule, action, t.indirect(rr, method)));
  }
  return out;
}

std::vector<RuleOutcome> simultaneous_pass(Transformer& t, const RuleDatabase& db) {
  std::vector<RuleOutcome> out;
  std::vector<ClassificationRule> handled;
  for (const RedliningAudit& rr : db.rr) {
    const ClassificationRule ind = rr.indirect();
    if (const RuleAudit* r = find_audit(db.audit.mr, ind)) {
      handled.push_back(ind);
      out.push_back(outcome(rr.rule.rule, "irp2+drp2", t.overlap(rr, *r)));
    } else {
      out.push_back(outcome(rr.rule.rule, "irp2", t.indirect(rr, DrpMethod::kMethod2)));
    }
  }
  for (const RuleAudit& r : db.audit.mr) {
    if (contains_rule(handled, r.rule.rule)) continue;
    t.retire(r.rule.rule);
    out.push_back(outcome(r.rule.rule, "drp2", t.direct(r, DrpMethod::kMethod2)));
  }
  return out;
}

std::vector<RuleAudit> unexplained_mr(const DecisionTable& table, const RuleDatabase& db,
                                      const ResolvedConfig& config) {
  const TableSupport src(table);
  const std::vector<ClassificationRule> redlining = redlining_rules(db.rr);
  std::vector<RuleAudit> out;
  for (const RuleAudit& r : db.audit.mr) {
    bool explained = false;
    for (const MinedRule* m : pnd_companions(db, r, redlining, config)) {
      const Itemset d = set_difference(m->rule.premise, r.b);
      if (d_instance(r.a, d, r.b, r.rule.rule.conclusion, config.raw.d, src).holds()) {
        explained = true;
        break;
      }
    }
    if (!explained) out.push_back(r);
  }
  return out;
}

namespace {

std::vector<ClassificationRule> pending_rules(PipelineKind kind, const DecisionTable& table,
                                              const RuleDatabase& db,
                                              const ResolvedConfig& config) {
  std::vector<ClassificationRule> out;
  auto add_mr = [&](const std::vector<RuleAudit>& mr) {
    for (const RuleAudit& r : mr) out.push_back(r.rule.rule);
  };
  switch (kind) {
    case PipelineKind::kDirect:
      add_mr(db.audit.mr);
      break;
    case PipelineKind::kDrpRg:
      add_mr(unexplained_mr(table, db, config));
      break;
    case PipelineKind::kIndirect:
      out = redlining_rules(db.rr);
      break;
    case PipelineKind::kSimultaneous:
      add_mr(db.audit.mr);
      for (const ClassificationRule& r : redlining_rules(db.rr)) {
        if (!contains_rule(out, r)) out.push_back(r);
      }
      break;
  }
  return out;
}

}  // namespace

PipelineResult run_pipeline(const DecisionTable& table, const ResolvedConfig& config,
                            const PipelineOptions& options) {
  PipelineResult res;
  res.table = table;
  const bool with_redlining = options.kind != PipelineKind::kDirect;
  for (std::size_t round = 1;; ++round) {
    const RuleDatabase db = extract_rules(res.table, config, with_redlining);
    const std::vector<ClassificationRule> pending =
        pending_rules(options.kind, res.table, db, config);
    if (pending.empty()) break;
    if (round > options.max_rounds) {
      res.unresolved = pending;
      break;
    }
    Transformer t(res.table, config, db.fr);
    std::vector<RuleOutcome> outcomes;
    switch (options.kind) {
      case PipelineKind::kDirect:
        outcomes = drp_pass(t, db, options.method);
        break;
      case PipelineKind::kDrpRg:
        outcomes = drp_rg_pass(t, select_approach(res.table, db, config), options.method);
        break;
      case PipelineKind::kIndirect:
        outcomes = irp_pass(t, db, options.method);
        break;
      case PipelineKind::kSimultaneous:
        outcomes = simultaneous_pass(t, db);
        break;
    }
    for (RuleOutcome& o : outcomes) {
      o.round = round;
      res.outcomes.push_back(std::move(o));
    }
    res.log.insert(res.log.end(), t.log().begin(), t.log().end());
    res.rounds = round;
  }
  return res;
}

}  // namespace fairmine
