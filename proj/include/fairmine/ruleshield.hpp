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

// Record-level data transformations that remove direct and indirect
// discrimination from a decision table: direct rule protection, rule
// generalization, indirect rule protection and the combined algorithm.

#ifndef FAIRMINE_RULESHIELD_HPP_
#define FAIRMINE_RULESHIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairmine/discrimination.hpp"
#include "fairmine/miner.hpp"
#include "fairmine/model.hpp"

namespace fairmine {

struct Flip {
  std::size_t record = 0;
  std::size_t attribute = 0;
  std::uint32_t from = 0;
  std::uint32_t to = 0;
};

// Rules and redlining combinations extracted from one table state.
struct RuleDatabase {
  std::vector<MinedRule> fr;
  AuditResult audit;
  std::vector<RedliningAudit> rr;
};

RuleDatabase extract_rules(const DecisionTable& table, const ResolvedConfig& config,
                           bool with_redlining);

enum class Approach { kNone, kDrp, kRg };
std::string approach_name(Approach a);

struct PlanEntry {
  RuleAudit rule;
  Approach approach = Approach::kDrp;
  std::optional<MinedRule> rb;  // companion PND rule D,B -> C for RG
  double dif1 = 0.0;
};

// Chooses no transformation, rule generalization or direct rule protection
// for each alpha-discriminatory rule.
std::vector<PlanEntry> select_approach(const DecisionTable& table, const RuleDatabase& db,
                                       const ResolvedConfig& config);

enum class DrpMethod { kMethod1, kMethod2 };

// Mutable state of one transformation pass.
class Transformer {
 public:
  Transformer(DecisionTable& table, const ResolvedConfig& config,
              const std::vector<MinedRule>& frozen_fr);

  // Each call returns the number of records changed, or nullopt when the
  // candidate records ran out before the requirement held.
  std::optional<std::size_t> direct(const RuleAudit& r, DrpMethod method);
  std::optional<std::size_t> generalize(const RuleAudit& r, const MinedRule& rb);
  std::optional<std::size_t> indirect(const RedliningAudit& rr, DrpMethod method);
  // Both requirements of a rule that is direct and indirect at once.
  std::optional<std::size_t> overlap(const RedliningAudit& rr, const RuleAudit& r);

  // Removes r from the rules that count towards record impact.
  void retire(const ClassificationRule& r);
  const std::vector<Flip>& log() const { return log_; }

  // Candidate records ordered by ascending impact, ties by record id.
  std::vector<std::size_t> order_by_impact(const TidSet& candidates) const;

 private:
  bool direct_violated(const RuleAudit& r) const;
  double live_elb(const RedliningAudit& rr) const;
  void flip_class(std::size_t record);
  void flip_to(std::size_t record, const Itemset& items);
  TidSet negation(const Itemset& s) const;

  DecisionTable& table_;
  const ResolvedConfig& config_;
  std::vector<Itemset> premises_;
  std::vector<ClassificationRule> rules_;
  std::vector<bool> active_;
  std::vector<Flip> log_;
};

enum class PipelineKind { kDirect, kDrpRg, kIndirect, kSimultaneous };

struct PipelineOptions {
  PipelineKind kind = PipelineKind::kDirect;
  DrpMethod method = DrpMethod::kMethod2;
  // Further passes are run on the re-extracted rules until nothing is left
  // to repair or this many passes have run.
  std::size_t max_rounds = 8;
};

struct RuleOutcome {
  ClassificationRule rule;
  std::string action;
  std::size_t changed = 0;
  bool resolved = true;
  std::size_t round = 1;
};

struct PipelineResult {
  DecisionTable table;
  std::vector<Flip> log;
  std::vector<RuleOutcome> outcomes;
  std::vector<ClassificationRule> unresolved;
  std::size_t rounds = 0;
};

PipelineResult run_pipeline(const DecisionTable& table, const ResolvedConfig& config,
                            const PipelineOptions& options);

// Single passes over a fixed rule database; run_pipeline wraps these.
std::vector<RuleOutcome> drp_pass(Transformer& t, const RuleDatabase& db, DrpMethod method);
std::vector<RuleOutcome> drp_rg_pass(Transformer& t, const std::vector<PlanEntry>& plan,
                                     DrpMethod method);
std::vector<RuleOutcome> irp_pass(Transformer& t, const RuleDatabase& db, DrpMethod method);
std::vector<RuleOutcome> simultaneous_pass(Transformer& t, const RuleDatabase& db);

// MR after the rule-generalization pipeline: rules that are d-instances of
// a non-redlining PND rule are exempt.
std::vector<RuleAudit> unexplained_mr(const DecisionTable& table, const RuleDatabase& db,
                                      const ResolvedConfig& config);

}  // namespace fairmine

#endif  // FAIRMINE_RULESHIELD_HPP_
