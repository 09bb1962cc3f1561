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

// Discrimination measures over contingency cells, the elb bound for indirect
// discrimination, and the rule classifiers built on them.

#ifndef FAIRMINE_DISCRIMINATION_HPP_
#define FAIRMINE_DISCRIMINATION_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "fairmine/miner.hpp"
#include "fairmine/model.hpp"

namespace fairmine {

// Read-only support counts, backed either by records or by a pattern set.
class SupportSource {
 public:
  virtual ~SupportSource() = default;
  virtual const Schema& schema() const = 0;
  virtual std::size_t support(const Itemset& s) const = 0;
  virtual std::size_t total() const = 0;
};

class TableSupport : public SupportSource {
 public:
  explicit TableSupport(const DecisionTable& table) : table_(table) {}
  const Schema& schema() const override { return table_.schema(); }
  std::size_t support(const Itemset& s) const override { return table_.support(s); }
  std::size_t total() const override { return table_.size(); }

 private:
  const DecisionTable& table_;
};

// Patterns missing from the set count as 0.
class PatternSupport : public SupportSource {
 public:
  explicit PatternSupport(const PatternSet& patterns) : patterns_(patterns) {}
  const Schema& schema() const override { return patterns_.schema(); }
  std::size_t support(const Itemset& s) const override { return patterns_.support_or_zero(s); }
  std::size_t total() const override { return patterns_.total(); }

 private:
  const PatternSet& patterns_;
};

ContingencyCounts contingency(const SupportSource& source, const Itemset& a, const Itemset& b,
                              ItemId c);
// conf(premise -> c); 0 when the premise has no support.
double confidence(const SupportSource& source, const Itemset& premise, ItemId c);

struct MeasureValue {
  Measure measure = Measure::kElift;
  double value = 0.0;
  bool defined = false;
};

constexpr std::size_t kMeasureCount = 8;
constexpr std::array<Measure, kMeasureCount> kAllMeasures = {
    Measure::kElift,  Measure::kSlift,  Measure::kOlift,  Measure::kClift,
    Measure::kSliftD, Measure::kEliftD, Measure::kSliftC, Measure::kEliftC};

// clift reads (a2, n2) as the cells of the most favoured group, so with
// ordinary counts it evaluates like slift.
MeasureValue measure(const ContingencyCounts& counts, Measure f);

// Relative slack used so that exact boundary values count as meeting alpha.
bool meets_alpha(double value, double alpha, Measure f);
bool is_alpha_discriminatory(const MeasureValue& v, double alpha);

// Most favoured group for clift: the value combination of A's attributes
// with minimal non-zero conf(v2, B -> C); ties go to the smallest labels.
struct CliftResult {
  std::optional<Itemset> favored;
  MeasureValue value;  // clift of the given A against the favoured group
  ContingencyCounts counts;
};
CliftResult most_favored_clift(const SupportSource& source, const Itemset& a, const Itemset& b,
                               ItemId c);

// elb(gamma, delta) with the background confidences beta1, beta2; empty
// when delta or beta2 is zero.
std::optional<double> elb(double gamma, double delta, double beta1, double beta2);

// A = premise ∩ pd_items, B = the rest.
struct PdSplit {
  Itemset a;
  Itemset b;
};
PdSplit split_pd(const Itemset& premise, const Itemset& pd_items);
bool is_pd(const Itemset& premise, const Itemset& pd_items);

struct RuleAudit {
  MinedRule rule;
  Itemset a;
  Itemset b;
  ContingencyCounts counts;
  std::array<MeasureValue, kMeasureCount> values;  // indexed like kAllMeasures
  bool alpha_discriminatory = false;

  const MeasureValue& value(Measure f) const;
};

RuleAudit audit_rule(const MinedRule& rule, const SupportSource& source,
                     const ResolvedConfig& config);

struct AuditResult {
  std::vector<RuleAudit> mr;  // alpha-discriminatory PD rules
  std::vector<RuleAudit> pr;  // alpha-protective PD rules
};

// PD rules concluding the negative class, split by the configured measure.
AuditResult audit_rules(const std::vector<MinedRule>& rules, const SupportSource& source,
                        const ResolvedConfig& config);

struct RedliningAudit {
  MinedRule rule;  // PND rule D, B -> C
  Itemset a;       // DI_b itemset
  Itemset d;
  Itemset b;
  double gamma = 0.0;  // conf(D,B -> C)
  double delta = 0.0;  // conf(B -> C)
  double beta1 = 0.0;  // supp(A,B,D) / supp(A,B)
  double beta2 = 0.0;  // conf(D,B -> A)
  double elb_value = 0.0;
  bool redlining = false;

  // The indirect rule A, B -> C this combination bounds.
  ClassificationRule indirect() const { return {set_union(a, b), rule.rule.conclusion}; }
};

// Background rule D,B -> A must be frequent: supp(D,B,A) >= ms.
std::optional<RedliningAudit> redlining_check(const MinedRule& rule, const Itemset& a,
                                              const Itemset& d, const SupportSource& source,
                                              const ResolvedConfig& config);

// Every redlining (rule, A, D|B) combination among the PND rules that
// conclude the negative class.
std::vector<RedliningAudit> find_redlining(const std::vector<MinedRule>& rules,
                                           const SupportSource& source,
                                           const ResolvedConfig& config);

// Distinct PND rules among the combinations.
std::vector<ClassificationRule> redlining_rules(const std::vector<RedliningAudit>& rr);
// Distinct indirect rules A, B -> C among the combinations.
std::vector<ClassificationRule> indirect_rules(const std::vector<RedliningAudit>& rr);

struct DInstanceCheck {
  bool condition1 = false;  // conf(r) >= d * conf(r')
  bool condition2 = false;  // conf(A,B -> D) >= d
  double conf_r = 0.0;
  double conf_r_prime = 0.0;
  double conf_r2 = 0.0;
  bool holds() const { return condition1 && condition2; }
};

// r' = A,B -> C is a d-instance of r = D,B -> C.
DInstanceCheck d_instance(const Itemset& a, const Itemset& d, const Itemset& b, ItemId c,
                          double dval, const SupportSource& source);

}  // namespace fairmine

#endif  // FAIRMINE_DISCRIMINATION_HPP_
