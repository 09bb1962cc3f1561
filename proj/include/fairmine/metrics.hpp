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

// Utility and quality measures: rule-level prevention/preservation degrees
// and information loss, pattern distortion, generalization quality and the
// accuracy of a CMAR-style classifier built from class-bearing patterns.

#ifndef FAIRMINE_METRICS_HPP_
#define FAIRMINE_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "fairmine/latticegen.hpp"
#include "fairmine/miner.hpp"
#include "fairmine/model.hpp"
#include "fairmine/patternshield.hpp"

namespace fairmine {

// Rule databases of one table state, each sorted by rule order.
struct RuleSnapshot {
  std::vector<ClassificationRule> fr;  // frequent rules, both classes
  std::vector<ClassificationRule> mr;  // alpha-discriminatory PD rules
  std::vector<ClassificationRule> pr;  // alpha-protective PD rules
  std::vector<ClassificationRule> rr;  // redlining PND rules
  std::vector<ClassificationRule> nr;  // non-redlining PND rules concluding C
};

// `exempt_explainable` drops MR rules that are d-instances of a
// non-redlining PND rule.
RuleSnapshot rule_snapshot(const DecisionTable& table, const ResolvedConfig& config,
                           bool with_redlining, bool exempt_explainable = false);

// Percentages; nullopt where the reference set is empty ("n.a.").
struct RuleUtilityReport {
  std::optional<double> ddpd;
  std::optional<double> ddpp;
  std::optional<double> idpd;
  std::optional<double> idpp;
  std::optional<double> mc;
  std::optional<double> gc;
  // MR' holds rules not in MR, so DDPD is not a pure removal rate.
  bool mr_not_subset = false;
  bool rr_not_subset = false;
};

RuleUtilityReport rule_utility(const RuleSnapshot& before, const RuleSnapshot& after);

// |FR \ FR'| / |FR| and |FR' \ FR| / |FR'| in percent.
std::optional<double> misses_cost(const std::vector<ClassificationRule>& before,
                                  const std::vector<ClassificationRule>& after);
std::optional<double> ghost_cost(const std::vector<ClassificationRule>& before,
                                 const std::vector<ClassificationRule>& after);

struct PatternUtilityReport {
  double changed_fraction = 0.0;  // percent
  double distortion_error = 0.0;  // signed, percent
  double abs_distortion = 0.0;    // absolute-value companion, percent
  std::optional<double> dpd;
  std::optional<double> ndd;
  std::size_t patterns = 0;  // non-empty patterns of FP
  std::size_t changed = 0;
  std::size_t disc_before = 0;
  std::size_t disc_after = 0;
};

// Over the non-empty patterns of FP; TP patterns missing from FP are ignored.
PatternUtilityReport pattern_utility(const PatternSet& fp, const PatternSet& tp,
                                     const ResolvedConfig& config);

QualityReport quality(const Lattice& lattice, const DomainTuple& dt);

// Pearson chi-square of the 2x2 table of X and C; 0 when a margin is empty.
double chi_square(double supp_x, double supp_c, double supp_xc, double n);
// Upper bound of chi-square for the given margins; 0 when undefined.
double max_chi_square(double supp_x, double supp_c, double n);

struct CmarResult {
  double accuracy = 0.0;
  std::size_t records = 0;
  std::size_t correct = 0;
  std::size_t unanimous = 0;
  std::size_t weighted = 0;
  std::size_t fallback = 0;  // no pattern matched
};

// Patterns of `patterns` holding a class item and a non-empty X vote on
// each record of `test`; values are matched by attribute and value name.
CmarResult cmar_classify(const PatternSet& patterns, const DecisionTable& test);

}  // namespace fairmine

#endif  // FAIRMINE_METRICS_HPP_
