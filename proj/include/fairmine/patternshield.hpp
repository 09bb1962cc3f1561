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

// Sanitization of published frequent pattern sets: inference channels and
// additive k-anonymization, and support increments that make alpha-
// discriminatory (or d-unexplainable) patterns alpha-protective.

#ifndef FAIRMINE_PATTERNSHIELD_HPP_
#define FAIRMINE_PATTERNSHIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fairmine/discrimination.hpp"
#include "fairmine/miner.hpp"
#include "fairmine/model.hpp"

namespace fairmine {

// Inclusion-exclusion over I ⊆ X ⊆ J; absent patterns count 0.
std::int64_t channel_support(const PatternSet& patterns, const Itemset& i, const Itemset& j);

struct InferenceChannel {
  Itemset i;
  Itemset j;  // I ⊆ J; I == J flags a pattern with 0 < supp < k
  std::int64_t support = 0;
};

// Pairs of patterns in the set with 0 < channel support < k, ordered by
// (I, J) in itemset order.
std::vector<InferenceChannel> find_channels(const PatternSet& patterns, std::size_t k);

// Blocks every channel by adding k to I and to all its subsets in the set,
// re-scanning until none is left.
PatternSet privacy_additive_sanitize(const PatternSet& patterns, std::size_t k,
                                     std::vector<InferenceChannel>* blocked = nullptr);

struct PatternAudit {
  Itemset pattern;  // {A, B, C}
  Itemset a;
  Itemset b;
  ContingencyCounts counts;
  MeasureValue value;
  bool discriminatory = false;
  // False when a count the measure needs is missing from the set (read as 0).
  bool complete = true;
};

// Every PD pattern (holds the negative class item and a PD item).
std::vector<PatternAudit> audit_pd_patterns(const PatternSet& patterns,
                                            const ResolvedConfig& config);
std::vector<PatternAudit> detect_disc_patterns(const PatternSet& patterns,
                                               const ResolvedConfig& config);

struct SanitizationDelta {
  Itemset pattern;
  Itemset target;  // p_t; it and its subsets receive the increment
  std::size_t delta = 0;
  Measure measure = Measure::kElift;
  double before = 0.0;
  double after = 0.0;  // recomputed from the counts with delta applied
  bool feasible = true;
};

// Increments that keep the target pattern: X = {A,B} for the slift family,
// olift and clift; {B,C} for the elift family.
Itemset sanitization_target(const PatternAudit& audit, Measure f);

// Smallest positive delta that makes the pattern alpha-protective; empty
// when the pattern is not alpha-discriminatory.
std::optional<SanitizationDelta> delta_for(const Itemset& pattern, const PatternSet& patterns,
                                           const ResolvedConfig& config);

// Adds delta to target and every subset present in the set; returns the
// number of patterns changed.
std::size_t apply_delta(PatternSet& patterns, const Itemset& target, std::size_t delta);

// Descending number of strict subsets inside the list; ties keep itemset order.
std::vector<PatternAudit> sort_by_impact(std::vector<PatternAudit> patterns);

struct SanitizeReport {
  std::vector<InferenceChannel> channels_blocked;
  std::vector<SanitizationDelta> deltas;
  std::vector<Itemset> unresolved;
  // Patterns that were protective before a pass and discriminatory after it.
  std::size_t new_discrimination = 0;
  std::size_t rounds = 0;
};

struct SanitizeOptions {
  // Detection is re-run after each pass until clean or this many passes.
  std::size_t max_rounds = 32;
};

PatternSet antidisc_sanitize(const PatternSet& patterns, const std::vector<PatternAudit>& dd,
                             const ResolvedConfig& config, SanitizeReport* report = nullptr,
                             const SanitizeOptions& options = {});

// The pattern is a d-instance of a PND pattern {D, B, C} with D drawn from
// the legally grounded items.
bool is_d_explainable(const PatternAudit& audit, const PatternSet& patterns,
                      const ResolvedConfig& config);
std::vector<PatternAudit> detect_unexplainable(const PatternSet& patterns,
                                               const ResolvedConfig& config);

PatternSet unexplainable_sanitize(const PatternSet& patterns, const std::vector<PatternAudit>& bad,
                                  const ResolvedConfig& config, SanitizeReport* report = nullptr,
                                  const SanitizeOptions& options = {});

enum class PatternMode { kPrivacy, kDiscrimination, kUnexplainable, kBoth, kBothUnexplainable };

// kBoth: k-anonymous then alpha-protective, alternating until both hold.
PatternSet protect_patterns(const PatternSet& patterns, std::size_t k,
                            const ResolvedConfig& config, PatternMode mode,
                            SanitizeReport* report = nullptr, const SanitizeOptions& options = {});

}  // namespace fairmine

#endif  // FAIRMINE_PATTERNSHIELD_HPP_
