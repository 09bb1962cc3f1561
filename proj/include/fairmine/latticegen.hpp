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

// Full-domain generalization over a multi-attribute lattice: frequency sets,
// k-anonymity, and the bottom-up search for generalizations that are both
// k-anonymous and alpha-protective.

#ifndef FAIRMINE_LATTICEGEN_HPP_
#define FAIRMINE_LATTICEGEN_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairmine/model.hpp"

namespace fairmine {

// One level index per QI attribute, in Lattice order.
using DomainTuple = std::vector<std::size_t>;

// Precomputed per-level value codes for every record of a table.
class Lattice {
 public:
  // QI = the attributes with a hierarchy, ordered by table attribute index.
  // `qi` restricts the QI to the named attributes when non-empty.
  Lattice(const DecisionTable& table, const std::vector<GeneralizationHierarchy>& hierarchies,
          const std::vector<std::string>& qi = {});

  const DecisionTable& table() const { return *table_; }
  std::size_t qi_count() const { return attrs_.size(); }
  std::size_t table_attribute(std::size_t q) const { return attrs_[q]; }
  const std::string& qi_name(std::size_t q) const;
  const GeneralizationHierarchy& hierarchy(std::size_t q) const { return hierarchies_[q]; }
  std::size_t top_level(std::size_t q) const { return hierarchies_[q].height(); }
  std::optional<std::size_t> find_qi(std::string_view name) const;

  std::uint32_t code(std::size_t q, std::size_t level, std::size_t record) const {
    return codes_[q][level][record];
  }
  // Code of the level+1 ancestor of a level value.
  std::uint32_t parent_code(std::size_t q, std::size_t level, std::uint32_t c) const {
    return parents_[q][level][c];
  }
  const std::vector<std::string>& level_values(std::size_t q, std::size_t level) const {
    return values_[q][level];
  }

  std::size_t class_value(std::size_t record) const;
  std::size_t class_arity() const;

  // "<S1,R1>" style, using the hierarchy level names.
  std::string tuple_text(const DomainTuple& dt) const;
  DomainTuple parse_tuple(std::string_view text) const;
  std::vector<DomainTuple> all_tuples() const;

 private:
  const DecisionTable* table_;
  std::vector<std::size_t> attrs_;
  std::vector<GeneralizationHierarchy> hierarchies_;
  std::vector<std::vector<std::vector<std::uint32_t>>> codes_;
  std::vector<std::vector<std::vector<std::uint32_t>>> parents_;
  std::vector<std::vector<std::vector<std::string>>> values_;
};

// Replaces every QI value by its ancestor at the tuple's level. Non-QI
// attributes and the class are copied.
DecisionTable generalize(const Lattice& lattice, const DomainTuple& dt);
DecisionTable generalize(const DecisionTable& table,
                         const std::vector<GeneralizationHierarchy>& hierarchies,
                         const std::map<std::string, std::size_t>& levels);

// A subset of the QI (ascending QI positions) with a level per attribute.
struct LatticeNode {
  std::vector<std::size_t> attrs;
  std::vector<std::size_t> levels;

  std::size_t height() const;
  auto operator<=>(const LatticeNode&) const = default;
  bool operator==(const LatticeNode&) const = default;
};

LatticeNode full_node(const DomainTuple& dt);
// Nodes one level higher in exactly one attribute, within the hierarchy range.
std::vector<LatticeNode> direct_generalizations(const Lattice& lattice, const LatticeNode& n);

// Generalized value tuple -> record count per class value.
struct FrequencySet {
  LatticeNode node;
  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> cells;

  std::size_t count(const std::vector<std::uint32_t>& key) const;
  // Value labels -> total count, for reports and tests.
  std::map<std::vector<std::string>, std::size_t> labelled(const Lattice& lattice) const;
};

FrequencySet frequency_set(const Lattice& lattice, const LatticeNode& node);
// Roll-up from a direct specialization's frequency set.
FrequencySet frequency_set(const Lattice& lattice, const LatticeNode& node,
                           const FrequencySet& parent);

bool is_k_anonymous(const FrequencySet& fs, std::size_t k);

struct LatticeOptions {
  std::size_t k = 1;
  bool check_discrimination = false;
  Measure measure = Measure::kElift;
  double alpha = 1.2;
  std::size_t ms = 1;
  std::size_t tau = 4;
  std::vector<std::string> da;  // discriminatory attributes
  std::string negative_class;
};

// DA comes from the PD attributes of the DI_b itemsets.
LatticeOptions lattice_options(const Lattice& lattice, const ResolvedConfig& config);

// True when the node holds a DA attribute below its singleton level.
bool is_pd_node(const Lattice& lattice, const LatticeNode& node, const LatticeOptions& options);

enum class MrCase { kCase1, kCase2, kCase3 };
std::string mr_case_name(MrCase c);

// Classifies the PD groups of one node. Throws when the node is not PD.
MrCase check_alpha_protection(const Lattice& lattice, const FrequencySet& fs,
                              const LatticeOptions& options);

struct IncognitoStats {
  std::size_t nodes_visited = 0;
  std::size_t k_checks = 0;
  std::size_t alpha_checks = 0;
  std::size_t alpha_marked = 0;
};

// Every full-domain generalization that is k-anonymous and, through the
// QI subsets of size <= tau, alpha-protective. Sorted ascending.
std::vector<DomainTuple> alpha_protective_incognito(const Lattice& lattice,
                                                    const LatticeOptions& options,
                                                    IncognitoStats* stats = nullptr);

struct QualityReport {
  std::size_t gh = 0;
  double dr = 0.0;
  double cm = 0.0;
};

QualityReport tuple_quality(const Lattice& lattice, const DomainTuple& dt);

enum class Criterion { kGh, kDr, kCm };
Criterion parse_criterion(std::string_view name);

// Ties go to the lexicographically smallest tuple.
DomainTuple select_minimal(const Lattice& lattice, const std::vector<DomainTuple>& candidates,
                           Criterion criterion);

}  // namespace fairmine

#endif  // FAIRMINE_LATTICEGEN_HPP_
