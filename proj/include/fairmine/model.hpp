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

// Core data model: schemas, items, itemsets, decision tables, generalization
// hierarchies and the protection configuration.

#ifndef FAIRMINE_MODEL_HPP_
#define FAIRMINE_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fairmine/tidset.hpp"

namespace fairmine {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for configuration problems; the CLI maps it to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class AttributeKind { kQuasiIdentifier, kClass };

struct AttributeSchema {
  std::string name;
  std::vector<std::string> domain;
  AttributeKind kind = AttributeKind::kQuasiIdentifier;
  bool pd = false;
};

// Items are dense integers. Ids follow (attribute name, value) lexicographic
// order, so sorting ids sorts items the way reports print them.
using ItemId = std::uint32_t;

// Sorted item ids, at most one per attribute.
using Itemset = std::vector<ItemId>;

class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<AttributeSchema> attributes);

  std::size_t attribute_count() const { return attributes_.size(); }
  const AttributeSchema& attribute(std::size_t a) const { return attributes_[a]; }
  const std::vector<AttributeSchema>& attributes() const { return attributes_; }
  std::optional<std::size_t> find_attribute(std::string_view name) const;
  std::size_t attribute_index(std::string_view name) const;
  std::size_t class_attribute() const { return class_attribute_; }

  std::size_t item_count() const { return item_attribute_.size(); }
  ItemId item(std::size_t attribute, std::size_t value) const {
    return first_item_[attribute] + static_cast<ItemId>(value);
  }
  std::size_t item_attribute(ItemId id) const { return item_attribute_[id]; }
  std::size_t item_value(ItemId id) const { return id - first_item_[item_attribute_[id]]; }
  std::optional<ItemId> find_item(std::string_view attribute, std::string_view value) const;
  // Parses "attribute=value".
  ItemId parse_item(std::string_view text) const;
  std::string item_label(ItemId id) const;
  const std::string& item_value_name(ItemId id) const;

  bool is_class_item(ItemId id) const { return item_attribute_[id] == class_attribute_; }
  ItemId other_class_item(ItemId class_item) const;

 private:
  std::vector<AttributeSchema> attributes_;
  std::vector<ItemId> first_item_;
  std::vector<std::size_t> item_attribute_;
  std::size_t class_attribute_ = 0;
};

// Itemset helpers. All inputs and outputs are sorted id vectors.
Itemset make_itemset(const Schema& schema, std::vector<ItemId> items);
Itemset parse_itemset(const Schema& schema, const std::vector<std::string>& labels);
std::vector<std::string> itemset_labels(const Schema& schema, const Itemset& s);
std::string itemset_text(const Schema& schema, const Itemset& s);
bool is_subset(const Itemset& small, const Itemset& big);
Itemset set_union(const Itemset& a, const Itemset& b);
Itemset set_difference(const Itemset& a, const Itemset& b);
Itemset set_intersection(const Itemset& a, const Itemset& b);
bool contains_item(const Itemset& s, ItemId id);
// True when the two itemsets assign different values to a shared attribute.
bool conflicts(const Schema& schema, const Itemset& a, const Itemset& b);
// Size first, then lexicographic on ids.
bool itemset_less(const Itemset& a, const Itemset& b);

class DecisionTable {
 public:
  DecisionTable() = default;
  // rows[r][a] is the value index of attribute a in record r.
  DecisionTable(Schema schema, std::vector<std::vector<std::uint32_t>> rows);

  const Schema& schema() const { return schema_; }
  std::size_t size() const { return rows_.size(); }
  std::uint32_t value(std::size_t record, std::size_t attribute) const {
    return rows_[record][attribute];
  }
  const std::vector<std::uint32_t>& row(std::size_t record) const { return rows_[record]; }
  ItemId item_at(std::size_t record, std::size_t attribute) const {
    return schema_.item(attribute, rows_[record][attribute]);
  }

  bool supports(std::size_t record, const Itemset& s) const;
  const TidSet& tids(ItemId id) const { return tids_[id]; }
  TidSet tids(const Itemset& s) const;
  std::size_t support(const Itemset& s) const;
  // supp(¬A, B) = supp(B) − supp(A, B).
  std::size_t support_negated(const Itemset& negated, const Itemset& rest) const;

  // Overwrites one cell; keeps the id-lists in sync.
  void assign(std::size_t record, std::size_t attribute, std::uint32_t value);
  // Applies every item of `s` to the record (¬A → A conversion).
  void assign_itemset(std::size_t record, const Itemset& s);

  bool operator==(const DecisionTable& o) const { return rows_ == o.rows_; }

 private:
  Schema schema_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<TidSet> tids_;
};

// Selector for ¬A: records that fail at least one item of A.
struct NegatedSelector {
  Itemset negated;
  bool matches(const DecisionTable& table, std::size_t record) const {
    return negated.empty() ? true : !table.supports(record, negated);
  }
};

NegatedSelector negate(const Itemset& itemset);
// A → ¬A has no unique target value unless every attribute of A is binary.
bool can_convert_to_negation(const Schema& schema, const Itemset& itemset);

struct LoadReport {
  std::size_t rows_read = 0;
  std::size_t rows_dropped = 0;
};

struct TableOptions {
  std::string class_attribute;
  std::vector<std::string> pd_attributes;
  // Optional declared domains; when present, values outside them are errors.
  std::map<std::string, std::vector<std::string>> domains;
  std::string missing_token = "?";
};

DecisionTable load_table(const std::string& csv_path, const TableOptions& options,
                         LoadReport* report = nullptr);
DecisionTable parse_table(std::string_view csv_text, const TableOptions& options,
                          LoadReport* report = nullptr);
std::string table_to_csv(const DecisionTable& table);
void save_table(const DecisionTable& table, const std::string& csv_path);

// RFC-4180 row splitting; exposed for tests.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// Level 0 is the leaf domain; maps[j-1] sends level j-1 values to level j.
struct GeneralizationHierarchy {
  std::string attribute;
  std::vector<std::string> level_names;
  std::vector<std::map<std::string, std::string>> maps;

  std::size_t height() const { return maps.size(); }
  // Ancestor of a leaf value at `level`; throws for unknown leaves.
  std::string generalize(const std::string& leaf, std::size_t level) const;
  std::vector<std::string> level_domain(std::size_t level) const;
  std::string level_name(std::size_t level) const;
  void validate() const;
};

enum class Measure { kElift, kSlift, kOlift, kClift, kSliftD, kEliftD, kSliftC, kEliftC };

enum class Direction { kAtLeast, kAtMost };

std::string measure_name(Measure m);
Measure parse_measure(std::string_view name);
bool is_ratio_measure(Measure m);
bool is_difference_measure(Measure m);
bool is_chance_measure(Measure m);
// elift, elift_d and elift_c.
bool is_elift_family(Measure m);
Direction measure_direction(Measure m);

// Support threshold given either as a fraction ("5%") or as a count ("50").
struct SupportThreshold {
  bool is_fraction = false;
  double value = 1.0;

  std::size_t resolve(std::size_t n) const;
  static SupportThreshold parse(std::string_view text);
  std::string text() const;
};

struct ProtectionConfig {
  std::string class_attribute;
  std::string negative_class;
  Measure measure = Measure::kElift;
  double alpha = 1.2;
  double d = 0.9;
  std::size_t k = 1;
  SupportThreshold ms;
  double min_conf = 0.0;
  SupportThreshold sigma;
  std::optional<std::size_t> tau;
  std::vector<std::vector<std::string>> protected_itemsets;
  std::vector<std::vector<std::string>> legally_grounded_itemsets;
  std::vector<std::string> pd_attributes;

  // Checks the value ranges of every field; throws ConfigError.
  void validate() const;
  TableOptions table_options() const;
};

// Config resolved against one table schema.
struct ResolvedConfig {
  ProtectionConfig raw;
  ItemId negative_class = 0;
  std::vector<Itemset> di_b;
  std::vector<Itemset> di_e;
  Itemset pd_items;  // union of the DI_b itemsets
  std::size_t ms = 1;
  std::size_t sigma = 1;
};

ResolvedConfig resolve_config(const ProtectionConfig& config, const Schema& schema,
                              std::size_t table_size);

}  // namespace fairmine

#endif  // FAIRMINE_MODEL_HPP_
