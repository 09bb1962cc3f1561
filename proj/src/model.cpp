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

#include "fairmine/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace fairmine {

// ---------------------------------------------------------------- Schema

Schema::Schema(std::vector<AttributeSchema> attributes) : attributes_(std::move(attributes)) {
  std::set<std::string> names;
  std::size_t class_count = 0;
  for (std::size_t a = 0; a < attributes_.size(); ++a) {
    auto& attr = attributes_[a];
    if (attr.name.empty()) throw Error("attribute with empty name");
    if (!names.insert(attr.name).second) throw Error("duplicate attribute '" + attr.name + "'");
    std::sort(attr.domain.begin(), attr.domain.end());
    if (std::adjacent_find(attr.domain.begin(), attr.domain.end()) != attr.domain.end()) {
      throw Error("duplicate value in domain of '" + attr.name + "'");
    }
    for (const auto& v : attr.domain) {
      if (v.empty()) throw Error("empty value in domain of '" + attr.name + "'");
    }
    if (attr.kind == AttributeKind::kClass) {
      ++class_count;
      class_attribute_ = a;
      // Pattern-only schemas may see a single class value; tables need two.
      if (attr.domain.empty() || attr.domain.size() > 2) {
        throw Error("class attribute '" + attr.name + "' must have 2 values, found " +
                    std::to_string(attr.domain.size()));
      }
    }
  }
  if (class_count != 1) throw Error("schema needs exactly one class attribute");

  std::vector<std::size_t> order(attributes_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return attributes_[x].name < attributes_[y].name;
  });
  first_item_.assign(attributes_.size(), 0);
  ItemId next = 0;
  for (std::size_t a : order) {
    first_item_[a] = next;
    for (std::size_t v = 0; v < attributes_[a].domain.size(); ++v) {
      item_attribute_.push_back(a);
      ++next;
    }
  }
}

std::optional<std::size_t> Schema::find_attribute(std::string_view name) const {
  for (std::size_t a = 0; a < attributes_.size(); ++a) {
    if (attributes_[a].name == name) return a;
  }
  return std::nullopt;
}

std::size_t Schema::attribute_index(std::string_view name) const {
  auto a = find_attribute(name);
  if (!a) throw Error("unknown attribute '" + std::string(name) + "'");
  return *a;
}

std::optional<ItemId> Schema::find_item(std::string_view attribute,
                                        std::string_view value) const {
  auto a = find_attribute(attribute);
  if (!a) return std::nullopt;
  const auto& dom = attributes_[*a].domain;
  auto it = std::lower_bound(dom.begin(), dom.end(), value);
  if (it == dom.end() || *it != value) return std::nullopt;
  return item(*a, static_cast<std::size_t>(it - dom.begin()));
}

ItemId Schema::parse_item(std::string_view text) const {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw Error("item '" + std::string(text) + "' is not of the form attribute=value");
  }
  auto id = find_item(text.substr(0, eq), text.substr(eq + 1));
  if (!id) throw Error("unknown item '" + std::string(text) + "'");
  return *id;
}

std::string Schema::item_label(ItemId id) const {
  return attributes_[item_attribute(id)].name + "=" + item_value_name(id);
}

const std::string& Schema::item_value_name(ItemId id) const {
  return attributes_[item_attribute(id)].domain[item_value(id)];
}

ItemId Schema::other_class_item(ItemId class_item) const {
  if (!is_class_item(class_item)) throw Error("not a class item: " + item_label(class_item));
  if (attributes_[class_attribute_].domain.size() != 2) throw Error("class is not binary");
  return item(class_attribute_, 1 - item_value(class_item));
}

// ---------------------------------------------------------------- Itemsets

Itemset make_itemset(const Schema& schema, std::vector<ItemId> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (schema.item_attribute(items[i]) == schema.item_attribute(items[i - 1])) {
      throw Error("itemset assigns two values to '" +
                  schema.attribute(schema.item_attribute(items[i])).name + "'");
    }
  }
  return items;
}

Itemset parse_itemset(const Schema& schema, const std::vector<std::string>& labels) {
  std::vector<ItemId> ids;
  ids.reserve(labels.size());
  for (const auto& l : labels) ids.push_back(schema.parse_item(l));
  return make_itemset(schema, std::move(ids));
}

std::vector<std::string> itemset_labels(const Schema& schema, const Itemset& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (ItemId id : s) out.push_back(schema.item_label(id));
  return out;
}

std::string itemset_text(const Schema& schema, const Itemset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += schema.item_label(s[i]);
  }
  return out + "}";
}

bool is_subset(const Itemset& small, const Itemset& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Itemset set_union(const Itemset& a, const Itemset& b) {
  Itemset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Itemset set_difference(const Itemset& a, const Itemset& b) {
  Itemset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Itemset set_intersection(const Itemset& a, const Itemset& b) {
  Itemset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_item(const Itemset& s, ItemId id) {
  return std::binary_search(s.begin(), s.end(), id);
}

bool conflicts(const Schema& schema, const Itemset& a, const Itemset& b) {
  for (ItemId x : a) {
    for (ItemId y : b) {
      if (x != y && schema.item_attribute(x) == schema.item_attribute(y)) return true;
    }
  }
  return false;
}

bool itemset_less(const Itemset& a, const Itemset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// ---------------------------------------------------------------- Table

DecisionTable::DecisionTable(Schema schema, std::vector<std::vector<std::uint32_t>> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
  if (schema_.attribute(schema_.class_attribute()).domain.size() != 2) {
    throw Error("class attribute '" + schema_.attribute(schema_.class_attribute()).name +
                "' is not binary");
  }
  tids_.assign(schema_.item_count(), TidSet(rows_.size()));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != schema_.attribute_count()) {
      throw Error("record " + std::to_string(r + 1) + " has wrong arity");
    }
    for (std::size_t a = 0; a < rows_[r].size(); ++a) {
      if (rows_[r][a] >= schema_.attribute(a).domain.size()) {
        throw Error("record " + std::to_string(r + 1) + " has a value outside the domain of '" +
                    schema_.attribute(a).name + "'");
      }
      tids_[schema_.item(a, rows_[r][a])].set(r);
    }
  }
}

bool DecisionTable::supports(std::size_t record, const Itemset& s) const {
  for (ItemId id : s) {
    if (rows_[record][schema_.item_attribute(id)] != schema_.item_value(id)) return false;
  }
  return true;
}

TidSet DecisionTable::tids(const Itemset& s) const {
  if (s.empty()) return TidSet(rows_.size(), true);
  TidSet out = tids_[s[0]];
  for (std::size_t i = 1; i < s.size(); ++i) out &= tids_[s[i]];
  return out;
}

std::size_t DecisionTable::support(const Itemset& s) const {
  if (s.empty()) return rows_.size();
  if (s.size() == 1) return tids_[s[0]].count();
  if (s.size() == 2) return tids_[s[0]].intersect_count(tids_[s[1]]);
  return tids(s).count();
}

std::size_t DecisionTable::support_negated(const Itemset& negated, const Itemset& rest) const {
  return support(rest) - support(set_union(negated, rest));
}

void DecisionTable::assign(std::size_t record, std::size_t attribute, std::uint32_t value) {
  if (value >= schema_.attribute(attribute).domain.size()) throw Error("value out of domain");
  const std::uint32_t old = rows_[record][attribute];
  if (old == value) return;
  tids_[schema_.item(attribute, old)].reset(record);
  tids_[schema_.item(attribute, value)].set(record);
  rows_[record][attribute] = value;
}

void DecisionTable::assign_itemset(std::size_t record, const Itemset& s) {
  for (ItemId id : s) {
    assign(record, schema_.item_attribute(id), static_cast<std::uint32_t>(schema_.item_value(id)));
  }
}

NegatedSelector negate(const Itemset& itemset) { return NegatedSelector{itemset}; }

bool can_convert_to_negation(const Schema& schema, const Itemset& itemset) {
  for (ItemId id : itemset) {
    if (schema.attribute(schema.item_attribute(id)).domain.size() != 2) return false;
  }
  return true;
}

// ---------------------------------------------------------------- CSV

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t i = 0;
  if (text.size() >= 3 && static_cast<unsigned char>(text[0]) == 0xEF &&
      static_cast<unsigned char>(text[1]) == 0xBB && static_cast<unsigned char>(text[2]) == 0xBF) {
    i = 3;
  }
  auto end_row = [&] {
    row.push_back(field);
    field.clear();
    field_started = false;
    const bool blank = row.size() == 1 && row[0].empty();
    if (!blank) rows.push_back(std::move(row));
    row.clear();
  };
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && !field_started) {
      in_quotes = true;
      field_started = true;
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
      field_started = false;
    } else if (c == '\r') {
      // CRLF: the '\n' closes the row.
    } else if (c == '\n') {
      end_row();
    } else {
      field += c;
      field_started = true;
    }
  }
  if (in_quotes) throw Error("unterminated quoted CSV field");
  if (field_started || !row.empty()) end_row();
  return rows;
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\r\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

DecisionTable parse_table(std::string_view csv_text, const TableOptions& options,
                          LoadReport* report) {
  auto rows = parse_csv(csv_text);
  if (rows.empty()) throw Error("CSV has no header row");
  std::vector<std::string> header;
  for (auto& h : rows[0]) header.push_back(trim(h));
  const std::size_t arity = header.size();

  std::set<std::string> header_set(header.begin(), header.end());
  if (header_set.size() != header.size()) throw Error("duplicate column in CSV header");
  if (!header_set.count(options.class_attribute)) {
    throw ConfigError("class attribute '" + options.class_attribute + "' not in CSV header");
  }
  for (const auto& pd : options.pd_attributes) {
    if (!header_set.count(pd)) throw ConfigError("unknown attribute '" + pd + "' in config");
  }
  for (const auto& [name, dom] : options.domains) {
    if (!header_set.count(name)) throw ConfigError("unknown attribute '" + name + "' in config");
  }

  LoadReport rep;
  std::vector<std::vector<std::string>> kept;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    ++rep.rows_read;
    if (rows[r].size() != arity) {
      throw Error("CSV row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                  " fields, expected " + std::to_string(arity));
    }
    bool missing = false;
    std::vector<std::string> vals;
    vals.reserve(arity);
    for (auto& f : rows[r]) {
      vals.push_back(trim(f));
      if (vals.back() == options.missing_token || vals.back().empty()) missing = true;
    }
    if (missing) {
      ++rep.rows_dropped;
      continue;
    }
    kept.push_back(std::move(vals));
  }
  if (report) *report = rep;
  if (kept.empty()) throw Error("no records");

  std::vector<AttributeSchema> attrs(arity);
  for (std::size_t a = 0; a < arity; ++a) {
    attrs[a].name = header[a];
    attrs[a].kind = header[a] == options.class_attribute ? AttributeKind::kClass
                                                         : AttributeKind::kQuasiIdentifier;
    attrs[a].pd = std::find(options.pd_attributes.begin(), options.pd_attributes.end(),
                            header[a]) != options.pd_attributes.end();
    std::set<std::string> values;
    for (const auto& row : kept) values.insert(row[a]);
    auto declared = options.domains.find(header[a]);
    if (declared != options.domains.end()) {
      std::set<std::string> allowed(declared->second.begin(), declared->second.end());
      for (const auto& v : values) {
        if (!allowed.count(v)) {
          throw Error("value '" + v + "' outside the declared domain of '" + header[a] + "'");
        }
      }
      values = allowed;
    }
    attrs[a].domain.assign(values.begin(), values.end());
  }
  if (attrs[std::find(header.begin(), header.end(), options.class_attribute) - header.begin()]
          .domain.size() != 2) {
    throw Error("class attribute '" + options.class_attribute + "' is not binary");
  }
  Schema schema(std::move(attrs));

  std::vector<std::vector<std::uint32_t>> coded(kept.size(), std::vector<std::uint32_t>(arity));
  for (std::size_t r = 0; r < kept.size(); ++r) {
    for (std::size_t a = 0; a < arity; ++a) {
      const auto& dom = schema.attribute(a).domain;
      coded[r][a] = static_cast<std::uint32_t>(
          std::lower_bound(dom.begin(), dom.end(), kept[r][a]) - dom.begin());
    }
  }
  return DecisionTable(std::move(schema), std::move(coded));
}

DecisionTable load_table(const std::string& csv_path, const TableOptions& options,
                         LoadReport* report) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw Error("cannot open '" + csv_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str(), options, report);
}

std::string table_to_csv(const DecisionTable& table) {
  const auto& schema = table.schema();
  std::string out;
  for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
    if (a) out += ',';
    out += csv_field(schema.attribute(a).name);
  }
  out += '\n';
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
      if (a) out += ',';
      out += csv_field(schema.attribute(a).domain[table.value(r, a)]);
    }
    out += '\n';
  }
  return out;
}

void save_table(const DecisionTable& table, const std::string& csv_path) {
  std::ofstream out(csv_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + csv_path + "'");
  out << table_to_csv(table);
}

// ---------------------------------------------------------------- Hierarchies

std::string GeneralizationHierarchy::generalize(const std::string& leaf, std::size_t level) const {
  if (level > maps.size()) throw Error("level out of range for '" + attribute + "'");
  std::string v = leaf;
  for (std::size_t j = 0; j < level; ++j) {
    auto it = maps[j].find(v);
    if (it == maps[j].end()) {
      throw Error("value '" + v + "' missing from hierarchy of '" + attribute + "' at level " +
                  std::to_string(j));
    }
    v = it->second;
  }
  return v;
}

std::vector<std::string> GeneralizationHierarchy::level_domain(std::size_t level) const {
  std::set<std::string> out;
  if (level == 0) {
    if (maps.empty()) return {};
    for (const auto& [k, v] : maps[0]) out.insert(k);
  } else {
    for (const auto& [k, v] : maps[level - 1]) out.insert(v);
  }
  return {out.begin(), out.end()};
}

std::string GeneralizationHierarchy::level_name(std::size_t level) const {
  if (level < level_names.size()) return level_names[level];
  return attribute + std::to_string(level);
}

void GeneralizationHierarchy::validate() const {
  if (maps.empty()) throw ConfigError("hierarchy of '" + attribute + "' has no levels");
  for (std::size_t j = 1; j < maps.size(); ++j) {
    std::set<std::string> parents;
    for (const auto& [k, v] : maps[j - 1]) parents.insert(v);
    std::set<std::string> children;
    for (const auto& [k, v] : maps[j]) children.insert(k);
    if (parents != children) {
      throw ConfigError("hierarchy of '" + attribute + "': level " + std::to_string(j) +
                        " map does not cover exactly the values of the level below");
    }
  }
  if (level_domain(maps.size()).size() != 1) {
    throw ConfigError("hierarchy of '" + attribute + "': top level must be a single value");
  }
  if (!level_names.empty() && level_names.size() != maps.size() + 1) {
    throw ConfigError("hierarchy of '" + attribute + "': wrong number of level names");
  }
}

// ---------------------------------------------------------------- Measures

std::string measure_name(Measure m) {
  switch (m) {
    case Measure::kElift: return "elift";
    case Measure::kSlift: return "slift";
    case Measure::kOlift: return "olift";
    case Measure::kClift: return "clift";
    case Measure::kSliftD: return "slift_d";
    case Measure::kEliftD: return "elift_d";
    case Measure::kSliftC: return "slift_c";
    case Measure::kEliftC: return "elift_c";
  }
  return "?";
}

Measure parse_measure(std::string_view name) {
  for (Measure m : {Measure::kElift, Measure::kSlift, Measure::kOlift, Measure::kClift,
                    Measure::kSliftD, Measure::kEliftD, Measure::kSliftC, Measure::kEliftC}) {
    if (measure_name(m) == name) return m;
  }
  throw ConfigError("unknown measure '" + std::string(name) + "'");
}

bool is_ratio_measure(Measure m) {
  return m == Measure::kElift || m == Measure::kSlift || m == Measure::kOlift ||
         m == Measure::kClift;
}
bool is_difference_measure(Measure m) { return m == Measure::kSliftD || m == Measure::kEliftD; }
bool is_chance_measure(Measure m) { return m == Measure::kSliftC || m == Measure::kEliftC; }
bool is_elift_family(Measure m) {
  return m == Measure::kElift || m == Measure::kEliftD || m == Measure::kEliftC;
}
Direction measure_direction(Measure m) {
  return is_chance_measure(m) ? Direction::kAtMost : Direction::kAtLeast;
}

// ---------------------------------------------------------------- Config

std::size_t SupportThreshold::resolve(std::size_t n) const {
  if (!is_fraction) return static_cast<std::size_t>(value);
  // A tiny slack keeps 5% of 1000 at 50 despite binary rounding.
  return static_cast<std::size_t>(std::ceil(value * static_cast<double>(n) - 1e-9));
}

SupportThreshold SupportThreshold::parse(std::string_view text) {
  std::string t(text);
  SupportThreshold s;
  try {
    std::size_t used = 0;
    if (!t.empty() && t.back() == '%') {
      s.is_fraction = true;
      s.value = std::stod(t.substr(0, t.size() - 1), &used) / 100.0;
      if (used != t.size() - 1) throw ConfigError("bad");
    } else {
      s.value = std::stod(t, &used);
      if (used != t.size()) throw ConfigError("bad");
      if (s.value != std::floor(s.value)) throw ConfigError("bad");
    }
  } catch (const std::exception&) {
    throw ConfigError("support threshold '" + t + "' must be a count or a percentage");
  }
  if (s.value < 0 || (s.is_fraction && s.value > 1.0)) {
    throw ConfigError("support threshold '" + t + "' out of range");
  }
  return s;
}

std::string SupportThreshold::text() const {
  std::ostringstream os;
  if (is_fraction) {
    os << value * 100.0 << "%";
  } else {
    os << static_cast<long long>(value);
  }
  return os.str();
}

void ProtectionConfig::validate() const {
  if (class_attribute.empty()) throw ConfigError("class_attribute is required");
  if (negative_class.empty()) throw ConfigError("negative_class is required");
  if (!(alpha > 0)) throw ConfigError("alpha must be positive");
  if (is_ratio_measure(measure) && alpha < 1.0) {
    throw ConfigError("alpha must be at least 1 for ratio measures");
  }
  if (is_chance_measure(measure) && alpha > 1.0) {
    throw ConfigError("alpha must be at most 1 for chance measures");
  }
  if (d < 0 || d > 1) throw ConfigError("d must lie in [0,1]");
  if (k < 1) throw ConfigError("k must be positive");
  if (min_conf < 0 || min_conf > 1) throw ConfigError("min_conf must lie in [0,1]");
  for (const auto& group : protected_itemsets) {
    if (group.empty()) throw ConfigError("empty protected itemset");
  }
  for (const auto& group : legally_grounded_itemsets) {
    if (group.empty()) throw ConfigError("empty legally grounded itemset");
  }
}

TableOptions ProtectionConfig::table_options() const {
  TableOptions o;
  o.class_attribute = class_attribute;
  o.pd_attributes = pd_attributes;
  auto add_attr = [&](const std::string& label) {
    const auto eq = label.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("item '" + label + "' is not of the form attribute=value");
    }
    const std::string a = label.substr(0, eq);
    if (std::find(o.pd_attributes.begin(), o.pd_attributes.end(), a) == o.pd_attributes.end()) {
      o.pd_attributes.push_back(a);
    }
  };
  for (const auto& g : protected_itemsets) {
    for (const auto& l : g) add_attr(l);
  }
  return o;
}

ResolvedConfig resolve_config(const ProtectionConfig& config, const Schema& schema,
                              std::size_t table_size) {
  config.validate();
  ResolvedConfig r;
  r.raw = config;
  if (schema.attribute(schema.class_attribute()).name != config.class_attribute) {
    throw ConfigError("class attribute mismatch");
  }
  const std::string& neg = config.negative_class;
  auto neg_id = [&]() -> std::optional<ItemId> {
    // A bare class value may itself contain '=' (e.g. "<=50K").
    if (auto id = schema.find_item(config.class_attribute, neg)) return id;
    try {
      return schema.parse_item(neg);
    } catch (const Error&) {
      return std::nullopt;
    }
  }();
  if (!neg_id || !schema.is_class_item(*neg_id)) {
    throw ConfigError("negative_class '" + config.negative_class + "' is not a class value");
  }
  r.negative_class = *neg_id;

  auto resolve_groups = [&](const std::vector<std::vector<std::string>>& groups, bool want_pd,
                            const char* key) {
    std::vector<Itemset> out;
    for (const auto& g : groups) {
      Itemset s;
      try {
        s = parse_itemset(schema, g);
      } catch (const Error& e) {
        throw ConfigError(std::string(key) + ": " + e.what());
      }
      for (ItemId id : s) {
        const auto& attr = schema.attribute(schema.item_attribute(id));
        if (attr.kind == AttributeKind::kClass) {
          throw ConfigError(std::string(key) + " may not use the class attribute");
        }
        if (attr.pd != want_pd) {
          throw ConfigError(std::string(key) + ": attribute '" + attr.name +
                            (want_pd ? "' is not a PD attribute" : "' is a PD attribute"));
        }
      }
      out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), itemset_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  r.di_b = resolve_groups(config.protected_itemsets, true, "protected_itemsets");
  r.di_e = resolve_groups(config.legally_grounded_itemsets, false, "legally_grounded_itemsets");
  for (const auto& g : r.di_b) r.pd_items = set_union(r.pd_items, g);
  r.ms = std::max<std::size_t>(1, config.ms.resolve(table_size));
  r.sigma = std::max<std::size_t>(1, config.sigma.resolve(table_size));
  return r;
}

}  // namespace fairmine
