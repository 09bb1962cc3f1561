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

#include "fairmine/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace fairmine {

namespace {

const std::set<std::string> kConfigKeys = {
    "class_attribute", "negative_class", "measure",  "alpha",
    "d",               "k",              "ms",       "min_conf",
    "sigma",           "tau",            "protected_itemsets",
    "legally_grounded_itemsets",         "pd_attributes"};

SupportThreshold threshold(const Json& v, const char* key) {
  if (v.is_string()) return SupportThreshold::parse(v.get<std::string>());
  if (v.is_number()) {
    const double x = v.get<double>();
    // Plain numbers below 1 read as fractions, otherwise as counts.
    if (x > 0 && x < 1) {
      SupportThreshold s;
      s.is_fraction = true;
      s.value = x;
      return s;
    }
    return SupportThreshold::parse(std::to_string(static_cast<long long>(std::llround(x))));
  }
  throw ConfigError(std::string(key) + " must be a number or a string");
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("config field '") + key + "' has the wrong type");
  }
}

std::vector<std::string> labels(const Json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ConfigError(std::string(what) + " must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> groups(const Json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<std::string>> out;
  for (const auto& g : j) out.push_back(labels(g, what));
  return out;
}

Json itemset_json(const Schema& schema, const Itemset& s) {
  Json a = Json::array();
  for (const auto& l : itemset_labels(schema, s)) a.push_back(l);
  return a;
}

Json measure_json(const MeasureValue& v) {
  if (!v.defined) return nullptr;
  return v.value;
}

}  // namespace

// ---------------------------------------------------------------- config

ProtectionConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kConfigKeys.count(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  ProtectionConfig c;
  if (j.contains("class_attribute")) c.class_attribute = get<std::string>(j, "class_attribute");
  if (j.contains("negative_class")) c.negative_class = get<std::string>(j, "negative_class");
  if (j.contains("measure")) {
    try {
      c.measure = parse_measure(get<std::string>(j, "measure"));
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }
  if (j.contains("alpha")) c.alpha = get<double>(j, "alpha");
  if (j.contains("d")) c.d = get<double>(j, "d");
  if (j.contains("k")) {
    const long long k = get<long long>(j, "k");
    if (k < 1) throw ConfigError("k must be positive");
    c.k = static_cast<std::size_t>(k);
  }
  if (j.contains("ms")) c.ms = threshold(j.at("ms"), "ms");
  if (j.contains("min_conf")) c.min_conf = get<double>(j, "min_conf");
  if (j.contains("sigma")) c.sigma = threshold(j.at("sigma"), "sigma");
  if (j.contains("tau") && !j.at("tau").is_null()) {
    const long long t = get<long long>(j, "tau");
    if (t < 1) throw ConfigError("tau must be positive");
    c.tau = static_cast<std::size_t>(t);
  }
  if (j.contains("protected_itemsets")) {
    c.protected_itemsets = groups(j.at("protected_itemsets"), "protected_itemsets");
  }
  if (j.contains("legally_grounded_itemsets")) {
    c.legally_grounded_itemsets =
        groups(j.at("legally_grounded_itemsets"), "legally_grounded_itemsets");
  }
  if (j.contains("pd_attributes")) c.pd_attributes = labels(j.at("pd_attributes"), "pd_attributes");
  c.validate();
  return c;
}

Json config_to_json(const ProtectionConfig& c) {
  Json j;
  j["class_attribute"] = c.class_attribute;
  j["negative_class"] = c.negative_class;
  j["measure"] = measure_name(c.measure);
  j["alpha"] = c.alpha;
  j["d"] = c.d;
  j["k"] = c.k;
  j["ms"] = c.ms.text();
  j["min_conf"] = c.min_conf;
  j["sigma"] = c.sigma.text();
  if (c.tau) j["tau"] = *c.tau;
  j["protected_itemsets"] = c.protected_itemsets;
  j["legally_grounded_itemsets"] = c.legally_grounded_itemsets;
  j["pd_attributes"] = c.pd_attributes;
  return j;
}

ProtectionConfig load_config(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path + " is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

// ---------------------------------------------------------------- hierarchies

std::vector<GeneralizationHierarchy> hierarchies_from_json(const Json& j) {
  const Json* list = &j;
  if (j.is_object()) {
    if (!j.contains("hierarchies")) throw ConfigError("hierarchy file needs 'hierarchies'");
    list = &j.at("hierarchies");
  }
  if (!list->is_array()) throw ConfigError("'hierarchies' must be an array");
  std::vector<GeneralizationHierarchy> out;
  for (const auto& h : *list) {
    GeneralizationHierarchy g;
    try {
      g.attribute = h.at("attribute").get<std::string>();
      if (h.contains("level_names")) {
        g.level_names = h.at("level_names").get<std::vector<std::string>>();
      }
      for (const auto& m : h.at("maps")) {
        g.maps.push_back(m.get<std::map<std::string, std::string>>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("malformed hierarchy: ") + e.what());
    }
    g.validate();
    out.push_back(std::move(g));
  }
  return out;
}

Json hierarchies_to_json(const std::vector<GeneralizationHierarchy>& hierarchies) {
  Json list = Json::array();
  for (const auto& h : hierarchies) {
    Json g;
    g["attribute"] = h.attribute;
    g["level_names"] = h.level_names;
    Json maps = Json::array();
    for (const auto& m : h.maps) maps.push_back(m);
    g["maps"] = maps;
    list.push_back(g);
  }
  return Json{{"hierarchies", list}};
}

std::vector<GeneralizationHierarchy> load_hierarchies(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("hierarchies " + path + " are not valid JSON: " + e.what());
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return hierarchies_from_json(j);
}

// ---------------------------------------------------------------- schema

Json schema_to_json(const Schema& schema) {
  Json attrs = Json::array();
  for (const auto& a : schema.attributes()) {
    Json j;
    j["name"] = a.name;
    j["domain"] = a.domain;
    j["class"] = a.kind == AttributeKind::kClass;
    j["pd"] = a.pd;
    attrs.push_back(j);
  }
  return Json{{"attributes", attrs}};
}

Schema schema_from_json(const Json& j) {
  std::vector<AttributeSchema> attrs;
  try {
    for (const auto& a : j.at("attributes")) {
      AttributeSchema s;
      s.name = a.at("name").get<std::string>();
      s.domain = a.at("domain").get<std::vector<std::string>>();
      s.kind = a.value("class", false) ? AttributeKind::kClass : AttributeKind::kQuasiIdentifier;
      s.pd = a.value("pd", false);
      attrs.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed schema: ") + e.what());
  }
  return Schema(std::move(attrs));
}

// ---------------------------------------------------------------- patterns

std::string patterns_to_jsonl(const PatternSet& patterns) {
  std::string out;
  Json header;
  header["schema"] = schema_to_json(patterns.schema());
  header["sigma"] = patterns.sigma();
  out += header.dump() + "\n";
  for (const auto& [items, support] : patterns.entries()) {
    Json p;
    p["items"] = itemset_json(patterns.schema(), items);
    p["support"] = support;
    out += p.dump() + "\n";
  }
  return out;
}

PatternSet patterns_from_jsonl(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<PatternSet> out;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error("pattern line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!out) {
      if (!j.contains("schema")) throw Error("pattern file must start with a schema header");
      out.emplace(schema_from_json(j.at("schema")), j.value("sigma", std::size_t{1}));
      continue;
    }
    try {
      const Itemset s =
          parse_itemset(out->schema(), j.at("items").get<std::vector<std::string>>());
      out->set(s, j.at("support").get<std::size_t>());
    } catch (const nlohmann::json::exception& e) {
      throw Error("pattern line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!out) throw Error("empty pattern file");
  return std::move(*out);
}

PatternSet load_patterns(const std::string& path) { return patterns_from_jsonl(read_file(path)); }

// ---------------------------------------------------------------- rules

Json classification_rule_json(const Schema& schema, const ClassificationRule& rule) {
  Json j;
  j["premise"] = itemset_json(schema, rule.premise);
  j["conclusion"] = schema.item_label(rule.conclusion);
  return j;
}

Json rule_to_json(const Schema& schema, const MinedRule& rule) {
  Json j = classification_rule_json(schema, rule.rule);
  j["support"] = rule.support;
  j["premise_support"] = rule.premise_support;
  j["confidence"] = rule.conf;
  return j;
}

std::string rules_to_jsonl(const Schema& schema, const std::vector<MinedRule>& rules) {
  std::string out;
  for (const auto& r : rules) out += rule_to_json(schema, r).dump() + "\n";
  return out;
}

std::vector<MinedRule> rules_from_jsonl(const Schema& schema, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<MinedRule> out;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const Json j = Json::parse(line);
      MinedRule r;
      r.rule.premise = parse_itemset(schema, j.at("premise").get<std::vector<std::string>>());
      r.rule.conclusion = schema.parse_item(j.at("conclusion").get<std::string>());
      r.support = j.value("support", std::size_t{0});
      r.premise_support = j.value("premise_support", std::size_t{0});
      r.conf = j.value("confidence", 0.0);
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw Error("rule line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string direction_text(Measure m) {
  return measure_direction(m) == Direction::kAtMost ? "value <= alpha" : "value >= alpha";
}

Json audit_to_json(const Schema& schema, const RuleAudit& audit) {
  Json j = rule_to_json(schema, audit.rule);
  j["a"] = itemset_json(schema, audit.a);
  j["b"] = itemset_json(schema, audit.b);
  j["counts"] = {{"a1", audit.counts.a1},
                 {"n1", audit.counts.n1},
                 {"a2", audit.counts.a2},
                 {"n2", audit.counts.n2}};
  Json values;
  for (std::size_t i = 0; i < kAllMeasures.size(); ++i) {
    values[measure_name(kAllMeasures[i])] = measure_json(audit.values[i]);
  }
  j["measures"] = values;
  j["alpha_discriminatory"] = audit.alpha_discriminatory;
  return j;
}

Json redlining_to_json(const Schema& schema, const RedliningAudit& audit) {
  Json j = rule_to_json(schema, audit.rule);
  j["a"] = itemset_json(schema, audit.a);
  j["d"] = itemset_json(schema, audit.d);
  j["b"] = itemset_json(schema, audit.b);
  j["gamma"] = audit.gamma;
  j["delta"] = audit.delta;
  j["beta1"] = audit.beta1;
  j["beta2"] = audit.beta2;
  j["elb"] = audit.elb_value;
  j["indirect_rule"] = classification_rule_json(schema, audit.indirect());
  return j;
}

// ---------------------------------------------------------------- files

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw Error("failed writing " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) {
    s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return s.str();
}

std::string sha256_file(const std::string& path) { return sha256_hex(read_file(path)); }

}  // namespace fairmine
