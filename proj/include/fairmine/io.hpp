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

// JSON and JSONL serialization for configs, hierarchies, patterns and rules,
// plus file digests for run manifests.

#ifndef FAIRMINE_IO_HPP_
#define FAIRMINE_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "fairmine/discrimination.hpp"
#include "fairmine/miner.hpp"
#include "fairmine/model.hpp"
#include "json.hpp"

namespace fairmine {

using Json = nlohmann::ordered_json;

ProtectionConfig config_from_json(const Json& j);
Json config_to_json(const ProtectionConfig& config);
ProtectionConfig load_config(const std::string& path);

std::vector<GeneralizationHierarchy> hierarchies_from_json(const Json& j);
Json hierarchies_to_json(const std::vector<GeneralizationHierarchy>& hierarchies);
std::vector<GeneralizationHierarchy> load_hierarchies(const std::string& path);

Json schema_to_json(const Schema& schema);
Schema schema_from_json(const Json& j);

// First line: {"schema": ..., "sigma": n}; then one {"items", "support"}
// object per pattern, the empty itemset included.
std::string patterns_to_jsonl(const PatternSet& patterns);
PatternSet patterns_from_jsonl(std::string_view text);
PatternSet load_patterns(const std::string& path);

Json rule_to_json(const Schema& schema, const MinedRule& rule);
std::string rules_to_jsonl(const Schema& schema, const std::vector<MinedRule>& rules);
std::vector<MinedRule> rules_from_jsonl(const Schema& schema, std::string_view text);

Json classification_rule_json(const Schema& schema, const ClassificationRule& rule);
Json audit_to_json(const Schema& schema, const RuleAudit& audit);
Json redlining_to_json(const Schema& schema, const RedliningAudit& audit);
// "value >= alpha" or "value <= alpha" for the measure.
std::string direction_text(Measure m);

std::string read_file(const std::string& path);
// Writes atomically enough for a CLI: truncate, write, check the stream.
void write_file(const std::string& path, std::string_view text);
// Two-space indent, trailing newline.
std::string dump(const Json& j);

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::string& path);

}  // namespace fairmine

#endif  // FAIRMINE_IO_HPP_
