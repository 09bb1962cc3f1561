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

#include "fairmine/cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fairmine/discrimination.hpp"
#include "fairmine/io.hpp"
#include "fairmine/latticegen.hpp"
#include "fairmine/metrics.hpp"
#include "fairmine/miner.hpp"
#include "fairmine/model.hpp"
#include "fairmine/parallel.hpp"
#include "fairmine/patternshield.hpp"
#include "fairmine/ruleshield.hpp"

namespace fairmine {

namespace {

struct Run {
  std::string command;
  std::string config;
  std::string manifest;
  std::vector<std::pair<std::string, std::string>> inputs;   // role, path
  std::vector<std::pair<std::string, std::string>> outputs;  // role, path
  bool unresolved = false;
};

ProtectionConfig require_config(Run& run) {
  if (run.config.empty()) throw ConfigError("missing --config");
  return load_config(run.config);
}

DecisionTable load_data(Run& run, const std::string& role, const std::string& path,
                        const TableOptions& options) {
  run.inputs.emplace_back(role, path);
  return load_table(path, options);
}

void emit(Run& run, std::ostream& out, const std::string& role, const std::string& path,
          const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  write_file(path, text);
  run.outputs.emplace_back(role, path);
}

Json percent_json(const std::optional<double>& v) {
  if (!v) return "n.a.";
  return *v;
}

Json labels_json(const Schema& schema, const Itemset& s) { return itemset_labels(schema, s); }

Json measure_header(const ProtectionConfig& cfg) {
  Json j;
  j["measure"] = measure_name(cfg.measure);
  j["alpha"] = cfg.alpha;
  j["direction"] = direction_text(cfg.measure);
  return j;
}

Json snapshot_counts(const RuleSnapshot& s) {
  return {{"fr", s.fr.size()}, {"mr", s.mr.size()}, {"pr", s.pr.size()},
          {"rr", s.rr.size()}, {"nr", s.nr.size()}};
}

Json rule_utility_json(const RuleUtilityReport& r) {
  Json j;
  j["ddpd"] = percent_json(r.ddpd);
  j["ddpp"] = percent_json(r.ddpp);
  j["idpd"] = percent_json(r.idpd);
  j["idpp"] = percent_json(r.idpp);
  j["mc"] = percent_json(r.mc);
  j["gc"] = percent_json(r.gc);
  j["mr_not_subset"] = r.mr_not_subset;
  j["rr_not_subset"] = r.rr_not_subset;
  return j;
}

Json pattern_utility_json(const PatternUtilityReport& r) {
  Json j;
  j["changed_fraction"] = r.changed_fraction;
  j["distortion_error"] = r.distortion_error;
  j["abs_distortion"] = r.abs_distortion;
  j["dpd"] = percent_json(r.dpd);
  j["ndd"] = percent_json(r.ndd);
  j["patterns"] = r.patterns;
  j["changed"] = r.changed;
  j["disc_before"] = r.disc_before;
  j["disc_after"] = r.disc_after;
  return j;
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::ostringstream s;
  s << v.get<double>();
  return s.str();
}

// ---------------------------------------------------------------- mine

struct MineArgs {
  std::string data;
  std::string out;
  std::string kind = "auto";
  std::size_t max_length = 0;
};

void cmd_mine(const MineArgs& a, Run& run, std::ostream& out) {
  const ProtectionConfig cfg = require_config(run);
  const DecisionTable table = load_data(run, "data", a.data, cfg.table_options());
  const ResolvedConfig rc = resolve_config(cfg, table.schema(), table.size());
  std::string kind = a.kind;
  if (kind == "auto") {
    const std::string name = std::filesystem::path(a.out).filename().string();
    kind = name.find("pattern") != std::string::npos ? "patterns" : "rules";
  }
  MineOptions mo;
  mo.max_length = a.max_length;
  Json summary;
  summary["command"] = "mine";
  summary["kind"] = kind;
  summary["records"] = table.size();
  if (kind == "patterns") {
    const PatternSet ps = mine_frequent(table, rc.sigma, mo);
    emit(run, out, "patterns", a.out, patterns_to_jsonl(ps));
    summary["sigma"] = rc.sigma;
    summary["patterns"] = ps.size();
  } else {
    const std::vector<MinedRule> rules = mine_rules(table, rc.ms, cfg.min_conf, std::nullopt, mo);
    emit(run, out, "rules", a.out, rules_to_jsonl(table.schema(), rules));
    summary["ms"] = rc.ms;
    summary["min_conf"] = cfg.min_conf;
    summary["rules"] = rules.size();
  }
  if (!a.out.empty() && a.out != "-") out << dump(summary);
}

// ---------------------------------------------------------------- measure

struct MeasureArgs {
  std::string rules;
  std::string data;
  std::string out;
};

void cmd_measure(const MeasureArgs& a, Run& run, std::ostream& out) {
  const ProtectionConfig cfg = require_config(run);
  const DecisionTable table = load_data(run, "data", a.data, cfg.table_options());
  const ResolvedConfig rc = resolve_config(cfg, table.schema(), table.size());
  run.inputs.emplace_back("rules", a.rules);
  const std::vector<MinedRule> rules = rules_from_jsonl(table.schema(), read_file(a.rules));
  const TableSupport src(table);
  const AuditResult audit = audit_rules(rules, src, rc);
  const std::vector<RedliningAudit> rr = find_redlining(rules, src, rc);

  Json report = measure_header(cfg);
  report["command"] = "measure";
  report["rules"] = rules.size();
  report["mr_count"] = audit.mr.size();
  report["pr_count"] = audit.pr.size();
  report["redlining_count"] = redlining_rules(rr).size();
  Json mr = Json::array();
  for (const RuleAudit& r : audit.mr) mr.push_back(audit_to_json(table.schema(), r));
  Json pr = Json::array();
  for (const RuleAudit& r : audit.pr) pr.push_back(audit_to_json(table.schema(), r));
  Json red = Json::array();
  for (const RedliningAudit& r : rr) red.push_back(redlining_to_json(table.schema(), r));
  report["alpha_discriminatory"] = mr;
  report["alpha_protective"] = pr;
  report["redlining"] = red;
  emit(run, out, "report", a.out, dump(report));
}

// ---------------------------------------------------------------- protect

struct ProtectArgs {
  std::string mode = "direct";
  std::string method = "drp2";
  std::string base_method = "drp2";
  std::string data;
  std::string out;
  std::string log;
  std::string report;
  std::size_t max_rounds = 8;
};

PipelineOptions pipeline_options(const ProtectArgs& a) {
  PipelineOptions o;
  o.max_rounds = a.max_rounds;
  o.method = a.base_method == "drp1" ? DrpMethod::kMethod1 : DrpMethod::kMethod2;
  if (a.mode == "direct") {
    if (a.method == "drp1" || a.method == "drp2") {
      o.kind = PipelineKind::kDirect;
      o.method = a.method == "drp1" ? DrpMethod::kMethod1 : DrpMethod::kMethod2;
    } else if (a.method == "drp-rg") {
      o.kind = PipelineKind::kDrpRg;
    } else {
      throw ConfigError("--mode direct takes --method drp1, drp2 or drp-rg");
    }
  } else if (a.mode == "indirect") {
    if (a.method != "irp1" && a.method != "irp2") {
      throw ConfigError("--mode indirect takes --method irp1 or irp2");
    }
    o.kind = PipelineKind::kIndirect;
    o.method = a.method == "irp1" ? DrpMethod::kMethod1 : DrpMethod::kMethod2;
  } else {
    o.kind = PipelineKind::kSimultaneous;
  }
  return o;
}

void cmd_protect(const ProtectArgs& a, Run& run, std::ostream& out) {
  const ProtectionConfig cfg = require_config(run);
  const PipelineOptions po = pipeline_options(a);
  const DecisionTable table = load_data(run, "data", a.data, cfg.table_options());
  const ResolvedConfig rc = resolve_config(cfg, table.schema(), table.size());
  const Schema& schema = table.schema();
  const bool indirect = po.kind == PipelineKind::kIndirect || po.kind == PipelineKind::kSimultaneous;
  const bool exempt = po.kind == PipelineKind::kDrpRg;

  const PipelineResult result = run_pipeline(table, rc, po);
  if (a.out.empty()) throw ConfigError("protect needs --out");
  emit(run, out, "data", a.out, table_to_csv(result.table));
  if (!a.log.empty()) {
    std::string log;
    for (const Flip& f : result.log) {
      Json j;
      j["record"] = f.record;
      j["attribute"] = schema.attribute(f.attribute).name;
      j["from"] = schema.attribute(f.attribute).domain[f.from];
      j["to"] = schema.attribute(f.attribute).domain[f.to];
      log += j.dump() + "\n";
    }
    emit(run, out, "log", a.log, log);
  }

  const RuleSnapshot before = rule_snapshot(table, rc, indirect);
  const RuleSnapshot after = rule_snapshot(result.table, rc, indirect, exempt);

  Json report = measure_header(cfg);
  report["command"] = "protect";
  report["mode"] = a.mode;
  report["method"] = a.method;
  if (po.kind == PipelineKind::kDrpRg) report["base_method"] = a.base_method;
  report["rounds"] = result.rounds;
  report["cells_changed"] = result.log.size();
  Json outcomes = Json::array();
  for (const RuleOutcome& o : result.outcomes) {
    Json j = classification_rule_json(schema, o.rule);
    j["action"] = o.action;
    j["changed"] = o.changed;
    j["resolved"] = o.resolved;
    j["round"] = o.round;
    outcomes.push_back(j);
  }
  report["outcomes"] = outcomes;
  Json unresolved = Json::array();
  for (const ClassificationRule& r : result.unresolved) {
    unresolved.push_back(classification_rule_json(schema, r));
  }
  report["unresolved"] = unresolved;
  report["before"] = snapshot_counts(before);
  report["after"] = snapshot_counts(after);
  report["utility"] = rule_utility_json(rule_utility(before, after));
  emit(run, out, "report", a.report, dump(report));
  run.unresolved = !result.unresolved.empty();
}

// ---------------------------------------------------------------- sanitize-patterns

struct SanitizeArgs {
  std::string mode = "both";
  std::string patterns;
  std::string out;
  std::string report;
  std::size_t max_rounds = 32;
};

PatternMode pattern_mode(const std::string& m) {
  if (m == "privacy") return PatternMode::kPrivacy;
  if (m == "discrimination") return PatternMode::kDiscrimination;
  if (m == "unexplainable") return PatternMode::kUnexplainable;
  if (m == "both") return PatternMode::kBoth;
  return PatternMode::kBothUnexplainable;
}

void cmd_sanitize(const SanitizeArgs& a, Run& run, std::ostream& out) {
  const ProtectionConfig cfg = require_config(run);
  run.inputs.emplace_back("patterns", a.patterns);
  const PatternSet fp = load_patterns(a.patterns);
  const ResolvedConfig rc = resolve_config(cfg, fp.schema(), fp.total());
  const Schema& schema = fp.schema();
  const PatternMode mode = pattern_mode(a.mode);
  SanitizeReport rep;
  SanitizeOptions so;
  so.max_rounds = a.max_rounds;
  const PatternSet tp = protect_patterns(fp, cfg.k, rc, mode, &rep, so);
  if (a.out.empty()) throw ConfigError("sanitize-patterns needs --out");
  emit(run, out, "patterns", a.out, patterns_to_jsonl(tp));

  Json report = measure_header(cfg);
  report["command"] = "sanitize-patterns";
  report["mode"] = a.mode;
  report["k"] = cfg.k;
  report["rounds"] = rep.rounds;
  report["new_discrimination"] = rep.new_discrimination;
  Json channels = Json::array();
  for (const InferenceChannel& c : rep.channels_blocked) {
    channels.push_back(
        {{"i", labels_json(schema, c.i)}, {"j", labels_json(schema, c.j)}, {"support", c.support}});
  }
  report["channels_blocked"] = channels;
  Json deltas = Json::array();
  for (const SanitizationDelta& d : rep.deltas) {
    deltas.push_back({{"pattern", labels_json(schema, d.pattern)},
                      {"target", labels_json(schema, d.target)},
                      {"delta", d.delta},
                      {"before", d.before},
                      {"after", d.after}});
  }
  report["deltas"] = deltas;
  Json unresolved = Json::array();
  for (const Itemset& s : rep.unresolved) unresolved.push_back(labels_json(schema, s));
  report["unresolved"] = unresolved;
  report["channels_remaining"] = find_channels(tp, cfg.k).size();
  report["utility"] = pattern_utility_json(pattern_utility(fp, tp, rc));
  emit(run, out, "report", a.report, dump(report));
  run.unresolved = !rep.unresolved.empty();
}

// ---------------------------------------------------------------- anonymize

struct AnonymizeArgs {
  std::string data;
  std::string hierarchies;
  std::string apply;
  std::string criterion;
  std::string out;
  std::string report;
  std::vector<std::string> qi;
  bool list = false;
};

Json quality_json(const Lattice& lattice, const DomainTuple& dt) {
  const QualityReport q = quality(lattice, dt);
  Json j;
  j["tuple"] = lattice.tuple_text(dt);
  j["levels"] = dt;
  j["gh"] = q.gh;
  j["dr"] = q.dr;
  j["cm"] = q.cm;
  return j;
}

void cmd_anonymize(const AnonymizeArgs& a, Run& run, std::ostream& out) {
  const ProtectionConfig cfg = require_config(run);
  if (a.list == !a.apply.empty()) throw ConfigError("anonymize needs exactly one of --list, --apply");
  const DecisionTable table = load_data(run, "data", a.data, cfg.table_options());
  const ResolvedConfig rc = resolve_config(cfg, table.schema(), table.size());
  run.inputs.emplace_back("hierarchies", a.hierarchies);
  const std::vector<GeneralizationHierarchy> hs = load_hierarchies(a.hierarchies);
  const Lattice lattice(table, hs, a.qi);
  const LatticeOptions lo = lattice_options(lattice, rc);

  Json report = measure_header(cfg);
  report["command"] = "anonymize";
  report["k"] = lo.k;
  report["check_discrimination"] = lo.check_discrimination;
  report["tau"] = lo.tau;
  report["da"] = lo.da;
  Json qi = Json::array();
  for (std::size_t q = 0; q < lattice.qi_count(); ++q) qi.push_back(lattice.qi_name(q));
  report["qi"] = qi;

  std::optional<DomainTuple> chosen;
  if (a.list) {
    IncognitoStats stats;
    const std::vector<DomainTuple> tuples = alpha_protective_incognito(lattice, lo, &stats);
    Json list = Json::array();
    for (const DomainTuple& dt : tuples) list.push_back(quality_json(lattice, dt));
    report["tuples"] = list;
    report["stats"] = {{"nodes_visited", stats.nodes_visited},
                       {"k_checks", stats.k_checks},
                       {"alpha_checks", stats.alpha_checks},
                       {"alpha_marked", stats.alpha_marked}};
    if (!a.criterion.empty()) {
      chosen = select_minimal(lattice, tuples, parse_criterion(a.criterion));
      report["criterion"] = a.criterion;
      report["selected"] = lattice.tuple_text(*chosen);
    }
  } else {
    chosen = lattice.parse_tuple(a.apply);
    report["applied"] = quality_json(lattice, *chosen);
  }
  if (chosen && !a.out.empty()) {
    emit(run, out, "data", a.out, table_to_csv(generalize(lattice, *chosen)));
  } else if (!a.list) {
    throw ConfigError("--apply needs --out");
  }
  emit(run, out, "report", a.report, dump(report));
}

// ---------------------------------------------------------------- metrics

struct MetricsArgs {
  std::string before;
  std::string after;
  std::string kind = "auto";
  std::string out;
  std::string csv;
  bool exempt_explainable = false;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void cmd_metrics(const MetricsArgs& a, Run& run, std::ostream& out) {
  const ProtectionConfig cfg = require_config(run);
  std::string kind = a.kind;
  if (kind == "auto") kind = ends_with(a.before, ".jsonl") ? "patterns" : "tables";
  Json report = measure_header(cfg);
  report["command"] = "metrics";
  report["kind"] = kind;
  Json values;
  if (kind == "patterns") {
    run.inputs.emplace_back("before", a.before);
    run.inputs.emplace_back("after", a.after);
    const PatternSet fp = load_patterns(a.before);
    const PatternSet tp = load_patterns(a.after);
    const ResolvedConfig rc = resolve_config(cfg, fp.schema(), fp.total());
    values = pattern_utility_json(pattern_utility(fp, tp, rc));
  } else {
    TableOptions opts = cfg.table_options();
    const DecisionTable before = load_data(run, "before", a.before, opts);
    // Same domains on both sides, so item ids line up.
    for (const AttributeSchema& attr : before.schema().attributes()) {
      opts.domains[attr.name] = attr.domain;
    }
    const DecisionTable after = load_data(run, "after", a.after, opts);
    const ResolvedConfig rc = resolve_config(cfg, before.schema(), before.size());
    const RuleSnapshot sb = rule_snapshot(before, rc, true);
    const RuleSnapshot sa = rule_snapshot(after, rc, true, a.exempt_explainable);
    report["before"] = snapshot_counts(sb);
    report["after"] = snapshot_counts(sa);
    values = rule_utility_json(rule_utility(sb, sa));
  }
  report["utility"] = values;
  emit(run, out, "report", a.out, dump(report));
  if (!a.csv.empty()) {
    std::string header = "before,after";
    std::string row = a.before + "," + a.after;
    for (const auto& [key, v] : values.items()) {
      if (v.is_boolean()) continue;
      header += "," + key;
      row += "," + csv_cell(v);
    }
    emit(run, out, "csv", a.csv, header + "\n" + row + "\n");
  }
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string train;
  std::string test;
  std::string out;
};

void cmd_classify(const ClassifyArgs& a, Run& run, std::ostream& out) {
  const ProtectionConfig cfg = require_config(run);
  run.inputs.emplace_back("train", a.train);
  const PatternSet tp = load_patterns(a.train);
  const DecisionTable test = load_data(run, "test", a.test, cfg.table_options());
  const CmarResult r = cmar_classify(tp, test);
  Json report;
  report["command"] = "classify";
  report["accuracy"] = r.accuracy;
  report["records"] = r.records;
  report["correct"] = r.correct;
  report["unanimous"] = r.unanimous;
  report["weighted"] = r.weighted;
  report["fallback"] = r.fallback;
  emit(run, out, "report", a.out, dump(report));
}

// ---------------------------------------------------------------- manifest

void write_manifest(const Run& run, const std::vector<std::string>& args, int code,
                    double wall_ms) {
  Json m;
  m["tool"] = "fairmine";
  m["version"] = kVersion;
  m["command"] = run.command;
  m["arguments"] = args;
  Json config = nullptr;
  if (!run.config.empty() && std::filesystem::exists(run.config)) {
    config = {{"path", run.config}, {"sha256", sha256_file(run.config)}};
  }
  m["config"] = config;
  auto files = [](const std::vector<std::pair<std::string, std::string>>& v) {
    Json a = Json::array();
    for (const auto& [role, path] : v) {
      Json f = {{"role", role}, {"path", path}, {"sha256", nullptr}};
      if (std::filesystem::exists(path)) f["sha256"] = sha256_file(path);
      a.push_back(f);
    }
    return a;
  };
  m["inputs"] = files(run.inputs);
  m["outputs"] = files(run.outputs);
  m["determinism"] = "no randomness: identical inputs and config give identical outputs";
  m["threads"] = thread_count();
  m["exit_code"] = code;
  m["timings"] = {{"wall_ms", wall_ms}};
  write_file(run.manifest, dump(m));
}

std::string default_manifest(const Run& run) {
  for (const auto& [role, path] : run.outputs) {
    if (role != "report") return path + ".manifest.json";
  }
  if (!run.outputs.empty()) return run.outputs.front().second + ".manifest.json";
  return "fairmine-" + run.command + ".manifest.json";
}

// Runs a command body; failures come back as false plus a message.
bool guarded(const std::function<void()>& body, std::string* error, bool* config_error) {
  try {
    body();
    return true;
  } catch (const ConfigError& e) {
    *error = e.what();
    *config_error = true;
  } catch (const std::exception& e) {
    *error = e.what();
  }
  return false;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrimination- and privacy-aware data mining toolkit", "fairmine"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1, 1);

  Run run;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", run.config, "Protection config (JSON)");
    sub->add_option("--manifest", run.manifest, "Run manifest path");
  };

  MineArgs mine;
  CLI::App* mine_cmd = app.add_subcommand("mine", "Mine classification rules or frequent patterns");
  mine_cmd->add_option("--data", mine.data, "Input CSV")->required();
  mine_cmd->add_option("--out", mine.out, "rules.jsonl or patterns.jsonl")->required();
  mine_cmd->add_option("--kind", mine.kind, "auto, rules or patterns")
      ->check(CLI::IsMember({"auto", "rules", "patterns"}));
  mine_cmd->add_option("--max-length", mine.max_length, "Longest itemset, class item included");
  common(mine_cmd);

  MeasureArgs measure_args;
  CLI::App* measure_cmd = app.add_subcommand("measure", "Audit rules for discrimination");
  measure_cmd->add_option("--rules", measure_args.rules, "Rules JSONL")->required();
  measure_cmd->add_option("--data", measure_args.data, "Input CSV")->required();
  measure_cmd->add_option("--out", measure_args.out, "Report path (default stdout)");
  common(measure_cmd);

  ProtectArgs protect;
  CLI::App* protect_cmd = app.add_subcommand("protect", "Remove discrimination from a table");
  protect_cmd->add_option("--mode", protect.mode)
      ->check(CLI::IsMember({"direct", "indirect", "both"}));
  protect_cmd->add_option("--method", protect.method)
      ->check(CLI::IsMember({"drp1", "drp2", "drp-rg", "irp1", "irp2"}));
  protect_cmd->add_option("--base-method", protect.base_method, "DRP method inside drp-rg")
      ->check(CLI::IsMember({"drp1", "drp2"}));
  protect_cmd->add_option("--data", protect.data, "Input CSV")->required();
  protect_cmd->add_option("--out", protect.out, "Output CSV")->required();
  protect_cmd->add_option("--log", protect.log, "Cell change log (JSONL)");
  protect_cmd->add_option("--report", protect.report, "Report path (default stdout)");
  protect_cmd->add_option("--max-rounds", protect.max_rounds)->check(CLI::PositiveNumber);
  common(protect_cmd);

  SanitizeArgs sanitize;
  CLI::App* sanitize_cmd =
      app.add_subcommand("sanitize-patterns", "Sanitize a frequent pattern set");
  sanitize_cmd->add_option("--mode", sanitize.mode)
      ->check(CLI::IsMember(
          {"privacy", "discrimination", "unexplainable", "both", "both-unexplainable"}));
  sanitize_cmd->add_option("--patterns", sanitize.patterns, "Patterns JSONL")->required();
  sanitize_cmd->add_option("--out", sanitize.out, "Output patterns JSONL")->required();
  sanitize_cmd->add_option("--report", sanitize.report, "Report path (default stdout)");
  sanitize_cmd->add_option("--max-rounds", sanitize.max_rounds)->check(CLI::PositiveNumber);
  common(sanitize_cmd);

  AnonymizeArgs anon;
  CLI::App* anon_cmd = app.add_subcommand("anonymize", "Full-domain generalization");
  anon_cmd->add_option("--data", anon.data, "Input CSV")->required();
  anon_cmd->add_option("--hierarchies", anon.hierarchies, "Hierarchies JSON")->required();
  anon_cmd->add_flag("--list", anon.list, "List admissible generalizations");
  anon_cmd->add_option("--apply", anon.apply, "Domain tuple such as <S1,R1>");
  anon_cmd->add_option("--criterion", anon.criterion, "gh, dr or cm")
      ->check(CLI::IsMember({"gh", "dr", "cm"}));
  anon_cmd->add_option("--out", anon.out, "Generalized CSV");
  anon_cmd->add_option("--report", anon.report, "Report path (default stdout)");
  anon_cmd->add_option("--qi", anon.qi, "Quasi-identifier attributes")->delimiter(',');
  common(anon_cmd);

  MetricsArgs metrics;
  CLI::App* metrics_cmd = app.add_subcommand("metrics", "Utility of a transformation");
  metrics_cmd->add_option("--before", metrics.before, "Original CSV or patterns")->required();
  metrics_cmd->add_option("--after", metrics.after, "Transformed CSV or patterns")->required();
  metrics_cmd->add_option("--kind", metrics.kind)
      ->check(CLI::IsMember({"auto", "tables", "patterns"}));
  metrics_cmd->add_flag("--exempt-explainable", metrics.exempt_explainable,
                        "Drop explainable rules from MR after the transformation");
  metrics_cmd->add_option("--out", metrics.out, "Report path (default stdout)");
  metrics_cmd->add_option("--csv", metrics.csv, "Summary row CSV");
  common(metrics_cmd);

  ClassifyArgs classify;
  CLI::App* classify_cmd = app.add_subcommand("classify", "CMAR accuracy of a pattern set");
  classify_cmd->add_option("--train", classify.train, "Patterns JSONL")->required();
  classify_cmd->add_option("--test", classify.test, "Test CSV")->required();
  classify_cmd->add_option("--out", classify.out, "Report path (default stdout)");
  common(classify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string error;
  bool config_error = false;
  bool ok = false;
  if (*mine_cmd) {
    run.command = "mine";
    ok = guarded([&] { cmd_mine(mine, run, out); }, &error, &config_error);
  } else if (*measure_cmd) {
    run.command = "measure";
    ok = guarded([&] { cmd_measure(measure_args, run, out); }, &error, &config_error);
  } else if (*protect_cmd) {
    run.command = "protect";
    ok = guarded([&] { cmd_protect(protect, run, out); }, &error, &config_error);
  } else if (*sanitize_cmd) {
    run.command = "sanitize-patterns";
    ok = guarded([&] { cmd_sanitize(sanitize, run, out); }, &error, &config_error);
  } else if (*anon_cmd) {
    run.command = "anonymize";
    ok = guarded([&] { cmd_anonymize(anon, run, out); }, &error, &config_error);
  } else if (*metrics_cmd) {
    run.command = "metrics";
    ok = guarded([&] { cmd_metrics(metrics, run, out); }, &error, &config_error);
  } else {
    run.command = "classify";
    ok = guarded([&] { cmd_classify(classify, run, out); }, &error, &config_error);
  }

  int code = kExitOk;
  if (!ok) {
    err << "error: " << error << "\n";
    code = config_error ? kExitConfig : kExitFailure;
  } else if (run.unresolved) {
    err << "warning: unresolved items remain; see the report\n";
    code = kExitUnresolved;
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (run.manifest.empty()) run.manifest = default_manifest(run);
  std::string merror;
  bool mconfig = false;
  if (!guarded([&] { write_manifest(run, args, code, wall_ms); }, &merror, &mconfig)) {
    err << "error: manifest: " << merror << "\n";
    if (code == kExitOk) code = kExitFailure;
  }
  return code;
}

}  // namespace fairmine
