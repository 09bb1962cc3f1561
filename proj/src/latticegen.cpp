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

#include "fairmine/latticegen.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <utility>

#include "fairmine/discrimination.hpp"
#include "fairmine/parallel.hpp"

namespace fairmine {

namespace {

std::uint32_t index_of(const std::vector<std::string>& sorted, const std::string& v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  return static_cast<std::uint32_t>(it - sorted.begin());
}

bool contains(const std::vector<std::string>& names, const std::string& n) {
  return std::find(names.begin(), names.end(), n) != names.end();
}

}  // namespace

// ---------------------------------------------------------------- Lattice

Lattice::Lattice(const DecisionTable& table,
                 const std::vector<GeneralizationHierarchy>& hierarchies,
                 const std::vector<std::string>& qi)
    : table_(&table) {
  const Schema& schema = table.schema();
  std::vector<std::pair<std::size_t, const GeneralizationHierarchy*>> chosen;
  for (const auto& h : hierarchies) {
    if (!qi.empty() && !contains(qi, h.attribute)) continue;
    auto a = schema.find_attribute(h.attribute);
    if (!a) throw ConfigError("hierarchy for unknown attribute '" + h.attribute + "'");
    if (*a == schema.class_attribute()) {
      throw ConfigError("the class attribute cannot be generalized");
    }
    h.validate();
    chosen.emplace_back(*a, &h);
  }
  for (const auto& name : qi) {
    auto it = std::find_if(chosen.begin(), chosen.end(),
                           [&](const auto& c) { return c.second->attribute == name; });
    if (it == chosen.end()) throw ConfigError("no hierarchy for QI attribute '" + name + "'");
  }
  if (chosen.empty()) throw ConfigError("no quasi-identifier hierarchies");
  std::sort(chosen.begin(), chosen.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < chosen.size(); ++i) {
    if (chosen[i].first == chosen[i - 1].first) {
      throw ConfigError("two hierarchies for '" + chosen[i].second->attribute + "'");
    }
  }

  const std::size_t n = table.size();
  for (const auto& [a, h] : chosen) {
    attrs_.push_back(a);
    hierarchies_.push_back(*h);
    const std::size_t top = h->height();
    std::vector<std::vector<std::string>> values(top + 1);
    for (std::size_t l = 0; l <= top; ++l) values[l] = h->level_domain(l);
    std::vector<std::vector<std::uint32_t>> parents(top);
    for (std::size_t l = 0; l < top; ++l) {
      parents[l].resize(values[l].size());
      for (std::size_t v = 0; v < values[l].size(); ++v) {
        parents[l][v] = index_of(values[l + 1], h->maps[l].at(values[l][v]));
      }
    }
    // Leaf codes of the table's domain values.
    const auto& domain = schema.attribute(a).domain;
    std::vector<std::uint32_t> leaf(domain.size());
    for (std::size_t v = 0; v < domain.size(); ++v) {
      if (!h->maps[0].count(domain[v])) {
        throw ConfigError("leaf value '" + domain[v] + "' missing from hierarchy of '" +
                          h->attribute + "'");
      }
      leaf[v] = index_of(values[0], domain[v]);
    }
    std::vector<std::vector<std::uint32_t>> codes(top + 1, std::vector<std::uint32_t>(n));
    for (std::size_t r = 0; r < n; ++r) codes[0][r] = leaf[table.value(r, a)];
    for (std::size_t l = 1; l <= top; ++l) {
      for (std::size_t r = 0; r < n; ++r) codes[l][r] = parents[l - 1][codes[l - 1][r]];
    }
    codes_.push_back(std::move(codes));
    parents_.push_back(std::move(parents));
    values_.push_back(std::move(values));
  }
}

const std::string& Lattice::qi_name(std::size_t q) const {
  return table_->schema().attribute(attrs_[q]).name;
}

std::optional<std::size_t> Lattice::find_qi(std::string_view name) const {
  for (std::size_t q = 0; q < attrs_.size(); ++q) {
    if (qi_name(q) == name) return q;
  }
  return std::nullopt;
}

std::size_t Lattice::class_value(std::size_t record) const {
  return table_->value(record, table_->schema().class_attribute());
}

std::size_t Lattice::class_arity() const {
  const Schema& s = table_->schema();
  return s.attribute(s.class_attribute()).domain.size();
}

std::string Lattice::tuple_text(const DomainTuple& dt) const {
  std::string out = "<";
  for (std::size_t q = 0; q < dt.size(); ++q) {
    if (q) out += ",";
    out += hierarchies_[q].level_name(dt[q]);
  }
  return out + ">";
}

DomainTuple Lattice::parse_tuple(std::string_view text) const {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](char c) { return c == '<' || c == '>' || std::isspace(c); }),
          s.end());
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    parts.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != qi_count()) {
    throw ConfigError("domain tuple '" + std::string(text) + "' needs " +
                      std::to_string(qi_count()) + " components");
  }
  DomainTuple dt(parts.size());
  for (std::size_t q = 0; q < parts.size(); ++q) {
    bool found = false;
    for (std::size_t l = 0; l <= top_level(q); ++l) {
      if (hierarchies_[q].level_name(l) == parts[q] || std::to_string(l) == parts[q]) {
        dt[q] = l;
        found = true;
        break;
      }
    }
    if (!found) {
      throw ConfigError("unknown level '" + parts[q] + "' for '" + qi_name(q) + "'");
    }
  }
  return dt;
}

std::vector<DomainTuple> Lattice::all_tuples() const {
  std::vector<DomainTuple> out;
  DomainTuple dt(qi_count(), 0);
  for (;;) {
    out.push_back(dt);
    std::size_t q = qi_count();
    for (;;) {
      if (q == 0) return out;
      --q;
      if (++dt[q] <= top_level(q)) break;
      dt[q] = 0;
    }
  }
}

// ---------------------------------------------------------------- generalize

DecisionTable generalize(const Lattice& lattice, const DomainTuple& dt) {
  if (dt.size() != lattice.qi_count()) throw Error("domain tuple has the wrong arity");
  const DecisionTable& table = lattice.table();
  std::vector<AttributeSchema> attrs = table.schema().attributes();
  for (std::size_t q = 0; q < dt.size(); ++q) {
    if (dt[q] > lattice.top_level(q)) throw Error("domain tuple level out of range");
    if (dt[q] > 0) attrs[lattice.table_attribute(q)].domain = lattice.level_values(q, dt[q]);
  }
  Schema schema(std::move(attrs));
  std::vector<std::vector<std::uint32_t>> rows(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) {
    rows[r] = table.row(r);
    for (std::size_t q = 0; q < dt.size(); ++q) {
      if (dt[q] > 0) rows[r][lattice.table_attribute(q)] = lattice.code(q, dt[q], r);
    }
  }
  return DecisionTable(std::move(schema), std::move(rows));
}

DecisionTable generalize(const DecisionTable& table,
                         const std::vector<GeneralizationHierarchy>& hierarchies,
                         const std::map<std::string, std::size_t>& levels) {
  std::vector<std::string> qi;
  for (const auto& [name, level] : levels) qi.push_back(name);
  Lattice lattice(table, hierarchies, qi);
  DomainTuple dt(lattice.qi_count());
  for (std::size_t q = 0; q < dt.size(); ++q) dt[q] = levels.at(lattice.qi_name(q));
  return generalize(lattice, dt);
}

// ---------------------------------------------------------------- nodes

std::size_t LatticeNode::height() const {
  return std::accumulate(levels.begin(), levels.end(), std::size_t{0});
}

LatticeNode full_node(const DomainTuple& dt) {
  LatticeNode n;
  n.attrs.resize(dt.size());
  std::iota(n.attrs.begin(), n.attrs.end(), 0);
  n.levels = dt;
  return n;
}

std::vector<LatticeNode> direct_generalizations(const Lattice& lattice, const LatticeNode& n) {
  std::vector<LatticeNode> out;
  for (std::size_t i = 0; i < n.attrs.size(); ++i) {
    if (n.levels[i] < lattice.top_level(n.attrs[i])) {
      LatticeNode g = n;
      ++g.levels[i];
      out.push_back(std::move(g));
    }
  }
  return out;
}

// ---------------------------------------------------------------- frequency sets

std::size_t FrequencySet::count(const std::vector<std::uint32_t>& key) const {
  auto it = cells.find(key);
  if (it == cells.end()) return 0;
  return std::accumulate(it->second.begin(), it->second.end(), std::size_t{0});
}

std::map<std::vector<std::string>, std::size_t> FrequencySet::labelled(
    const Lattice& lattice) const {
  std::map<std::vector<std::string>, std::size_t> out;
  for (const auto& [key, counts] : cells) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < key.size(); ++i) {
      labels.push_back(lattice.level_values(node.attrs[i], node.levels[i])[key[i]]);
    }
    out[labels] = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  }
  return out;
}

FrequencySet frequency_set(const Lattice& lattice, const LatticeNode& node) {
  FrequencySet fs;
  fs.node = node;
  const std::size_t arity = lattice.class_arity();
  std::vector<std::uint32_t> key(node.attrs.size());
  for (std::size_t r = 0; r < lattice.table().size(); ++r) {
    for (std::size_t i = 0; i < key.size(); ++i) {
      key[i] = lattice.code(node.attrs[i], node.levels[i], r);
    }
    auto& cell = fs.cells[key];
    if (cell.empty()) cell.assign(arity, 0);
    ++cell[lattice.class_value(r)];
  }
  return fs;
}

FrequencySet frequency_set(const Lattice& lattice, const LatticeNode& node,
                           const FrequencySet& parent) {
  const LatticeNode& p = parent.node;
  if (p.attrs != node.attrs) throw Error("roll-up parent covers other attributes");
  std::size_t raised = node.attrs.size();
  for (std::size_t i = 0; i < node.attrs.size(); ++i) {
    if (p.levels[i] == node.levels[i]) continue;
    if (p.levels[i] + 1 != node.levels[i] || raised != node.attrs.size()) {
      throw Error("roll-up parent is not a direct specialization");
    }
    raised = i;
  }
  if (raised == node.attrs.size()) return parent;
  FrequencySet fs;
  fs.node = node;
  const std::size_t q = node.attrs[raised];
  const std::size_t level = p.levels[raised];
  for (const auto& [key, counts] : parent.cells) {
    std::vector<std::uint32_t> up = key;
    up[raised] = lattice.parent_code(q, level, key[raised]);
    auto& cell = fs.cells[up];
    if (cell.empty()) cell.assign(counts.size(), 0);
    for (std::size_t c = 0; c < counts.size(); ++c) cell[c] += counts[c];
  }
  return fs;
}

bool is_k_anonymous(const FrequencySet& fs, std::size_t k) {
  for (const auto& [key, counts] : fs.cells) {
    const std::size_t n = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    if (n > 0 && n < k) return false;
  }
  return true;
}

// ---------------------------------------------------------------- alpha-protection

LatticeOptions lattice_options(const Lattice& lattice, const ResolvedConfig& config) {
  LatticeOptions o;
  const Schema& schema = lattice.table().schema();
  o.k = config.raw.k;
  o.measure = config.raw.measure;
  o.alpha = config.raw.alpha;
  o.ms = config.ms;
  o.tau = config.raw.tau.value_or(std::min<std::size_t>(4, lattice.qi_count()));
  if (o.tau > lattice.qi_count()) {
    throw ConfigError("tau exceeds the number of QI attributes");
  }
  std::set<std::string> da;
  for (const Itemset& s : config.di_b) {
    for (ItemId id : s) da.insert(schema.attribute(schema.item_attribute(id)).name);
  }
  for (const auto& name : config.raw.pd_attributes) da.insert(name);
  for (const auto& name : da) {
    if (!lattice.find_qi(name)) {
      throw ConfigError("discriminatory attribute '" + name + "' has no hierarchy");
    }
  }
  o.da.assign(da.begin(), da.end());
  o.check_discrimination = !o.da.empty();
  o.negative_class = schema.item_value_name(config.negative_class);
  return o;
}

bool is_pd_node(const Lattice& lattice, const LatticeNode& node, const LatticeOptions& options) {
  for (std::size_t i = 0; i < node.attrs.size(); ++i) {
    if (node.levels[i] < lattice.top_level(node.attrs[i]) &&
        contains(options.da, lattice.qi_name(node.attrs[i]))) {
      return true;
    }
  }
  return false;
}

std::string mr_case_name(MrCase c) {
  switch (c) {
    case MrCase::kCase1: return "case1";
    case MrCase::kCase2: return "case2";
    case MrCase::kCase3: return "case3";
  }
  return "case?";
}

MrCase check_alpha_protection(const Lattice& lattice, const FrequencySet& fs,
                              const LatticeOptions& options) {
  const LatticeNode& node = fs.node;
  if (!is_pd_node(lattice, node, options)) throw Error("node holds no PD attribute");
  const Schema& schema = lattice.table().schema();
  const auto& class_domain = schema.attribute(schema.class_attribute()).domain;
  auto cit = std::find(class_domain.begin(), class_domain.end(), options.negative_class);
  if (cit == class_domain.end()) {
    throw ConfigError("unknown class value '" + options.negative_class + "'");
  }
  const std::size_t neg = static_cast<std::size_t>(cit - class_domain.begin());

  std::vector<std::size_t> pd_pos, b_pos;
  for (std::size_t i = 0; i < node.attrs.size(); ++i) {
    const bool pd = node.levels[i] < lattice.top_level(node.attrs[i]) &&
                    contains(options.da, lattice.qi_name(node.attrs[i]));
    (pd ? pd_pos : b_pos).push_back(i);
  }
  auto project = [](const std::vector<std::uint32_t>& key, const std::vector<std::size_t>& pos) {
    std::vector<std::uint32_t> out;
    out.reserve(pos.size());
    for (std::size_t i : pos) out.push_back(key[i]);
    return out;
  };
  auto a_labels = [&](const std::vector<std::uint32_t>& key) {
    std::vector<std::string> out;
    for (std::size_t i : pd_pos) {
      out.push_back(lattice.level_values(node.attrs[i], node.levels[i])[key[i]]);
    }
    return out;
  };

  struct BSum {
    std::size_t n = 0;
    std::size_t a = 0;
    // Most favoured group: minimal non-zero conf, ties by labels.
    bool has_fav = false;
    std::size_t fav_a = 0;
    std::size_t fav_n = 0;
    std::vector<std::string> fav_labels;
  };
  std::map<std::vector<std::uint32_t>, BSum> bsums;
  std::size_t total = 0;
  for (const auto& [key, counts] : fs.cells) {
    const std::size_t n1 = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    const std::size_t a1 = counts[neg];
    total += n1;
    BSum& b = bsums[project(key, b_pos)];
    b.n += n1;
    b.a += a1;
    if (options.measure == Measure::kClift && a1 > 0) {
      // a1/n1 < fav_a/fav_n without rounding.
      const bool better = !b.has_fav || a1 * b.fav_n < b.fav_a * n1 ||
                          (a1 * b.fav_n == b.fav_a * n1 && a_labels(key) < b.fav_labels);
      if (better) {
        b.has_fav = true;
        b.fav_a = a1;
        b.fav_n = n1;
        b.fav_labels = a_labels(key);
      }
    }
  }

  bool frequent_disc = false;
  bool infrequent_disc = false;
  bool below_favoured = false;
  for (const auto& [key, counts] : fs.cells) {
    const std::size_t n1 = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    if (n1 == 0) continue;
    const std::size_t a1 = counts[neg];
    const BSum& b = bsums.at(project(key, b_pos));
    ContingencyCounts k;
    k.total = total;
    k.supp_b = b.n;
    k.supp_bc = b.a;
    k.n1 = n1;
    k.a1 = a1;
    k.n2 = b.n - n1;
    k.a2 = b.a - a1;
    const bool frequent = a1 >= options.ms;
    if (options.measure == Measure::kClift) {
      if (!b.has_fav) continue;
      if (!frequent && a1 * b.fav_n < b.fav_a * n1) below_favoured = true;
      k.n2 = b.fav_n;
      k.a2 = b.fav_a;
    }
    const MeasureValue v = measure(k, options.measure);
    if (!is_alpha_discriminatory(v, options.alpha)) continue;
    (frequent ? frequent_disc : infrequent_disc) = true;
  }

  if (frequent_disc) return MrCase::kCase1;
  if (options.measure != Measure::kElift && options.measure != Measure::kClift) {
    return MrCase::kCase2;
  }
  if (infrequent_disc || below_favoured) return MrCase::kCase2;
  return MrCase::kCase3;
}

// ---------------------------------------------------------------- incognito

namespace {

enum class Mark { kNone, kKAnonymous, kProtective };

std::vector<LatticeNode> initial_candidates(const Lattice& lattice) {
  std::vector<LatticeNode> out;
  for (std::size_t q = 0; q < lattice.qi_count(); ++q) {
    for (std::size_t l = 0; l <= lattice.top_level(q); ++l) out.push_back({{q}, {l}});
  }
  return out;
}

// Joins survivors that agree on all but their last attribute, then drops
// candidates with a subset that did not survive.
std::vector<LatticeNode> graph_generation(const std::set<LatticeNode>& survivors) {
  std::map<LatticeNode, std::vector<const LatticeNode*>> by_prefix;
  for (const LatticeNode& n : survivors) {
    LatticeNode prefix{{n.attrs.begin(), n.attrs.end() - 1}, {n.levels.begin(), n.levels.end() - 1}};
    by_prefix[prefix].push_back(&n);
  }
  std::vector<LatticeNode> out;
  for (const auto& [prefix, group] : by_prefix) {
    for (const LatticeNode* p : group) {
      for (const LatticeNode* q : group) {
        if (p->attrs.back() >= q->attrs.back()) continue;
        LatticeNode c = *p;
        c.attrs.push_back(q->attrs.back());
        c.levels.push_back(q->levels.back());
        bool keep = true;
        for (std::size_t drop = 0; drop + 2 < c.attrs.size() && keep; ++drop) {
          LatticeNode sub;
          for (std::size_t i = 0; i < c.attrs.size(); ++i) {
            if (i == drop) continue;
            sub.attrs.push_back(c.attrs[i]);
            sub.levels.push_back(c.levels[i]);
          }
          keep = survivors.count(sub) > 0;
        }
        if (keep) out.push_back(std::move(c));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Visit {
  bool passed = false;
  bool protective = false;  // every group below alpha; marks DA generalizations
  bool k_checked = false;
  bool alpha_checked = false;
  std::optional<FrequencySet> fs;
};

}  // namespace

std::vector<DomainTuple> alpha_protective_incognito(const Lattice& lattice,
                                                    const LatticeOptions& options,
                                                    IncognitoStats* stats) {
  IncognitoStats local;
  for (const auto& name : options.da) {
    if (!lattice.find_qi(name)) {
      throw ConfigError("discriminatory attribute '" + name + "' is not a QI attribute");
    }
  }
  if (options.check_discrimination && options.tau > lattice.qi_count()) {
    throw ConfigError("tau exceeds the number of QI attributes");
  }
  const std::size_t n = lattice.qi_count();
  std::vector<LatticeNode> candidates = initial_candidates(lattice);
  std::set<LatticeNode> survivors;

  for (std::size_t i = 1; i <= n; ++i) {
    const std::set<LatticeNode> cand(candidates.begin(), candidates.end());
    std::map<LatticeNode, Mark> marks;
    std::set<LatticeNode> deleted;
    std::map<std::size_t, std::set<LatticeNode>> queue;
    for (const LatticeNode& c : cand) {
      bool root = true;
      for (std::size_t j = 0; j < c.attrs.size() && root; ++j) {
        if (c.levels[j] == 0) continue;
        LatticeNode s = c;
        --s.levels[j];
        root = cand.count(s) == 0;
      }
      if (root) queue[c.height()].insert(c);
    }
    const bool alpha_here = options.check_discrimination && i <= options.tau;

    std::map<LatticeNode, FrequencySet> previous;
    while (!queue.empty()) {
      const std::size_t h = queue.begin()->first;
      const std::vector<LatticeNode> batch(queue.begin()->second.begin(),
                                           queue.begin()->second.end());
      queue.erase(queue.begin());

      std::vector<Visit> visits(batch.size());
      parallel_for(batch.size(), [&](std::size_t b) {
        const LatticeNode& node = batch[b];
        Visit& v = visits[b];
        auto mit = marks.find(node);
        const Mark mark = mit == marks.end() ? Mark::kNone : mit->second;
        if (mark == Mark::kProtective) {
          v.passed = true;
          v.protective = true;
          return;
        }
        const FrequencySet* parent = nullptr;
        for (std::size_t j = 0; j < node.attrs.size() && !parent; ++j) {
          if (node.levels[j] == 0) continue;
          LatticeNode s = node;
          --s.levels[j];
          auto pit = previous.find(s);
          if (pit != previous.end()) parent = &pit->second;
        }
        v.fs = parent ? frequency_set(lattice, node, *parent) : frequency_set(lattice, node);
        if (mark != Mark::kKAnonymous) {
          v.k_checked = true;
          if (!is_k_anonymous(*v.fs, options.k)) return;
        }
        v.passed = true;
        if (alpha_here && is_pd_node(lattice, node, options)) {
          v.alpha_checked = true;
          const MrCase c = check_alpha_protection(lattice, *v.fs, options);
          if (c == MrCase::kCase1) v.passed = false;
          if (c == MrCase::kCase3) v.protective = true;
        }
      });

      std::map<LatticeNode, FrequencySet> current;
      for (std::size_t b = 0; b < batch.size(); ++b) {
        const LatticeNode& node = batch[b];
        Visit& v = visits[b];
        ++local.nodes_visited;
        if (v.k_checked) ++local.k_checks;
        if (v.alpha_checked) ++local.alpha_checks;
        std::vector<LatticeNode> gens;
        for (LatticeNode& g : direct_generalizations(lattice, node)) {
          if (cand.count(g)) gens.push_back(std::move(g));
        }
        if (!v.passed) {
          deleted.insert(node);
        } else {
          for (const LatticeNode& g : gens) {
            Mark& m = marks[g];
            if (m == Mark::kNone) m = Mark::kKAnonymous;
          }
          if (v.protective && alpha_here) {
            for (const LatticeNode& g : gens) {
              for (std::size_t j = 0; j < g.attrs.size(); ++j) {
                if (g.levels[j] != node.levels[j] &&
                    contains(options.da, lattice.qi_name(g.attrs[j]))) {
                  if (marks[g] != Mark::kProtective) ++local.alpha_marked;
                  marks[g] = Mark::kProtective;
                }
              }
            }
          }
        }
        for (LatticeNode& g : gens) queue[h + 1].insert(std::move(g));
        if (v.fs) current.emplace(node, std::move(*v.fs));
      }
      previous = std::move(current);
    }

    survivors.clear();
    for (const LatticeNode& c : cand) {
      if (!deleted.count(c)) survivors.insert(c);
    }
    if (i < n) candidates = graph_generation(survivors);
  }

  std::vector<DomainTuple> out;
  for (const LatticeNode& s : survivors) out.push_back(s.levels);
  std::sort(out.begin(), out.end());
  if (stats) *stats = local;
  return out;
}

// ---------------------------------------------------------------- quality

QualityReport tuple_quality(const Lattice& lattice, const DomainTuple& dt) {
  QualityReport q;
  q.gh = std::accumulate(dt.begin(), dt.end(), std::size_t{0});
  const FrequencySet fs = frequency_set(lattice, full_node(dt));
  const double total = static_cast<double>(lattice.table().size());
  double squares = 0.0;
  std::size_t penalties = 0;
  for (const auto& [key, counts] : fs.cells) {
    const std::size_t n = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    squares += static_cast<double>(n) * static_cast<double>(n);
    // max_element keeps the first maximum, so ties favour the smaller class.
    penalties += n - *std::max_element(counts.begin(), counts.end());
  }
  if (total > 0) {
    q.dr = squares / (total * total);
    q.cm = static_cast<double>(penalties) / total;
  }
  return q;
}

Criterion parse_criterion(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "gh") return Criterion::kGh;
  if (s == "dr") return Criterion::kDr;
  if (s == "cm") return Criterion::kCm;
  throw ConfigError("unknown criterion '" + std::string(name) + "'");
}

DomainTuple select_minimal(const Lattice& lattice, const std::vector<DomainTuple>& candidates,
                           Criterion criterion) {
  if (candidates.empty()) throw Error("no admissible generalization");
  std::vector<DomainTuple> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());
  std::optional<double> best;
  DomainTuple pick;
  for (const DomainTuple& dt : sorted) {
    const QualityReport q = tuple_quality(lattice, dt);
    double score = 0.0;
    switch (criterion) {
      case Criterion::kGh: score = static_cast<double>(q.gh); break;
      case Criterion::kDr: score = q.dr; break;
      case Criterion::kCm: score = q.cm; break;
    }
    if (!best || score < *best) {
      best = score;
      pick = dt;
    }
  }
  return pick;
}

}  // namespace fairmine
