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

// Fixtures and generators shared by the unit suites and the acceptance run.

#ifndef FAIRMINE_TESTS_TEST_SUPPORT_HPP_
#define FAIRMINE_TESTS_TEST_SUPPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fairmine/io.hpp"
#include "fairmine/latticegen.hpp"
#include "fairmine/miner.hpp"
#include "fairmine/model.hpp"

namespace fairmine::testing {

inline std::string source_path(const std::string& rel) {
  return std::string(FAIRMINE_SOURCE_DIR) + "/" + rel;
}

inline ProtectionConfig make_config(const std::string& cls, const std::string& negative,
                                    Measure m, double alpha,
                                    std::vector<std::vector<std::string>> groups) {
  ProtectionConfig c;
  c.class_attribute = cls;
  c.negative_class = negative;
  c.measure = m;
  c.alpha = alpha;
  c.protected_itemsets = std::move(groups);
  return c;
}

// Sex, Race, Hours, Salary -> Credit (10 records).
inline DecisionTable loans_table() {
  TableOptions o;
  o.class_attribute = "Credit";
  o.pd_attributes = {"Sex"};
  return load_table(source_path("data/loans.csv"), o);
}

inline std::vector<GeneralizationHierarchy> loans_hierarchies() {
  return load_hierarchies(source_path("data/loans_hierarchies.json"));
}

// Builds a table from value labels; the last column is the class.
inline DecisionTable table_from(const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& rows,
                                const std::vector<std::string>& pd) {
  std::string csv;
  for (std::size_t i = 0; i < header.size(); ++i) csv += (i ? "," : "") + header[i];
  csv += "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) csv += (i ? "," : "") + r[i];
    csv += "\n";
  }
  TableOptions o;
  o.class_attribute = header.back();
  o.pd_attributes = pd;
  return parse_table(csv, o);
}

// Attributes X0..X{n-1} with small domains plus a binary class "Y" in {n, p};
// X0 is PD with values {a, b}.
struct RandomTableSpec {
  std::size_t min_records = 4;
  std::size_t max_records = 12;
  std::size_t min_attributes = 2;
  std::size_t max_attributes = 4;
  std::size_t max_domain = 4;
};

inline DecisionTable random_table(std::mt19937& rng, const RandomTableSpec& spec) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = pick(spec.min_records, spec.max_records);
  const std::size_t attrs = pick(spec.min_attributes, spec.max_attributes);
  std::vector<std::size_t> dom(attrs);
  for (std::size_t a = 0; a < attrs; ++a) dom[a] = a == 0 ? 2 : pick(2, spec.max_domain);
  std::vector<std::string> header;
  for (std::size_t a = 0; a < attrs; ++a) header.push_back("X" + std::to_string(a));
  header.push_back("Y");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::string> row;
    for (std::size_t a = 0; a < attrs; ++a) {
      row.push_back(std::string(1, static_cast<char>('a' + pick(0, dom[a] - 1))));
    }
    row.push_back(pick(0, 1) ? "p" : "n");
    // The first two records pin both class values and both PD values.
    if (r < 2) {
      row[0] = r == 0 ? "a" : "b";
      row.back() = r == 0 ? "n" : "p";
    }
    rows.push_back(row);
  }
  return table_from(header, rows, {"X0"});
}

// Credit decisions biased against Sex=f, more strongly for Job=j1; Zip=z1
// is mostly women, so it can act as a proxy for Sex. A strong proxy makes
// Zip=z1 nearly equivalent to Sex=f.
inline DecisionTable biased_table(std::mt19937& rng, std::size_t n, bool strong_proxy = false) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double zf = strong_proxy ? 0.95 : 0.7;
  const double zm = strong_proxy ? 0.02 : 0.15;
  auto pick = [&](std::initializer_list<const char*> values) {
    return std::string(*(values.begin() + static_cast<std::ptrdiff_t>(
                                               u(rng) * static_cast<double>(values.size()))));
  };
  const double bias = (strong_proxy ? 0.3 : 0.15) + 0.2 * u(rng);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < n; ++r) {
    const bool woman = u(rng) < 0.4;
    const std::string job = pick({"j1", "j2", "j3"});
    const std::string zip = u(rng) < (woman ? zf : zm) ? "z1" : pick({"z2", "z3"});
    const std::string age = pick({"old", "young"});
    double deny = 0.25 + (age == "young" ? 0.05 : 0.0);
    if (woman) deny += bias + (job == "j1" ? 0.15 : 0.0);
    rows.push_back({woman ? "f" : "m", job, zip, age, u(rng) < deny ? "No" : "Yes"});
  }
  return table_from({"Sex", "Job", "Zip", "Age", "Credit"}, rows, {"Sex"});
}

inline ProtectionConfig biased_config() {
  ProtectionConfig c = make_config("Credit", "No", Measure::kElift, 1.2, {{"Sex=f"}});
  c.ms = SupportThreshold::parse("5%");
  c.min_conf = 0.1;
  return c;
}

// Every itemset, brute force: one optional value per attribute.
inline std::map<Itemset, std::size_t> brute_force_supports(const DecisionTable& t) {
  const Schema& s = t.schema();
  std::map<Itemset, std::size_t> out;
  std::vector<std::size_t> pos(s.attribute_count(), 0);  // 0 = absent
  for (;;) {
    Itemset items;
    for (std::size_t a = 0; a < pos.size(); ++a) {
      if (pos[a]) items.push_back(s.item(a, pos[a] - 1));
    }
    std::sort(items.begin(), items.end());
    std::size_t c = 0;
    for (std::size_t r = 0; r < t.size(); ++r) {
      bool ok = true;
      for (ItemId id : items) ok = ok && t.value(r, s.item_attribute(id)) == s.item_value(id);
      c += ok;
    }
    out[items] = c;
    std::size_t a = 0;
    for (; a < pos.size(); ++a) {
      if (++pos[a] <= s.attribute(a).domain.size()) break;
      pos[a] = 0;
    }
    if (a == pos.size()) break;
  }
  return out;
}

// A hierarchy of `levels` generalization steps over the values of one
// attribute: each step merges neighbouring values pairwise, the last step
// maps everything to "*".
inline GeneralizationHierarchy random_hierarchy(const std::string& attr,
                                                const std::vector<std::string>& domain,
                                                std::size_t levels) {
  GeneralizationHierarchy h;
  h.attribute = attr;
  h.level_names.push_back(attr + "0");
  std::vector<std::string> current = domain;
  for (std::size_t l = 1; l <= levels; ++l) {
    std::map<std::string, std::string> m;
    std::vector<std::string> next;
    for (std::size_t i = 0; i < current.size(); ++i) {
      std::string parent = l == levels ? "*" : current[i / 2 * 2] + "+" + std::to_string(l);
      m[current[i]] = parent;
      if (std::find(next.begin(), next.end(), parent) == next.end()) next.push_back(parent);
    }
    h.maps.push_back(m);
    h.level_names.push_back(attr + std::to_string(l));
    current = next;
  }
  return h;
}

}  // namespace fairmine::testing

#endif  // FAIRMINE_TESTS_TEST_SUPPORT_HPP_
