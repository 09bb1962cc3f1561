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

#include "fairmine/patternshield.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "fairmine/parallel.hpp"

namespace fairmine {

namespace {

// Subsets of `s` beyond this size are found by scanning the set instead.
constexpr std::size_t kMaxEnumerated = 20;
constexpr std::size_t kMaxDelta = std::size_t{1} << 48;

Itemset subset_of(const Itemset& s, std::uint64_t mask) {
  Itemset out;
  for (std::size_t b = 0; b < s.size(); ++b) {
    if (mask & (std::uint64_t{1} << b)) out.push_back(s[b]);
  }
  return out;
}

// g[m] = sum over supersets X of m within s of (-1)^|X \ m| supp(X).
std::vector<std::int64_t> moebius(const PatternSet& patterns, const Itemset& s) {
  const std::size_t n = s.size();
  std::vector<std::int64_t> g(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < g.size(); ++m) {
    g[m] = static_cast<std::int64_t>(patterns.support_or_zero(subset_of(s, m)));
  }
  for (std::size_t b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t m = 0; m < g.size(); ++m) {
      if (!(m & bit)) g[m] -= g[m | bit];
    }
  }
  return g;
}

bool channel_less(const InferenceChannel& x, const InferenceChannel& y) {
  if (x.i != y.i) return itemset_less(x.i, y.i);
  return itemset_less(x.j, y.j);
}

std::set<Itemset, ItemsetOrder> pattern_keys(const std::vector<PatternAudit>& audits) {
  std::set<Itemset, ItemsetOrder> out;
  for (const PatternAudit& a : audits) out.insert(a.pattern);
  return out;
}

PatternAudit audit_pattern(const Itemset& p, const PatternSet& patterns,
                           const ResolvedConfig& config) {
  const PatternSupport source(patterns);
  const ItemId c = config.negative_class;
  PatternAudit out;
  out.pattern = p;
  out.a = set_intersection(p, config.pd_items);
  out.b = set_difference(set_difference(p, out.a), {c});
  const Measure f = config.raw.measure;
  if (f == Measure::kClift) {
    const CliftResult r = most_favored_clift(source, out.a, out.b, c);
    out.counts = r.counts;
    out.value = r.value;
  } else {
    out.counts = contingency(source, out.a, out.b, c);
    out.value = measure(out.counts, f);
  }
  out.discriminatory = is_alpha_discriminatory(out.value, config.raw.alpha);
  const Itemset ab = set_union(out.a, out.b);
  out.complete = patterns.contains(ab) && patterns.contains(out.b) &&
                 patterns.contains(set_union(out.b, {c}));
  return out;
}

bool is_pd_pattern(const Itemset& p, const ResolvedConfig& config) {
  return contains_item(p, config.negative_class) && is_pd(p, config.pd_items);
}

double conf_of(std::size_t a, std::size_t n) {
  return n == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(n);
}

// Measure of the pattern after adding delta to its sanitization target.
MeasureValue value_with_delta(const PatternAudit& audit, Measure f, std::size_t delta) {
  ContingencyCounts k = audit.counts;
  if (is_elift_family(f)) {
    k.supp_b += delta;
    k.supp_bc += delta;
    k.n2 += delta;
    k.a2 += delta;
    k.total += delta;
    return measure(k, f);
  }
  k.n1 += delta;
  k.supp_b += delta;
  k.total += delta;
  if (f != Measure::kClift) return measure(k, f);
  // The group itself may become the least favoured one.
  const double own = conf_of(k.a1, k.n1);
  const double fav = conf_of(k.a2, k.n2);
  MeasureValue v{Measure::kClift, 0.0, false};
  if (k.n1 == 0 || k.n2 == 0 || fav <= 0.0) return v;
  v.defined = true;
  v.value = own / std::min(own > 0.0 ? own : fav, fav);
  return v;
}

using Detector = std::function<std::vector<PatternAudit>(const PatternSet&)>;

struct LoopState {
  // Patterns that are given up on: no finite delta, or oscillating.
  std::set<Itemset, ItemsetOrder> infeasible;
  struct History {
    std::size_t last = 0;
    std::size_t rises = 0;  // consecutive strict increases of delta
  };
  std::map<Itemset, History, ItemsetOrder> history;
};

// Applies one delta per listed pattern, then re-detects with `detect` until
// clean or the round cap is hit.
PatternSet sanitize_loop(PatternSet out, std::vector<PatternAudit> current, SanitizeReport& report,
                         const SanitizeOptions& options, const Detector& detect, LoopState& state,
                         const std::function<void(PatternSet&, std::vector<PatternAudit>&,
                                                  LoopState&)>& pass) {
  auto& infeasible = state.infeasible;
  for (std::size_t round = 0; round < options.max_rounds && !current.empty(); ++round) {
    ++report.rounds;
    const auto before = pattern_keys(detect(out));
    pass(out, current, state);
    std::vector<PatternAudit> next;
    for (PatternAudit& a : detect(out)) {
      if (!before.count(a.pattern)) ++report.new_discrimination;
      if (!infeasible.count(a.pattern)) next.push_back(std::move(a));
    }
    current = sort_by_impact(std::move(next));
  }
  std::set<Itemset, ItemsetOrder> left = infeasible;
  for (const PatternAudit& a : current) left.insert(a.pattern);
  for (const PatternAudit& a : detect(out)) {
    if (left.count(a.pattern)) report.unresolved.push_back(a.pattern);
  }
  return out;
}

bool apply_one(PatternSet& out, const Itemset& p, const ResolvedConfig& config,
               SanitizeReport& report, LoopState& state) {
  const auto d = delta_for(p, out, config);
  if (!d) return false;
  if (!d->feasible) {
    state.infeasible.insert(p);
    return false;
  }
  // Repairs of other groups can push a pattern back over the threshold.
  // Converging cases need shrinking deltas; a delta that grows on two
  // consecutive revisits signals a ping-pong whose supports grow without
  // bound, so the pattern is left unresolved.
  const auto [it, first] = state.history.try_emplace(p);
  if (!first) {
    it->second.rises = d->delta > it->second.last ? it->second.rises + 1 : 0;
    if (it->second.rises >= 2) {
      state.infeasible.insert(p);
      return false;
    }
  }
  it->second.last = d->delta;
  apply_delta(out, d->target, d->delta);
  report.deltas.push_back(*d);
  return true;
}

}  // namespace

std::int64_t channel_support(const PatternSet& patterns, const Itemset& i, const Itemset& j) {
  if (!is_subset(i, j)) throw Error("channel_support: I is not a subset of J");
  const Itemset rest = set_difference(j, i);
  if (rest.size() > 62) throw Error("channel_support: itemset too long");
  std::int64_t sum = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << rest.size()); ++m) {
    const Itemset x = set_union(i, subset_of(rest, m));
    const auto s = static_cast<std::int64_t>(patterns.support_or_zero(x));
    sum += (std::popcount(m) % 2 == 0) ? s : -s;
  }
  return sum;
}

std::vector<InferenceChannel> find_channels(const PatternSet& patterns, std::size_t k) {
  std::vector<const Itemset*> js;
  for (const auto& [s, supp] : patterns.entries()) js.push_back(&s);
  std::vector<std::vector<InferenceChannel>> found(js.size());
  const auto kk = static_cast<std::int64_t>(k);
  parallel_for(js.size(), [&](std::size_t t) {
    const Itemset& j = *js[t];
    if (j.size() > kMaxEnumerated) throw Error("find_channels: pattern too long");
    const std::vector<std::int64_t> g = moebius(patterns, j);
    for (std::uint64_t m = 0; m < g.size(); ++m) {
      if (g[m] <= 0 || g[m] >= kk) continue;
      Itemset i = subset_of(j, m);
      if (!patterns.contains(i)) continue;
      found[t].push_back({std::move(i), j, g[m]});
    }
  });
  std::vector<InferenceChannel> out;
  for (auto& v : found) {
    for (auto& c : v) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), channel_less);
  return out;
}

PatternSet privacy_additive_sanitize(const PatternSet& patterns, std::size_t k,
                                     std::vector<InferenceChannel>* blocked) {
  PatternSet out = patterns;
  // Each fix raises channel supports by 0 or k, so this terminates.
  for (;;) {
    const std::vector<InferenceChannel> channels = find_channels(out, k);
    if (channels.empty()) break;
    for (const InferenceChannel& c : channels) {
      const std::int64_t s = channel_support(out, c.i, c.j);
      if (s <= 0 || s >= static_cast<std::int64_t>(k)) continue;
      apply_delta(out, c.i, k);
      if (blocked) blocked->push_back({c.i, c.j, s});
    }
  }
  return out;
}

std::vector<PatternAudit> audit_pd_patterns(const PatternSet& patterns,
                                            const ResolvedConfig& config) {
  std::vector<const Itemset*> pd;
  for (const auto& [s, supp] : patterns.entries()) {
    if (is_pd_pattern(s, config)) pd.push_back(&s);
  }
  std::vector<PatternAudit> out(pd.size());
  parallel_for(pd.size(), [&](std::size_t i) { out[i] = audit_pattern(*pd[i], patterns, config); });
  return out;
}

std::vector<PatternAudit> detect_disc_patterns(const PatternSet& patterns,
                                               const ResolvedConfig& config) {
  std::vector<PatternAudit> out;
  for (PatternAudit& a : audit_pd_patterns(patterns, config)) {
    if (a.discriminatory) out.push_back(std::move(a));
  }
  return out;
}

Itemset sanitization_target(const PatternAudit& audit, Measure f) {
  if (is_elift_family(f)) return set_difference(audit.pattern, audit.a);
  return set_union(audit.a, audit.b);
}

std::optional<SanitizationDelta> delta_for(const Itemset& pattern, const PatternSet& patterns,
                                           const ResolvedConfig& config) {
  if (!is_pd_pattern(pattern, config)) return std::nullopt;
  const PatternAudit audit = audit_pattern(pattern, patterns, config);
  if (!audit.discriminatory) return std::nullopt;
  const Measure f = config.raw.measure;
  const double alpha = config.raw.alpha;
  SanitizationDelta d;
  d.pattern = pattern;
  d.target = sanitization_target(audit, f);
  d.measure = f;
  d.before = audit.value.value;
  auto fixed = [&](std::size_t delta) {
    return !is_alpha_discriminatory(value_with_delta(audit, f, delta), alpha);
  };
  // The measures are monotone in delta: double, then bisect.
  std::size_t hi = 1;
  while (!fixed(hi) && hi < kMaxDelta) hi *= 2;
  if (!fixed(hi)) {
    d.feasible = false;
    d.after = value_with_delta(audit, f, hi).value;
    return d;
  }
  std::size_t lo = hi / 2;  // not fixed, or 0
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (fixed(mid) ? hi : lo) = mid;
  }
  d.delta = hi;
  d.after = value_with_delta(audit, f, hi).value;
  return d;
}

std::size_t apply_delta(PatternSet& patterns, const Itemset& target, std::size_t delta) {
  std::vector<Itemset> hit;
  if (target.size() <= kMaxEnumerated &&
      (std::size_t{1} << target.size()) <= patterns.size()) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << target.size()); ++m) {
      Itemset s = subset_of(target, m);
      if (patterns.contains(s)) hit.push_back(std::move(s));
    }
  } else {
    for (const auto& [s, supp] : patterns.entries()) {
      if (is_subset(s, target)) hit.push_back(s);
    }
  }
  for (const Itemset& s : hit) patterns.add(s, delta);
  return hit.size();
}

std::vector<PatternAudit> sort_by_impact(std::vector<PatternAudit> patterns) {
  std::sort(patterns.begin(), patterns.end(), [](const PatternAudit& x, const PatternAudit& y) {
    return itemset_less(x.pattern, y.pattern);
  });
  std::vector<std::size_t> impact(patterns.size(), 0);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = 0; j < patterns.size(); ++j) {
      const Itemset& pi = patterns[i].pattern;
      const Itemset& pj = patterns[j].pattern;
      if (pj.size() < pi.size() && is_subset(pj, pi)) ++impact[i];
    }
  }
  std::vector<std::size_t> order(patterns.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return impact[x] > impact[y]; });
  std::vector<PatternAudit> out;
  out.reserve(patterns.size());
  for (std::size_t i : order) out.push_back(std::move(patterns[i]));
  return out;
}

namespace {

PatternSet antidisc_impl(const PatternSet& patterns, const std::vector<PatternAudit>& dd,
                         const ResolvedConfig& config, SanitizeReport& rep,
                         const SanitizeOptions& options, LoopState& state) {
  const Detector detect = [&](const PatternSet& p) { return detect_disc_patterns(p, config); };
  return sanitize_loop(
      patterns, sort_by_impact(dd), rep, options, detect, state,
      [&](PatternSet& out, std::vector<PatternAudit>& current, LoopState& st) {
        for (const PatternAudit& a : current) apply_one(out, a.pattern, config, rep, st);
      });
}

}  // namespace

PatternSet antidisc_sanitize(const PatternSet& patterns, const std::vector<PatternAudit>& dd,
                             const ResolvedConfig& config, SanitizeReport* report,
                             const SanitizeOptions& options) {
  SanitizeReport local;
  LoopState state;
  return antidisc_impl(patterns, dd, config, report ? *report : local, options, state);
}

bool is_d_explainable(const PatternAudit& audit, const PatternSet& patterns,
                      const ResolvedConfig& config) {
  Itemset grounded;
  for (const Itemset& e : config.di_e) grounded = set_union(grounded, e);
  if (grounded.empty()) return false;
  const ItemId c = config.negative_class;
  const PatternSupport source(patterns);
  for (const auto& [q, supp] : patterns.entries()) {
    if (!contains_item(q, c) || is_pd(q, config.pd_items)) continue;
    const Itemset x = set_difference(q, {c});
    if (!is_subset(audit.b, x)) continue;
    const Itemset d = set_difference(x, audit.b);
    if (d.empty() || !is_subset(d, grounded)) continue;
    if (d_instance(audit.a, d, audit.b, c, config.raw.d, source).holds()) return true;
  }
  return false;
}

std::vector<PatternAudit> detect_unexplainable(const PatternSet& patterns,
                                               const ResolvedConfig& config) {
  std::vector<PatternAudit> dd = detect_disc_patterns(patterns, config);
  std::vector<char> keep(dd.size(), 0);
  parallel_for(dd.size(),
               [&](std::size_t i) { keep[i] = !is_d_explainable(dd[i], patterns, config); });
  std::vector<PatternAudit> out;
  for (std::size_t i = 0; i < dd.size(); ++i) {
    if (keep[i]) out.push_back(std::move(dd[i]));
  }
  return out;
}

namespace {

PatternSet unexplainable_impl(const PatternSet& patterns, const std::vector<PatternAudit>& bad,
                              const ResolvedConfig& config, SanitizeReport& rep,
                              const SanitizeOptions& options, LoopState& state) {
  const Detector detect = [&](const PatternSet& p) { return detect_unexplainable(p, config); };
  const bool elift = is_elift_family(config.raw.measure);
  return sanitize_loop(
      patterns, sort_by_impact(bad), rep, options, detect, state,
      [&](PatternSet& out, std::vector<PatternAudit>& current, LoopState& st) {
        if (elift) {
          for (const PatternAudit& a : current) apply_one(out, a.pattern, config, rep, st);
          return;
        }
        // Raising supp(A,B) can expose subsets of the pattern, which join
        // the work list.
        auto queued = pattern_keys(current);
        for (std::size_t i = 0; i < current.size(); ++i) {
          const Itemset p = current[i].pattern;
          if (!apply_one(out, p, config, rep, st)) continue;
          for (const auto& [s, supp] : out.entries()) {
            if (s.size() >= p.size() || !is_subset(s, p) || queued.count(s)) continue;
            if (!is_pd_pattern(s, config)) continue;
            PatternAudit sub = audit_pattern(s, out, config);
            if (!sub.discriminatory || is_d_explainable(sub, out, config)) continue;
            queued.insert(s);
            current.push_back(std::move(sub));
          }
        }
      });
}

}  // namespace

PatternSet unexplainable_sanitize(const PatternSet& patterns, const std::vector<PatternAudit>& bad,
                                  const ResolvedConfig& config, SanitizeReport* report,
                                  const SanitizeOptions& options) {
  SanitizeReport local;
  LoopState state;
  return unexplainable_impl(patterns, bad, config, report ? *report : local, options, state);
}

PatternSet protect_patterns(const PatternSet& patterns, std::size_t k,
                            const ResolvedConfig& config, PatternMode mode,
                            SanitizeReport* report, const SanitizeOptions& options) {
  SanitizeReport local;
  SanitizeReport& rep = report ? *report : local;
  const bool privacy = mode == PatternMode::kPrivacy || mode == PatternMode::kBoth ||
                       mode == PatternMode::kBothUnexplainable;
  const bool unexplainable =
      mode == PatternMode::kUnexplainable || mode == PatternMode::kBothUnexplainable;
  auto detect = [&](const PatternSet& p) {
    return unexplainable ? detect_unexplainable(p, config) : detect_disc_patterns(p, config);
  };
  // Shared across rounds so that oscillation between the two steps is seen.
  LoopState state;
  auto fix = [&](const PatternSet& p, const std::vector<PatternAudit>& dd) {
    SanitizeReport step;
    PatternSet out = unexplainable ? unexplainable_impl(p, dd, config, step, options, state)
                                   : antidisc_impl(p, dd, config, step, options, state);
    rep.rounds += step.rounds;
    rep.new_discrimination += step.new_discrimination;
    for (auto& d : step.deltas) rep.deltas.push_back(std::move(d));
    return out;
  };

  if (mode == PatternMode::kPrivacy) {
    return privacy_additive_sanitize(patterns, k, &rep.channels_blocked);
  }
  if (!privacy) {
    PatternSet out = fix(patterns, detect(patterns));
    for (const PatternAudit& a : detect(out)) rep.unresolved.push_back(a.pattern);
    return out;
  }
  // Anti-discrimination increments can open channels from zero support, and
  // blocking channels can tip a measure, so alternate until both hold.
  PatternSet out = patterns;
  for (std::size_t round = 0; round < options.max_rounds; ++round) {
    out = privacy_additive_sanitize(out, k, &rep.channels_blocked);
    const std::vector<PatternAudit> dd = detect(out);
    if (dd.empty()) return out;
    const bool stuck = std::all_of(dd.begin(), dd.end(), [&](const PatternAudit& a) {
      return state.infeasible.count(a.pattern) > 0;
    });
    if (stuck) break;
    out = fix(out, dd);
    if (detect(out).empty() && find_channels(out, k).empty()) return out;
  }
  for (const PatternAudit& a : detect(out)) rep.unresolved.push_back(a.pattern);
  return out;
}

}  // namespace fairmine
