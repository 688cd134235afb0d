// Copyright 2026 The Kugiri Authors
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

#ifndef KUGIRI_RULE_METHODS_HPP_
#define KUGIRI_RULE_METHODS_HPP_

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "kugiri/rulebase.hpp"

namespace kugiri {

namespace detail {

struct ExampleUnionCounts {
  std::int64_t partition = 0;
  std::int64_t non_partition = 0;
};

// Gold-label tally over the deduplicated union of the examples covered by
// `rules`. Votes are counted per distinct training instance, never per
// rule, since one example can sit under many rules at once.
inline ExampleUnionCounts count_example_union(
    const RuleTable& table, const std::vector<const RuleStats*>& rules) {
  std::vector<std::int32_t> ids;
  std::size_t total = 0;
  for (const auto* r : rules) total += r->example_ids.size();
  ids.reserve(total);
  for (const auto* r : rules) {
    ids.insert(ids.end(), r->example_ids.begin(), r->example_ids.end());
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  ExampleUnionCounts counts;
  const auto& instances = table.training_instances();
  for (const auto id : ids) {
    if (*instances[id].label) {
      ++counts.partition;
    } else {
      ++counts.non_partition;
    }
  }
  return counts;
}

inline bool union_majority(const RuleTable& table,
                           const std::vector<const RuleStats*>& rules) {
  const auto counts = count_example_union(table, rules);
  if (counts.partition == counts.non_partition) {
    return table.default_category();
  }
  return counts.partition > counts.non_partition;
}

}  // namespace detail

// Fetch-once helper: the four rule-driven methods all start from the same
// applicable-rule list, so batch callers compute it once per instance.
inline std::vector<MatchedRule> matched_rules(const RuleTable& table,
                                              const Instance& inst) {
  return applicable_rules(table, inst);
}

// Picks the training example(s) most similar to the query and lets them
// vote: take every rule at the highest applicable similarity, pool their
// covered examples, and return the gold-label majority of the pool.
inline bool predict_example_based(const RuleTable& table,
                                  const std::vector<MatchedRule>& rules) {
  if (rules.empty()) return table.default_category();
  int best = 0;
  for (const auto& r : rules) best = std::max(best, r.similarity);
  std::vector<const RuleStats*> top;
  for (const auto& r : rules) {
    if (r.similarity == best) top.push_back(r.stats);
  }
  return detail::union_majority(table, top);
}

// Priority order of the decision list: probability descending, then
// frequency descending. Positive result means a outranks b.
inline int compare_rule_priority(const RuleStats& a, const RuleStats& b) {
  const int by_probability = compare_probability(a, b);
  if (by_probability != 0) return by_probability;
  if (a.total() != b.total()) return a.total() > b.total() ? 1 : -1;
  return 0;
}

// First applicable entry of the sorted rule list. Equivalent shortcut: the
// applicable rules are exactly the list entries whose key this instance
// reproduces, at most one per template, so the first in list order is the
// priority maximum with the lowest template id.
inline bool predict_decision_list(const RuleTable& table,
                                  const std::vector<MatchedRule>& rules) {
  const MatchedRule* best = nullptr;
  for (const auto& r : rules) {
    if (best == nullptr || compare_rule_priority(*r.stats, *best->stats) > 0) {
      best = &r;
    }
  }
  if (best == nullptr) return table.default_category();
  return best->stats->majority(table.default_category());
}

// Majority vote over the example union of every rule tied at the highest
// probability.
inline bool predict_method1(const RuleTable& table,
                            const std::vector<MatchedRule>& rules) {
  if (rules.empty()) return table.default_category();
  const RuleStats* best = rules.front().stats;
  for (const auto& r : rules) {
    if (compare_probability(*r.stats, *best) > 0) best = r.stats;
  }
  std::vector<const RuleStats*> top;
  for (const auto& r : rules) {
    if (compare_probability(*r.stats, *best) == 0) top.push_back(r.stats);
  }
  return detail::union_majority(table, top);
}

// Variant of the union vote with two refinements: single-occurrence
// exclusive rules are dropped whenever a repeated exclusive rule is also
// applicable (they are the least trustworthy 100% rules), and among the
// highest-probability survivors only the most similar rules vote.
inline bool predict_method2(const RuleTable& table,
                            const std::vector<MatchedRule>& rules) {
  if (rules.empty()) return table.default_category();

  bool has_repeated_exclusive = false;
  for (const auto& r : rules) {
    if (r.stats->exclusive() && r.stats->total() > 1) {
      has_repeated_exclusive = true;
      break;
    }
  }
  std::vector<const MatchedRule*> kept;
  kept.reserve(rules.size());
  for (const auto& r : rules) {
    if (has_repeated_exclusive && r.stats->exclusive() &&
        r.stats->total() == 1) {
      continue;
    }
    kept.push_back(&r);
  }
  // The elimination only runs when a repeated exclusive rule survives it.
  assert(!kept.empty());

  const RuleStats* best = kept.front()->stats;
  for (const auto* r : kept) {
    if (compare_probability(*r->stats, *best) > 0) best = r->stats;
  }
  int best_similarity = 0;
  for (const auto* r : kept) {
    if (compare_probability(*r->stats, *best) == 0) {
      best_similarity = std::max(best_similarity, r->similarity);
    }
  }
  std::vector<const RuleStats*> top;
  for (const auto* r : kept) {
    if (r->similarity == best_similarity &&
        compare_probability(*r->stats, *best) == 0) {
      top.push_back(r->stats);
    }
  }
  if (top.size() == 1) {
    return top.front()->majority(table.default_category());
  }
  return detail::union_majority(table, top);
}

inline bool predict_example_based(const RuleTable& table,
                                  const Instance& inst) {
  return predict_example_based(table, matched_rules(table, inst));
}
inline bool predict_decision_list(const RuleTable& table,
                                  const Instance& inst) {
  return predict_decision_list(table, matched_rules(table, inst));
}
inline bool predict_method1(const RuleTable& table, const Instance& inst) {
  return predict_method1(table, matched_rules(table, inst));
}
inline bool predict_method2(const RuleTable& table, const Instance& inst) {
  return predict_method2(table, matched_rules(table, inst));
}

// One ranked rule of the materialized decision list.
struct DecisionListEntry {
  PatternKey key;
  bool category = false;
  std::int64_t probability_num = 0;  // majority count
  std::int64_t probability_den = 0;  // total count
  std::int64_t frequency = 0;        // = total count

  double probability() const {
    return static_cast<double>(probability_num) /
           static_cast<double>(probability_den);
  }
};

// The full list, sorted by probability desc, frequency desc, then the
// deterministic tertiary key (template id, tokens).
inline std::vector<DecisionListEntry> build_decision_list(
    const RuleTable& table) {
  std::vector<DecisionListEntry> entries;
  for (int t = 0; t < static_cast<int>(kNumTemplates); ++t) {
    for (const auto& [tokens, stats] : table.keys_for(t)) {
      DecisionListEntry e;
      e.key = PatternKey{t, tokens};
      e.category = stats.majority(table.default_category());
      e.probability_num = stats.majority_count();
      e.probability_den = stats.total();
      e.frequency = stats.total();
      entries.push_back(std::move(e));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const DecisionListEntry& a, const DecisionListEntry& b) {
              const auto lhs = a.probability_num * b.probability_den;
              const auto rhs = b.probability_num * a.probability_den;
              if (lhs != rhs) return lhs > rhs;
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              return a.key < b.key;
            });
  return entries;
}

// Human-readable ranked listing: rank, category, probability (one decimal),
// frequency, template levels, key tokens.
inline std::string render_decision_list(const std::vector<DecisionListEntry>& entries,
                                        std::size_t limit = 0) {
  const auto& table = template_table();
  std::ostringstream out;
  out << "rank\tcategory\tprobability\tfrequency\tpattern\tkey\n";
  const std::size_t n =
      limit == 0 ? entries.size() : std::min(limit, entries.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = entries[i];
    out << (i + 1) << '\t'
        << (e.category ? "partition" : "non-partition") << '\t'
        << std::fixed << std::setprecision(1) << 100.0 * e.probability()
        << "% (" << e.probability_num << '/' << e.probability_den << ")\t"
        << e.frequency << '\t' << level_string(table[e.key.template_id])
        << '\t';
    for (std::size_t j = 0; j < e.key.tokens.size(); ++j) {
      if (j > 0) out << ' ';
      out << e.key.tokens[j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace kugiri

#endif  // KUGIRI_RULE_METHODS_HPP_
