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

#ifndef KUGIRI_RULEBASE_HPP_
#define KUGIRI_RULEBASE_HPP_

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "kugiri/corpus.hpp"
#include "kugiri/patterns.hpp"

namespace kugiri {

// Per-category counts of one stored pattern key, plus the ids of the
// training instances that produced it. Probability and frequency are
// derived, never stored: probability = majority count / total as an exact
// rational, frequency = total count.
struct RuleStats {
  std::int64_t count_partition = 0;
  std::int64_t count_non_partition = 0;
  std::vector<std::int32_t> example_ids;  // sorted ascending

  std::int64_t total() const { return count_partition + count_non_partition; }
  std::int64_t majority_count() const {
    return count_partition > count_non_partition ? count_partition
                                                 : count_non_partition;
  }
  bool tied() const { return count_partition == count_non_partition; }
  // Majority category; exact ties fall back to the caller-supplied default.
  bool majority(bool default_category) const {
    if (tied()) return default_category;
    return count_partition > count_non_partition;
  }
  bool exclusive() const {
    return count_partition == 0 || count_non_partition == 0;
  }
};

// probability(a) vs probability(b) compared exactly by cross-multiplying
// the majority/total rationals; no floating point is involved.
inline int compare_probability(const RuleStats& a, const RuleStats& b) {
  const auto lhs = a.majority_count() * b.total();
  const auto rhs = b.majority_count() * a.total();
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

struct MatchedRule {
  int template_id = 0;
  int similarity = 0;
  const RuleStats* stats = nullptr;
};

// The statistical backbone shared by the rule-driven methods: one key->stats
// map per template, the training instances the counts came from, and the
// training-set majority category as the fallback answer.
class RuleTable {
 public:
  // Hashed for query speed; consumers needing a stable order (model files,
  // list export) sort keys themselves.
  using KeyMap =
      std::unordered_map<PatternTokens, RuleStats, PatternTokensHash>;

  RuleTable() : maps_(kNumTemplates) {}

  const KeyMap& keys_for(int template_id) const { return maps_[template_id]; }
  KeyMap& mutable_keys_for(int template_id) { return maps_[template_id]; }

  const std::vector<Instance>& training_instances() const {
    return instances_;
  }
  std::vector<Instance>& mutable_training_instances() { return instances_; }

  bool default_category() const { return default_category_; }
  void set_default_category(bool v) { default_category_ = v; }

 private:
  std::vector<KeyMap> maps_;
  std::vector<Instance> instances_;
  bool default_category_ = true;
};

inline RuleTable build_rule_table(std::vector<Instance> instances) {
  if (instances.empty()) {
    throw std::invalid_argument("training set is empty");
  }
  std::int64_t partitions = 0;
  for (const auto& inst : instances) {
    if (!inst.label.has_value()) {
      throw std::invalid_argument("training instance lacks a label");
    }
    if (*inst.label) ++partitions;
  }
  RuleTable table;
  // Exact tie between the two categories defaults to partition.
  table.set_default_category(
      2 * partitions >= static_cast<std::int64_t>(instances.size()));

  const auto& templates = template_table();
  for (std::size_t id = 0; id < instances.size(); ++id) {
    const auto& inst = instances[id];
    const bool label = *inst.label;
    for (std::size_t t = 0; t < templates.size(); ++t) {
      auto& stats =
          table.mutable_keys_for(static_cast<int>(t))[instantiate_tokens(
              templates[t], inst)];
      if (label) {
        ++stats.count_partition;
      } else {
        ++stats.count_non_partition;
      }
      stats.example_ids.push_back(static_cast<std::int32_t>(id));
    }
  }
  table.mutable_training_instances() = std::move(instances);
  return table;
}

// Every stored rule whose key this instance reproduces, in template order.
inline std::vector<MatchedRule> applicable_rules(const RuleTable& table,
                                                 const Instance& inst) {
  const auto& templates = template_table();
  std::vector<MatchedRule> out;
  for (std::size_t t = 0; t < templates.size(); ++t) {
    const auto& keys = table.keys_for(static_cast<int>(t));
    const auto it = keys.find(instantiate_tokens(templates[t], inst));
    if (it == keys.end()) continue;
    out.push_back(MatchedRule{static_cast<int>(t), templates[t].similarity,
                              &it->second});
  }
  return out;
}

// Fraction of instances covered by at least one category-exclusive rule
// (a rule whose counts are all in one category).
inline double exclusive_coverage(const RuleTable& table,
                                 const std::vector<Instance>& instances) {
  if (instances.empty()) return 0.0;
  std::size_t covered = 0;
  for (const auto& inst : instances) {
    for (const auto& rule : applicable_rules(table, inst)) {
      if (rule.stats->exclusive()) {
        ++covered;
        break;
      }
    }
  }
  return static_cast<double>(covered) / static_cast<double>(instances.size());
}

}  // namespace kugiri

#endif  // KUGIRI_RULEBASE_HPP_
