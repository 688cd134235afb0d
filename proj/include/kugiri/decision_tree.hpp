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

#ifndef KUGIRI_DECISION_TREE_HPP_
#define KUGIRI_DECISION_TREE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kugiri/corpus.hpp"

namespace kugiri {

// Bucket token absorbing feature values too rare to split on.
inline constexpr std::string_view kOthersToken = "<others>";

// The tree sees the window through 12 flat categorical features: two fields
// for each outer morpheme, four for each middle morpheme.
inline constexpr std::size_t kNumTreeFeatures = 12;

inline const std::array<std::string_view, kNumTreeFeatures>&
tree_feature_names() {
  static const std::array<std::string_view, kNumTreeFeatures> names{
      "far_left.major_pos", "far_left.minor_pos",
      "left.major_pos",     "left.minor_pos",
      "left.semantic",      "left.word",
      "right.major_pos",    "right.minor_pos",
      "right.semantic",     "right.word",
      "far_right.major_pos", "far_right.minor_pos"};
  return names;
}

inline const std::string& tree_feature_value(const Instance& inst,
                                             std::size_t feature) {
  switch (feature) {
    case 0: return inst.far_left.major_pos;
    case 1: return inst.far_left.minor_pos;
    case 2: return inst.left.major_pos;
    case 3: return inst.left.minor_pos;
    case 4: return inst.left.semantic;
    case 5: return inst.left.word;
    case 6: return inst.right.major_pos;
    case 7: return inst.right.minor_pos;
    case 8: return inst.right.semantic;
    case 9: return inst.right.word;
    case 10: return inst.far_right.major_pos;
    case 11: return inst.far_right.minor_pos;
    default: throw std::out_of_range("tree feature index");
  }
}

// Two-class entropy in bits.
inline double label_entropy(std::int64_t a, std::int64_t b) {
  const double n = static_cast<double>(a + b);
  if (a == 0 || b == 0) return 0.0;
  const double pa = static_cast<double>(a) / n;
  const double pb = static_cast<double>(b) / n;
  return -pa * std::log2(pa) - pb * std::log2(pb);
}

struct SplitScore {
  double gain = 0.0;
  double split_info = 0.0;
  double gain_ratio = 0.0;
};

// Information gain and gain ratio of a candidate split, from the
// (partition, non-partition) counts of each child branch.
inline SplitScore evaluate_split(
    const std::vector<std::array<std::int64_t, 2>>& value_counts) {
  std::int64_t total_p = 0;
  std::int64_t total_n = 0;
  for (const auto& vc : value_counts) {
    total_p += vc[0];
    total_n += vc[1];
  }
  const double total = static_cast<double>(total_p + total_n);
  SplitScore score;
  if (total == 0.0) return score;
  double children = 0.0;
  for (const auto& vc : value_counts) {
    const double w = static_cast<double>(vc[0] + vc[1]) / total;
    if (w == 0.0) continue;
    children += w * label_entropy(vc[0], vc[1]);
    score.split_info -= w * std::log2(w);
  }
  score.gain = label_entropy(total_p, total_n) - children;
  if (score.split_info > 0.0) {
    score.gain_ratio = score.gain / score.split_info;
  }
  return score;
}

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  std::int64_t count_partition = 0;
  std::int64_t count_non_partition = 0;
  bool category = false;
  std::map<std::string, std::int32_t, std::less<>> children;  // value -> node
};

struct DecisionTreeModel {
  std::vector<TreeNode> nodes;  // preorder, nodes[0] is the root
  std::vector<std::vector<std::string>> kept_values;  // per feature, sorted
  std::int64_t rare_threshold = 10;
  bool pruned = false;
  bool default_category = true;
};

struct DecisionTreeParams {
  std::int64_t rare_threshold = 10;  // values seen fewer times become OTHERS
  bool prune = false;                // pessimistic subtree replacement
};

namespace detail {

struct TreeBuilder {
  const std::vector<std::array<std::string, kNumTreeFeatures>>& values;
  const std::vector<char>& labels;
  std::vector<TreeNode>& nodes;

  int build(const std::vector<std::int32_t>& idx,
            std::array<bool, kNumTreeFeatures> available, bool parent_category) {
    const int node_id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    std::int64_t p = 0;
    for (const auto i : idx) p += labels[i];
    const std::int64_t n = static_cast<std::int64_t>(idx.size()) - p;
    nodes[node_id].count_partition = p;
    nodes[node_id].count_non_partition = n;
    nodes[node_id].category = p == n ? parent_category : p > n;
    if (p == 0 || n == 0) return node_id;

    // Candidate features: at least two observed values and positive gain.
    // The winner maximizes gain ratio among candidates with at least
    // average gain; ties keep the lowest feature index.
    struct Candidate {
      std::size_t feature;
      SplitScore score;
    };
    std::vector<Candidate> candidates;
    for (std::size_t f = 0; f < kNumTreeFeatures; ++f) {
      if (!available[f]) continue;
      std::map<std::string_view, std::array<std::int64_t, 2>> tally;
      for (const auto i : idx) {
        auto& vc = tally[values[i][f]];
        ++vc[labels[i] ? 0 : 1];
      }
      if (tally.size() < 2) continue;
      std::vector<std::array<std::int64_t, 2>> counts;
      counts.reserve(tally.size());
      for (const auto& [value, vc] : tally) counts.push_back(vc);
      const auto score = evaluate_split(counts);
      if (score.gain <= 1e-12) continue;
      candidates.push_back(Candidate{f, score});
    }
    if (candidates.empty()) return node_id;
    double avg_gain = 0.0;
    for (const auto& c : candidates) avg_gain += c.score.gain;
    avg_gain /= static_cast<double>(candidates.size());
    const Candidate* best = nullptr;
    for (const auto& c : candidates) {
      if (c.score.gain + 1e-12 < avg_gain) continue;
      if (best == nullptr || c.score.gain_ratio > best->score.gain_ratio) {
        best = &c;
      }
    }
    if (best == nullptr) return node_id;

    const std::size_t f = best->feature;
    nodes[node_id].feature = static_cast<int>(f);
    std::map<std::string, std::vector<std::int32_t>> groups;
    for (const auto i : idx) groups[values[i][f]].push_back(i);
    available[f] = false;
    for (const auto& [value, child_idx] : groups) {
      const int child =
          build(child_idx, available, nodes[node_id].category);
      nodes[node_id].children.emplace(value, child);
    }
    return node_id;
  }

  // Pessimistic subtree replacement on the training counts: an internal
  // node becomes a leaf when its own corrected error is within one standard
  // error of the subtree's corrected error. Returns (errors, leaves).
  std::pair<double, std::int64_t> prune(int node_id) {
    TreeNode& node = nodes[node_id];
    const std::int64_t total = node.count_partition + node.count_non_partition;
    const double node_errors = static_cast<double>(
        std::min(node.count_partition, node.count_non_partition));
    if (node.feature < 0) return {node_errors, 1};
    double subtree_errors = 0.0;
    std::int64_t leaves = 0;
    for (const auto& [value, child] : node.children) {
      const auto [e, l] = prune(child);
      subtree_errors += e;
      leaves += l;
    }
    const double corrected = subtree_errors + 0.5 * static_cast<double>(leaves);
    const double se = std::sqrt(corrected *
                                (static_cast<double>(total) - corrected) /
                                static_cast<double>(total));
    if (node_errors + 0.5 <= corrected + se) {
      node.feature = -1;
      node.children.clear();
      return {node_errors, 1};
    }
    return {subtree_errors, leaves};
  }
};

}  // namespace detail

inline DecisionTreeModel train_decision_tree(
    const std::vector<Instance>& instances, const DecisionTreeParams& params) {
  if (instances.empty()) {
    throw std::invalid_argument("training set is empty");
  }
  if (params.rare_threshold < 1) {
    throw std::invalid_argument("rare_threshold must be positive");
  }
  std::int64_t partitions = 0;
  for (const auto& inst : instances) {
    if (!inst.label.has_value()) {
      throw std::invalid_argument("training instance lacks a label");
    }
    if (*inst.label) ++partitions;
  }

  DecisionTreeModel model;
  model.rare_threshold = params.rare_threshold;
  model.pruned = params.prune;
  model.default_category =
      2 * partitions >= static_cast<std::int64_t>(instances.size());

  // Per feature, keep only values reaching the frequency threshold; the
  // rest collapse into the OTHERS bucket before induction.
  model.kept_values.resize(kNumTreeFeatures);
  for (std::size_t f = 0; f < kNumTreeFeatures; ++f) {
    std::map<std::string_view, std::int64_t> freq;
    for (const auto& inst : instances) ++freq[tree_feature_value(inst, f)];
    for (const auto& [value, count] : freq) {
      if (count >= params.rare_threshold) {
        model.kept_values[f].emplace_back(value);
      }
    }
  }

  std::vector<std::array<std::string, kNumTreeFeatures>> values(
      instances.size());
  std::vector<char> labels(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    labels[i] = *instances[i].label ? 1 : 0;
    for (std::size_t f = 0; f < kNumTreeFeatures; ++f) {
      const auto& raw = tree_feature_value(instances[i], f);
      const auto& kept = model.kept_values[f];
      values[i][f] = std::binary_search(kept.begin(), kept.end(), raw)
                         ? raw
                         : std::string(kOthersToken);
    }
  }

  std::vector<std::int32_t> idx(instances.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    idx[i] = static_cast<std::int32_t>(i);
  }
  std::array<bool, kNumTreeFeatures> available;
  available.fill(true);
  detail::TreeBuilder builder{values, labels, model.nodes};
  builder.build(idx, available, model.default_category);
  if (params.prune) builder.prune(0);
  return model;
}

inline bool predict_decision_tree(const DecisionTreeModel& model,
                                  const Instance& inst) {
  const TreeNode* node = &model.nodes[0];
  while (node->feature >= 0) {
    const auto f = static_cast<std::size_t>(node->feature);
    const std::string& raw = tree_feature_value(inst, f);
    const auto& kept = model.kept_values[f];
    const std::string_view v =
        std::binary_search(kept.begin(), kept.end(), raw)
            ? std::string_view(raw)
            : kOthersToken;
    auto it = node->children.find(v);
    if (it == node->children.end() && v != kOthersToken) {
      it = node->children.find(kOthersToken);
    }
    if (it == node->children.end()) return node->category;
    node = &model.nodes[it->second];
  }
  return node->category;
}

}  // namespace kugiri

#endif  // KUGIRI_DECISION_TREE_HPP_
