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

#ifndef KUGIRI_MAX_ENTROPY_HPP_
#define KUGIRI_MAX_ENTROPY_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "kugiri/patterns.hpp"
#include "kugiri/rulebase.hpp"

namespace kugiri {

// Exponential model over the two categories. A feature is a retained
// (pattern key, category) pair; an instance activates it for category c
// when the key is among the instance's 152 instantiated keys and c matches.
// Category index 0 = non-partition, 1 = partition.
struct MaxEntFeature {
  std::array<bool, 2> retained{false, false};
  std::array<double, 2> weight{0.0, 0.0};
};

struct MaxEntModel {
  using FeatureMap =
      std::unordered_map<PatternTokens, MaxEntFeature, PatternTokensHash>;

  std::vector<FeatureMap> features;  // indexed by template id
  double slack_weight = 0.0;
  bool slack_frozen = false;  // empirical slack count was zero
  double constant = static_cast<double>(kNumTemplates);  // scaling constant C
  std::int64_t cutoff = 1;
  bool converged = false;
  int iterations = 0;
  bool default_category = true;

  MaxEntModel() : features(kNumTemplates) {}
};

struct MaxEntParams {
  std::int64_t cutoff = 1;  // minimum (feature, category) pair frequency
  int max_iterations = 1000;
  double tolerance = 1e-6;  // max absolute weight update to declare converged
};

// Unnormalized log-scores of the two categories: active feature weights
// plus the slack feature, which pads every (instance, category) to a
// constant total feature count so the scaling updates stay valid.
inline std::array<double, 2> max_entropy_scores(const MaxEntModel& model,
                                                const Instance& inst) {
  std::array<double, 2> score{0.0, 0.0};
  std::array<int, 2> active{0, 0};
  const auto& table = template_table();
  for (std::size_t t = 0; t < table.size(); ++t) {
    const auto& map = model.features[t];
    if (map.empty()) continue;
    const auto it = map.find(instantiate_tokens(table[t], inst));
    if (it == map.end()) continue;
    for (int c = 0; c < 2; ++c) {
      if (it->second.retained[c]) {
        score[c] += it->second.weight[c];
        ++active[c];
      }
    }
  }
  for (int c = 0; c < 2; ++c) {
    score[c] += model.slack_weight * (model.constant - active[c]);
  }
  return score;
}

inline std::array<double, 2> predict_probabilities(const MaxEntModel& model,
                                                   const Instance& inst) {
  const auto score = max_entropy_scores(model, inst);
  const double m = std::max(score[0], score[1]);
  const double e0 = std::exp(score[0] - m);
  const double e1 = std::exp(score[1] - m);
  return {e0 / (e0 + e1), e1 / (e0 + e1)};
}

inline bool predict_max_entropy(const MaxEntModel& model,
                                const Instance& inst) {
  const auto score = max_entropy_scores(model, inst);
  if (score[1] == score[0]) return model.default_category;
  return score[1] > score[0];
}

inline MaxEntModel train_max_entropy(const std::vector<Instance>& instances,
                                     const MaxEntParams& params) {
  if (instances.empty()) {
    throw std::invalid_argument("training set is empty");
  }
  if (params.cutoff < 1) {
    throw std::invalid_argument("cutoff must be positive");
  }
  std::int64_t partitions = 0;
  for (const auto& inst : instances) {
    if (!inst.label.has_value()) {
      throw std::invalid_argument("training instance lacks a label");
    }
    if (*inst.label) ++partitions;
  }

  MaxEntModel model;
  model.cutoff = params.cutoff;
  model.default_category =
      2 * partitions >= static_cast<std::int64_t>(instances.size());

  // Tally (key, gold category) occurrences, then retain pairs reaching the
  // cutoff. The per-instance key lists are kept for the training loop.
  using CountMap = std::unordered_map<PatternTokens, std::array<std::int64_t, 2>,
                                      PatternTokensHash>;
  std::vector<CountMap> counts(kNumTemplates);
  std::vector<std::vector<PatternTokens>> keys_of(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    keys_of[i] = instance_keys(instances[i]);
    const int gold = *instances[i].label ? 1 : 0;
    for (std::size_t t = 0; t < kNumTemplates; ++t) {
      ++counts[t][keys_of[i][t]][gold];
    }
  }

  // Deterministic feature ids: template-major, tokens sorted, category last.
  std::vector<double> empirical;
  std::vector<std::unordered_map<PatternTokens, std::array<std::int32_t, 2>,
                                 PatternTokensHash>>
      ids(kNumTemplates);
  for (std::size_t t = 0; t < kNumTemplates; ++t) {
    std::vector<const PatternTokens*> sorted_keys;
    sorted_keys.reserve(counts[t].size());
    for (const auto& [tokens, tally] : counts[t]) sorted_keys.push_back(&tokens);
    std::sort(sorted_keys.begin(), sorted_keys.end(),
              [](const PatternTokens* a, const PatternTokens* b) {
                return *a < *b;
              });
    for (const auto* tokens : sorted_keys) {
      const auto& tally = counts[t].at(*tokens);
      std::array<std::int32_t, 2> id{-1, -1};
      MaxEntFeature feature;
      bool any = false;
      for (int c = 0; c < 2; ++c) {
        if (tally[c] >= params.cutoff) {
          id[c] = static_cast<std::int32_t>(empirical.size());
          empirical.push_back(static_cast<double>(tally[c]));
          feature.retained[c] = true;
          any = true;
        }
      }
      if (any) {
        ids[t].emplace(*tokens, id);
        model.features[t].emplace(*tokens, feature);
      }
    }
  }

  // Active feature ids per (instance, category), ascending by construction.
  const std::size_t n = instances.size();
  std::vector<std::array<std::vector<std::int32_t>, 2>> active(n);
  double empirical_slack = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < kNumTemplates; ++t) {
      const auto it = ids[t].find(keys_of[i][t]);
      if (it == ids[t].end()) continue;
      for (int c = 0; c < 2; ++c) {
        if (it->second[c] >= 0) active[i][c].push_back(it->second[c]);
      }
    }
    const int gold = *instances[i].label ? 1 : 0;
    empirical_slack +=
        model.constant - static_cast<double>(active[i][gold].size());
  }
  keys_of.clear();
  keys_of.shrink_to_fit();

  // With cutoff 1 every key of every training instance is retained for its
  // gold category, the slack feature never fires empirically, and its
  // weight must stay at zero.
  model.slack_frozen = empirical_slack == 0.0;

  std::vector<double> weights(empirical.size(), 0.0);
  double slack_weight = 0.0;
  std::vector<double> expected(empirical.size(), 0.0);
  const double inv_c = 1.0 / model.constant;
  constexpr double kFloor = 1e-12;

  for (int iter = 0; iter < params.max_iterations; ++iter) {
    std::fill(expected.begin(), expected.end(), 0.0);
    double expected_slack = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::array<double, 2> score{};
      for (int c = 0; c < 2; ++c) {
        double s = slack_weight *
                   (model.constant - static_cast<double>(active[i][c].size()));
        for (const auto f : active[i][c]) s += weights[f];
        score[c] = s;
      }
      const double m = std::max(score[0], score[1]);
      const double e0 = std::exp(score[0] - m);
      const double e1 = std::exp(score[1] - m);
      const std::array<double, 2> p{e0 / (e0 + e1), e1 / (e0 + e1)};
      for (int c = 0; c < 2; ++c) {
        for (const auto f : active[i][c]) expected[f] += p[c];
        expected_slack +=
            p[c] *
            (model.constant - static_cast<double>(active[i][c].size()));
      }
    }
    double max_delta = 0.0;
    for (std::size_t f = 0; f < weights.size(); ++f) {
      const double delta =
          inv_c * std::log(empirical[f] / std::max(expected[f], kFloor));
      weights[f] += delta;
      max_delta = std::max(max_delta, std::abs(delta));
    }
    if (!model.slack_frozen) {
      const double delta =
          inv_c *
          std::log(empirical_slack / std::max(expected_slack, kFloor));
      slack_weight += delta;
      max_delta = std::max(max_delta, std::abs(delta));
    }
    model.iterations = iter + 1;
    if (max_delta < params.tolerance) {
      model.converged = true;
      break;
    }
  }

  model.slack_weight = slack_weight;
  for (std::size_t t = 0; t < kNumTemplates; ++t) {
    for (auto& [tokens, feature] : model.features[t]) {
      const auto& id = ids[t].at(tokens);
      for (int c = 0; c < 2; ++c) {
        if (id[c] >= 0) feature.weight[c] = weights[id[c]];
      }
    }
  }
  return model;
}

}  // namespace kugiri

#endif  // KUGIRI_MAX_ENTROPY_HPP_
