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

#ifndef KUGIRI_LEARNER_HPP_
#define KUGIRI_LEARNER_HPP_

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "kugiri/corpus.hpp"
#include "kugiri/decision_tree.hpp"
#include "kugiri/max_entropy.hpp"
#include "kugiri/rule_methods.hpp"
#include "kugiri/rulebase.hpp"

namespace kugiri {

enum class MethodKind {
  kDecisionTree = 0,
  kMaxEntropy,
  kExampleBased,
  kDecisionList,
  kMethod1,
  kMethod2,
};

inline constexpr std::array<MethodKind, 6> kAllMethods{
    MethodKind::kDecisionTree, MethodKind::kMaxEntropy,
    MethodKind::kExampleBased, MethodKind::kDecisionList,
    MethodKind::kMethod1,      MethodKind::kMethod2};

inline std::string_view method_name(MethodKind kind) {
  switch (kind) {
    case MethodKind::kDecisionTree: return "decision_tree";
    case MethodKind::kMaxEntropy: return "max_entropy";
    case MethodKind::kExampleBased: return "example_based";
    case MethodKind::kDecisionList: return "decision_list";
    case MethodKind::kMethod1: return "method1";
    case MethodKind::kMethod2: return "method2";
  }
  throw std::invalid_argument("unknown method kind");
}

inline std::optional<MethodKind> parse_method(std::string_view name) {
  for (const auto kind : kAllMethods) {
    if (method_name(kind) == name) return kind;
  }
  return std::nullopt;
}

inline bool is_rule_family(MethodKind kind) {
  return kind == MethodKind::kExampleBased ||
         kind == MethodKind::kDecisionList || kind == MethodKind::kMethod1 ||
         kind == MethodKind::kMethod2;
}

struct TrainParams {
  std::int64_t maxent_cutoff = 1;
  int maxent_max_iterations = 1000;
  double maxent_tolerance = 1e-6;
  std::int64_t tree_threshold = 10;
  bool tree_prune = false;
};

// One trained predictor. The four rule-driven kinds differ only in how they
// read the shared rule table, so learners of those kinds can share one.
class Learner {
 public:
  static Learner train(MethodKind kind, const std::vector<Instance>& instances,
                       const TrainParams& params = {}) {
    switch (kind) {
      case MethodKind::kDecisionTree: {
        DecisionTreeParams p;
        p.rare_threshold = params.tree_threshold;
        p.prune = params.tree_prune;
        return from_tree(train_decision_tree(instances, p));
      }
      case MethodKind::kMaxEntropy: {
        MaxEntParams p;
        p.cutoff = params.maxent_cutoff;
        p.max_iterations = params.maxent_max_iterations;
        p.tolerance = params.maxent_tolerance;
        return from_maxent(train_max_entropy(instances, p));
      }
      default:
        return from_rule_table(
            kind, std::make_shared<const RuleTable>(build_rule_table(instances)));
    }
  }

  static Learner train(MethodKind kind, const Corpus& corpus,
                       const TrainParams& params = {}) {
    return train(kind, extract_instances(corpus), params);
  }

  static Learner from_rule_table(MethodKind kind,
                                 std::shared_ptr<const RuleTable> table) {
    if (!is_rule_family(kind)) {
      throw std::invalid_argument("method does not use a rule table");
    }
    Learner l;
    l.kind_ = kind;
    l.table_ = std::move(table);
    return l;
  }

  static Learner from_tree(DecisionTreeModel model) {
    Learner l;
    l.kind_ = MethodKind::kDecisionTree;
    l.tree_ = std::make_shared<const DecisionTreeModel>(std::move(model));
    return l;
  }

  static Learner from_maxent(MaxEntModel model) {
    Learner l;
    l.kind_ = MethodKind::kMaxEntropy;
    l.maxent_ = std::make_shared<const MaxEntModel>(std::move(model));
    return l;
  }

  MethodKind kind() const { return kind_; }

  bool predict(const Instance& inst) const {
    switch (kind_) {
      case MethodKind::kDecisionTree:
        return predict_decision_tree(*tree_, inst);
      case MethodKind::kMaxEntropy:
        return predict_max_entropy(*maxent_, inst);
      case MethodKind::kExampleBased:
        return predict_example_based(*table_, inst);
      case MethodKind::kDecisionList:
        return predict_decision_list(*table_, inst);
      case MethodKind::kMethod1:
        return predict_method1(*table_, inst);
      case MethodKind::kMethod2:
        return predict_method2(*table_, inst);
    }
    throw std::logic_error("unknown method kind");
  }

  std::vector<bool> predict_all(const std::vector<Instance>& instances) const {
    std::vector<bool> out;
    out.reserve(instances.size());
    for (const auto& inst : instances) out.push_back(predict(inst));
    return out;
  }

  // nullptr unless the learner is of the matching family.
  const RuleTable* rule_table() const { return table_.get(); }
  std::shared_ptr<const RuleTable> shared_rule_table() const { return table_; }
  const DecisionTreeModel* tree() const { return tree_.get(); }
  const MaxEntModel* maxent() const { return maxent_.get(); }

 private:
  Learner() = default;

  MethodKind kind_ = MethodKind::kDecisionTree;
  std::shared_ptr<const RuleTable> table_;
  std::shared_ptr<const DecisionTreeModel> tree_;
  std::shared_ptr<const MaxEntModel> maxent_;
};

}  // namespace kugiri

#endif  // KUGIRI_LEARNER_HPP_
