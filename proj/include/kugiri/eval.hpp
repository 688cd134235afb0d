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

#ifndef KUGIRI_EVAL_HPP_
#define KUGIRI_EVAL_HPP_

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kugiri/learner.hpp"

namespace kugiri {

// Partition-positive scoring: only predicted and gold partition marks enter
// the counts; agreeing non-partitions are not rewarded.
struct EvalReport {
  std::int64_t n_spaces = 0;
  std::int64_t n_gold_partitions = 0;
  std::int64_t n_predicted_partitions = 0;
  std::int64_t n_correct_partitions = 0;
  std::optional<double> exclusive_coverage;

  // Degenerate denominators: with no gold partitions, recall is 1 exactly
  // when nothing was predicted; with no predictions, precision is 1 exactly
  // when there was nothing to find.
  double recall() const {
    if (n_gold_partitions == 0) {
      return n_predicted_partitions == 0 ? 1.0 : 0.0;
    }
    return static_cast<double>(n_correct_partitions) /
           static_cast<double>(n_gold_partitions);
  }

  double precision() const {
    if (n_predicted_partitions == 0) {
      return n_gold_partitions == 0 ? 1.0 : 0.0;
    }
    return static_cast<double>(n_correct_partitions) /
           static_cast<double>(n_predicted_partitions);
  }

  // Harmonic mean of recall and precision; 0 when both are 0.
  double f_measure() const {
    const double r = recall();
    const double p = precision();
    if (r + p == 0.0) return 0.0;
    return 2.0 * r * p / (r + p);
  }
};

inline EvalReport score(const std::vector<bool>& predictions,
                        const std::vector<bool>& gold) {
  if (predictions.size() != gold.size()) {
    throw std::invalid_argument("prediction/gold length mismatch: " +
                                std::to_string(predictions.size()) + " vs " +
                                std::to_string(gold.size()));
  }
  EvalReport report;
  report.n_spaces = static_cast<std::int64_t>(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i]) ++report.n_gold_partitions;
    if (predictions[i]) ++report.n_predicted_partitions;
    if (gold[i] && predictions[i]) ++report.n_correct_partitions;
  }
  return report;
}

struct ExperimentRow {
  MethodKind kind = MethodKind::kDecisionTree;
  std::string split;  // "learning" or "test"
  std::optional<EvalReport> report;
  std::string error;  // non-empty when training failed
};

struct ExperimentTable {
  std::vector<ExperimentRow> rows;
};

// Trains every requested kind on `learning` and scores it on both corpora.
// A kind that fails to train is kept in the table with its error message so
// the remaining kinds still report. Rule-family kinds share one rule table
// and additionally report exclusive-rule coverage of the scored split.
inline ExperimentTable run_experiment(const Corpus& learning,
                                      const Corpus& test,
                                      const std::vector<MethodKind>& kinds,
                                      const TrainParams& params = {}) {
  if (learning.sentences.empty() || test.sentences.empty()) {
    throw std::invalid_argument("learning and test corpora must be non-empty");
  }
  const auto learn_instances = extract_instances(learning);
  const auto test_instances = extract_instances(test);
  std::vector<bool> learn_gold;
  for (const auto& i : learn_instances) learn_gold.push_back(*i.label);
  std::vector<bool> test_gold;
  for (const auto& i : test_instances) test_gold.push_back(*i.label);

  // One rule table serves all rule-family kinds.
  std::shared_ptr<const RuleTable> shared_table;
  std::string shared_table_error;
  bool want_rule_family = false;
  for (const auto kind : kinds) want_rule_family |= is_rule_family(kind);
  if (want_rule_family) {
    try {
      shared_table =
          std::make_shared<const RuleTable>(build_rule_table(learn_instances));
    } catch (const std::exception& e) {
      shared_table_error = e.what();
    }
  }

  ExperimentTable table;
  for (const auto kind : kAllMethods) {
    bool requested = false;
    for (const auto k : kinds) requested |= k == kind;
    if (!requested) continue;

    std::optional<Learner> learner;
    std::string error;
    try {
      if (is_rule_family(kind)) {
        if (!shared_table) throw std::runtime_error(shared_table_error);
        learner = Learner::from_rule_table(kind, shared_table);
      } else {
        learner = Learner::train(kind, learn_instances, params);
      }
    } catch (const std::exception& e) {
      error = e.what();
    }

    const bool want_coverage =
        kind == MethodKind::kMethod1 || kind == MethodKind::kMethod2;
    for (const auto* split :
         {&learn_instances, &test_instances}) {
      ExperimentRow row;
      row.kind = kind;
      row.split = split == &learn_instances ? "learning" : "test";
      if (learner) {
        row.report = score(learner->predict_all(*split),
                           split == &learn_instances ? learn_gold : test_gold);
        if (want_coverage) {
          row.report->exclusive_coverage =
              exclusive_coverage(*learner->rule_table(), *split);
        }
      } else {
        row.error = error;
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

namespace detail {

inline std::string format_percent(double ratio) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << 100.0 * ratio << '%';
  return out.str();
}

}  // namespace detail

// Aligned text table; percentages carry two decimals.
inline std::string render_experiment_table(const ExperimentTable& table) {
  constexpr std::array<std::string_view, 10> headers{
      "method",    "split",     "F",       "recall", "precision",
      "coverage",  "spaces",    "gold",    "predicted", "correct"};
  std::vector<std::array<std::string, 10>> rows;
  for (const auto& row : table.rows) {
    std::array<std::string, 10> cells;
    cells[0] = std::string(method_name(row.kind));
    cells[1] = row.split;
    if (row.report) {
      const auto& r = *row.report;
      cells[2] = detail::format_percent(r.f_measure());
      cells[3] = detail::format_percent(r.recall());
      cells[4] = detail::format_percent(r.precision());
      cells[5] = r.exclusive_coverage
                     ? detail::format_percent(*r.exclusive_coverage)
                     : std::string("-");
      cells[6] = std::to_string(r.n_spaces);
      cells[7] = std::to_string(r.n_gold_partitions);
      cells[8] = std::to_string(r.n_predicted_partitions);
      cells[9] = std::to_string(r.n_correct_partitions);
    } else {
      cells[2] = "failed: " + row.error;
    }
    rows.push_back(std::move(cells));
  }
  std::array<std::size_t, 10> widths;
  for (std::size_t c = 0; c < widths.size(); ++c) {
    widths[c] = headers[c].size();
    for (const auto& row : rows) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const auto& cells) {
    for (std::size_t c = 0; c < widths.size(); ++c) {
      if (c > 0) out << "  ";
      out << cells[c];
      if (c + 1 < widths.size()) {
        out << std::string(widths[c] - std::string_view(cells[c]).size(), ' ');
      }
    }
    out << '\n';
  };
  emit(headers);
  for (const auto& row : rows) emit(row);
  return out.str();
}

// Machine-readable rows: tab-separated, one line per (method, split).
inline std::string render_experiment_tsv(const ExperimentTable& table) {
  std::ostringstream out;
  out << "method\tsplit\tf\trecall\tprecision\tcoverage\tspaces\tgold\t"
         "predicted\tcorrect\terror\n";
  for (const auto& row : table.rows) {
    out << method_name(row.kind) << '\t' << row.split << '\t';
    if (row.report) {
      const auto& r = *row.report;
      out << detail::format_percent(r.f_measure()) << '\t'
          << detail::format_percent(r.recall()) << '\t'
          << detail::format_percent(r.precision()) << '\t';
      if (r.exclusive_coverage) {
        out << detail::format_percent(*r.exclusive_coverage);
      }
      out << '\t' << r.n_spaces << '\t' << r.n_gold_partitions << '\t'
          << r.n_predicted_partitions << '\t' << r.n_correct_partitions
          << "\t\n";
    } else {
      out << "\t\t\t\t\t\t\t\t" << row.error << '\n';
    }
  }
  return out.str();
}

}  // namespace kugiri

#endif  // KUGIRI_EVAL_HPP_
