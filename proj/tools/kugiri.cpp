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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kugiri/kugiri.hpp"

namespace {

kugiri::Corpus load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error(path + ": cannot open for reading");
  }
  try {
    return kugiri::parse_corpus(in);
  } catch (const kugiri::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error(path + ": cannot open for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw std::runtime_error(path + ": write failed");
  }
}

std::vector<kugiri::MethodKind> parse_method_list(const std::string& spec) {
  std::vector<kugiri::MethodKind> kinds;
  if (spec == "all") {
    kinds.assign(kugiri::kAllMethods.begin(), kugiri::kAllMethods.end());
    return kinds;
  }
  std::istringstream in(spec);
  std::string name;
  while (std::getline(in, name, ',')) {
    const auto kind = kugiri::parse_method(name);
    if (!kind) {
      throw CLI::ValidationError("--methods",
                                 "unknown method '" + name + "'");
    }
    kinds.push_back(*kind);
  }
  if (kinds.empty()) {
    throw CLI::ValidationError("--methods", "no methods given");
  }
  return kinds;
}

std::string render_eval_report(const kugiri::EvalReport& r) {
  std::ostringstream out;
  auto pct = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << 100.0 * v << '%';
    return s.str();
  };
  out << "spaces     " << r.n_spaces << '\n'
      << "gold       " << r.n_gold_partitions << '\n'
      << "predicted  " << r.n_predicted_partitions << '\n'
      << "correct    " << r.n_correct_partitions << '\n'
      << "recall     " << pct(r.recall()) << '\n'
      << "precision  " << pct(r.precision()) << '\n'
      << "f          " << pct(r.f_measure()) << '\n';
  if (r.exclusive_coverage) {
    out << "coverage   " << pct(*r.exclusive_coverage) << '\n';
  }
  return out.str();
}

std::string render_eval_tsv(const kugiri::EvalReport& r) {
  std::ostringstream out;
  auto pct = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << 100.0 * v << '%';
    return s.str();
  };
  out << "spaces\tgold\tpredicted\tcorrect\trecall\tprecision\tf\tcoverage\n"
      << r.n_spaces << '\t' << r.n_gold_partitions << '\t'
      << r.n_predicted_partitions << '\t' << r.n_correct_partitions << '\t'
      << pct(r.recall()) << '\t' << pct(r.precision()) << '\t'
      << pct(r.f_measure()) << '\t'
      << (r.exclusive_coverage ? pct(*r.exclusive_coverage) : std::string())
      << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bunsetsu boundary classifiers over morpheme windows"};
  app.require_subcommand(0, 1);

  // train
  std::string train_method;
  std::string train_in;
  std::string train_out;
  kugiri::TrainParams params;
  auto* train = app.add_subcommand("train", "Train a model on a labeled corpus");
  train->add_option("--method", train_method, "One of: decision_tree, max_entropy, example_based, decision_list, method1, method2")
      ->required();
  train->add_option("--in", train_in, "Labeled corpus file")->required();
  train->add_option("--out", train_out, "Model file to write")->required();
  train->add_option("--maxent-cutoff", params.maxent_cutoff,
                    "Minimum (feature, category) pair frequency")
      ->capture_default_str();
  train->add_option("--maxent-iterations", params.maxent_max_iterations,
                    "Iteration budget for the scaling loop")
      ->capture_default_str();
  train->add_option("--maxent-tolerance", params.maxent_tolerance,
                    "Convergence threshold on weight updates")
      ->capture_default_str();
  train->add_option("--tree-threshold", params.tree_threshold,
                    "Feature values seen fewer times become OTHERS")
      ->capture_default_str();
  train->add_flag("--tree-prune", params.tree_prune,
                  "Pessimistic subtree replacement after induction");

  // predict
  std::string predict_model;
  std::string predict_in;
  std::string predict_out;
  auto* predict =
      app.add_subcommand("predict", "Insert partition marks into a corpus");
  predict->add_option("--model", predict_model, "Model file")->required();
  predict->add_option("--in", predict_in, "Corpus file (marks ignored)")
      ->required();
  predict->add_option("--out", predict_out,
                      "Output corpus file (stdout when omitted)");

  // evaluate
  std::string eval_model;
  std::string eval_in;
  bool eval_tsv = false;
  auto* evaluate =
      app.add_subcommand("evaluate", "Score a model against a labeled corpus");
  evaluate->add_option("--model", eval_model, "Model file")->required();
  evaluate->add_option("--in", eval_in, "Labeled corpus file")->required();
  evaluate->add_flag("--tsv", eval_tsv, "Tab-separated output");

  // compare
  std::string cmp_learn;
  std::string cmp_test;
  std::string cmp_methods = "all";
  bool cmp_tsv = false;
  auto* compare = app.add_subcommand(
      "compare", "Train on a learning corpus, score all methods on both splits");
  compare->add_option("--learn", cmp_learn, "Learning corpus file")->required();
  compare->add_option("--test", cmp_test, "Test corpus file")->required();
  compare->add_option("--methods", cmp_methods,
                      "Comma-separated method names, or 'all'")
      ->capture_default_str();
  compare->add_flag("--tsv", cmp_tsv, "Tab-separated output");
  compare->add_option("--maxent-cutoff", params.maxent_cutoff,
                      "Minimum (feature, category) pair frequency");
  compare->add_option("--maxent-iterations", params.maxent_max_iterations,
                      "Iteration budget for the scaling loop");
  compare->add_option("--maxent-tolerance", params.maxent_tolerance,
                      "Convergence threshold on weight updates");
  compare->add_option("--tree-threshold", params.tree_threshold,
                      "Feature values seen fewer times become OTHERS");
  compare->add_flag("--tree-prune", params.tree_prune,
                    "Pessimistic subtree replacement after induction");

  // gen-synthetic
  kugiri::SyntheticConfig config;
  std::uint64_t seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-synthetic",
                                 "Generate a random labeled corpus");
  gen->add_option("--out", gen_out, "Corpus file to write")->required();
  gen->add_option("--sentences", config.n_sentences, "Number of sentences")
      ->capture_default_str();
  gen->add_option("--min-len", config.min_sentence_len,
                  "Minimum morphemes per sentence")
      ->capture_default_str();
  gen->add_option("--max-len", config.max_sentence_len,
                  "Maximum morphemes per sentence")
      ->capture_default_str();
  gen->add_option("--majors", config.n_major_pos, "Major POS vocabulary size")
      ->capture_default_str();
  gen->add_option("--minors", config.n_minor_pos, "Minor POS vocabulary size")
      ->capture_default_str();
  gen->add_option("--semantics", config.n_semantic,
                  "Semantic code vocabulary size")
      ->capture_default_str();
  gen->add_option("--words", config.n_words, "Word vocabulary size")
      ->capture_default_str();
  gen->add_option("--partition-bias", config.partition_bias,
                  "Chance a POS pair partitions under the latent rule")
      ->capture_default_str();
  gen->add_option("--flip-prob", config.flip_prob,
                  "Chance a label contradicts the latent rule")
      ->capture_default_str();
  gen->add_option("--no-semantic-prob", config.no_semantic_prob,
                  "Chance a morpheme carries no semantic code")
      ->capture_default_str();
  gen->add_option("--seed", seed, "Generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (train->parsed()) {
      const auto kind = kugiri::parse_method(train_method);
      if (!kind) {
        std::cerr << "kugiri: unknown method '" << train_method << "'\n";
        return 2;
      }
      const auto corpus = load_corpus(train_in);
      const auto learner = kugiri::Learner::train(*kind, corpus, params);
      kugiri::save_model_file(learner, train_out);
      return 0;
    }
    if (predict->parsed()) {
      const auto learner = kugiri::load_model_file(predict_model);
      auto corpus = load_corpus(predict_in);
      for (auto& sentence : corpus.sentences) {
        const auto instances = kugiri::extract_instances(sentence);
        for (std::size_t i = 0; i < instances.size(); ++i) {
          sentence.boundaries[i] = learner.predict(instances[i]);
        }
      }
      const auto text = kugiri::write_corpus_text(corpus);
      if (predict_out.empty()) {
        std::cout << text;
      } else {
        write_text_file(predict_out, text);
      }
      return 0;
    }
    if (evaluate->parsed()) {
      const auto learner = kugiri::load_model_file(eval_model);
      const auto corpus = load_corpus(eval_in);
      const auto instances = kugiri::extract_instances(corpus);
      std::vector<bool> gold;
      gold.reserve(instances.size());
      for (const auto& inst : instances) gold.push_back(*inst.label);
      auto report = kugiri::score(learner.predict_all(instances), gold);
      if (learner.rule_table() != nullptr) {
        report.exclusive_coverage =
            kugiri::exclusive_coverage(*learner.rule_table(), instances);
      }
      std::cout << (eval_tsv ? render_eval_tsv(report)
                             : render_eval_report(report));
      return 0;
    }
    if (compare->parsed()) {
      const auto kinds = parse_method_list(cmp_methods);
      const auto learning = load_corpus(cmp_learn);
      const auto testing = load_corpus(cmp_test);
      const auto table =
          kugiri::run_experiment(learning, testing, kinds, params);
      std::cout << (cmp_tsv ? kugiri::render_experiment_tsv(table)
                            : kugiri::render_experiment_table(table));
      return 0;
    }
    if (gen->parsed()) {
      const auto corpus = kugiri::generate_synthetic(config, seed);
      write_text_file(gen_out, kugiri::write_corpus_text(corpus));
      std::cerr << corpus.provenance << '\n';
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "kugiri: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "kugiri: " << e.what() << '\n';
    return 1;
  }

  std::cout << app.help();
  return 2;
}
