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

// Generates two random corpora, trains every method on one, and prints the
// comparison table for both splits.

#include <iostream>

#include "kugiri/kugiri.hpp"

int main() {
  kugiri::SyntheticConfig config;
  config.n_sentences = 200;
  config.flip_prob = 0.05;

  const auto learning = kugiri::generate_synthetic(config, 1);
  const auto testing = kugiri::generate_synthetic(config, 2);
  std::cout << "learning: " << learning.provenance << "\n"
            << "test:     " << testing.provenance << "\n\n";

  const std::vector<kugiri::MethodKind> kinds(kugiri::kAllMethods.begin(),
                                              kugiri::kAllMethods.end());
  const auto table = kugiri::run_experiment(learning, testing, kinds);
  std::cout << kugiri::render_experiment_table(table);
  return 0;
}
