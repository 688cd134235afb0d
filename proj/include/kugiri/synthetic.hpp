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

#ifndef KUGIRI_SYNTHETIC_HPP_
#define KUGIRI_SYNTHETIC_HPP_

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kugiri/corpus.hpp"

namespace kugiri {

// Settings for the random corpus generator. The latent boundary rule is a
// Bernoulli draw per ordered (left major POS, right major POS) pair: with
// probability `partition_bias` that pair partitions. Labels then flip with
// probability `flip_prob`, so flip_prob = 0 gives a corpus whose labels are
// a pure function of the adjacent POS pair (hence conflict-free), while
// flip_prob > 0 injects contradictions.
struct SyntheticConfig {
  std::size_t n_sentences = 100;
  std::size_t min_sentence_len = 3;
  std::size_t max_sentence_len = 12;
  std::size_t n_major_pos = 6;
  std::size_t n_minor_pos = 4;
  std::size_t n_semantic = 5;
  std::size_t n_words = 40;
  double partition_bias = 0.5;
  double flip_prob = 0.0;
  double no_semantic_prob = 0.25;
};

namespace detail {

// Hand-rolled draws on top of mt19937_64 so generated corpora are
// byte-identical across standard library implementations (std::uniform_*
// distributions do not pin their algorithms).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

inline Corpus generate_synthetic(const SyntheticConfig& config,
                                 std::uint64_t seed) {
  if (config.n_sentences == 0) {
    throw std::invalid_argument("n_sentences must be positive");
  }
  if (config.min_sentence_len < 2 ||
      config.max_sentence_len < config.min_sentence_len) {
    throw std::invalid_argument("need 2 <= min_sentence_len <= max_sentence_len");
  }
  if (config.n_major_pos == 0 || config.n_minor_pos == 0 ||
      config.n_semantic == 0 || config.n_words == 0) {
    throw std::invalid_argument("vocabulary sizes must be positive");
  }
  if (config.partition_bias < 0.0 || config.partition_bias > 1.0 ||
      config.flip_prob < 0.0 || config.flip_prob > 1.0 ||
      config.no_semantic_prob < 0.0 || config.no_semantic_prob > 1.0) {
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  }

  std::mt19937_64 rng(seed);

  // The latent rule is drawn before any sentence so it depends only on the
  // seed and the bias, not on corpus size.
  const std::size_t k = config.n_major_pos;
  std::vector<bool> rule(k * k);
  for (std::size_t i = 0; i < k * k; ++i) {
    rule[i] = detail::uniform_unit(rng) < config.partition_bias;
  }

  auto major_name = [](std::size_t i) { return "M" + std::to_string(i); };

  Corpus corpus;
  corpus.sentences.reserve(config.n_sentences);
  for (std::size_t s = 0; s < config.n_sentences; ++s) {
    const std::size_t len =
        config.min_sentence_len +
        detail::uniform_below(
            rng, config.max_sentence_len - config.min_sentence_len + 1);
    Sentence sentence;
    std::vector<std::size_t> majors(len);
    for (std::size_t i = 0; i < len; ++i) {
      majors[i] = detail::uniform_below(rng, config.n_major_pos);
      Morpheme m;
      m.major_pos = major_name(majors[i]);
      m.minor_pos =
          "m" + std::to_string(detail::uniform_below(rng, config.n_minor_pos));
      if (detail::uniform_unit(rng) < config.no_semantic_prob) {
        m.semantic = std::string(kNoSemantic);
      } else {
        m.semantic =
            std::to_string(100 + detail::uniform_below(rng, config.n_semantic));
      }
      m.word = "w" + std::to_string(detail::uniform_below(rng, config.n_words));
      sentence.morphemes.push_back(std::move(m));
    }
    sentence.boundaries.resize(len - 1);
    for (std::size_t i = 0; i + 1 < len; ++i) {
      bool label = rule[majors[i] * k + majors[i + 1]];
      if (config.flip_prob > 0.0 &&
          detail::uniform_unit(rng) < config.flip_prob) {
        label = !label;
      }
      sentence.boundaries[i] = label;
    }
    corpus.sentences.push_back(std::move(sentence));
  }

  std::ostringstream prov;
  prov << "synthetic seed=" << seed << " n_sentences=" << config.n_sentences
       << " len=[" << config.min_sentence_len << ","
       << config.max_sentence_len << "]"
       << " vocab=(" << config.n_major_pos << "," << config.n_minor_pos << ","
       << config.n_semantic << "," << config.n_words << ")"
       << " partition_bias=" << config.partition_bias
       << " flip_prob=" << config.flip_prob
       << " no_semantic_prob=" << config.no_semantic_prob << " rule=";
  for (std::size_t i = 0; i < k * k; ++i) prov << (rule[i] ? '1' : '0');
  corpus.provenance = prov.str();
  return corpus;
}

}  // namespace kugiri

#endif  // KUGIRI_SYNTHETIC_HPP_
