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

// Test-side reference implementations. Everything here recomputes results
// from the domain types alone: matching compares morpheme fields directly
// per slot, never through the library's token encoding, so agreement with
// the library is evidence rather than tautology.

#ifndef KUGIRI_TESTS_ORACLES_HPP_
#define KUGIRI_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "kugiri/corpus.hpp"

namespace oracles {

// Slot specificity: -1 absent, 0..3 for major-only up to full word.
struct Shape {
  int far_left;
  int left;
  int right;
  int far_right;
};

inline const std::vector<Shape>& all_shapes() {
  static const std::vector<Shape> shapes = [] {
    std::vector<Shape> out;
    for (int fl = 0; fl < 2; ++fl)
      for (int l = 0; l < 4; ++l)
        for (int r = 0; r < 4; ++r)
          for (int fr = 0; fr < 2; ++fr) out.push_back({fl, l, r, fr});
    for (int l = 0; l < 4; ++l)
      for (int r = 0; r < 4; ++r)
        for (int fr = 0; fr < 2; ++fr) out.push_back({-1, l, r, fr});
    for (int fl = 0; fl < 2; ++fl)
      for (int l = 0; l < 4; ++l)
        for (int r = 0; r < 4; ++r) out.push_back({fl, l, r, -1});
    for (int l = 0; l < 4; ++l)
      for (int r = 0; r < 4; ++r) out.push_back({-1, l, r, -1});
    for (int l = 0; l < 4; ++l) out.push_back({-1, l, -1, -1});
    for (int r = 0; r < 4; ++r) out.push_back({-1, -1, r, -1});
    return out;
  }();
  return shapes;
}

inline std::int64_t weight(int level) { return level < 0 ? 1 : level + 2; }

inline std::int64_t similarity(const Shape& s) {
  return weight(s.left) * weight(s.right) * 10000 +
         weight(s.far_left) * weight(s.far_right);
}

inline bool slot_matches(const kugiri::Morpheme& a, const kugiri::Morpheme& b,
                         int level) {
  if (level < 0) return true;
  if (a.major_pos != b.major_pos) return false;
  if (level >= 1 && a.minor_pos != b.minor_pos) return false;
  if (level >= 2 && a.semantic != b.semantic) return false;
  if (level >= 3 && a.word != b.word) return false;
  return true;
}

inline bool window_matches(const kugiri::Instance& a, const kugiri::Instance& b,
                           const Shape& s) {
  return slot_matches(a.far_left, b.far_left, s.far_left) &&
         slot_matches(a.left, b.left, s.left) &&
         slot_matches(a.right, b.right, s.right) &&
         slot_matches(a.far_right, b.far_right, s.far_right);
}

// One applicable rule for a query: the training instances sharing the
// query's consulted fields under one shape.
struct Match {
  int shape_index = 0;
  std::vector<int> ids;
  std::int64_t part = 0;
  std::int64_t non = 0;

  std::int64_t total() const { return part + non; }
  std::int64_t majority_count() const { return part > non ? part : non; }
  bool exclusive() const { return part == 0 || non == 0; }
};

inline std::vector<Match> scan(const std::vector<kugiri::Instance>& training,
                               const kugiri::Instance& query) {
  std::vector<Match> out;
  const auto& shapes = all_shapes();
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    Match m;
    m.shape_index = static_cast<int>(s);
    for (std::size_t i = 0; i < training.size(); ++i) {
      if (window_matches(query, training[i], shapes[s])) {
        m.ids.push_back(static_cast<int>(i));
        if (*training[i].label) {
          ++m.part;
        } else {
          ++m.non;
        }
      }
    }
    if (!m.ids.empty()) out.push_back(std::move(m));
  }
  return out;
}

// probability(a) vs probability(b), exact.
inline int compare_prob(const Match& a, const Match& b) {
  const auto lhs = a.majority_count() * b.total();
  const auto rhs = b.majority_count() * a.total();
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

inline bool default_category(const std::vector<kugiri::Instance>& training) {
  std::int64_t part = 0;
  for (const auto& inst : training) part += *inst.label ? 1 : 0;
  return 2 * part >= static_cast<std::int64_t>(training.size());
}

inline bool majority_of_union(const std::vector<kugiri::Instance>& training,
                              const std::vector<const Match*>& rules,
                              bool fallback) {
  std::vector<int> ids;
  for (const auto* m : rules) {
    ids.insert(ids.end(), m->ids.begin(), m->ids.end());
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::int64_t part = 0;
  std::int64_t non = 0;
  for (const auto id : ids) {
    if (*training[id].label) {
      ++part;
    } else {
      ++non;
    }
  }
  if (part == non) return fallback;
  return part > non;
}

inline bool majority_of_match(const Match& m, bool fallback) {
  if (m.part == m.non) return fallback;
  return m.part > m.non;
}

inline bool predict_method1(const std::vector<kugiri::Instance>& training,
                            const kugiri::Instance& query) {
  const auto fallback = default_category(training);
  const auto matches = scan(training, query);
  if (matches.empty()) return fallback;
  const Match* best = &matches.front();
  for (const auto& m : matches) {
    if (compare_prob(m, *best) > 0) best = &m;
  }
  std::vector<const Match*> top;
  for (const auto& m : matches) {
    if (compare_prob(m, *best) == 0) top.push_back(&m);
  }
  return majority_of_union(training, top, fallback);
}

inline bool predict_method2(const std::vector<kugiri::Instance>& training,
                            const kugiri::Instance& query) {
  const auto fallback = default_category(training);
  auto matches = scan(training, query);
  if (matches.empty()) return fallback;
  bool repeated_exclusive = false;
  for (const auto& m : matches) {
    repeated_exclusive |= m.exclusive() && m.total() > 1;
  }
  std::vector<const Match*> kept;
  for (const auto& m : matches) {
    if (repeated_exclusive && m.exclusive() && m.total() == 1) continue;
    kept.push_back(&m);
  }
  const Match* best = kept.front();
  for (const auto* m : kept) {
    if (compare_prob(*m, *best) > 0) best = m;
  }
  std::int64_t top_similarity = -1;
  for (const auto* m : kept) {
    if (compare_prob(*m, *best) == 0) {
      top_similarity =
          std::max(top_similarity, similarity(all_shapes()[m->shape_index]));
    }
  }
  std::vector<const Match*> top;
  for (const auto* m : kept) {
    if (compare_prob(*m, *best) == 0 &&
        similarity(all_shapes()[m->shape_index]) == top_similarity) {
      top.push_back(m);
    }
  }
  if (top.size() == 1) return majority_of_match(*top.front(), fallback);
  return majority_of_union(training, top, fallback);
}

inline bool predict_example_based(const std::vector<kugiri::Instance>& training,
                                  const kugiri::Instance& query) {
  const auto fallback = default_category(training);
  const auto matches = scan(training, query);
  if (matches.empty()) return fallback;
  std::int64_t top_similarity = -1;
  for (const auto& m : matches) {
    top_similarity =
        std::max(top_similarity, similarity(all_shapes()[m.shape_index]));
  }
  std::vector<const Match*> top;
  for (const auto& m : matches) {
    if (similarity(all_shapes()[m.shape_index]) == top_similarity) {
      top.push_back(&m);
    }
  }
  return majority_of_union(training, top, fallback);
}

inline bool predict_decision_list(const std::vector<kugiri::Instance>& training,
                                  const kugiri::Instance& query) {
  const auto fallback = default_category(training);
  const auto matches = scan(training, query);
  if (matches.empty()) return fallback;
  const Match* best = nullptr;
  for (const auto& m : matches) {
    if (best == nullptr) {
      best = &m;
      continue;
    }
    const int by_prob = compare_prob(m, *best);
    if (by_prob > 0 || (by_prob == 0 && m.total() > best->total())) {
      best = &m;  // shape order already ascends, so ties keep the earlier
    }
  }
  return majority_of_match(*best, fallback);
}

// Fraction of queries matched by at least one single-category rule.
inline double exclusive_coverage(const std::vector<kugiri::Instance>& training,
                                 const std::vector<kugiri::Instance>& queries) {
  if (queries.empty()) return 0.0;
  std::size_t covered = 0;
  for (const auto& q : queries) {
    for (const auto& m : scan(training, q)) {
      if (m.exclusive()) {
        ++covered;
        break;
      }
    }
  }
  return static_cast<double>(covered) / static_cast<double>(queries.size());
}

}  // namespace oracles

#endif  // KUGIRI_TESTS_ORACLES_HPP_
