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

#ifndef KUGIRI_TESTS_FIXTURES_HPP_
#define KUGIRI_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "kugiri/corpus.hpp"

namespace fixtures {

inline kugiri::Morpheme mk(std::string word, std::string major,
                           std::string minor, std::string semantic) {
  return kugiri::Morpheme{std::move(word), std::move(major), std::move(minor),
                          std::move(semantic)};
}

inline kugiri::Instance inst(kugiri::Morpheme far_left, kugiri::Morpheme left,
                             kugiri::Morpheme right, kugiri::Morpheme far_right,
                             bool label) {
  kugiri::Instance i;
  i.far_left = std::move(far_left);
  i.left = std::move(left);
  i.right = std::move(right);
  i.far_right = std::move(far_right);
  i.label = label;
  return i;
}

// Supplies values guaranteed distinct from each other and from every
// query-field constant used below.
struct Fresh {
  int n = 0;
  std::string operator()() { return "fresh" + std::to_string(n++); }
  kugiri::Morpheme morpheme() {
    return mk((*this)(), (*this)(), (*this)(), (*this)());
  }
};

struct Scenario {
  std::vector<kugiri::Instance> training;
  kugiri::Instance query;
};

// A training set whose applicable-rule census for `query` lands exactly on
// seven narrated statistics:
//   right at minor level and finer   -> non-partition 100% (34/34)
//   left+right, left at minor level  -> partition 100% (33/33)
//   window left of the space at
//   (far_left minor, majors)        -> partition 100% (25/25)
//   window right of the space at
//   (majors, far_right minor)       -> partition 100% (19/19)
//   left major alone                 -> partition 81.3% (100/123)
//   all four majors                  -> partition 76.9% (10/13)
//   right major alone                -> non-partition 57.4% (310/540)
// The first-applicable answer is non-partition (the frequency-34 rule);
// the example union of the other 100% rules holds 65 distinct partition
// instances and outvotes those 34.
inline Scenario worked_rule_scenario() {
  const kugiri::Morpheme q1 = mk("W1", "M1", "m1", "s1");
  const kugiri::Morpheme q2 = mk("W2", "M2", "m2", "s2");
  const kugiri::Morpheme q3 = mk("W3", "M3", "m3", "s3");
  const kugiri::Morpheme q4 = mk("W4", "M4", "m4", "s4");

  Scenario s;
  s.query = inst(q1, q2, q3, q4, false);
  s.query.label.reset();
  Fresh f;

  // 34 non-partition: right is the query's right morpheme exactly; nothing
  // else lines up.
  for (int i = 0; i < 34; ++i) {
    s.training.push_back(
        inst(f.morpheme(), mk(f(), "AY", f(), f()), q3, f.morpheme(), false));
  }
  // 21 partition: left matches through minor level, right major only.
  for (int i = 0; i < 21; ++i) {
    s.training.push_back(inst(f.morpheme(), mk(f(), "M2", "m2", f()),
                              mk(f(), "M3", f(), f()), f.morpheme(), true));
  }
  // 12 partition: as above plus far_left matching through minor level.
  for (int i = 0; i < 12; ++i) {
    s.training.push_back(inst(mk(f(), "M1", "m1", f()),
                              mk(f(), "M2", "m2", f()),
                              mk(f(), "M3", f(), f()), f.morpheme(), true));
  }
  // 13 partition: far_left through minor level, middles at majors only.
  for (int i = 0; i < 13; ++i) {
    s.training.push_back(inst(mk(f(), "M1", "m1", f()),
                              mk(f(), "M2", f(), f()),
                              mk(f(), "M3", f(), f()), f.morpheme(), true));
  }
  // 19 partition: middles at majors, far_right through minor level.
  for (int i = 0; i < 19; ++i) {
    s.training.push_back(inst(f.morpheme(), mk(f(), "M2", f(), f()),
                              mk(f(), "M3", f(), f()),
                              mk(f(), "M4", "m4", f()), true));
  }
  // 13 mixed (10 partition, 3 non): all four majors match, nothing finer.
  for (int i = 0; i < 13; ++i) {
    s.training.push_back(inst(mk(f(), "M1", f(), f()),
                              mk(f(), "M2", f(), f()),
                              mk(f(), "M3", f(), f()),
                              mk(f(), "M4", f(), f()), i < 10));
  }
  // 45 mixed (25 partition, 20 non): left major only.
  for (int i = 0; i < 45; ++i) {
    s.training.push_back(inst(f.morpheme(), mk(f(), "M2", f(), f()),
                              f.morpheme(), f.morpheme(), i < 25));
  }
  // 428 mixed (155 partition, 273 non): right major only.
  for (int i = 0; i < 428; ++i) {
    s.training.push_back(inst(f.morpheme(), f.morpheme(),
                              mk(f(), "M3", f(), f()), f.morpheme(), i < 155));
  }
  return s;
}

// One partition example reproduces the query's two middle morphemes in
// full, planting 21 single-occurrence exclusive rules (up to the complete
// middle pair); five non-partition examples share only the four majors,
// planting repeated exclusive rules on the windows involving an outer
// slot. The repeated rules trigger the elimination, and the most similar
// survivor (all four majors) answers non-partition.
inline Scenario elimination_scenario() {
  const kugiri::Morpheme q1 = mk("V1", "P1", "p1", "t1");
  const kugiri::Morpheme q2 = mk("V2", "P2", "p2", "t2");
  const kugiri::Morpheme q3 = mk("V3", "P3", "p3", "t3");
  const kugiri::Morpheme q4 = mk("V4", "P4", "p4", "t4");

  Scenario s;
  s.query = inst(q1, q2, q3, q4, false);
  s.query.label.reset();
  Fresh f;
  s.training.push_back(inst(f.morpheme(), q2, q3, f.morpheme(), true));
  for (int i = 0; i < 5; ++i) {
    s.training.push_back(inst(mk(f(), "P1", f(), f()),
                              mk(f(), "P2", f(), f()),
                              mk(f(), "P3", f(), f()),
                              mk(f(), "P4", f(), f()), false));
  }
  return s;
}

// Same single-occurrence partition example, but the exclusive company is
// gone: the major-level keys now carry both labels, so no repeated
// exclusive rule exists and the single-occurrence rules survive to answer
// partition at the full middle-pair similarity.
inline Scenario retention_scenario() {
  const kugiri::Morpheme q1 = mk("V1", "P1", "p1", "t1");
  const kugiri::Morpheme q2 = mk("V2", "P2", "p2", "t2");
  const kugiri::Morpheme q3 = mk("V3", "P3", "p3", "t3");
  const kugiri::Morpheme q4 = mk("V4", "P4", "p4", "t4");

  Scenario s;
  s.query = inst(q1, q2, q3, q4, false);
  s.query.label.reset();
  Fresh f;
  s.training.push_back(inst(f.morpheme(), q2, q3, f.morpheme(), true));
  for (int i = 0; i < 7; ++i) {
    s.training.push_back(inst(mk(f(), "P1", f(), f()),
                              mk(f(), "P2", f(), f()),
                              mk(f(), "P3", f(), f()),
                              mk(f(), "P4", f(), f()), i < 3));
  }
  return s;
}

// Two families of repeated exclusive rules disagree: three partition
// examples match the query's left morpheme in full (best similarity
// 50001), seven non-partition examples match all four majors (best
// similarity 40004). The higher-similarity family wins.
inline Scenario similarity_pick_scenario() {
  const kugiri::Morpheme q1 = mk("V1", "P1", "p1", "t1");
  const kugiri::Morpheme q2 = mk("V2", "P2", "p2", "t2");
  const kugiri::Morpheme q3 = mk("V3", "P3", "p3", "t3");
  const kugiri::Morpheme q4 = mk("V4", "P4", "p4", "t4");

  Scenario s;
  s.query = inst(q1, q2, q3, q4, false);
  s.query.label.reset();
  Fresh f;
  for (int i = 0; i < 3; ++i) {
    s.training.push_back(inst(f.morpheme(), q2, f.morpheme(), f.morpheme(),
                              true));
  }
  for (int i = 0; i < 7; ++i) {
    s.training.push_back(inst(mk(f(), "P1", f(), f()),
                              mk(f(), "P2", f(), f()),
                              mk(f(), "P3", f(), f()),
                              mk(f(), "P4", f(), f()), false));
  }
  return s;
}

// Corpus whose four-line sentence carries the running example of the
// module docs: a noun, a case particle without a semantic code, a verb,
// and a punctuation symbol, partitioned before the verb.
inline kugiri::Corpus worked_sentence_corpus() {
  kugiri::Corpus corpus;
  kugiri::Sentence s;
  s.morphemes = {mk("bun", "Noun", "NormalNoun", "118"),
                 mk("wo", "Particle", "CaseParticle", kugiri::kNoSemantic.data()),
                 mk("kugiru", "Verb", "NormalForm", "217"),
                 mk(".", "Symbol", "Punctuation", kugiri::kNoSemantic.data())};
  s.boundaries = {false, true, false};
  corpus.sentences.push_back(std::move(s));
  return corpus;
}

}  // namespace fixtures

#endif  // KUGIRI_TESTS_FIXTURES_HPP_
