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

#ifndef KUGIRI_CORPUS_HPP_
#define KUGIRI_CORPUS_HPP_

#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kugiri {

// Reserved token marking a morpheme without a semantic dictionary entry.
inline constexpr std::string_view kNoSemantic = "NONE";

// One tagged token from a morphological analysis: surface word, major POS
// category, minor POS category (or inflection type), and an optional
// three-digit semantic code.
struct Morpheme {
  std::string word;
  std::string major_pos;
  std::string minor_pos;
  std::string semantic{kNoSemantic};  // kNoSemantic when absent

  bool has_semantic() const { return semantic != kNoSemantic; }

  friend bool operator==(const Morpheme&, const Morpheme&) = default;
};

// Sentinel morphemes filling context-window slots that fall outside the
// sentence. Every field is a distinct reserved token, so sentinels take part
// in pattern matching like ordinary values.
inline const Morpheme& bos_morpheme() {
  static const Morpheme bos{"<bos/word>", "<bos/pos>", "<bos/subpos>",
                            "<bos/sem>"};
  return bos;
}

inline const Morpheme& eos_morpheme() {
  static const Morpheme eos{"<eos/word>", "<eos/pos>", "<eos/subpos>",
                            "<eos/sem>"};
  return eos;
}

inline bool is_reserved_token(std::string_view s) {
  static constexpr std::array<std::string_view, 8> reserved{
      "<bos/word>", "<bos/pos>", "<bos/subpos>", "<bos/sem>",
      "<eos/word>", "<eos/pos>", "<eos/subpos>", "<eos/sem>"};
  for (const auto r : reserved) {
    if (s == r) return true;
  }
  return false;
}

// A tagged sentence plus one boundary flag per inter-morpheme space
// (true = a partition mark is inserted in that space).
struct Sentence {
  std::vector<Morpheme> morphemes;  // length n >= 1
  std::vector<bool> boundaries;     // length n - 1

  std::size_t space_count() const {
    return morphemes.empty() ? 0 : morphemes.size() - 1;
  }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// One classification problem: the space between `left` and `right`, seen
// through a four-morpheme window. Slots outside the sentence hold the
// BOS/EOS sentinels, so all four slots are always populated.
struct Instance {
  Morpheme far_left;
  Morpheme left;
  Morpheme right;
  Morpheme far_right;
  std::optional<bool> label;  // gold: true = partition

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Corpus {
  std::vector<Sentence> sentences;
  std::string provenance;

  std::size_t morpheme_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.morphemes.size();
    return n;
  }
  std::size_t space_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.space_count();
    return n;
  }
};

// Error raised by the corpus reader; line numbers are 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline void check_morpheme_field(std::string_view field, std::string_view name,
                                 std::size_t line) {
  if (field.empty()) {
    throw parse_error(line, std::string("empty ") + std::string(name) +
                                " field");
  }
  if (is_reserved_token(field)) {
    throw parse_error(line, "reserved token '" + std::string(field) +
                                "' used as " + std::string(name));
  }
}

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace detail

// Reads the corpus text format: one morpheme per line as
// `word<TAB>major_pos<TAB>minor_pos<TAB>semantic` (semantic is a code or the
// literal `NONE`), a line containing only `*` marks a partition in the
// following space, and a blank line ends a sentence.
inline Corpus parse_corpus(std::istream& in) {
  Corpus corpus;
  Sentence current;
  bool pending_mark = false;
  std::size_t line_no = 0;
  std::size_t mark_line = 0;

  auto end_sentence = [&](std::size_t at_line) {
    if (pending_mark) {
      throw parse_error(mark_line, "partition mark at end of sentence");
    }
    if (current.morphemes.empty()) {
      throw parse_error(at_line, "empty sentence");
    }
    corpus.sentences.push_back(std::move(current));
    current = Sentence{};
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      end_sentence(line_no);
      continue;
    }
    if (line == "*") {
      if (current.morphemes.empty()) {
        throw parse_error(line_no, "partition mark before first morpheme");
      }
      if (pending_mark) {
        throw parse_error(line_no, "duplicate partition mark");
      }
      pending_mark = true;
      mark_line = line_no;
      continue;
    }
    const auto fields = detail::split_tabs(line);
    if (fields.size() != 4) {
      throw parse_error(line_no, "expected 4 tab-separated fields, got " +
                                     std::to_string(fields.size()));
    }
    detail::check_morpheme_field(fields[0], "word", line_no);
    detail::check_morpheme_field(fields[1], "major POS", line_no);
    detail::check_morpheme_field(fields[2], "minor POS", line_no);
    detail::check_morpheme_field(fields[3], "semantic", line_no);
    if (!current.morphemes.empty()) {
      current.boundaries.push_back(pending_mark);
      pending_mark = false;
    }
    current.morphemes.push_back(Morpheme{
        std::string(fields[0]), std::string(fields[1]), std::string(fields[2]),
        std::string(fields[3])});
  }
  if (!current.morphemes.empty() || pending_mark) {
    end_sentence(line_no + 1);
  }
  return corpus;
}

inline Corpus parse_corpus_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_corpus(in);
}

// Emits the exact reader format; `parse_corpus` round-trips its output
// byte for byte.
inline void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& sentence : corpus.sentences) {
    for (std::size_t i = 0; i < sentence.morphemes.size(); ++i) {
      if (i > 0 && sentence.boundaries[i - 1]) out << "*\n";
      const auto& m = sentence.morphemes[i];
      out << m.word << '\t' << m.major_pos << '\t' << m.minor_pos << '\t'
          << m.semantic << '\n';
    }
    out << '\n';
  }
}

inline std::string write_corpus_text(const Corpus& corpus) {
  std::ostringstream out;
  write_corpus(corpus, out);
  return out.str();
}

// One instance per inter-morpheme space, in sentence order. Positions
// outside the sentence are filled with the BOS/EOS sentinels; labels are
// copied from the sentence's boundary flags.
inline std::vector<Instance> extract_instances(const Sentence& sentence) {
  const auto n = sentence.morphemes.size();
  if (n == 0) {
    throw std::invalid_argument("sentence has no morphemes");
  }
  if (sentence.boundaries.size() + 1 != n) {
    throw std::invalid_argument("sentence has " +
                                std::to_string(sentence.boundaries.size()) +
                                " boundary flags for " + std::to_string(n) +
                                " morphemes");
  }
  std::vector<Instance> out;
  out.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Instance inst;
    inst.far_left = i >= 1 ? sentence.morphemes[i - 1] : bos_morpheme();
    inst.left = sentence.morphemes[i];
    inst.right = sentence.morphemes[i + 1];
    inst.far_right =
        i + 2 < n ? sentence.morphemes[i + 2] : eos_morpheme();
    inst.label = static_cast<bool>(sentence.boundaries[i]);
    out.push_back(std::move(inst));
  }
  return out;
}

inline std::vector<Instance> extract_instances(const Corpus& corpus) {
  std::vector<Instance> out;
  out.reserve(corpus.space_count());
  for (const auto& sentence : corpus.sentences) {
    auto part = extract_instances(sentence);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace kugiri

#endif  // KUGIRI_CORPUS_HPP_
