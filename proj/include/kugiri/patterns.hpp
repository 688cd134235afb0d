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

#ifndef KUGIRI_PATTERNS_HPP_
#define KUGIRI_PATTERNS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kugiri/corpus.hpp"

namespace kugiri {

// Amount of morphological information consulted for one window slot,
// ordered by increasing specificity. Each level's projection extends the
// previous one by a single field.
enum class Level : std::uint8_t { kA = 0, kB = 1, kC = 2, kD = 3 };

inline char level_letter(Level level) {
  return static_cast<char>('A' + static_cast<int>(level));
}

// Projected field values of one morpheme at one level. The lists form a
// prefix chain: A = [major], B = A + [minor], C = B + [semantic], and
// D = C + [word]; an absent semantic code contributes the NONE token.
inline std::vector<std::string> project(const Morpheme& m, Level level) {
  std::vector<std::string> fields;
  fields.reserve(static_cast<std::size_t>(level) + 1);
  fields.push_back(m.major_pos);
  if (level >= Level::kB) fields.push_back(m.minor_pos);
  if (level >= Level::kC) fields.push_back(m.semantic);
  if (level >= Level::kD) fields.push_back(m.word);
  return fields;
}

inline constexpr std::size_t kNumSlots = 4;
inline constexpr std::size_t kFarLeft = 0;
inline constexpr std::size_t kLeft = 1;
inline constexpr std::size_t kRight = 2;
inline constexpr std::size_t kFarRight = 3;
inline constexpr std::size_t kNumTemplates = 152;

// One of the 152 context patterns: a level per window slot, or absent. The
// outer slots (far_left, far_right) never exceed level B; the occupancy
// shape is one of six schemes.
struct PatternTemplate {
  std::array<std::optional<Level>, kNumSlots> slots;
  int similarity = 0;

  bool occupied(std::size_t slot) const { return slots[slot].has_value(); }

  friend bool operator==(const PatternTemplate&, const PatternTemplate&) =
      default;
};

// Per-slot similarity weight: 1 when the slot is absent, otherwise 2..5 for
// levels A..D.
inline int slot_weight(const std::optional<Level>& level) {
  return level ? static_cast<int>(*level) + 2 : 1;
}

// The middle slots dominate: their product is scaled so that any gain there
// outranks every possible contribution (at most 3 x 3) from the outer pair.
inline int template_similarity(const PatternTemplate& t) {
  return slot_weight(t.slots[kLeft]) * slot_weight(t.slots[kRight]) * 10000 +
         slot_weight(t.slots[kFarLeft]) * slot_weight(t.slots[kFarRight]);
}

namespace detail {

inline std::vector<PatternTemplate> build_template_table() {
  // Occupancy schemes in fixed order; within a scheme, slots vary
  // level-lexicographically in window order with the rightmost occupied
  // slot fastest. Outer slots range over A..B, inner slots over A..D.
  constexpr std::array<std::array<bool, kNumSlots>, 6> schemes{{
      {true, true, true, true},
      {false, true, true, true},
      {true, true, true, false},
      {false, true, true, false},
      {false, true, false, false},
      {false, false, true, false},
  }};

  std::vector<PatternTemplate> table;
  table.reserve(kNumTemplates);
  for (const auto& scheme : schemes) {
    std::array<int, kNumSlots> max_level{};
    for (std::size_t slot = 0; slot < kNumSlots; ++slot) {
      const bool outer = slot == kFarLeft || slot == kFarRight;
      max_level[slot] = scheme[slot] ? (outer ? 2 : 4) : 1;
    }
    const int combos =
        max_level[0] * max_level[1] * max_level[2] * max_level[3];
    for (int index = 0; index < combos; ++index) {
      PatternTemplate t;
      int rest = index;
      for (std::size_t slot = kNumSlots; slot-- > 0;) {
        const int v = rest % max_level[slot];
        rest /= max_level[slot];
        if (scheme[slot]) t.slots[slot] = static_cast<Level>(v);
      }
      t.similarity = template_similarity(t);
      table.push_back(t);
    }
  }
  return table;
}

}  // namespace detail

// The fixed table of all 152 templates; the index is the template id.
inline const std::vector<PatternTemplate>& template_table() {
  static const std::vector<PatternTemplate> table =
      detail::build_template_table();
  return table;
}

// Slot-tagged token list identifying one concrete pattern. Slot identity is
// positional: the owning template fixes how many fields each slot projects,
// so equal token lists under one template agree on every consulted field.
using PatternTokens = std::vector<std::string>;

// FNV-1a over length-delimited tokens; only used for hashed containers,
// equality stays exact per token.
struct PatternTokensHash {
  std::size_t operator()(const PatternTokens& tokens) const noexcept {
    std::uint64_t hash = 1469598103934665603ull;
    for (const auto& token : tokens) {
      for (const unsigned char c : token) {
        hash ^= c;
        hash *= 1099511628211ull;
      }
      hash ^= 0xffu;
      hash *= 1099511628211ull;
    }
    return static_cast<std::size_t>(hash);
  }
};

struct PatternKey {
  int template_id = 0;
  PatternTokens tokens;

  friend bool operator==(const PatternKey&, const PatternKey&) = default;
  friend auto operator<=>(const PatternKey&, const PatternKey&) = default;
};

inline PatternTokens instantiate_tokens(const PatternTemplate& t,
                                        const Instance& inst) {
  const std::array<const Morpheme*, kNumSlots> window{
      &inst.far_left, &inst.left, &inst.right, &inst.far_right};
  PatternTokens tokens;
  for (std::size_t slot = 0; slot < kNumSlots; ++slot) {
    if (!t.slots[slot]) continue;
    auto fields = project(*window[slot], *t.slots[slot]);
    tokens.insert(tokens.end(), std::make_move_iterator(fields.begin()),
                  std::make_move_iterator(fields.end()));
  }
  return tokens;
}

inline PatternKey instantiate(int template_id, const Instance& inst) {
  return PatternKey{template_id,
                    instantiate_tokens(template_table()[template_id], inst)};
}

// All 152 keys of one instance, indexed by template id.
inline std::vector<PatternTokens> instance_keys(const Instance& inst) {
  const auto& table = template_table();
  std::vector<PatternTokens> keys;
  keys.reserve(table.size());
  for (const auto& t : table) keys.push_back(instantiate_tokens(t, inst));
  return keys;
}

inline std::string scheme_name(const PatternTemplate& t) {
  static constexpr std::array<std::string_view, kNumSlots> names{
      "far_left", "left", "right", "far_right"};
  std::string out;
  for (std::size_t slot = 0; slot < kNumSlots; ++slot) {
    if (!t.slots[slot]) continue;
    if (!out.empty()) out += '+';
    out += names[slot];
  }
  return out;
}

inline std::string level_string(const PatternTemplate& t) {
  std::string out;
  for (const auto& slot : t.slots) {
    out += slot ? level_letter(*slot) : '-';
  }
  return out;
}

// Text listing of the template table, one line per template:
// `id<TAB>scheme<TAB>levels<TAB>similarity`. Used for documentation and as
// the input of the model-file fingerprint.
inline std::string render_template_table() {
  std::ostringstream out;
  const auto& table = template_table();
  for (std::size_t id = 0; id < table.size(); ++id) {
    out << id << '\t' << scheme_name(table[id]) << '\t'
        << level_string(table[id]) << '\t' << table[id].similarity << '\n';
  }
  return out.str();
}

// FNV-1a fingerprint of the rendered listing; model files embed it so a
// loader can reject models produced against a different template table.
inline std::uint64_t template_table_hash() {
  const std::string listing = render_template_table();
  std::uint64_t hash = 1469598103934665603ull;
  for (const unsigned char c : listing) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

}  // namespace kugiri

#endif  // KUGIRI_PATTERNS_HPP_
