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

#ifndef KUGIRI_MODEL_IO_HPP_
#define KUGIRI_MODEL_IO_HPP_

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kugiri/eval.hpp"
#include "kugiri/learner.hpp"

namespace kugiri {

inline constexpr std::string_view kModelMagic = "kugiri-model 1";

namespace detail {

inline std::string escape_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string unescape_field(std::string_view s, std::size_t line) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (i + 1 == s.size()) {
      throw parse_error(line, "dangling escape");
    }
    switch (s[++i]) {
      case '\\': out += '\\'; break;
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default: throw parse_error(line, "unknown escape sequence");
    }
  }
  return out;
}

// Line-oriented reader with 1-based line numbers for error reporting.
class ModelReader {
 public:
  explicit ModelReader(std::istream& in) : in_(in) {}

  std::size_t line_number() const { return line_no_; }

  bool next(std::vector<std::string_view>& fields) {
    if (!std::getline(in_, line_)) return false;
    ++line_no_;
    if (!line_.empty() && line_.back() == '\r') line_.pop_back();
    fields = split_tabs(line_);
    return true;
  }

  std::vector<std::string_view> expect(std::string_view tag) {
    std::vector<std::string_view> fields;
    if (!next(fields)) {
      throw parse_error(line_no_ + 1, "unexpected end of file, expected '" +
                                          std::string(tag) + "' record");
    }
    if (fields.empty() || fields[0] != tag) {
      throw parse_error(line_no_, "expected '" + std::string(tag) +
                                      "' record");
    }
    return fields;
  }

  std::int64_t to_int(std::string_view field) const {
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw parse_error(line_no_, "malformed integer '" + std::string(field) +
                                      "'");
    }
    return value;
  }

  bool to_bool(std::string_view field) const {
    if (field == "0") return false;
    if (field == "1") return true;
    throw parse_error(line_no_, "malformed flag '" + std::string(field) + "'");
  }

  double to_double(std::string_view field) const {
    const std::string buf(field);
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(buf.c_str(), &end);
    if (errno != 0 || end != buf.c_str() + buf.size() || buf.empty()) {
      throw parse_error(line_no_, "malformed number '" + buf + "'");
    }
    return value;
  }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t line_no_ = 0;
};

inline std::string hex_double(double v) {
  std::ostringstream out;
  out << std::hexfloat << v;
  return out.str();
}

inline void write_morpheme_fields(std::ostream& out, const Morpheme& m) {
  out << '\t' << escape_field(m.word) << '\t' << escape_field(m.major_pos)
      << '\t' << escape_field(m.minor_pos) << '\t' << escape_field(m.semantic);
}

inline void save_rule_payload(const RuleTable& table, std::ostream& out) {
  const auto& instances = table.training_instances();
  out << "instances\t" << instances.size() << '\n';
  for (const auto& inst : instances) {
    out << 'i';
    write_morpheme_fields(out, inst.far_left);
    write_morpheme_fields(out, inst.left);
    write_morpheme_fields(out, inst.right);
    write_morpheme_fields(out, inst.far_right);
    out << '\t' << (*inst.label ? 1 : 0) << '\n';
  }
  std::size_t total = 0;
  for (std::size_t t = 0; t < kNumTemplates; ++t) {
    total += table.keys_for(static_cast<int>(t)).size();
  }
  out << "rules\t" << total << '\n';
  for (std::size_t t = 0; t < kNumTemplates; ++t) {
    const auto& keys = table.keys_for(static_cast<int>(t));
    std::vector<const PatternTokens*> sorted;
    sorted.reserve(keys.size());
    for (const auto& [tokens, stats] : keys) sorted.push_back(&tokens);
    std::sort(sorted.begin(), sorted.end(),
              [](const PatternTokens* a, const PatternTokens* b) {
                return *a < *b;
              });
    out << "t\t" << t << '\t' << keys.size() << '\n';
    for (const auto* tokens : sorted) {
      const auto& stats = keys.at(*tokens);
      out << "k\t" << stats.count_non_partition << '\t'
          << stats.count_partition;
      for (const auto& token : *tokens) out << '\t' << escape_field(token);
      out << '\n';
    }
  }
  out << "end\n";
}

inline Morpheme read_morpheme_fields(const std::vector<std::string_view>& f,
                                     std::size_t offset, std::size_t line) {
  Morpheme m;
  m.word = unescape_field(f[offset], line);
  m.major_pos = unescape_field(f[offset + 1], line);
  m.minor_pos = unescape_field(f[offset + 2], line);
  m.semantic = unescape_field(f[offset + 3], line);
  return m;
}

inline Learner load_rule_payload(MethodKind kind, ModelReader& reader) {
  auto fields = reader.expect("instances");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed instances record");
  }
  const auto n = reader.to_int(fields[1]);
  if (n <= 0) {
    throw parse_error(reader.line_number(), "model has no training instances");
  }
  std::vector<Instance> instances;
  instances.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    fields = reader.expect("i");
    if (fields.size() != 18) {
      throw parse_error(reader.line_number(),
                        "instance record needs 18 fields, got " +
                            std::to_string(fields.size()));
    }
    Instance inst;
    inst.far_left = read_morpheme_fields(fields, 1, reader.line_number());
    inst.left = read_morpheme_fields(fields, 5, reader.line_number());
    inst.right = read_morpheme_fields(fields, 9, reader.line_number());
    inst.far_right = read_morpheme_fields(fields, 13, reader.line_number());
    inst.label = reader.to_bool(fields[17]);
    instances.push_back(std::move(inst));
  }

  // The counts in the file are redundant with the embedded instances;
  // rebuild the table and verify every stored record against it.
  auto table = std::make_shared<RuleTable>(build_rule_table(std::move(instances)));

  fields = reader.expect("rules");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed rules record");
  }
  const auto stored_total = reader.to_int(fields[1]);
  std::int64_t rebuilt_total = 0;
  for (std::size_t t = 0; t < kNumTemplates; ++t) {
    rebuilt_total +=
        static_cast<std::int64_t>(table->keys_for(static_cast<int>(t)).size());
  }
  if (stored_total != rebuilt_total) {
    throw parse_error(reader.line_number(),
                      "stored rule count disagrees with embedded instances");
  }
  std::int64_t seen = 0;
  int expected_template = 0;
  while (seen < stored_total || expected_template <
                                    static_cast<int>(kNumTemplates)) {
    fields = reader.expect("t");
    if (fields.size() != 3) {
      throw parse_error(reader.line_number(), "malformed template record");
    }
    const auto id = reader.to_int(fields[1]);
    if (id != expected_template) {
      throw parse_error(reader.line_number(), "template records out of order");
    }
    ++expected_template;
    const auto n_keys = reader.to_int(fields[2]);
    const auto& keys = table->keys_for(static_cast<int>(id));
    if (n_keys != static_cast<std::int64_t>(keys.size())) {
      throw parse_error(reader.line_number(),
                        "stored key count disagrees with embedded instances");
    }
    for (std::int64_t k = 0; k < n_keys; ++k) {
      fields = reader.expect("k");
      if (fields.size() < 3) {
        throw parse_error(reader.line_number(), "malformed key record");
      }
      const auto non = reader.to_int(fields[1]);
      const auto part = reader.to_int(fields[2]);
      PatternTokens tokens;
      tokens.reserve(fields.size() - 3);
      for (std::size_t f = 3; f < fields.size(); ++f) {
        tokens.push_back(
            detail::unescape_field(fields[f], reader.line_number()));
      }
      const auto it = keys.find(tokens);
      if (it == keys.end() || it->second.count_non_partition != non ||
          it->second.count_partition != part) {
        throw parse_error(reader.line_number(),
                          "stored rule disagrees with embedded instances");
      }
      ++seen;
    }
  }
  reader.expect("end");
  return Learner::from_rule_table(kind, std::move(table));
}

inline void save_tree_payload(const DecisionTreeModel& model,
                              std::ostream& out) {
  out << "default\t" << (model.default_category ? 1 : 0) << '\n';
  out << "threshold\t" << model.rare_threshold << '\n';
  out << "pruned\t" << (model.pruned ? 1 : 0) << '\n';
  for (std::size_t f = 0; f < kNumTreeFeatures; ++f) {
    out << "kept\t" << f << '\t' << model.kept_values[f].size() << '\n';
    for (const auto& value : model.kept_values[f]) {
      out << "v\t" << escape_field(value) << '\n';
    }
  }
  out << "nodes\t" << model.nodes.size() << '\n';
  for (const auto& node : model.nodes) {
    out << "n\t" << node.feature << '\t' << node.count_partition << '\t'
        << node.count_non_partition << '\t' << (node.category ? 1 : 0) << '\t'
        << node.children.size() << '\n';
    for (const auto& [value, child] : node.children) {
      out << "c\t" << escape_field(value) << '\t' << child << '\n';
    }
  }
  out << "end\n";
}

inline Learner load_tree_payload(ModelReader& reader) {
  DecisionTreeModel model;
  auto fields = reader.expect("default");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed default record");
  }
  model.default_category = reader.to_bool(fields[1]);
  fields = reader.expect("threshold");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed threshold record");
  }
  model.rare_threshold = reader.to_int(fields[1]);
  fields = reader.expect("pruned");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed pruned record");
  }
  model.pruned = reader.to_bool(fields[1]);

  model.kept_values.resize(kNumTreeFeatures);
  for (std::size_t f = 0; f < kNumTreeFeatures; ++f) {
    fields = reader.expect("kept");
    if (fields.size() != 3 ||
        reader.to_int(fields[1]) != static_cast<std::int64_t>(f)) {
      throw parse_error(reader.line_number(), "malformed kept record");
    }
    const auto n = reader.to_int(fields[2]);
    for (std::int64_t i = 0; i < n; ++i) {
      fields = reader.expect("v");
      if (fields.size() != 2) {
        throw parse_error(reader.line_number(), "malformed value record");
      }
      model.kept_values[f].push_back(
          unescape_field(fields[1], reader.line_number()));
    }
    if (!std::is_sorted(model.kept_values[f].begin(),
                        model.kept_values[f].end())) {
      throw parse_error(reader.line_number(), "kept values not sorted");
    }
  }

  fields = reader.expect("nodes");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed nodes record");
  }
  const auto n_nodes = reader.to_int(fields[1]);
  if (n_nodes <= 0) {
    throw parse_error(reader.line_number(), "model has no tree nodes");
  }
  for (std::int64_t i = 0; i < n_nodes; ++i) {
    fields = reader.expect("n");
    if (fields.size() != 6) {
      throw parse_error(reader.line_number(), "malformed node record");
    }
    TreeNode node;
    const auto feature = reader.to_int(fields[1]);
    if (feature < -1 ||
        feature >= static_cast<std::int64_t>(kNumTreeFeatures)) {
      throw parse_error(reader.line_number(), "node feature out of range");
    }
    node.feature = static_cast<int>(feature);
    node.count_partition = reader.to_int(fields[2]);
    node.count_non_partition = reader.to_int(fields[3]);
    node.category = reader.to_bool(fields[4]);
    const auto n_children = reader.to_int(fields[5]);
    if ((node.feature < 0) != (n_children == 0)) {
      throw parse_error(reader.line_number(),
                        "leaf/children mismatch in node record");
    }
    for (std::int64_t c = 0; c < n_children; ++c) {
      fields = reader.expect("c");
      if (fields.size() != 3) {
        throw parse_error(reader.line_number(), "malformed child record");
      }
      const auto child = reader.to_int(fields[2]);
      if (child <= i || child >= n_nodes) {
        throw parse_error(reader.line_number(), "child index out of range");
      }
      node.children.emplace(unescape_field(fields[1], reader.line_number()),
                            static_cast<std::int32_t>(child));
    }
    model.nodes.push_back(std::move(node));
  }
  reader.expect("end");
  return Learner::from_tree(std::move(model));
}

inline void save_maxent_payload(const MaxEntModel& model, std::ostream& out) {
  out << "default\t" << (model.default_category ? 1 : 0) << '\n';
  out << "cutoff\t" << model.cutoff << '\n';
  out << "constant\t" << hex_double(model.constant) << '\n';
  out << "converged\t" << (model.converged ? 1 : 0) << '\n';
  out << "iterations\t" << model.iterations << '\n';
  out << "slack\t" << hex_double(model.slack_weight) << '\t'
      << (model.slack_frozen ? 1 : 0) << '\n';
  std::size_t count = 0;
  for (std::size_t t = 0; t < kNumTemplates; ++t) {
    for (const auto& [tokens, feature] : model.features[t]) {
      count += feature.retained[0];
      count += feature.retained[1];
    }
  }
  out << "features\t" << count << '\n';
  for (std::size_t t = 0; t < kNumTemplates; ++t) {
    std::vector<const PatternTokens*> sorted;
    sorted.reserve(model.features[t].size());
    for (const auto& [tokens, feature] : model.features[t]) {
      sorted.push_back(&tokens);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const PatternTokens* a, const PatternTokens* b) {
                return *a < *b;
              });
    for (const auto* tokens : sorted) {
      const auto& feature = model.features[t].at(*tokens);
      for (int c = 0; c < 2; ++c) {
        if (!feature.retained[c]) continue;
        out << "f\t" << t << '\t' << c << '\t' << hex_double(feature.weight[c]);
        for (const auto& token : *tokens) out << '\t' << escape_field(token);
        out << '\n';
      }
    }
  }
  out << "end\n";
}

inline Learner load_maxent_payload(ModelReader& reader) {
  MaxEntModel model;
  auto fields = reader.expect("default");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed default record");
  }
  model.default_category = reader.to_bool(fields[1]);
  fields = reader.expect("cutoff");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed cutoff record");
  }
  model.cutoff = reader.to_int(fields[1]);
  fields = reader.expect("constant");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed constant record");
  }
  model.constant = reader.to_double(fields[1]);
  fields = reader.expect("converged");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed converged record");
  }
  model.converged = reader.to_bool(fields[1]);
  fields = reader.expect("iterations");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed iterations record");
  }
  model.iterations = static_cast<int>(reader.to_int(fields[1]));
  fields = reader.expect("slack");
  if (fields.size() != 3) {
    throw parse_error(reader.line_number(), "malformed slack record");
  }
  model.slack_weight = reader.to_double(fields[1]);
  model.slack_frozen = reader.to_bool(fields[2]);

  fields = reader.expect("features");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed features record");
  }
  const auto n = reader.to_int(fields[1]);
  for (std::int64_t i = 0; i < n; ++i) {
    fields = reader.expect("f");
    if (fields.size() < 5) {
      throw parse_error(reader.line_number(), "malformed feature record");
    }
    const auto t = reader.to_int(fields[1]);
    if (t < 0 || t >= static_cast<std::int64_t>(kNumTemplates)) {
      throw parse_error(reader.line_number(), "feature template out of range");
    }
    const auto category = reader.to_int(fields[2]);
    if (category != 0 && category != 1) {
      throw parse_error(reader.line_number(), "feature category out of range");
    }
    const auto weight = reader.to_double(fields[3]);
    PatternTokens tokens;
    tokens.reserve(fields.size() - 4);
    for (std::size_t f = 4; f < fields.size(); ++f) {
      tokens.push_back(unescape_field(fields[f], reader.line_number()));
    }
    auto& feature = model.features[t][std::move(tokens)];
    if (feature.retained[category]) {
      throw parse_error(reader.line_number(), "duplicate feature record");
    }
    feature.retained[category] = true;
    feature.weight[category] = weight;
  }
  reader.expect("end");
  return Learner::from_maxent(std::move(model));
}

}  // namespace detail

// Self-describing text model container: a version line, the method kind, a
// fingerprint of the template table, then a kind-specific payload.
inline void save_model(const Learner& learner, std::ostream& out) {
  out << kModelMagic << '\n';
  out << "kind\t" << method_name(learner.kind()) << '\n';
  out << "templates\t" << std::hex << template_table_hash() << std::dec << '\n';
  if (learner.rule_table() != nullptr) {
    detail::save_rule_payload(*learner.rule_table(), out);
  } else if (learner.tree() != nullptr) {
    detail::save_tree_payload(*learner.tree(), out);
  } else {
    detail::save_maxent_payload(*learner.maxent(), out);
  }
}

inline std::string save_model_text(const Learner& learner) {
  std::ostringstream out;
  save_model(learner, out);
  return out.str();
}

inline Learner load_model(std::istream& in) {
  detail::ModelReader reader(in);
  std::vector<std::string_view> fields;
  if (!reader.next(fields) || fields.size() != 1 ||
      fields[0] != kModelMagic) {
    throw parse_error(1, "not a model file (missing '" +
                             std::string(kModelMagic) + "' header)");
  }
  fields = reader.expect("kind");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed kind record");
  }
  const auto kind = parse_method(fields[1]);
  if (!kind) {
    throw parse_error(reader.line_number(),
                      "unknown method kind '" + std::string(fields[1]) + "'");
  }
  fields = reader.expect("templates");
  if (fields.size() != 2) {
    throw parse_error(reader.line_number(), "malformed templates record");
  }
  std::uint64_t hash = 0;
  {
    const std::string buf(fields[1]);
    char* end = nullptr;
    errno = 0;
    hash = std::strtoull(buf.c_str(), &end, 16);
    if (errno != 0 || end != buf.c_str() + buf.size() || buf.empty()) {
      throw parse_error(reader.line_number(), "malformed template hash");
    }
  }
  if (hash != template_table_hash()) {
    throw parse_error(reader.line_number(),
                      "model was built against a different template table");
  }

  Learner learner = [&] {
    switch (*kind) {
      case MethodKind::kDecisionTree:
        return detail::load_tree_payload(reader);
      case MethodKind::kMaxEntropy:
        return detail::load_maxent_payload(reader);
      default:
        return detail::load_rule_payload(*kind, reader);
    }
  }();
  if (reader.next(fields)) {
    throw parse_error(reader.line_number(), "trailing content after 'end'");
  }
  return learner;
}

inline Learner load_model_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_model(in);
}

inline void save_model_file(const Learner& learner, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error(path + ": cannot open for writing");
  }
  save_model(learner, out);
  out.flush();
  if (!out) {
    throw std::runtime_error(path + ": write failed");
  }
}

inline Learner load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error(path + ": cannot open for reading");
  }
  try {
    return load_model(in);
  } catch (const parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace kugiri

#endif  // KUGIRI_MODEL_IO_HPP_
