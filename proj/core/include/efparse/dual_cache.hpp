/*
 * Copyright 2026 The efparse Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "efparse/token.hpp"

namespace efparse {

/// Prefix tree over template tokens. Constant tokens get keyed edges; the
/// wildcard and constants embedding "<*>" share one wildcard edge per node,
/// which consumes exactly one log token.
class PrefixTree {
 public:
  void insert(const Template& t);
  bool erase(const Template& t);

  // Ids of every template whose path consumes all of `tokens`.
  std::vector<TemplateId> candidates(const TokenSeq& tokens) const;
  // Every stored id, in no particular order.
  std::vector<TemplateId> ids() const;
  std::size_t node_count() const;

 private:
  struct Node {
    std::unordered_map<std::string, std::unique_ptr<Node>> children;
    std::unique_ptr<Node> wildcard;
    std::vector<TemplateId> terminal;

    bool empty() const { return children.empty() && !wildcard && terminal.empty(); }
  };

  static bool erase_at(Node& node, const std::vector<Token>& tokens, std::size_t depth, TemplateId id);
  static void collect(const Node& node, const TokenSeq& tokens, std::size_t depth,
                      std::vector<TemplateId>& out);

  Node root_;
};

/// The template set, indexed twice: a prefix tree for matching logs and
/// token-length buckets for finding merge partners.
///
/// Single writer; const member functions are safe to call concurrently
/// between mutations.
class DualCache {
 public:
  explicit DualCache(double threshold = 0.75, std::size_t sample_capacity = Template::kDefaultSampleCapacity);

  double threshold() const noexcept { return threshold_; }
  std::size_t sample_capacity() const noexcept { return sample_capacity_; }
  std::size_t size() const noexcept { return store_.size(); }
  bool empty() const noexcept { return store_.empty(); }

  const Template* find(TemplateId id) const;
  std::optional<TemplateId> find_tokens(const std::vector<Token>& tokens) const;
  // Templates in id order.
  const std::map<TemplateId, Template>& templates() const noexcept { return store_; }
  const std::map<std::size_t, std::set<TemplateId>>& buckets() const noexcept { return buckets_; }
  const PrefixTree& tree() const noexcept { return tree_; }

  // Tree lookup: one log token per edge, verified with match_template. Among
  // hits the fewest wildcards win, then the lowest id.
  const Template* tree_match(const LogRecord& log) const;

  // Returns the new id, or the id of an identical token sequence already
  // cached (whose samples absorb t's samples).
  TemplateId insert(Template t);
  bool remove(TemplateId id);
  bool add_sample(TemplateId id, const LogRecord& log);

  // Inclusive token-length range a template needs to reach `threshold`
  // similarity with one of length l_target.
  static std::pair<std::size_t, std::size_t> length_bounds(double threshold, std::size_t l_target);
  std::vector<const Template*> candidates_by_length(std::size_t l_target) const;

  struct Relevant {
    const Template* templ = nullptr;
    double similarity = 0.0;
  };
  // Most similar cached template (never one identical to t) at or above the
  // threshold; ties go to the lower id.
  std::optional<Relevant> most_relevant(const Template& t) const;

  // Store, tree and buckets hold the same id set.
  bool in_sync() const;

  // One rendered template per line, in id order.
  void write_snapshot(std::ostream& out) const;
  // Inserts every non-blank line of a snapshot as a template.
  void read_snapshot(std::istream& in);

 private:
  double threshold_;
  std::size_t sample_capacity_;
  std::uint64_t next_id_ = 1;
  std::map<TemplateId, Template> store_;
  std::unordered_map<std::string, TemplateId> by_rendered_;
  PrefixTree tree_;
  std::map<std::size_t, std::set<TemplateId>> buckets_;
};

}  // namespace efparse
