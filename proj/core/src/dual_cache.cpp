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

#include "efparse/dual_cache.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "efparse/distance.hpp"
#include "efparse/match.hpp"

namespace efparse {

void PrefixTree::insert(const Template& t) {
  Node* node = &root_;
  for (const auto& token : t.tokens()) {
    std::unique_ptr<Node>* slot =
        token.has_wildcard() ? &node->wildcard : &node->children[token.text()];
    if (!*slot) *slot = std::make_unique<Node>();
    node = slot->get();
  }
  if (std::find(node->terminal.begin(), node->terminal.end(), t.id()) == node->terminal.end()) {
    node->terminal.push_back(t.id());
  }
}

bool PrefixTree::erase_at(Node& node, const std::vector<Token>& tokens, std::size_t depth, TemplateId id) {
  if (depth == tokens.size()) {
    auto it = std::find(node.terminal.begin(), node.terminal.end(), id);
    if (it == node.terminal.end()) return false;
    node.terminal.erase(it);
    return true;
  }
  const Token& token = tokens[depth];
  if (token.has_wildcard()) {
    if (!node.wildcard || !erase_at(*node.wildcard, tokens, depth + 1, id)) return false;
    if (node.wildcard->empty()) node.wildcard.reset();
    return true;
  }
  auto it = node.children.find(token.text());
  if (it == node.children.end() || !erase_at(*it->second, tokens, depth + 1, id)) return false;
  if (it->second->empty()) node.children.erase(it);
  return true;
}

bool PrefixTree::erase(const Template& t) { return erase_at(root_, t.tokens(), 0, t.id()); }

void PrefixTree::collect(const Node& node, const TokenSeq& tokens, std::size_t depth,
                         std::vector<TemplateId>& out) {
  if (depth == tokens.size()) {
    out.insert(out.end(), node.terminal.begin(), node.terminal.end());
    return;
  }
  if (auto it = node.children.find(tokens[depth]); it != node.children.end()) {
    collect(*it->second, tokens, depth + 1, out);
  }
  if (node.wildcard) collect(*node.wildcard, tokens, depth + 1, out);
}

std::vector<TemplateId> PrefixTree::candidates(const TokenSeq& tokens) const {
  std::vector<TemplateId> out;
  collect(root_, tokens, 0, out);
  return out;
}

std::vector<TemplateId> PrefixTree::ids() const {
  std::vector<TemplateId> out;
  std::vector<const Node*> stack{&root_};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    out.insert(out.end(), n->terminal.begin(), n->terminal.end());
    for (const auto& [_, child] : n->children) stack.push_back(child.get());
    if (n->wildcard) stack.push_back(n->wildcard.get());
  }
  return out;
}

std::size_t PrefixTree::node_count() const {
  std::size_t count = 0;
  std::vector<const Node*> stack{&root_};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    ++count;
    for (const auto& [_, child] : n->children) stack.push_back(child.get());
    if (n->wildcard) stack.push_back(n->wildcard.get());
  }
  return count;
}

DualCache::DualCache(double threshold, std::size_t sample_capacity)
    : threshold_(threshold), sample_capacity_(sample_capacity) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("similarity threshold must lie in (0, 1]");
  }
}

const Template* DualCache::find(TemplateId id) const {
  auto it = store_.find(id);
  return it == store_.end() ? nullptr : &it->second;
}

std::optional<TemplateId> DualCache::find_tokens(const std::vector<Token>& tokens) const {
  if (tokens.empty()) return std::nullopt;
  auto it = by_rendered_.find(Template(tokens).render());
  if (it == by_rendered_.end()) return std::nullopt;
  return it->second;
}

const Template* DualCache::tree_match(const LogRecord& log) const {
  if (log.tokens.empty()) return nullptr;
  const Template* best = nullptr;
  for (TemplateId id : tree_.candidates(log.tokens)) {
    const Template& t = store_.at(id);
    if (best) {
      const auto wc = t.wildcard_count();
      const auto best_wc = best->wildcard_count();
      if (wc > best_wc || (wc == best_wc && t.id() > best->id())) continue;
    }
    if (matches(t, log)) best = &t;
  }
  return best;
}

TemplateId DualCache::insert(Template t) {
  const std::string rendered = t.render();
  if (auto it = by_rendered_.find(rendered); it != by_rendered_.end()) {
    Template& existing = store_.at(it->second);
    for (const auto& s : t.sample_logs()) existing.add_sample(s);
    return it->second;
  }
  const TemplateId id{next_id_++};
  t.set_id(id);
  if (t.sample_capacity() != sample_capacity_) {
    Template resized(t.tokens(), sample_capacity_);
    resized.set_id(id);
    for (const auto& s : t.sample_logs()) resized.add_sample(s);
    t = std::move(resized);
  }
  tree_.insert(t);
  buckets_[t.size()].insert(id);
  by_rendered_.emplace(rendered, id);
  store_.emplace(id, std::move(t));
  return id;
}

bool DualCache::remove(TemplateId id) {
  auto it = store_.find(id);
  if (it == store_.end()) return false;
  const Template& t = it->second;
  tree_.erase(t);
  auto bucket = buckets_.find(t.size());
  bucket->second.erase(id);
  if (bucket->second.empty()) buckets_.erase(bucket);
  by_rendered_.erase(t.render());
  store_.erase(it);
  return true;
}

bool DualCache::add_sample(TemplateId id, const LogRecord& log) {
  auto it = store_.find(id);
  return it != store_.end() && it->second.add_sample(log);
}

std::pair<std::size_t, std::size_t> DualCache::length_bounds(double threshold, std::size_t l_target) {
  // The epsilon keeps exact boundary values inside the range despite
  // floating-point rounding of threshold * l_target.
  constexpr double kEps = 1e-9;
  const double l = static_cast<double>(l_target);
  const auto lo = static_cast<std::size_t>(std::max(1.0, std::ceil(threshold * l - kEps)));
  const auto hi = static_cast<std::size_t>(std::floor(l / threshold + kEps));
  return {lo, hi};
}

std::vector<const Template*> DualCache::candidates_by_length(std::size_t l_target) const {
  std::vector<const Template*> out;
  if (l_target == 0) return out;
  const auto [lo, hi] = length_bounds(threshold_, l_target);
  for (auto it = buckets_.lower_bound(lo); it != buckets_.end() && it->first <= hi; ++it) {
    for (TemplateId id : it->second) out.push_back(&store_.at(id));
  }
  std::sort(out.begin(), out.end(), [](const Template* a, const Template* b) { return a->id() < b->id(); });
  return out;
}

std::optional<DualCache::Relevant> DualCache::most_relevant(const Template& t) const {
  std::optional<Relevant> best;
  for (const Template* c : candidates_by_length(t.size())) {
    if (c->same_tokens(t)) continue;
    const auto s = similarity_at_least(t.tokens(), c->tokens(), threshold_);
    if (!s) continue;
    if (!best || *s > best->similarity) best = Relevant{c, *s};
  }
  return best;
}

bool DualCache::in_sync() const {
  std::set<TemplateId> from_store;
  for (const auto& [id, t] : store_) {
    if (t.id() != id) return false;
    from_store.insert(id);
  }
  std::set<TemplateId> from_buckets;
  for (const auto& [len, ids] : buckets_) {
    for (TemplateId id : ids) {
      auto it = store_.find(id);
      if (it == store_.end() || it->second.size() != len) return false;
      if (!from_buckets.insert(id).second) return false;
    }
  }
  const auto tree_ids = tree_.ids();
  std::set<TemplateId> from_tree(tree_ids.begin(), tree_ids.end());
  if (from_tree.size() != tree_ids.size()) return false;
  return from_store == from_buckets && from_store == from_tree && by_rendered_.size() == store_.size();
}

void DualCache::write_snapshot(std::ostream& out) const {
  for (const auto& [id, t] : store_) out << t.render() << '\n';
}

void DualCache::read_snapshot(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (tokenize(line).empty()) continue;
    insert(Template::parse(line, sample_capacity_));
  }
}

}  // namespace efparse
