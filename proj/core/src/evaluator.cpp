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

#include "efparse/evaluator.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace efparse {
namespace {

bool is_wildcard_spelling(std::string_view s) {
  if (s.size() >= 3 && s.front() == '<' && s.back() == '>') {
    const std::string_view inner = s.substr(1, s.size() - 2);
    if (inner.find_first_not_of('*') == std::string_view::npos) return true;
    if (inner.size() == 3 && std::toupper(static_cast<unsigned char>(inner[0])) == 'V' &&
        std::toupper(static_cast<unsigned char>(inner[1])) == 'A' &&
        std::toupper(static_cast<unsigned char>(inner[2])) == 'R')
      return true;
  }
  return s == "{*}";
}

struct Groups {
  // group key -> member line ids, in ascending order
  std::unordered_map<std::string, std::vector<std::uint64_t>> members;
};

Groups group_prediction(const Prediction& pred) {
  Groups g;
  for (const auto& [line, p] : pred) g.members[p.group].push_back(line);
  return g;
}

struct TruthIndex {
  std::unordered_map<std::uint64_t, std::string> key;  // line -> canonical template
  std::unordered_map<std::string, std::size_t> size;
};

TruthIndex index_truth(const GroundTruth& truth) {
  TruthIndex t;
  for (const auto& [line, templ] : truth) {
    auto k = canonical_template(templ);
    ++t.size[k];
    t.key.emplace(line, std::move(k));
  }
  return t;
}

// The truth key whose line set equals this predicted group, if any.
const std::string* exact_truth_group(const std::vector<std::uint64_t>& lines, const TruthIndex& truth) {
  const std::string& k = truth.key.at(lines.front());
  if (truth.size.at(k) != lines.size()) return nullptr;
  for (auto line : lines) {
    if (truth.key.at(line) != k) return nullptr;
  }
  return &k;
}

F1Score make_f1(std::size_t correct, std::size_t predicted, std::size_t actual) {
  F1Score s;
  s.precision = predicted == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(predicted);
  s.recall = actual == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(actual);
  const double sum = s.precision + s.recall;
  s.f1 = sum == 0.0 ? 0.0 : 2.0 * s.precision * s.recall / sum;
  return s;
}

}  // namespace

std::string canonical_template(std::string_view t) {
  std::string out;
  std::size_t i = 0;
  while (i < t.size()) {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    if (i >= t.size()) break;
    std::size_t j = i;
    while (j < t.size() && !std::isspace(static_cast<unsigned char>(t[j]))) ++j;
    if (!out.empty()) out.push_back(' ');
    // Wildcard spellings can sit inside a token, e.g. blk_{*}.
    const std::string_view token = t.substr(i, j - i);
    std::size_t k = 0;
    while (k < token.size()) {
      bool replaced = false;
      if (token[k] == '<' || token[k] == '{') {
        const char close = token[k] == '<' ? '>' : '}';
        const auto end = token.find(close, k + 1);
        if (end != std::string_view::npos && is_wildcard_spelling(token.substr(k, end - k + 1))) {
          out += "<*>";
          k = end + 1;
          replaced = true;
        }
      }
      if (!replaced) out.push_back(token[k++]);
    }
    i = j;
  }
  return out;
}

void check_line_ids(const Prediction& pred, const GroundTruth& truth) {
  if (pred.size() != truth.size()) {
    throw EvalError("line id mismatch: " + std::to_string(pred.size()) + " predicted vs " +
                    std::to_string(truth.size()) + " ground-truth lines");
  }
  auto p = pred.begin();
  for (auto t = truth.begin(); t != truth.end(); ++t, ++p) {
    if (p->first != t->first) throw EvalError("line id mismatch at LineId " + std::to_string(t->first));
  }
}

double grouping_accuracy(const Prediction& pred, const GroundTruth& truth) {
  check_line_ids(pred, truth);
  if (pred.empty()) return 0.0;
  const auto groups = group_prediction(pred);
  const auto index = index_truth(truth);
  std::size_t correct = 0;
  for (const auto& [key, lines] : groups.members) {
    if (exact_truth_group(lines, index)) correct += lines.size();
  }
  return static_cast<double>(correct) / static_cast<double>(pred.size());
}

F1Score f1_grouping(const Prediction& pred, const GroundTruth& truth) {
  check_line_ids(pred, truth);
  const auto groups = group_prediction(pred);
  const auto index = index_truth(truth);
  std::size_t correct = 0;
  for (const auto& [key, lines] : groups.members) {
    if (exact_truth_group(lines, index)) ++correct;
  }
  return make_f1(correct, groups.members.size(), index.size.size());
}

double parsing_accuracy(const Prediction& pred, const GroundTruth& truth) {
  check_line_ids(pred, truth);
  if (pred.empty()) return 0.0;
  std::size_t correct = 0;
  auto t = truth.begin();
  for (auto p = pred.begin(); p != pred.end(); ++p, ++t) {
    if (canonical_template(p->second.templ) == canonical_template(t->second)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(pred.size());
}

F1Score f1_template(const Prediction& pred, const GroundTruth& truth) {
  check_line_ids(pred, truth);
  const auto groups = group_prediction(pred);
  const auto index = index_truth(truth);
  std::size_t correct = 0;
  for (const auto& [key, lines] : groups.members) {
    const std::string* k = exact_truth_group(lines, index);
    if (!k) continue;
    bool same = true;
    for (auto line : lines) {
      if (canonical_template(pred.at(line).templ) != *k) {
        same = false;
        break;
      }
    }
    if (same) ++correct;
  }
  return make_f1(correct, groups.members.size(), index.size.size());
}

EvalReport evaluate(const Prediction& pred, const GroundTruth& truth, double seconds) {
  EvalReport r;
  r.ga = grouping_accuracy(pred, truth);
  r.pa = parsing_accuracy(pred, truth);
  const auto g = f1_grouping(pred, truth);
  r.pga = g.precision;
  r.rga = g.recall;
  r.fga = g.f1;
  const auto t = f1_template(pred, truth);
  r.ftp = t.precision;
  r.ftr = t.recall;
  r.fta = t.f1;
  r.messages = pred.size();
  r.predicted_templates = group_prediction(pred).members.size();
  r.truth_templates = index_truth(truth).size.size();
  r.seconds = seconds;
  return r;
}

std::string EvalReport::to_text() const {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  out << "GA=" << ga << "\nPA=" << pa << "\nPGA=" << pga << "\nRGA=" << rga << "\nFGA=" << fga << "\nFTP=" << ftp
      << "\nFTR=" << ftr << "\nFTA=" << fta << "\nmessages=" << messages
      << "\npredicted_templates=" << predicted_templates << "\ntruth_templates=" << truth_templates
      << "\nseconds=" << seconds << "\n";
  return out.str();
}

std::string EvalReport::csv_header() {
  return "GA,PA,PGA,RGA,FGA,FTP,FTR,FTA,messages,predicted_templates,truth_templates,seconds";
}

std::string EvalReport::csv_row() const {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  out << ga << ',' << pa << ',' << pga << ',' << rga << ',' << fga << ',' << ftp << ',' << ftr << ',' << fta << ','
      << messages << ',' << predicted_templates << ',' << truth_templates << ',' << seconds;
  return out.str();
}

Prediction prediction_from_templates(const GroundTruth& templates) {
  Prediction p;
  for (const auto& [line, t] : templates) p.emplace(line, Predicted{canonical_template(t), t});
  return p;
}

}  // namespace efparse
