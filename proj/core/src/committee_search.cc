// Copyright 2026 The fairdire Authors
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

#include "committee_search.h"

#include <algorithm>
#include <functional>
#include <string>

#include "fairdire/errors.h"

namespace fairdire::internal {

std::vector<Requirement> BuildRequirements(const Election& e,
                                           const ConstraintSet& cs) {
  const int m = e.num_candidates();
  std::vector<Requirement> out;
  for (const auto& [gid, lower] : cs.diversity) {
    Requirement r;
    r.member.assign(m, 0);
    for (CandidateId c : e.group(gid)) r.member[c] = 1;
    r.lower = lower;
    r.attribute = gid.attribute;
    out.push_back(std::move(r));
  }
  for (const auto& [pid, lower] : cs.representation) {
    auto it = cs.population_committees.find(pid);
    if (it == cs.population_committees.end()) {
      throw DomainError("no winning committee for constrained population " +
                        ToString(pid));
    }
    Requirement r;
    r.member.assign(m, 0);
    for (CandidateId c : it->second) {
      if (c < 0 || c >= m) {
        throw LookupError("winning committee of " + ToString(pid) +
                          " mentions unknown candidate " + std::to_string(c));
      }
      r.member[c] = 1;
    }
    r.lower = lower;
    out.push_back(std::move(r));
  }
  return out;
}

SeparableObjective::SeparableObjective(std::vector<int64_t> weights, int k)
    : weights_(std::move(weights)), k_(k) {
  const int m = static_cast<int>(weights_.size());
  best_prefix_.assign(static_cast<size_t>(m + 1) * (k_ + 1), 0);
  // Top-k weights of each suffix, maintained as a sorted (descending) list.
  std::vector<int64_t> top;
  for (int next = m - 1; next >= 0; --next) {
    top.insert(std::upper_bound(top.begin(), top.end(), weights_[next],
                                std::greater<>()),
               weights_[next]);
    if (static_cast<int>(top.size()) > k_) top.pop_back();
    int64_t sum = 0;
    for (int r = 1; r <= k_; ++r) {
      if (r <= static_cast<int>(top.size())) sum += top[r - 1];
      best_prefix_[static_cast<size_t>(next) * (k_ + 1) + r] = sum;
    }
  }
}

void SeparableObjective::Push(CandidateId c) {
  stack_.push_back(c);
  value_ += weights_[c];
}

void SeparableObjective::Pop() {
  value_ -= weights_[stack_.back()];
  stack_.pop_back();
}

int64_t SeparableObjective::UpperBound(CandidateId next, int remaining) const {
  if (remaining <= 0) return value_;
  return value_ +
         best_prefix_[static_cast<size_t>(next) * (k_ + 1) +
                      std::min(remaining, k_)];
}

CoverageObjective::CoverageObjective(std::vector<std::vector<int>> scores)
    : scores_(std::move(scores)) {
  num_candidates_ = scores_.empty() ? 0 : static_cast<int>(scores_[0].size());
  suffix_max_.assign(num_candidates_ + 1,
                     std::vector<int>(scores_.size(), 0));
  for (int next = num_candidates_ - 1; next >= 0; --next) {
    for (size_t v = 0; v < scores_.size(); ++v) {
      suffix_max_[next][v] =
          std::max(suffix_max_[next + 1][v], scores_[v][next]);
    }
  }
  best_stack_.push_back(std::vector<int>(scores_.size(), 0));
}

void CoverageObjective::Push(CandidateId c) {
  std::vector<int> best = best_stack_.back();
  for (size_t v = 0; v < scores_.size(); ++v) {
    if (scores_[v][c] > best[v]) {
      value_ += scores_[v][c] - best[v];
      best[v] = scores_[v][c];
    }
  }
  best_stack_.push_back(std::move(best));
}

void CoverageObjective::Pop() {
  const std::vector<int>& top = best_stack_.back();
  const std::vector<int>& below = best_stack_[best_stack_.size() - 2];
  for (size_t v = 0; v < scores_.size(); ++v) value_ -= top[v] - below[v];
  best_stack_.pop_back();
}

int64_t CoverageObjective::UpperBound(CandidateId next, int remaining) const {
  if (remaining <= 0 || next >= num_candidates_) return value_;
  const std::vector<int>& best = best_stack_.back();
  int64_t bound = 0;
  for (size_t v = 0; v < scores_.size(); ++v) {
    bound += std::max(best[v], suffix_max_[next][v]);
  }
  return bound;
}

std::unique_ptr<Objective> MakeObjective(const Election& e, Rule rule, int k,
                                         std::span<const VoterId> voters) {
  const int m = e.num_candidates();
  if (rule == Rule::kKBorda) {
    std::vector<int64_t> weights(m, 0);
    for (VoterId v : voters) {
      for (CandidateId c = 0; c < m; ++c) weights[c] += e.BordaScore(v, c);
    }
    return std::make_unique<SeparableObjective>(std::move(weights), k);
  }
  std::vector<std::vector<int>> scores;
  scores.reserve(voters.size());
  for (VoterId v : voters) {
    std::vector<int> row(m);
    for (CandidateId c = 0; c < m; ++c) row[c] = e.BordaScore(v, c);
    scores.push_back(std::move(row));
  }
  return std::make_unique<CoverageObjective>(std::move(scores));
}

struct CommitteeSearch::State {
  std::vector<CandidateId> chosen;
  std::vector<int> have;
};

CommitteeSearch::CommitteeSearch(int num_candidates, int k,
                                 std::vector<Requirement> requirements)
    : m_(num_candidates), k_(k), requirements_(std::move(requirements)) {
  if (k_ < 0 || k_ > m_) {
    throw DomainError("committee size " + std::to_string(k_) +
                      " outside [0, " + std::to_string(m_) + "]");
  }
  available_.resize(requirements_.size());
  requirements_of_.resize(m_);
  for (size_t q = 0; q < requirements_.size(); ++q) {
    const Requirement& r = requirements_[q];
    available_[q].assign(m_ + 1, 0);
    for (int i = m_ - 1; i >= 0; --i) {
      available_[q][i] = available_[q][i + 1] + (r.member[i] ? 1 : 0);
      if (r.member[i]) requirements_of_[i].push_back(static_cast<int>(q));
    }
    num_attributes_ = std::max(num_attributes_, r.attribute + 1);
  }
}

bool CommitteeSearch::Viable(const State& s, CandidateId next) const {
  const int remaining = k_ - static_cast<int>(s.chosen.size());
  if (m_ - next < remaining) return false;
  std::vector<int> attribute_need(num_attributes_, 0);
  for (size_t q = 0; q < requirements_.size(); ++q) {
    const int need = requirements_[q].lower - s.have[q];
    if (need <= 0) continue;
    if (need > remaining || need > available_[q][next]) return false;
    if (requirements_[q].attribute >= 0) {
      attribute_need[requirements_[q].attribute] += need;
    }
  }
  for (int need : attribute_need) {
    if (need > remaining) return false;
  }
  return true;
}

void CommitteeSearch::Push(State& s, CandidateId c) const {
  s.chosen.push_back(c);
  for (int q : requirements_of_[c]) ++s.have[q];
}

void CommitteeSearch::Pop(State& s) const {
  CandidateId c = s.chosen.back();
  s.chosen.pop_back();
  for (int q : requirements_of_[c]) --s.have[q];
}

void CommitteeSearch::Enumerate(const CommitteeVisitor& visit) const {
  State s;
  s.have.assign(requirements_.size(), 0);
  bool stop = false;
  std::function<void(CandidateId)> dfs = [&](CandidateId next) {
    if (static_cast<int>(s.chosen.size()) == k_) {
      if (!visit(s.chosen)) stop = true;
      return;
    }
    const int remaining = k_ - static_cast<int>(s.chosen.size());
    for (CandidateId c = next; c <= m_ - remaining && !stop; ++c) {
      Push(s, c);
      if (Viable(s, c + 1)) dfs(c + 1);
      Pop(s);
    }
  };
  if (Viable(s, 0)) dfs(0);
}

std::optional<Committee> CommitteeSearch::Maximize(
    Objective& objective, const CommitteeFilter& filter) const {
  State s;
  s.have.assign(requirements_.size(), 0);
  std::optional<Committee> best;
  std::function<void(CandidateId)> dfs = [&](CandidateId next) {
    const int remaining = k_ - static_cast<int>(s.chosen.size());
    if (remaining == 0) {
      if (best && objective.Value() <= best->score) return;
      if (filter && !filter(s.chosen)) return;
      best = Committee{s.chosen, objective.Value()};
      return;
    }
    for (CandidateId c = next; c <= m_ - remaining; ++c) {
      Push(s, c);
      objective.Push(c);
      if (Viable(s, c + 1) &&
          (!best || objective.UpperBound(c + 1, remaining - 1) > best->score)) {
        dfs(c + 1);
      }
      objective.Pop();
      Pop(s);
    }
  };
  if (Viable(s, 0)) dfs(0);
  return best;
}

}  // namespace fairdire::internal
