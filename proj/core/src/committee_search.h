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

#ifndef FAIRDIRE_CORE_SRC_COMMITTEE_SEARCH_H_
#define FAIRDIRE_CORE_SRC_COMMITTEE_SEARCH_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fairdire/dire_solver.h"
#include "fairdire/election.h"
#include "fairdire/rules.h"

namespace fairdire::internal {

// "At least lower members from this set." Requirements sharing a
// non-negative attribute are disjoint, which lets their shortfalls be summed.
struct Requirement {
  std::vector<char> member;
  int lower = 0;
  int attribute = -1;
};

std::vector<Requirement> BuildRequirements(const Election& e,
                                           const ConstraintSet& cs);

// Incremental committee objective for branch and bound.
class Objective {
 public:
  virtual ~Objective() = default;
  virtual void Push(CandidateId c) = 0;
  virtual void Pop() = 0;
  virtual int64_t Value() const = 0;
  // Admissible bound on Value() over every completion that adds
  // `remaining` candidates with ids >= next.
  virtual int64_t UpperBound(CandidateId next, int remaining) const = 0;
};

// Separable objective: sum of per-candidate weights.
class SeparableObjective final : public Objective {
 public:
  SeparableObjective(std::vector<int64_t> weights, int k);
  void Push(CandidateId c) override;
  void Pop() override;
  int64_t Value() const override { return value_; }
  int64_t UpperBound(CandidateId next, int remaining) const override;

 private:
  std::vector<int64_t> weights_;
  int k_;
  // best_prefix_[next * (k + 1) + r]: sum of the r largest weights among ids
  // >= next.
  std::vector<int64_t> best_prefix_;
  std::vector<CandidateId> stack_;
  int64_t value_ = 0;
};

// Chamberlin-Courant objective: each voter scores its best member.
class CoverageObjective final : public Objective {
 public:
  // scores[v][c]; every score must be >= 0.
  explicit CoverageObjective(std::vector<std::vector<int>> scores);
  void Push(CandidateId c) override;
  void Pop() override;
  int64_t Value() const override { return value_; }
  int64_t UpperBound(CandidateId next, int remaining) const override;

 private:
  std::vector<std::vector<int>> scores_;
  int num_candidates_;
  // suffix_max_[next][v]: best score voter v gives any id >= next.
  std::vector<std::vector<int>> suffix_max_;
  std::vector<std::vector<int>> best_stack_;
  int64_t value_ = 0;
};

std::unique_ptr<Objective> MakeObjective(const Election& e, Rule rule, int k,
                                         std::span<const VoterId> voters);

// Depth-first search over k-subsets of 0..m-1 in lexicographic order, pruning
// partial sets that can no longer meet the requirements.
class CommitteeSearch {
 public:
  CommitteeSearch(int num_candidates, int k,
                  std::vector<Requirement> requirements);

  void Enumerate(const CommitteeVisitor& visit) const;

  // Best-scoring feasible committee accepted by filter; ties keep the first
  // (lexicographically smallest) one.
  std::optional<Committee> Maximize(Objective& objective,
                                    const CommitteeFilter& filter) const;

 private:
  struct State;
  bool Viable(const State& s, CandidateId next) const;
  void Push(State& s, CandidateId c) const;
  void Pop(State& s) const;

  int m_;
  int k_;
  std::vector<Requirement> requirements_;
  // available_[q][i]: members of requirement q with id >= i.
  std::vector<std::vector<int>> available_;
  std::vector<std::vector<int>> requirements_of_;
  int num_attributes_ = 0;
};

}  // namespace fairdire::internal

#endif  // FAIRDIRE_CORE_SRC_COMMITTEE_SEARCH_H_
