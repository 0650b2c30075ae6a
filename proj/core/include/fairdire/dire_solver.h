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

#ifndef FAIRDIRE_DIRE_SOLVER_H_
#define FAIRDIRE_DIRE_SOLVER_H_

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fairdire/election.h"
#include "fairdire/rules.h"

namespace fairdire {

// Diversity and representation lower bounds. A group or population without
// an entry is unconstrained. population_committees holds W_P for (at least)
// every constrained population.
struct ConstraintSet {
  std::map<GroupId, int> diversity;
  std::map<PopulationId, int> representation;
  std::map<PopulationId, std::vector<CandidateId>> population_committees;

  bool empty() const { return diversity.empty() && representation.empty(); }

  // Invariant violations for committee size k (empty when well-formed).
  // With require_committees false, a representation bound may still lack its
  // W_P.
  std::vector<std::string> Validate(const Election& e, int k,
                                    bool require_committees = true) const;

  friend bool operator==(const ConstraintSet&,
                         const ConstraintSet&) = default;
};

// Copy of cs where every population of e has a W_P: existing entries are
// kept, the rest are computed with PopulationWinningCommittee.
ConstraintSet WithPopulationCommittees(const Election& e,
                                       const ConstraintSet& cs, Rule rule,
                                       int k,
                                       const SearchLimits& limits = {});

struct ConstraintViolation {
  enum class Kind { kDiversity, kRepresentation };
  Kind kind;
  AttributeIndex id;
  int required = 0;
  int actual = 0;

  int shortfall() const { return required - actual; }
  std::string ToString() const;
};

struct DireCheck {
  bool ok = true;
  std::vector<ConstraintViolation> violations;
};

// Throws DomainError when a constrained population has no W_P.
DireCheck IsDire(const Election& e, std::span<const CandidateId> members,
                 const ConstraintSet& cs);

// Visits every committee meeting cs exactly once, in lexicographic order of
// the sorted member list. The visitor returns false to stop early.
using CommitteeVisitor = std::function<bool(std::span<const CandidateId>)>;
void ForEachDireCommittee(const Election& e, const ConstraintSet& cs, int k,
                          const CommitteeVisitor& visit);

// Materialized ForEachDireCommittee.
std::vector<std::vector<CandidateId>> EnumerateDire(const Election& e,
                                                    const ConstraintSet& cs,
                                                    int k);

// Restricts a DRCWD search to committees accepted by a predicate; used by the
// envy-free searches. The predicate sees sorted member lists.
using CommitteeFilter = std::function<bool(std::span<const CandidateId>)>;

// Highest-scoring committee satisfying cs (and filter, if any), or nullopt.
// Ties go to the lexicographically smallest member list. Exact branch and
// bound over subsets in lexicographic order.
std::optional<Committee> SolveDrcwd(const Election& e, const ConstraintSet& cs,
                                    Rule rule, int k,
                                    const CommitteeFilter& filter = nullptr,
                                    const SearchLimits& limits = {});

// Cheap necessary condition for feasibility: per attribute, the sum of group
// bounds fits in k and every bound fits its group (or W_P). Returns the
// reasons it fails; empty does not prove feasibility.
std::vector<std::string> QuickInfeasibility(const Election& e,
                                            const ConstraintSet& cs, int k);

}  // namespace fairdire

#endif  // FAIRDIRE_DIRE_SOLVER_H_
