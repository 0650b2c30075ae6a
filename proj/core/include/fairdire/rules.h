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

#ifndef FAIRDIRE_RULES_H_
#define FAIRDIRE_RULES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fairdire/election.h"

namespace fairdire {

// k-Borda is separable; beta-CC (Chamberlin-Courant with Borda
// misrepresentation) is monotone submodular.
enum class Rule { kKBorda, kBetaCC };

std::string_view RuleName(Rule rule);
std::optional<Rule> ParseRule(std::string_view name);
inline bool IsSeparable(Rule rule) { return rule == Rule::kKBorda; }

struct SearchLimits {
  // Exhaustive beta-CC search refuses elections with more candidates.
  int max_betacc_candidates = 20;
};

// Exact integer committee score over all voters of e.
//   kKBorda: sum over members and voters of m - pos_v(c)
//   kBetaCC: sum over voters of the best member's m - pos_v(c)
// Throws LookupError for an id outside C, DomainError for duplicates.
int64_t CommitteeScore(const Election& e, std::span<const CandidateId> members,
                       Rule rule);

// Same, restricted to a subset of voters.
int64_t CommitteeScore(const Election& e, std::span<const CandidateId> members,
                       Rule rule, std::span<const VoterId> voters);

// Highest-scoring k-committee; ties go to the lexicographically smallest
// sorted member list. Throws DomainError unless 1 <= k <= m, and for beta-CC
// when m exceeds limits.max_betacc_candidates.
Committee OptimalCommittee(const Election& e, Rule rule, int k,
                           const SearchLimits& limits = {});

// W_P for the given voters: the top-k prefix of their aggregate ranking under
// k-Borda, the exact beta-CC maximizer over just those voters otherwise.
// Committee::score is the rule score over those voters.
Committee PopulationWinningCommittee(const Election& e,
                                     std::span<const VoterId> voters,
                                     Rule rule, int k,
                                     const SearchLimits& limits = {});

// Builds the aggregate ranking and W_P for a voter set. When
// winning_override is given it is used verbatim as W_P.
PopulationProfile MakeProfile(
    const Election& e, std::vector<VoterId> voters, Rule rule, int k,
    const std::vector<CandidateId>* winning_override = nullptr,
    const SearchLimits& limits = {});

}  // namespace fairdire

#endif  // FAIRDIRE_RULES_H_
