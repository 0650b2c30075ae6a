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

#include "fairdire/rules.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "committee_search.h"
#include "fairdire/errors.h"

namespace fairdire {
namespace {

void CheckMembers(const Election& e, std::span<const CandidateId> members) {
  std::vector<char> seen(e.num_candidates(), 0);
  for (CandidateId c : members) {
    if (c < 0 || c >= e.num_candidates()) {
      throw LookupError("committee member " + std::to_string(c) +
                        " is not a candidate");
    }
    if (seen[c]) {
      throw DomainError("committee lists candidate " + std::to_string(c) +
                        " twice");
    }
    seen[c] = 1;
  }
}

void CheckK(const Election& e, int k) {
  if (k < 1 || k > e.num_candidates()) {
    throw DomainError("committee size " + std::to_string(k) +
                      " outside [1, " + std::to_string(e.num_candidates()) +
                      "]");
  }
}

std::vector<VoterId> AllVoters(const Election& e) {
  std::vector<VoterId> voters(e.num_voters());
  std::iota(voters.begin(), voters.end(), 0);
  return voters;
}

}  // namespace

std::string_view RuleName(Rule rule) {
  switch (rule) {
    case Rule::kKBorda:
      return "kborda";
    case Rule::kBetaCC:
      return "betacc";
  }
  return "?";
}

std::optional<Rule> ParseRule(std::string_view name) {
  if (name == "kborda" || name == "k-borda") return Rule::kKBorda;
  if (name == "betacc" || name == "beta-cc" || name == "cc") {
    return Rule::kBetaCC;
  }
  return std::nullopt;
}

int64_t CommitteeScore(const Election& e, std::span<const CandidateId> members,
                       Rule rule) {
  std::vector<VoterId> voters = AllVoters(e);
  return CommitteeScore(e, members, rule, voters);
}

int64_t CommitteeScore(const Election& e, std::span<const CandidateId> members,
                       Rule rule, std::span<const VoterId> voters) {
  CheckMembers(e, members);
  int64_t total = 0;
  for (VoterId v : voters) {
    if (rule == Rule::kKBorda) {
      for (CandidateId c : members) total += e.BordaScore(v, c);
    } else {
      int best = 0;
      for (CandidateId c : members) best = std::max(best, e.BordaScore(v, c));
      total += best;
    }
  }
  return total;
}

Committee PopulationWinningCommittee(const Election& e,
                                     std::span<const VoterId> voters,
                                     Rule rule, int k,
                                     const SearchLimits& limits) {
  CheckK(e, k);
  if (voters.empty()) {
    throw DomainError("cannot elect a committee for an empty population");
  }
  if (rule == Rule::kKBorda) {
    Ranking aggregate = AggregateRanking(e, voters);
    Committee w;
    w.members.assign(aggregate.begin(), aggregate.begin() + k);
    std::sort(w.members.begin(), w.members.end());
    w.score = CommitteeScore(e, w.members, rule, voters);
    return w;
  }
  if (e.num_candidates() > limits.max_betacc_candidates) {
    throw DomainError("exact beta-CC search limited to " +
                      std::to_string(limits.max_betacc_candidates) +
                      " candidates, election has " +
                      std::to_string(e.num_candidates()));
  }
  internal::CommitteeSearch search(e.num_candidates(), k, {});
  auto objective = internal::MakeObjective(e, rule, k, voters);
  return *search.Maximize(*objective, nullptr);
}

Committee OptimalCommittee(const Election& e, Rule rule, int k,
                           const SearchLimits& limits) {
  std::vector<VoterId> voters = AllVoters(e);
  return PopulationWinningCommittee(e, voters, rule, k, limits);
}

PopulationProfile MakeProfile(const Election& e, std::vector<VoterId> voters,
                              Rule rule, int k,
                              const std::vector<CandidateId>* winning_override,
                              const SearchLimits& limits) {
  PopulationProfile p;
  p.aggregate_ranking = AggregateRanking(e, voters);
  p.rank_of.assign(e.num_candidates(), 0);
  for (int i = 0; i < e.num_candidates(); ++i) {
    p.rank_of[p.aggregate_ranking[i]] = i + 1;
  }
  if (winning_override != nullptr) {
    p.winning_committee = *winning_override;
    std::sort(p.winning_committee.begin(), p.winning_committee.end());
  } else {
    p.winning_committee =
        PopulationWinningCommittee(e, voters, rule, k, limits).members;
  }
  p.voters = std::move(voters);
  return p;
}

}  // namespace fairdire
