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

#include "fairdire/election.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "fairdire/errors.h"

namespace fairdire {
namespace {

void CheckPartition(const Partition& partition, int universe,
                    const std::string& what, int attribute,
                    ValidationReport* report) {
  std::vector<int> owner(universe, -1);
  for (int j = 0; j < static_cast<int>(partition.size()); ++j) {
    const std::string where = what + " attribute " +
                              std::to_string(attribute) + " part " +
                              std::to_string(j);
    if (partition[j].empty()) {
      report->errors.push_back(where + ": empty part");
    }
    for (int item : partition[j]) {
      if (item < 0 || item >= universe) {
        report->errors.push_back(where + ": unknown id " +
                                 std::to_string(item));
        continue;
      }
      if (owner[item] == j) {
        report->errors.push_back(where + ": id " + std::to_string(item) +
                                 " listed twice");
      } else if (owner[item] >= 0) {
        report->errors.push_back(
            (what == "voter" ? "non-disjoint populations: "
                             : "non-disjoint groups: ") +
            what + " attribute " + std::to_string(attribute) + " parts " +
            std::to_string(owner[item]) + " and " + std::to_string(j) +
            " share id " + std::to_string(item));
      } else {
        owner[item] = j;
      }
    }
  }
  int ungrouped = static_cast<int>(std::count(owner.begin(), owner.end(), -1));
  if (ungrouped > 0) {
    report->warnings.push_back(what + " attribute " +
                               std::to_string(attribute) + " leaves " +
                               std::to_string(ungrouped) + " ids ungrouped");
  }
}

}  // namespace

std::string ToString(const AttributeIndex& id) {
  return "(" + std::to_string(id.attribute) + "," + std::to_string(id.index) +
         ")";
}

Election::Election(int num_candidates, std::vector<Ranking> rankings,
                   std::vector<Partition> candidate_attributes,
                   std::vector<Partition> voter_attributes)
    : num_candidates_(num_candidates),
      rankings_(std::move(rankings)),
      candidate_attributes_(std::move(candidate_attributes)),
      voter_attributes_(std::move(voter_attributes)) {
  if (num_candidates_ < 0) throw DomainError("negative candidate count");
  positions_.assign(static_cast<size_t>(num_candidates_) * rankings_.size(),
                    0);
  for (size_t v = 0; v < rankings_.size(); ++v) {
    const Ranking& r = rankings_[v];
    for (size_t i = 0; i < r.size(); ++i) {
      CandidateId c = r[i];
      if (c < 0 || c >= num_candidates_) continue;
      int& slot = positions_[v * num_candidates_ + c];
      if (slot == 0) slot = static_cast<int>(i) + 1;
    }
  }
}

const Ranking& Election::ranking(VoterId v) const {
  if (v < 0 || v >= num_voters()) {
    throw LookupError("unknown voter " + std::to_string(v));
  }
  return rankings_[v];
}

std::vector<GroupId> Election::AllGroups() const {
  std::vector<GroupId> out;
  for (int i = 0; i < static_cast<int>(candidate_attributes_.size()); ++i) {
    for (int j = 0; j < static_cast<int>(candidate_attributes_[i].size());
         ++j) {
      out.push_back({i, j});
    }
  }
  return out;
}

std::vector<PopulationId> Election::AllPopulations() const {
  std::vector<PopulationId> out;
  for (int i = 0; i < static_cast<int>(voter_attributes_.size()); ++i) {
    for (int j = 0; j < static_cast<int>(voter_attributes_[i].size()); ++j) {
      out.push_back({i, j});
    }
  }
  return out;
}

const std::vector<CandidateId>& Election::group(GroupId id) const {
  if (id.attribute < 0 ||
      id.attribute >= static_cast<int>(candidate_attributes_.size()) ||
      id.index < 0 ||
      id.index >=
          static_cast<int>(candidate_attributes_[id.attribute].size())) {
    throw LookupError("unknown candidate group " + ToString(id));
  }
  return candidate_attributes_[id.attribute][id.index];
}

const std::vector<VoterId>& Election::population(PopulationId id) const {
  if (id.attribute < 0 ||
      id.attribute >= static_cast<int>(voter_attributes_.size()) ||
      id.index < 0 ||
      id.index >= static_cast<int>(voter_attributes_[id.attribute].size())) {
    throw LookupError("unknown voter population " + ToString(id));
  }
  return voter_attributes_[id.attribute][id.index];
}

int Election::Position(VoterId v, CandidateId c) const {
  if (v < 0 || v >= num_voters()) {
    throw LookupError("unknown voter " + std::to_string(v));
  }
  if (c < 0 || c >= num_candidates_) {
    throw LookupError("unknown candidate " + std::to_string(c));
  }
  int pos = positions_[static_cast<size_t>(v) * num_candidates_ + c];
  if (pos == 0) {
    throw LookupError("candidate " + std::to_string(c) +
                      " missing from ranking of voter " + std::to_string(v));
  }
  return pos;
}

Election Election::WithSwap(std::span<const VoterId> voters, CandidateId a,
                            CandidateId b) const {
  std::vector<Ranking> rankings = rankings_;
  for (VoterId v : voters) {
    Ranking& r = rankings.at(v);
    auto ia = std::find(r.begin(), r.end(), a);
    auto ib = std::find(r.begin(), r.end(), b);
    if (ia == r.end() || ib == r.end()) {
      throw LookupError("swap candidates missing from ranking of voter " +
                        std::to_string(v));
    }
    std::iter_swap(ia, ib);
  }
  return Election(num_candidates_, std::move(rankings), candidate_attributes_,
                  voter_attributes_);
}

ValidationReport ValidateElection(const Election& e) {
  ValidationReport report;
  const int m = e.num_candidates();
  if (m < 1) report.errors.push_back("election has no candidates");
  if (e.num_voters() < 1) report.errors.push_back("election has no voters");
  for (int v = 0; v < e.num_voters(); ++v) {
    const Ranking& r = e.rankings()[v];
    std::vector<int> seen(std::max(m, 0), 0);
    bool bad_id = false;
    for (CandidateId c : r) {
      if (c < 0 || c >= m) {
        bad_id = true;
        continue;
      }
      ++seen[c];
    }
    const std::string who = "voter " + std::to_string(v);
    if (bad_id) report.errors.push_back(who + ": unknown candidate in ranking");
    if (std::any_of(seen.begin(), seen.end(), [](int s) { return s > 1; })) {
      report.errors.push_back(who + ": duplicated candidate in ranking");
    }
    if (std::any_of(seen.begin(), seen.end(), [](int s) { return s == 0; })) {
      report.errors.push_back(who + ": incomplete ranking (" +
                              std::to_string(r.size()) + " of " +
                              std::to_string(m) + " candidates)");
    }
  }
  for (int i = 0; i < static_cast<int>(e.candidate_attributes().size()); ++i) {
    CheckPartition(e.candidate_attributes()[i], m, "candidate", i, &report);
  }
  for (int i = 0; i < static_cast<int>(e.voter_attributes().size()); ++i) {
    CheckPartition(e.voter_attributes()[i], e.num_voters(), "voter", i,
                   &report);
  }
  return report;
}

std::vector<int> BordaVector(std::span<const CandidateId> ranking) {
  const int m = static_cast<int>(ranking.size());
  std::vector<int> scores(m, -1);
  for (int i = 0; i < m; ++i) {
    CandidateId c = ranking[i];
    if (c < 0 || c >= m) {
      throw InvalidRankingError("ranking mentions unknown candidate " +
                                std::to_string(c));
    }
    if (scores[c] != -1) {
      throw InvalidRankingError("ranking repeats candidate " +
                                std::to_string(c));
    }
    scores[c] = m - 1 - i;
  }
  return scores;
}

Ranking AggregateRanking(const Election& e, std::span<const VoterId> voters) {
  if (voters.empty()) throw DomainError("cannot aggregate an empty population");
  const int m = e.num_candidates();
  std::vector<int64_t> totals(m, 0);
  for (VoterId v : voters) {
    for (CandidateId c = 0; c < m; ++c) totals[c] += e.BordaScore(v, c);
  }
  Ranking out(m);
  std::iota(out.begin(), out.end(), 0);
  std::stable_sort(out.begin(), out.end(), [&](CandidateId a, CandidateId b) {
    return totals[a] > totals[b];
  });
  return out;
}

bool Committee::Contains(CandidateId c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

bool PopulationProfile::InWinningCommittee(CandidateId c) const {
  return std::binary_search(winning_committee.begin(),
                            winning_committee.end(), c);
}

}  // namespace fairdire
