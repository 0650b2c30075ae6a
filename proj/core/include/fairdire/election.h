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

#ifndef FAIRDIRE_ELECTION_H_
#define FAIRDIRE_ELECTION_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fairdire {

// Candidates and voters are dense integers 0..m-1 and 0..n-1. Display names
// live in the file layer (see election_file.h).
using CandidateId = int;
using VoterId = int;

// Most- to least-preferred.
using Ranking = std::vector<CandidateId>;

// One attribute: a list of disjoint groups (candidates) or populations
// (voters). Items may be left out of every group.
using Partition = std::vector<std::vector<int>>;

// Identifies the j-th group (or population) of the i-th attribute.
struct AttributeIndex {
  int attribute = 0;
  int index = 0;
  friend auto operator<=>(const AttributeIndex&,
                          const AttributeIndex&) = default;
};
using GroupId = AttributeIndex;
using PopulationId = AttributeIndex;

std::string ToString(const AttributeIndex& id);

// Immutable election with attributed candidates and voters. Construction
// accepts malformed input so that ValidateElection can report on it; every
// other operation assumes a valid election.
class Election {
 public:
  Election(int num_candidates, std::vector<Ranking> rankings,
           std::vector<Partition> candidate_attributes = {},
           std::vector<Partition> voter_attributes = {});

  int num_candidates() const { return num_candidates_; }
  int num_voters() const { return static_cast<int>(rankings_.size()); }

  const std::vector<Ranking>& rankings() const { return rankings_; }
  const Ranking& ranking(VoterId v) const;

  const std::vector<Partition>& candidate_attributes() const {
    return candidate_attributes_;
  }
  const std::vector<Partition>& voter_attributes() const {
    return voter_attributes_;
  }

  // All groups / populations in attribute-major order.
  std::vector<GroupId> AllGroups() const;
  std::vector<PopulationId> AllPopulations() const;

  const std::vector<CandidateId>& group(GroupId id) const;
  const std::vector<VoterId>& population(PopulationId id) const;

  // 1-based position of c in v's ranking; throws LookupError for unknown
  // ids or a candidate missing from the ranking.
  int Position(VoterId v, CandidateId c) const;

  // Borda score m - pos_v(c).
  int BordaScore(VoterId v, CandidateId c) const {
    return num_candidates_ - Position(v, c);
  }

  // Copy with positions of a and b exchanged in the listed voters' rankings.
  Election WithSwap(std::span<const VoterId> voters, CandidateId a,
                    CandidateId b) const;

  friend bool operator==(const Election& a, const Election& b) {
    return a.num_candidates_ == b.num_candidates_ &&
           a.rankings_ == b.rankings_ &&
           a.candidate_attributes_ == b.candidate_attributes_ &&
           a.voter_attributes_ == b.voter_attributes_;
  }

 private:
  int num_candidates_;
  std::vector<Ranking> rankings_;
  std::vector<Partition> candidate_attributes_;
  std::vector<Partition> voter_attributes_;
  // positions_[v * m + c] = 1-based position, 0 when absent.
  std::vector<int> positions_;
};

struct ValidationReport {
  std::vector<std::string> errors;
  // Non-fatal findings, e.g. items left out of every group of an attribute.
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
};

ValidationReport ValidateElection(const Election& e);

// Borda vector of a complete ranking: scores[c] = m - position(c).
// Throws InvalidRankingError unless the ranking is a permutation of 0..m-1
// where m is the ranking's length.
std::vector<int> BordaVector(std::span<const CandidateId> ranking);

// Collective ranking of a set of voters: descending sum of Borda scores,
// ties broken by ascending candidate id. Throws DomainError when empty.
Ranking AggregateRanking(const Election& e, std::span<const VoterId> voters);

// Sorted, duplicate-free candidate set with its rule score.
struct Committee {
  std::vector<CandidateId> members;
  int64_t score = 0;

  int size() const { return static_cast<int>(members.size()); }
  bool Contains(CandidateId c) const;

  friend bool operator==(const Committee&, const Committee&) = default;
};

// A population's collective view: aggregate ranking, rank lookup and
// winning committee W_P.
struct PopulationProfile {
  std::vector<VoterId> voters;
  Ranking aggregate_ranking;
  // rank_of[c] = 1-based position of c in aggregate_ranking.
  std::vector<int> rank_of;
  // Sorted ascending.
  std::vector<CandidateId> winning_committee;

  int num_candidates() const { return static_cast<int>(rank_of.size()); }
  // Borda score of c in the population's aggregate ranking.
  int Score(CandidateId c) const { return num_candidates() - rank_of[c]; }
  bool InWinningCommittee(CandidateId c) const;
};

}  // namespace fairdire

#endif  // FAIRDIRE_ELECTION_H_
