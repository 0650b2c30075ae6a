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

#include "fairdire/dire_solver.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "committee_search.h"
#include "fairdire/errors.h"

namespace fairdire {

std::vector<std::string> ConstraintSet::Validate(
    const Election& e, int k, bool require_committees) const {
  std::vector<std::string> problems;
  for (const auto& [gid, lower] : diversity) {
    const std::string where = "diversity bound for group " + ToString(gid);
    if (gid.attribute < 0 ||
        gid.attribute >= static_cast<int>(e.candidate_attributes().size()) ||
        gid.index < 0 ||
        gid.index >=
            static_cast<int>(e.candidate_attributes()[gid.attribute].size())) {
      problems.push_back(where + ": unknown group");
      continue;
    }
    const int size = static_cast<int>(e.group(gid).size());
    if (lower < 1 || lower > std::min(k, size)) {
      problems.push_back(where + ": " + std::to_string(lower) +
                         " outside [1, " + std::to_string(std::min(k, size)) +
                         "]");
    }
  }
  for (const auto& [pid, lower] : representation) {
    const std::string where =
        "representation bound for population " + ToString(pid);
    if (pid.attribute < 0 ||
        pid.attribute >= static_cast<int>(e.voter_attributes().size()) ||
        pid.index < 0 ||
        pid.index >=
            static_cast<int>(e.voter_attributes()[pid.attribute].size())) {
      problems.push_back(where + ": unknown population");
      continue;
    }
    if (lower < 1 || lower > k) {
      problems.push_back(where + ": " + std::to_string(lower) +
                         " outside [1, " + std::to_string(k) + "]");
    }
    if (require_committees && !population_committees.contains(pid)) {
      problems.push_back(where + ": no winning committee W_P");
    }
  }
  for (const auto& [pid, members] : population_committees) {
    const std::string where = "winning committee of population " + ToString(pid);
    if (static_cast<int>(members.size()) != k) {
      problems.push_back(where + ": has " + std::to_string(members.size()) +
                         " members, expected " + std::to_string(k));
    }
    std::set<CandidateId> unique;
    for (CandidateId c : members) {
      if (c < 0 || c >= e.num_candidates()) {
        problems.push_back(where + ": unknown candidate " + std::to_string(c));
      } else if (!unique.insert(c).second) {
        problems.push_back(where + ": repeats candidate " + std::to_string(c));
      }
    }
  }
  return problems;
}

ConstraintSet WithPopulationCommittees(const Election& e,
                                       const ConstraintSet& cs, Rule rule,
                                       int k, const SearchLimits& limits) {
  ConstraintSet out = cs;
  for (PopulationId pid : e.AllPopulations()) {
    if (out.population_committees.contains(pid)) continue;
    out.population_committees[pid] =
        PopulationWinningCommittee(e, e.population(pid), rule, k, limits)
            .members;
  }
  return out;
}

std::string ConstraintViolation::ToString() const {
  std::string out = kind == Kind::kDiversity ? "diversity group "
                                             : "representation population ";
  out += fairdire::ToString(id) + ": has " + std::to_string(actual) +
         ", needs " + std::to_string(required) + " (short by " +
         std::to_string(shortfall()) + ")";
  return out;
}

DireCheck IsDire(const Election& e, std::span<const CandidateId> members,
                 const ConstraintSet& cs) {
  DireCheck check;
  std::vector<char> in(e.num_candidates(), 0);
  for (CandidateId c : members) {
    if (c < 0 || c >= e.num_candidates()) {
      throw LookupError("committee member " + std::to_string(c) +
                        " is not a candidate");
    }
    in[c] = 1;
  }
  for (const auto& [gid, lower] : cs.diversity) {
    int have = 0;
    for (CandidateId c : e.group(gid)) have += in[c];
    if (have < lower) {
      check.violations.push_back(
          {ConstraintViolation::Kind::kDiversity, gid, lower, have});
    }
  }
  for (const auto& [pid, lower] : cs.representation) {
    auto it = cs.population_committees.find(pid);
    if (it == cs.population_committees.end()) {
      throw DomainError("no winning committee for constrained population " +
                        ToString(pid));
    }
    int have = 0;
    for (CandidateId c : it->second) {
      if (c >= 0 && c < e.num_candidates()) have += in[c];
    }
    if (have < lower) {
      check.violations.push_back(
          {ConstraintViolation::Kind::kRepresentation, pid, lower, have});
    }
  }
  check.ok = check.violations.empty();
  return check;
}

void ForEachDireCommittee(const Election& e, const ConstraintSet& cs, int k,
                          const CommitteeVisitor& visit) {
  internal::CommitteeSearch search(e.num_candidates(), k,
                                   internal::BuildRequirements(e, cs));
  search.Enumerate(visit);
}

std::vector<std::vector<CandidateId>> EnumerateDire(const Election& e,
                                                    const ConstraintSet& cs,
                                                    int k) {
  std::vector<std::vector<CandidateId>> out;
  ForEachDireCommittee(e, cs, k, [&](std::span<const CandidateId> w) {
    out.emplace_back(w.begin(), w.end());
    return true;
  });
  return out;
}

std::optional<Committee> SolveDrcwd(const Election& e, const ConstraintSet& cs,
                                    Rule rule, int k,
                                    const CommitteeFilter& filter,
                                    const SearchLimits& limits) {
  if (k < 1 || k > e.num_candidates()) {
    throw DomainError("committee size " + std::to_string(k) +
                      " outside [1, " + std::to_string(e.num_candidates()) +
                      "]");
  }
  if (rule == Rule::kBetaCC &&
      e.num_candidates() > limits.max_betacc_candidates) {
    throw DomainError("exact beta-CC search limited to " +
                      std::to_string(limits.max_betacc_candidates) +
                      " candidates, election has " +
                      std::to_string(e.num_candidates()));
  }
  if (!QuickInfeasibility(e, cs, k).empty()) return std::nullopt;
  internal::CommitteeSearch search(e.num_candidates(), k,
                                   internal::BuildRequirements(e, cs));
  std::vector<VoterId> voters(e.num_voters());
  std::iota(voters.begin(), voters.end(), 0);
  auto objective = internal::MakeObjective(e, rule, k, voters);
  return search.Maximize(*objective, filter);
}

std::vector<std::string> QuickInfeasibility(const Election& e,
                                            const ConstraintSet& cs, int k) {
  std::vector<std::string> reasons;
  std::map<int, int> attribute_total;
  for (const auto& [gid, lower] : cs.diversity) {
    attribute_total[gid.attribute] += lower;
    const int size = static_cast<int>(e.group(gid).size());
    if (lower > size) {
      reasons.push_back("group " + ToString(gid) + " has " +
                        std::to_string(size) + " candidates but needs " +
                        std::to_string(lower));
    }
  }
  for (const auto& [attribute, total] : attribute_total) {
    if (total > k) {
      reasons.push_back("candidate attribute " + std::to_string(attribute) +
                        " needs " + std::to_string(total) +
                        " members in total, committee has " +
                        std::to_string(k));
    }
  }
  for (const auto& [pid, lower] : cs.representation) {
    auto it = cs.population_committees.find(pid);
    if (it == cs.population_committees.end()) continue;
    const int size = static_cast<int>(it->second.size());
    if (lower > std::min(size, k)) {
      reasons.push_back("population " + ToString(pid) + " needs " +
                        std::to_string(lower) + " of its " +
                        std::to_string(size) + " W_P members");
    }
  }
  return reasons;
}

}  // namespace fairdire
