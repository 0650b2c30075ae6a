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

#ifndef FAIRDIRE_MANIPULATION_H_
#define FAIRDIRE_MANIPULATION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairdire/dire_solver.h"
#include "fairdire/election.h"
#include "fairdire/rules.h"

namespace fairdire {

// Which population(s) attempt the manipulation.
struct ManipulatorChoice {
  enum class Mode { kLargest, kSpecific, kAny };
  Mode mode = Mode::kLargest;
  PopulationId population;  // kSpecific only

  static ManipulatorChoice Largest() { return {}; }
  static ManipulatorChoice Specific(PopulationId p) {
    return {Mode::kSpecific, p};
  }
  static ManipulatorChoice Any() { return {Mode::kAny, {}}; }
};

// W_P of every population plus the DRCWD winner, before or after a swap.
struct ElectionOutcome {
  std::map<PopulationId, std::vector<CandidateId>> population_committees;
  std::optional<Committee> winner;
};

// One success condition met by a swap. before/after are the bound and the
// achieved count for constraint entries, and the population's utility from
// the old and new winner for kUtility.
struct Harm {
  enum class Kind { kRepresentation, kDiversity, kUtility, kNoCommittee };
  Kind kind;
  AttributeIndex id;
  int64_t before = 0;
  int64_t after = 0;

  std::string ToString() const;
  friend bool operator==(const Harm&, const Harm&) = default;
};

struct ManipulationOutcome {
  bool found = false;
  PopulationId manipulator;
  std::pair<CandidateId, CandidateId> swap{-1, -1};
  ElectionOutcome original;
  ElectionOutcome manipulated;
  std::vector<Harm> harmed;
  std::optional<Election> manipulated_election;
};

// Searches for a preference swap by the manipulator among candidates outside
// its own W_P. Every population's W_P and the DRCWD winner are recomputed
// after each swap (bounds in cs are kept; W_P entries in cs are ignored and
// recomputed from votes). A swap succeeds when
//   - some other population's W_P changed and the new winner no longer meets
//     its representation bound against the pre-swap W_P,
//   - some diversity bound fails for the new winner (or no DiRe committee is
//     left), or
//   - some other population's utility from the winner, scored on its pre-swap
//     aggregate ranking, strictly drops.
// Pairs are tried in ascending (c, c') order; the first success is returned.
// Throws UnsupportedError unless the rule is separable.
ManipulationOutcome ManipulateDrcwd(
    const Election& e, const ConstraintSet& cs, Rule rule, int k,
    const ManipulatorChoice& who = ManipulatorChoice::Largest(),
    const SearchLimits& limits = {});

// Outcome (all W_P by rule, then DRCWD winner) of an election under cs's
// bounds.
ElectionOutcome ComputeOutcome(const Election& e, const ConstraintSet& cs,
                               Rule rule, int k,
                               const SearchLimits& limits = {});

}  // namespace fairdire

#endif  // FAIRDIRE_MANIPULATION_H_
