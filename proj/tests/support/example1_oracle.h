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

// Brute-force reconstruction of the 8-candidate, 19-voter worked example:
// two states (CA = v1..v10, IL = v11..v19), race and gender candidate
// attributes, k = 4, every bound equal to 2. The search is independent of the
// library's solvers; it only uses plain enumeration and integer arithmetic.

#ifndef FAIRDIRE_TESTS_SUPPORT_EXAMPLE1_ORACLE_H_
#define FAIRDIRE_TESTS_SUPPORT_EXAMPLE1_ORACLE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairdire/election_file.h"

namespace fairdire::testing {

using Scores = std::array<int, 8>;
using Perm = std::array<int, 8>;
using Mask = std::array<int, 4>;  // sorted committee, ids 0..7

inline constexpr int kCaVoters = 10;
inline constexpr int kIlVoters = 9;

// Named committees of the example (0-based ids).
inline constexpr Mask kOptimal = {0, 1, 4, 5};  // {c1,c2,c5,c6}, 342
inline constexpr Mask kDire = {0, 2, 5, 7};     // {c1,c3,c6,c8}, 286
inline constexpr Mask kFecUec = {0, 2, 4, 7};   // {c1,c3,c5,c8}, 285
inline constexpr Mask kWec = {0, 2, 4, 6};      // {c1,c3,c5,c7}, 284

// One printed row of the example's property table: committee, score, then
// DiRe, FEC up to 0/1, UEC up to 0/1/2, WEC up to 0, 1/13, 2/13.
struct PropertyTableRow {
  Mask committee;
  int score;
  std::array<bool, 9> cells;
};

inline constexpr std::array<PropertyTableRow, 4> kPropertyTable = {{
    {kOptimal, 342, {false, true, true, true, true, true, true, true, true}},
    {kDire, 286, {true, false, true, false, false, true, false, false, true}},
    {kFecUec, 285, {true, true, true, true, true, true, false, true, true}},
    {kWec, 284, {true, true, true, false, false, true, true, true, true}},
}};

struct Example1Instance {
  Perm ca_ranking;  // aggregate rankings
  Perm il_ranking;
  // Bit c set: candidate c is African-American / female.
  int race_mask = 0;
  int gender_mask = 0;
  Scores ca_sums;  // per-candidate Borda totals per state
  Scores il_sums;
  std::vector<Perm> ca_votes;
  std::vector<Perm> il_votes;
};

struct SearchStats {
  int64_t ranking_pairs_tried = 0;
  int ranking_pairs_kept = 0;
  int labelings_tried = 0;
  int64_t score_vectors_kept = 0;
  int64_t splits_tried = 0;
};

// Aggregate-only facts: utilities, weighted utilities, favorites and every
// Table-1 envy cell. Returns the failing fact or "".
std::string CheckAggregateFacts(const Perm& ca_ranking, const Perm& il_ranking);

// Runs the full search; nullopt if nothing satisfies the stated facts.
std::optional<Example1Instance> ReconstructExample1(SearchStats* stats = nullptr);

// Document with names c1..c8, v1..v19, race/gender/state labels, bounds and
// the two W_P committees.
ElectionDocument ToDocument(const Example1Instance& inst);

// Same election with c5 and c6 exchanged in every CA ballot.
ElectionDocument UnswapCalifornia(const ElectionDocument& doc);

}  // namespace fairdire::testing

#endif  // FAIRDIRE_TESTS_SUPPORT_EXAMPLE1_ORACLE_H_
