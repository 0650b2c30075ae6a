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

#ifndef FAIRDIRE_SYNTHGEN_H_
#define FAIRDIRE_SYNTHGEN_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fairdire/dire_solver.h"
#include "fairdire/election.h"
#include "fairdire/rules.h"

namespace fairdire {

// The generator behind every random draw: std::mt19937_64 seeded with
// SplitMix64(seed, stream). Integer and real draws use the helpers below, not
// the <random> distributions, so sequences are identical across standard
// libraries.
using Rng = std::mt19937_64;

uint64_t SplitMix64(uint64_t x);
Rng MakeRng(uint64_t seed, uint64_t stream);
// Uniform integer in [lo, hi] (rejection sampling, unbiased).
int64_t UniformInt(Rng& rng, int64_t lo, int64_t hi);
// Uniform double in [0, 1) with 53 random bits.
double UniformReal(Rng& rng);
// Fisher-Yates with UniformInt.
void Shuffle(std::vector<int>& items, Rng& rng);

// Mallows(sigma, phi) by repeated insertion: the i-th item of sigma is
// inserted at position j in [1, i] with probability phi^(i-j) / sum_l
// phi^(i-l). phi = 0 returns sigma, phi = 1 is uniform. Throws DomainError
// for phi outside [0, 1].
Ranking SampleMallows(const Ranking& sigma, double phi, Rng& rng);

// Shuffles items 0..item_count-1, draws q uniformly from [q_min, q_max] and
// q-1 distinct cut positions from [2, item_count]; every cut starts a new
// group. Throws DomainError when item_count < q_max or q_min < 1.
Partition RandomPartition(int item_count, int q_min, int q_max, Rng& rng);

struct GenConfig {
  int m = 14;
  int n = 30;
  int k = 4;
  int mu = 2;
  int pi = 2;
  double phi = 0.5;
  // Reference ranking; the identity when absent.
  std::optional<Ranking> sigma;
  uint64_t seed = 1;
  // Range for the number of groups or populations per attribute; defaults to
  // [2, k].
  int group_count_min = 2;
  std::optional<int> group_count_max;

  int GroupCountMax() const { return group_count_max.value_or(k); }
  // Throws DomainError on invalid settings.
  void Validate() const;
};

// Streams used by GenerateElection; voter v samples from stream kVoterStream
// + v so output does not depend on evaluation order.
inline constexpr uint64_t kSigmaStream = 1;
inline constexpr uint64_t kCandidatePartitionStream = 2;
inline constexpr uint64_t kVoterPartitionStream = 3;
inline constexpr uint64_t kVoterStream = 1000;

Election GenerateElection(const GenConfig& cfg);

struct DefaultConstraintOptions {
  Rule rule = Rule::kKBorda;
  // Use the printed min(1, k|P|/n) literally (floored) instead of
  // max(1, floor(k|P|/n)).
  bool literal_min = false;
};

// l^D_G = 1 for every group, l^R_P = max(1, floor(k|P|/n)) capped at k, W_P
// for every population from the rule.
ConstraintSet DefaultConstraints(const Election& e, int k,
                                 const DefaultConstraintOptions& opts = {});

}  // namespace fairdire

#endif  // FAIRDIRE_SYNTHGEN_H_
