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

#include "fairdire/synthgen.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fairdire/errors.h"

namespace fairdire {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng MakeRng(uint64_t seed, uint64_t stream) {
  return Rng(SplitMix64(SplitMix64(seed) ^ SplitMix64(~stream)));
}

int64_t UniformInt(Rng& rng, int64_t lo, int64_t hi) {
  if (lo > hi) throw DomainError("UniformInt: empty range");
  const uint64_t range = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
  if (range == std::numeric_limits<uint64_t>::max()) {
    return static_cast<int64_t>(rng());
  }
  const uint64_t span = range + 1;
  const uint64_t limit =
      std::numeric_limits<uint64_t>::max() -
      (std::numeric_limits<uint64_t>::max() % span + 1) % span;
  uint64_t draw;
  do {
    draw = rng();
  } while (draw > limit);
  return static_cast<int64_t>(static_cast<uint64_t>(lo) + draw % span);
}

double UniformReal(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void Shuffle(std::vector<int>& items, Rng& rng) {
  for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
    std::swap(items[i], items[UniformInt(rng, 0, i)]);
  }
}

Ranking SampleMallows(const Ranking& sigma, double phi, Rng& rng) {
  if (!(phi >= 0.0 && phi <= 1.0)) {
    throw DomainError("Mallows dispersion phi must lie in [0, 1]");
  }
  Ranking out;
  out.reserve(sigma.size());
  std::vector<double> weight;
  for (size_t i = 1; i <= sigma.size(); ++i) {
    // weight[j-1] = phi^(i-j) for j in [1, i].
    weight.assign(i, 1.0);
    for (size_t j = i - 1; j-- > 0;) weight[j] = weight[j + 1] * phi;
    const double total = std::accumulate(weight.begin(), weight.end(), 0.0);
    const double u = UniformReal(rng) * total;
    size_t pick = i - 1;
    double acc = 0.0;
    for (size_t j = 0; j < i; ++j) {
      acc += weight[j];
      if (u < acc && weight[j] > 0.0) {
        pick = j;
        break;
      }
    }
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(pick), sigma[i - 1]);
  }
  return out;
}

Partition RandomPartition(int item_count, int q_min, int q_max, Rng& rng) {
  if (q_min < 1 || q_min > q_max) {
    throw DomainError("partition count range [" + std::to_string(q_min) +
                      ", " + std::to_string(q_max) + "] is invalid");
  }
  if (item_count < q_max) {
    throw DomainError("cannot split " + std::to_string(item_count) +
                      " items into up to " + std::to_string(q_max) +
                      " non-empty parts");
  }
  std::vector<int> items(item_count);
  std::iota(items.begin(), items.end(), 0);
  Shuffle(items, rng);
  const int q = static_cast<int>(UniformInt(rng, q_min, q_max));
  std::vector<int> positions(std::max(item_count - 1, 0));
  std::iota(positions.begin(), positions.end(), 2);
  for (int i = 0; i < q - 1; ++i) {
    std::swap(positions[i], positions[UniformInt(rng, i, positions.size() - 1)]);
  }
  std::vector<int> cuts(positions.begin(), positions.begin() + (q - 1));
  std::sort(cuts.begin(), cuts.end());
  Partition parts(1);
  size_t next_cut = 0;
  for (int pos = 1; pos <= item_count; ++pos) {
    if (next_cut < cuts.size() && cuts[next_cut] == pos) {
      parts.emplace_back();
      ++next_cut;
    }
    parts.back().push_back(items[pos - 1]);
  }
  for (auto& part : parts) std::sort(part.begin(), part.end());
  return parts;
}

void GenConfig::Validate() const {
  if (k < 1 || k > m) {
    throw DomainError("need 1 <= k <= m, got k=" + std::to_string(k) +
                      " m=" + std::to_string(m));
  }
  if (n < 1) throw DomainError("need n >= 1");
  if (mu < 0 || pi < 0) throw DomainError("attribute counts must be >= 0");
  if (!(phi >= 0.0 && phi <= 1.0)) throw DomainError("phi must lie in [0, 1]");
  if (mu > 0 || pi > 0) {
    if (group_count_min < 1 || group_count_min > GroupCountMax()) {
      throw DomainError("group count range [" +
                        std::to_string(group_count_min) + ", " +
                        std::to_string(GroupCountMax()) + "] is empty");
    }
    if (mu > 0 && GroupCountMax() > m) {
      throw DomainError("more candidate groups than candidates");
    }
    if (pi > 0 && GroupCountMax() > n) {
      throw DomainError("more voter populations than voters");
    }
  }
  if (sigma.has_value()) {
    std::vector<int> sorted = *sigma;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(sorted.size()) != m || sorted[i] != i) {
        throw DomainError("reference ranking is not a permutation of 0..m-1");
      }
    }
  }
}

Election GenerateElection(const GenConfig& cfg) {
  cfg.Validate();
  Ranking sigma(cfg.m);
  std::iota(sigma.begin(), sigma.end(), 0);
  if (cfg.sigma.has_value()) sigma = *cfg.sigma;

  std::vector<Ranking> rankings;
  rankings.reserve(cfg.n);
  for (int v = 0; v < cfg.n; ++v) {
    Rng rng = MakeRng(cfg.seed, kVoterStream + static_cast<uint64_t>(v));
    rankings.push_back(SampleMallows(sigma, cfg.phi, rng));
  }
  std::vector<Partition> candidate_attributes;
  Rng crng = MakeRng(cfg.seed, kCandidatePartitionStream);
  for (int a = 0; a < cfg.mu; ++a) {
    candidate_attributes.push_back(
        RandomPartition(cfg.m, cfg.group_count_min, cfg.GroupCountMax(), crng));
  }
  std::vector<Partition> voter_attributes;
  Rng vrng = MakeRng(cfg.seed, kVoterPartitionStream);
  for (int a = 0; a < cfg.pi; ++a) {
    voter_attributes.push_back(
        RandomPartition(cfg.n, cfg.group_count_min, cfg.GroupCountMax(), vrng));
  }
  return Election(cfg.m, std::move(rankings), std::move(candidate_attributes),
                  std::move(voter_attributes));
}

ConstraintSet DefaultConstraints(const Election& e, int k,
                                 const DefaultConstraintOptions& opts) {
  ConstraintSet cs;
  for (GroupId gid : e.AllGroups()) cs.diversity[gid] = 1;
  const int64_t n = e.num_voters();
  for (PopulationId pid : e.AllPopulations()) {
    const auto& voters = e.population(pid);
    if (voters.empty()) throw DomainError("empty population " + ToString(pid));
    const int64_t share = static_cast<int64_t>(k) * voters.size() / n;
    const int64_t lower = opts.literal_min
                              ? std::min<int64_t>(1, share)
                              : std::min<int64_t>(std::max<int64_t>(1, share), k);
    if (lower > 0) cs.representation[pid] = static_cast<int>(lower);
    cs.population_committees[pid] =
        PopulationWinningCommittee(e, voters, opts.rule, k).members;
  }
  return cs;
}

}  // namespace fairdire
