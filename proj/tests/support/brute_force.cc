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

#include "brute_force.h"

#include <algorithm>
#include <numeric>
#include <string>

namespace fairdire::testing {
namespace {

// pos[v][c], 0-based, straight from the ballots.
std::vector<std::vector<int>> Positions(const Election& e) {
  std::vector<std::vector<int>> pos(
      e.num_voters(), std::vector<int>(e.num_candidates(), -1));
  for (int v = 0; v < e.num_voters(); ++v) {
    const auto& r = e.rankings()[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i) pos[v][r[i]] = i;
  }
  return pos;
}

std::vector<VoterId> Everyone(const Election& e) {
  std::vector<VoterId> all(e.num_voters());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

struct OraclePopulation {
  int attribute;  // -1 for intersections
  std::vector<VoterId> voters;
  std::vector<int> rank_of;  // 1-based
  std::vector<CandidateId> winning;
  int bound;
};

}  // namespace

std::vector<std::vector<CandidateId>> AllSubsets(int m, int k) {
  std::vector<std::vector<CandidateId>> out;
  if (k < 0 || k > m) return out;
  std::vector<CandidateId> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == m - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<CandidateId> OracleAggregate(const Election& e,
                                         const std::vector<VoterId>& voters) {
  const int m = e.num_candidates();
  const auto pos = Positions(e);
  std::vector<int64_t> total(m, 0);
  for (VoterId v : voters) {
    for (int c = 0; c < m; ++c) total[c] += m - 1 - pos[v][c];
  }
  std::vector<CandidateId> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return total[a] != total[b] ? total[a] > total[b] : a < b;
  });
  return order;
}

int64_t OracleScore(const Election& e, const std::vector<CandidateId>& w,
                    Rule rule, const std::vector<VoterId>& voters) {
  const int m = e.num_candidates();
  const auto pos = Positions(e);
  int64_t total = 0;
  for (VoterId v : voters) {
    if (rule == Rule::kKBorda) {
      for (CandidateId c : w) total += m - 1 - pos[v][c];
    } else {
      int best = 0;
      for (CandidateId c : w) best = std::max(best, m - 1 - pos[v][c]);
      total += best;
    }
  }
  return total;
}

int64_t OracleScore(const Election& e, const std::vector<CandidateId>& w,
                    Rule rule) {
  return OracleScore(e, w, rule, Everyone(e));
}

OracleCommittee OracleOptimal(const Election& e, Rule rule, int k,
                              const std::vector<VoterId>& voters) {
  OracleCommittee best;
  bool have = false;
  for (const auto& w : AllSubsets(e.num_candidates(), k)) {
    const int64_t s = OracleScore(e, w, rule, voters);
    if (!have || s > best.score) {
      best = {w, s};
      have = true;
    }
  }
  return best;
}

ConstraintSet OracleWithCommittees(const Election& e, const ConstraintSet& cs,
                                   Rule rule, int k) {
  ConstraintSet out = cs;
  for (int a = 0; a < static_cast<int>(e.voter_attributes().size()); ++a) {
    for (int p = 0; p < static_cast<int>(e.voter_attributes()[a].size()); ++p) {
      if (out.population_committees.count({a, p})) continue;
      std::vector<VoterId> voters = e.voter_attributes()[a][p];
      out.population_committees[{a, p}] =
          OracleOptimal(e, rule, k, voters).members;
    }
  }
  return out;
}

bool OracleIsDire(const Election& e, const ConstraintSet& cs,
                  const std::vector<CandidateId>& w) {
  auto count = [&](const std::vector<int>& set) {
    int n = 0;
    for (int c : set) n += std::count(w.begin(), w.end(), c) > 0;
    return n;
  };
  for (const auto& [gid, lower] : cs.diversity) {
    if (count(e.candidate_attributes()[gid.attribute][gid.index]) < lower) {
      return false;
    }
  }
  for (const auto& [pid, lower] : cs.representation) {
    if (count(cs.population_committees.at(pid)) < lower) return false;
  }
  return true;
}

bool OracleEnvyfree(const Election& e, const ConstraintSet& cs, Rule rule,
                    const std::vector<CandidateId>& w, const Notion& notion,
                    Scope scope) {
  const int m = e.num_candidates();
  const int k = static_cast<int>(w.size());
  const auto& attrs = e.voter_attributes();
  std::vector<OraclePopulation> pops;
  auto finish = [&](OraclePopulation p) {
    const auto agg = OracleAggregate(e, p.voters);
    p.rank_of.assign(m, 0);
    for (int i = 0; i < m; ++i) p.rank_of[agg[i]] = i + 1;
    pops.push_back(std::move(p));
  };
  if (scope == Scope::kIntersectional) {
    for (size_t a = 0; a < attrs.size(); ++a)
      for (size_t b = a + 1; b < attrs.size(); ++b)
        for (const auto& pa : attrs[a])
          for (const auto& pb : attrs[b]) {
            OraclePopulation p;
            p.attribute = -1;
            for (VoterId v : pa) {
              if (std::count(pb.begin(), pb.end(), v)) p.voters.push_back(v);
            }
            if (p.voters.empty()) continue;
            std::sort(p.voters.begin(), p.voters.end());
            p.winning = OracleOptimal(e, rule, k, p.voters).members;
            p.bound = 1;
            finish(std::move(p));
          }
  } else {
    for (int a = 0; a < static_cast<int>(attrs.size()); ++a)
      for (int i = 0; i < static_cast<int>(attrs[a].size()); ++i) {
        OraclePopulation p;
        p.attribute = a;
        p.voters = attrs[a][i];
        auto it = cs.population_committees.find({a, i});
        p.winning = it != cs.population_committees.end()
                        ? it->second
                        : OracleOptimal(e, rule, k, p.voters).members;
        auto lt = cs.representation.find({a, i});
        p.bound = lt != cs.representation.end() ? lt->second : 1;
        finish(std::move(p));
      }
  }
  const int64_t num = notion.bound().num();
  const int64_t den = notion.bound().den();
  for (size_t i = 0; i < pops.size(); ++i) {
    for (size_t j = i + 1; j < pops.size(); ++j) {
      if (scope == Scope::kLocalized && pops[i].attribute != pops[j].attribute) {
        continue;
      }
      const OraclePopulation& p = pops[i];
      const OraclePopulation& q = pops[j];
      switch (notion.kind()) {
        case Notion::Kind::kFec: {
          auto favorite = [&](const OraclePopulation& x) {
            int best = m + 1;
            for (int c : w) best = std::min(best, x.rank_of[c]);
            return best;
          };
          if (favorite(p) > num + 1 || favorite(q) > num + 1) return false;
          break;
        }
        case Notion::Kind::kUec: {
          int64_t up = 0, uq = 0;
          for (int c : w) {
            up += m - p.rank_of[c];
            uq += m - q.rank_of[c];
          }
          if (std::abs(up - uq) * den > num) return false;
          break;
        }
        case Notion::Kind::kWec: {
          auto mass = [&](const OraclePopulation& x) {
            int64_t s = 0;
            for (int c : w) {
              if (std::count(x.winning.begin(), x.winning.end(), c)) {
                s += m - x.rank_of[c];
              }
            }
            return s;
          };
          auto denom = [&](const OraclePopulation& x) {
            int64_t d = 0;
            for (int r = 1; r <= x.bound; ++r) d += m - r;
            return d;
          };
          const int64_t dp = denom(p), dq = denom(q);
          const int64_t diff = std::abs(mass(p) * dq - mass(q) * dp);
          if (diff * den > num * dp * dq) return false;
          break;
        }
      }
    }
  }
  return true;
}

std::optional<OracleCommittee> OracleDireArgmax(const Election& e,
                                                const ConstraintSet& cs,
                                                Rule rule, int k) {
  std::optional<OracleCommittee> best;
  for (const auto& w : AllSubsets(e.num_candidates(), k)) {
    if (!OracleIsDire(e, cs, w)) continue;
    const int64_t s = OracleScore(e, w, rule);
    if (!best || s > best->score) best = OracleCommittee{w, s};
  }
  return best;
}

std::optional<OracleCommittee> OracleEnvyfreeArgmax(
    const Election& e, const ConstraintSet& cs, Rule rule, int k,
    const Notion& notion, Scope scope) {
  std::optional<OracleCommittee> best;
  for (const auto& w : AllSubsets(e.num_candidates(), k)) {
    if (!OracleIsDire(e, cs, w)) continue;
    if (!OracleEnvyfree(e, cs, rule, w, notion, scope)) continue;
    const int64_t s = OracleScore(e, w, rule);
    if (!best || s > best->score) best = OracleCommittee{w, s};
  }
  return best;
}

SmallInstance RandomSmallInstance(std::mt19937_64& rng,
                                  const SmallInstanceShape& shape) {
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int k = uniform(1, shape.max_k);
  const int m = uniform(std::max(k, 2), shape.max_m);
  const int n = uniform(1, shape.max_n);
  std::vector<Ranking> rankings(n, Ranking(m));
  for (auto& r : rankings) {
    std::iota(r.begin(), r.end(), 0);
    std::shuffle(r.begin(), r.end(), rng);
  }
  auto partition = [&](int items) {
    const int q = uniform(1, std::min(3, items));
    std::vector<int> order(items);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Partition parts(q);
    for (int i = 0; i < items; ++i) {
      parts[i < q ? i : uniform(0, q - 1)].push_back(order[i]);
    }
    for (auto& part : parts) std::sort(part.begin(), part.end());
    return parts;
  };
  std::vector<Partition> cand, vote;
  const int mu = uniform(0, shape.max_attributes);
  const int pi = uniform(0, shape.max_attributes);
  for (int a = 0; a < mu; ++a) cand.push_back(partition(m));
  for (int a = 0; a < pi; ++a) vote.push_back(partition(n));
  Election e(m, rankings, cand, vote);
  ConstraintSet cs;
  for (int a = 0; a < mu; ++a)
    for (int g = 0; g < static_cast<int>(cand[a].size()); ++g) {
      const int size = static_cast<int>(cand[a][g].size());
      if (uniform(0, 9) < 6) cs.diversity[{a, g}] = uniform(1, std::min(k, size));
    }
  for (int a = 0; a < pi; ++a)
    for (int p = 0; p < static_cast<int>(vote[a].size()); ++p) {
      if (uniform(0, 9) < 6) cs.representation[{a, p}] = uniform(1, k);
    }
  cs = OracleWithCommittees(e, cs, shape.rule, k);
  return {std::move(e), std::move(cs), k};
}

}  // namespace fairdire::testing
