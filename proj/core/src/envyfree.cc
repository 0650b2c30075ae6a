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

#include "fairdire/envyfree.h"

#include <algorithm>
#include <string>

#include "fairdire/errors.h"

namespace fairdire {
namespace {

int CountIn(std::span<const CandidateId> set, const std::vector<char>& in) {
  int n = 0;
  for (CandidateId c : set) n += in[c];
  return n;
}

}  // namespace

Notion Notion::Fec(int64_t x) { return Notion(Kind::kFec, Rational(x)); }
Notion Notion::Uec(int64_t eta) { return Notion(Kind::kUec, Rational(eta)); }
Notion Notion::Wec(Rational zeta) { return Notion(Kind::kWec, zeta); }

Notion Notion::Parse(std::string_view kind, std::string_view bound) {
  Rational value = Rational::Parse(bound);
  if (kind == "wec") return Wec(value);
  if (kind != "fec" && kind != "uec") {
    throw DomainError("unknown notion '" + std::string(kind) +
                      "' (expected fec, uec or wec)");
  }
  if (value.den() != 1) {
    throw DomainError(std::string(kind) + " bound must be an integer, got " +
                      value.ToString());
  }
  return kind == "fec" ? Fec(value.num()) : Uec(value.num());
}

Notion Notion::WithBound(const Rational& bound) const {
  if (kind_ != Kind::kWec && bound.den() != 1) {
    throw DomainError(std::string(KindName()) +
                      " bound must be an integer, got " + bound.ToString());
  }
  return Notion(kind_, bound);
}

std::string_view Notion::KindName() const {
  switch (kind_) {
    case Kind::kFec:
      return "fec";
    case Kind::kUec:
      return "uec";
    case Kind::kWec:
      return "wec";
  }
  return "?";
}

std::string Notion::ToString() const {
  std::string name(KindName());
  std::transform(name.begin(), name.end(), name.begin(), ::toupper);
  return name + "(" + bound_.ToString() + ")";
}

void Notion::Validate(int num_candidates, int k) const {
  const int64_t m = num_candidates;
  switch (kind_) {
    case Kind::kFec:
      if (bound_ < Rational(0) || bound_ > Rational(k - 1)) {
        throw DomainError("FEC bound x must lie in [0, " +
                          std::to_string(k - 1) + "]");
      }
      break;
    case Kind::kUec:
      if (bound_ < Rational(0) || bound_ > Rational(m * (m - 1) / 2)) {
        throw DomainError("UEC bound eta must lie in [0, " +
                          std::to_string(m * (m - 1) / 2) + "]");
      }
      break;
    case Kind::kWec:
      if (bound_ < Rational(0) || bound_ > Rational(1)) {
        throw DomainError("WEC bound zeta must lie in [0, 1]");
      }
      break;
  }
}

std::string_view ScopeName(Scope scope) {
  switch (scope) {
    case Scope::kGlobal:
      return "global";
    case Scope::kLocalized:
      return "localized";
    case Scope::kIntersectional:
      return "intersectional";
  }
  return "?";
}

std::optional<Scope> ParseScope(std::string_view name) {
  if (name == "global") return Scope::kGlobal;
  if (name == "localized" || name == "local") return Scope::kLocalized;
  if (name == "intersectional") return Scope::kIntersectional;
  return std::nullopt;
}

std::string ScopedPopulation::ToString() const {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += "&";
    out += fairdire::ToString(parts[i]);
  }
  return out;
}

std::vector<ScopedPopulation> ScopePopulations(const Election& e,
                                               Scope scope) {
  std::vector<ScopedPopulation> out;
  if (scope != Scope::kIntersectional) {
    for (PopulationId pid : e.AllPopulations()) {
      std::vector<VoterId> voters = e.population(pid);
      std::sort(voters.begin(), voters.end());
      out.push_back({{pid}, std::move(voters)});
    }
    return out;
  }
  const auto& attributes = e.voter_attributes();
  if (attributes.size() < 2) {
    throw DomainError("intersectional scope needs at least two voter "
                      "attributes, election has " +
                      std::to_string(attributes.size()));
  }
  for (int a = 0; a < static_cast<int>(attributes.size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(attributes.size()); ++b) {
      for (int i = 0; i < static_cast<int>(attributes[a].size()); ++i) {
        std::vector<VoterId> left = attributes[a][i];
        std::sort(left.begin(), left.end());
        for (int j = 0; j < static_cast<int>(attributes[b].size()); ++j) {
          std::vector<VoterId> right = attributes[b][j];
          std::sort(right.begin(), right.end());
          std::vector<VoterId> both;
          std::set_intersection(left.begin(), left.end(), right.begin(),
                                right.end(), std::back_inserter(both));
          if (both.empty()) continue;
          out.push_back({{{a, i}, {b, j}}, std::move(both)});
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<int, int>> PairSet(
    std::span<const ScopedPopulation> populations, Scope scope) {
  std::vector<std::pair<int, int>> pairs;
  const int n = static_cast<int>(populations.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (scope == Scope::kLocalized &&
          (populations[i].parts.size() != 1 ||
           populations[j].parts.size() != 1 ||
           populations[i].parts[0].attribute !=
               populations[j].parts[0].attribute)) {
        continue;
      }
      pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

int64_t PopulationUtility(const PopulationProfile& p,
                          std::span<const CandidateId> w) {
  int64_t total = 0;
  for (CandidateId c : w) total += p.Score(c);
  return total;
}

Rational WeightedUtility(const PopulationProfile& p, int representation_bound,
                         std::span<const CandidateId> w) {
  const int64_t m = p.num_candidates();
  const int64_t l = representation_bound;
  if (l < 1 || l > m) {
    throw DomainError("representation bound " + std::to_string(l) +
                      " outside [1, m] for weighted utility");
  }
  const int64_t denominator = l * m - l * (l + 1) / 2;
  if (denominator <= 0) {
    throw DomainError("weighted utility undefined: zero maximum mass");
  }
  int64_t numerator = 0;
  for (CandidateId c : w) {
    if (p.InWinningCommittee(c)) numerator += p.Score(c);
  }
  return Rational(numerator, denominator);
}

int FavoriteRank(const PopulationProfile& p, std::span<const CandidateId> w) {
  if (w.empty()) throw DomainError("favorite rank of an empty committee");
  int best = p.num_candidates() + 1;
  for (CandidateId c : w) best = std::min(best, p.rank_of[c]);
  return best;
}

EnvyEvaluator::EnvyEvaluator(const Election& e, const ConstraintSet& cs,
                             Rule rule, int k, Scope scope,
                             const SearchLimits& limits)
    : num_candidates_(e.num_candidates()),
      k_(k),
      scope_(scope),
      populations_(ScopePopulations(e, scope)) {
  for (const ScopedPopulation& sp : populations_) {
    const std::vector<CandidateId>* override = nullptr;
    int bound = 1;
    if (sp.parts.size() == 1) {
      auto it = cs.population_committees.find(sp.parts[0]);
      if (it != cs.population_committees.end()) override = &it->second;
      auto lt = cs.representation.find(sp.parts[0]);
      if (lt != cs.representation.end()) bound = lt->second;
    }
    profiles_.push_back(MakeProfile(e, sp.voters, rule, k, override, limits));
    bounds_.push_back(bound);
  }
  pairs_ = PairSet(populations_, scope);
}

void EnvyEvaluator::Measure(std::span<const CandidateId> w,
                            const Notion& notion,
                            std::vector<EnvyPair>* pairs) const {
  const int n = static_cast<int>(profiles_.size());
  std::vector<Rational> value(n);
  for (int i = 0; i < n; ++i) {
    switch (notion.kind()) {
      case Notion::Kind::kFec: {
        const int64_t overshoot =
            FavoriteRank(profiles_[i], w) - (notion.int_bound() + 1);
        value[i] = Rational(std::max<int64_t>(overshoot, 0));
        break;
      }
      case Notion::Kind::kUec:
        value[i] = Rational(PopulationUtility(profiles_[i], w));
        break;
      case Notion::Kind::kWec:
        value[i] = WeightedUtility(profiles_[i], bounds_[i], w);
        break;
    }
  }
  pairs->clear();
  for (const auto& [a, b] : pairs_) {
    EnvyPair pair{a, b, {}, true};
    if (notion.kind() == Notion::Kind::kFec) {
      pair.measure = std::max(value[a], value[b]);
      pair.satisfied = pair.measure == Rational(0);
    } else {
      pair.measure = (value[a] - value[b]).Abs();
      pair.satisfied = pair.measure <= notion.bound();
    }
    pairs->push_back(pair);
  }
}

EnvyReport EnvyEvaluator::Check(std::span<const CandidateId> w,
                                const Notion& notion) const {
  EnvyReport report;
  report.populations = populations_;
  Measure(w, notion, &report.pairs);
  const int n = static_cast<int>(populations_.size());
  report.envious.assign(n, false);
  for (const EnvyPair& pair : report.pairs) {
    if (pair.satisfied) continue;
    report.overall = false;
    if (notion.kind() == Notion::Kind::kFec) {
      // Only the side that misses its top-(x+1) is envious.
      for (int side : {pair.first, pair.second}) {
        if (FavoriteRank(profiles_[side], w) > notion.int_bound() + 1) {
          report.envious[side] = true;
        }
      }
    } else {
      report.envious[pair.first] = true;
      report.envious[pair.second] = true;
    }
  }
  const int envious = static_cast<int>(
      std::count(report.envious.begin(), report.envious.end(), true));
  report.proportion_envious = n == 0 ? Rational(0) : Rational(envious, n);
  return report;
}

bool EnvyEvaluator::Satisfied(std::span<const CandidateId> w,
                              const Notion& notion) const {
  std::vector<EnvyPair> pairs;
  Measure(w, notion, &pairs);
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const EnvyPair& p) { return p.satisfied; });
}

Rational EnvyEvaluator::ProportionEnvious(std::span<const CandidateId> w,
                                          const Notion& notion) const {
  return Check(w, notion).proportion_envious;
}

EnvyReport CheckEnvyfree(const Election& e, const ConstraintSet& cs,
                         std::span<const CandidateId> w, const Notion& notion,
                         Scope scope, Rule rule) {
  EnvyEvaluator evaluator(e, cs, rule, static_cast<int>(w.size()), scope);
  return evaluator.Check(w, notion);
}

bool FecPolyCheck(const Election& e, const ConstraintSet& cs,
                  std::span<const CandidateId> w, int x) {
  const int k = static_cast<int>(w.size());
  const int m = e.num_candidates();
  if (x != 0 && x != k - 1 && x != k - 2) {
    throw UnsupportedError("polynomial FEC check covers x in {0, k-2, k-1}; "
                           "use FindEnvyfreeDire for x = " +
                           std::to_string(x));
  }
  std::vector<char> in_w(m, 0);
  for (CandidateId c : w) in_w[c] = 1;

  struct Population {
    PopulationId id;
    std::vector<int> rank_of;
    const std::vector<CandidateId>* winning;
  };
  std::vector<Population> populations;
  for (PopulationId pid : e.AllPopulations()) {
    auto it = cs.population_committees.find(pid);
    if (it == cs.population_committees.end() || it->second.empty()) {
      throw DomainError("FEC check needs W_P for population " + ToString(pid));
    }
    Ranking aggregate = AggregateRanking(e, e.population(pid));
    std::vector<int> rank_of(m);
    for (int i = 0; i < m; ++i) rank_of[aggregate[i]] = i + 1;
    populations.push_back({pid, std::move(rank_of), &it->second});
  }

  // True when `set` (as membership flags) meets every bound in cs.
  auto meets_bounds = [&](const std::vector<char>& set) {
    for (const auto& [gid, lower] : cs.diversity) {
      if (CountIn(e.group(gid), set) < lower) return false;
    }
    for (const auto& [pid, lower] : cs.representation) {
      if (CountIn(cs.population_committees.at(pid), set) < lower) return false;
    }
    return true;
  };

  if (x == 0) {
    std::vector<char> favorites(m, 0);
    for (const Population& p : populations) {
      CandidateId best = p.winning->front();
      for (CandidateId c : *p.winning) {
        if (p.rank_of[c] < p.rank_of[best]) best = c;
      }
      favorites[best] = 1;
    }
    const int size =
        static_cast<int>(std::count(favorites.begin(), favorites.end(), 1));
    if (size > k) return false;
    bool subset = true;
    for (CandidateId c = 0; c < m; ++c) {
      if (favorites[c] && !in_w[c]) subset = false;
    }
    if (subset && size > 0) return true;
    return meets_bounds(favorites);
  }
  if (x == k - 1) return true;

  // x == k - 2
  for (const Population& p : populations) {
    CandidateId worst = p.winning->front();
    for (CandidateId c : *p.winning) {
      if (p.rank_of[c] > p.rank_of[worst]) worst = c;
    }
    std::vector<char> rest = in_w;
    rest[worst] = 0;
    if (!meets_bounds(rest)) return false;
  }
  return true;
}

std::optional<Committee> FindEnvyfreeDire(const Election& e,
                                          const ConstraintSet& cs, Rule rule,
                                          int k, const Notion& notion,
                                          Scope scope,
                                          const SearchLimits& limits) {
  EnvyEvaluator evaluator(e, cs, rule, k, scope, limits);
  return SolveDrcwd(
      e, cs, rule, k,
      [&](std::span<const CandidateId> w) {
        return evaluator.Satisfied(w, notion);
      },
      limits);
}

}  // namespace fairdire
