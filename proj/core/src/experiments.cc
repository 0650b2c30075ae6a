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

#include "fairdire/experiments.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <tuple>

#include "fairdire/errors.h"

namespace fairdire {
namespace {

int ParseIntValue(const std::string& text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw DomainError("sweep value '" + text + "' is not an integer");
  }
  return value;
}

double ParseRealValue(const std::string& text) {
  size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw DomainError("sweep value '" + text + "' is not a number");
  }
  return value;
}

GenConfig ApplySweep(const ExperimentConfig& cfg, const std::string& value) {
  GenConfig g = cfg.generator;
  switch (cfg.sweep) {
    case SweepVariable::kPi:
      g.pi = ParseIntValue(value);
      break;
    case SweepVariable::kPhi:
      g.phi = ParseRealValue(value);
      break;
    case SweepVariable::kBound:
      break;
  }
  return g;
}

Notion ApplyBound(const ExperimentConfig& cfg, const Notion& notion,
                  const std::string& value) {
  if (cfg.sweep != SweepVariable::kBound) return notion;
  return notion.WithBound(Rational::Parse(value));
}

}  // namespace

Rational UtilityRatio(const Election& e, const Committee& envyfree,
                      const Committee& dire_opt, Rule rule) {
  const int64_t top = CommitteeScore(e, dire_opt.members, rule);
  if (top == 0) {
    throw DomainError("utility ratio undefined: DiRe optimum scores 0");
  }
  return Rational(CommitteeScore(e, envyfree.members, rule), top);
}

Rational ProportionEnvious(const Election& e, const ConstraintSet& cs,
                           std::span<const CandidateId> w,
                           const Notion& notion, Scope scope, Rule rule) {
  return CheckEnvyfree(e, cs, w, notion, scope, rule).proportion_envious;
}

std::optional<Rational> MinProportionEnvious(const Election& e,
                                             const ConstraintSet& cs, Rule rule,
                                             int k, const Notion& notion,
                                             Scope scope) {
  EnvyEvaluator evaluator(e, cs, rule, k, scope);
  std::optional<Rational> best;
  ForEachDireCommittee(e, cs, k, [&](std::span<const CandidateId> w) {
    Rational p = evaluator.ProportionEnvious(w, notion);
    if (!best.has_value() || p < *best) best = p;
    return *best != Rational(0);
  });
  return best;
}

SimpsonsReport DetectSimpsons(const Election& e, const ConstraintSet& cs,
                              Rule rule, int k, const Notion& notion) {
  SimpsonsReport report;
  if (e.voter_attributes().size() < 2) return report;
  report.applicable = true;
  EnvyEvaluator global(e, cs, rule, k, Scope::kGlobal);
  EnvyEvaluator intersectional(e, cs, rule, k, Scope::kIntersectional);
  report.intersectional_best = SolveDrcwd(
      e, cs, rule, k, [&](std::span<const CandidateId> w) {
        return intersectional.Satisfied(w, notion);
      });
  if (report.intersectional_best.has_value()) {
    report.global_fails_intersectional_holds =
        !global.Satisfied(report.intersectional_best->members, notion);
  }
  report.global_best =
      SolveDrcwd(e, cs, rule, k, [&](std::span<const CandidateId> w) {
        return global.Satisfied(w, notion);
      });
  if (report.global_best.has_value()) {
    report.intersectional_fails_global_holds =
        !intersectional.Satisfied(report.global_best->members, notion);
  }
  return report;
}

std::string_view SweepName(SweepVariable sweep) {
  switch (sweep) {
    case SweepVariable::kPi:
      return "pi";
    case SweepVariable::kPhi:
      return "phi";
    case SweepVariable::kBound:
      return "bound";
  }
  return "?";
}

std::optional<SweepVariable> ParseSweep(std::string_view name) {
  if (name == "pi") return SweepVariable::kPi;
  if (name == "phi") return SweepVariable::kPhi;
  if (name == "bound") return SweepVariable::kBound;
  return std::nullopt;
}

void ExperimentConfig::Validate() const {
  if (values.empty()) throw DomainError("experiment needs at least one value");
  if (instances < 1) throw DomainError("instances must be >= 1");
  if (notions.empty()) throw DomainError("experiment needs a notion");
  if (scopes.empty()) throw DomainError("experiment needs a scope");
  for (const std::string& value : values) {
    GenConfig g = ApplySweep(*this, value);
    g.Validate();
    for (const Notion& notion : notions) {
      ApplyBound(*this, notion, value).Validate(g.m, g.k);
    }
  }
}

uint64_t InstanceSeed(uint64_t seed, int instance) {
  return SplitMix64(seed ^ SplitMix64(static_cast<uint64_t>(instance) + 1));
}

ExperimentResult RunExperiment(const ExperimentConfig& cfg) {
  cfg.Validate();
  ExperimentResult result;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const std::string& value : cfg.values) {
    const GenConfig base = ApplySweep(cfg, value);
    // Per (notion, scope) aggregation for this value.
    std::vector<PointSummary> points;
    std::vector<std::pair<double, int>> ratio_sum, prop_sum;
    for (const Notion& notion : cfg.notions) {
      for (Scope scope : cfg.scopes) {
        PointSummary p;
        p.value = value;
        p.notion = ApplyBound(cfg, notion, value);
        p.scope = scope;
        points.push_back(p);
        ratio_sum.emplace_back(0.0, 0);
        prop_sum.emplace_back(0.0, 0);
      }
    }
    for (int i = 0; i < cfg.instances; ++i) {
      GenConfig g = base;
      g.seed = InstanceSeed(cfg.seed, i);
      const Election e = GenerateElection(g);
      DefaultConstraintOptions opts = cfg.constraints;
      opts.rule = cfg.rule;
      const ConstraintSet cs = DefaultConstraints(e, g.k, opts);
      const std::optional<Committee> dire = SolveDrcwd(e, cs, cfg.rule, g.k);
      const bool multi = e.voter_attributes().size() >= 2;
      for (size_t ni = 0; ni < cfg.notions.size(); ++ni) {
        const Notion notion = ApplyBound(cfg, cfg.notions[ni], value);
        std::optional<bool> simpsons;
        if (multi && dire.has_value()) {
          simpsons = DetectSimpsons(e, cs, cfg.rule, g.k, notion).paradox();
        } else if (multi) {
          simpsons = false;
        }
        for (size_t si = 0; si < cfg.scopes.size(); ++si) {
          const Scope scope = cfg.scopes[si];
          if (scope == Scope::kIntersectional && !multi) continue;
          ExperimentRow row;
          row.value = value;
          row.instance = i;
          row.notion = notion;
          row.scope = scope;
          row.simpsons = simpsons;
          row.feasible = dire.has_value();
          PointSummary& point = points[ni * cfg.scopes.size() + si];
          ++point.instances;
          if (row.simpsons.value_or(false)) ++point.simpsons;
          if (!row.feasible) {
            ++point.infeasible;
            result.rows.push_back(std::move(row));
            continue;
          }
          row.score_dire = dire->score;
          std::optional<Committee> ef =
              FindEnvyfreeDire(e, cs, cfg.rule, g.k, notion, scope);
          row.ef_exists = ef.has_value();
          if (ef.has_value()) {
            row.score_ef = ef->score;
            if (dire->score != 0) {
              row.ratio = UtilityRatio(e, *ef, *dire, cfg.rule);
              auto& [sum, count] = ratio_sum[ni * cfg.scopes.size() + si];
              sum += row.ratio->ToDouble();
              ++count;
            }
          } else {
            ++point.no_envyfree;
          }
          row.prop_envious =
              MinProportionEnvious(e, cs, cfg.rule, g.k, notion, scope);
          if (row.prop_envious.has_value()) {
            auto& [sum, count] = prop_sum[ni * cfg.scopes.size() + si];
            sum += row.prop_envious->ToDouble();
            ++count;
          }
          result.rows.push_back(std::move(row));
        }
      }
    }
    for (size_t j = 0; j < points.size(); ++j) {
      points[j].mean_utility_ratio =
          ratio_sum[j].second ? ratio_sum[j].first / ratio_sum[j].second : nan;
      points[j].mean_prop_envious =
          prop_sum[j].second ? prop_sum[j].first / prop_sum[j].second : nan;
      if (points[j].instances > 0) result.points.push_back(points[j]);
    }
  }
  return result;
}

}  // namespace fairdire
