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

#include "cli.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fairdire/dire_solver.h"
#include "fairdire/election_file.h"
#include "fairdire/envyfree.h"
#include "fairdire/errors.h"
#include "fairdire/experiments.h"
#include "fairdire/manipulation.h"
#include "fairdire/results_io.h"
#include "fairdire/rules.h"
#include "fairdire/synthgen.h"
#include "json.hpp"

namespace fairdire::cli {
namespace {

using nlohmann::ordered_json;

// Raised for conditions that map to kExitNotFound.
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string rule = "kborda";
  int k = 0;
  std::string format = "text";
  std::string out;
  std::string notion;
  std::string bound = "0";
  std::string scope = "global";
  uint64_t seed = 1;
  std::string committee;
  std::string population;
  bool any = false;
  std::string config;
  std::string summary;
  bool literal_min = false;
  GenConfig gen;
};

struct Loaded {
  ElectionDocument doc;
  Rule rule;
  int k;
  ConstraintSet cs;
};

Rule ToRule(const std::string& name) {
  auto rule = ParseRule(name);
  if (!rule) throw DomainError("unknown rule '" + name + "'");
  return *rule;
}

Scope ToScope(const std::string& name) {
  auto scope = ParseScope(name);
  if (!scope) throw DomainError("unknown scope '" + name + "'");
  return *scope;
}

Loaded Load(const Options& o) {
  Loaded l{ReadElectionFile(o.file), ToRule(o.rule), 0, {}};
  l.k = o.k > 0 ? o.k : l.doc.k;
  if (l.k > l.doc.election.num_candidates()) {
    throw DomainError("k = " + std::to_string(l.k) + " exceeds m = " +
                      std::to_string(l.doc.election.num_candidates()));
  }
  ConstraintSet cs = l.doc.constraints.value_or(ConstraintSet{});
  auto problems = cs.Validate(l.doc.election, l.k, false);
  if (!problems.empty()) throw ValidationError(problems);
  l.cs = WithPopulationCommittees(l.doc.election, cs, l.rule, l.k);
  problems = l.cs.Validate(l.doc.election, l.k);
  if (!problems.empty()) throw ValidationError(problems);
  return l;
}

Notion ToNotion(const Options& o, const Loaded& l) {
  Notion notion = Notion::Parse(o.notion, o.bound);
  notion.Validate(l.doc.election.num_candidates(), l.k);
  return notion;
}

ordered_json CommitteeJson(std::span<const CandidateId> members,
                           const ElectionNames& names) {
  ordered_json arr = ordered_json::array();
  for (CandidateId c : members) arr.push_back(names.candidates.at(c));
  return arr;
}

std::string Members(std::span<const CandidateId> members,
                    const ElectionNames& names) {
  std::string s;
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) s += ";";
    s += names.candidates.at(members[i]);
  }
  return s;
}

void EmitCommittee(const Options& o, const Loaded& l, const Committee& w,
                   std::string_view label, std::ostream& out) {
  const ElectionNames& names = l.doc.names;
  if (o.format == "json") {
    ordered_json j;
    j["result"] = label;
    j["rule"] = RuleName(l.rule);
    j["k"] = l.k;
    j["committee"] = CommitteeJson(w.members, names);
    j["score"] = w.score;
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "result,rule,k,committee,score\n"
        << label << ',' << RuleName(l.rule) << ',' << l.k << ','
        << Members(w.members, names) << ',' << w.score << '\n';
  } else {
    out << FormatCommittee(w.members, names) << " score " << w.score << '\n';
  }
}

std::string Rat(const Rational& r) {
  return r.ToString() + " (" + r.ToDecimalString(6) + ")";
}

int RunSolve(const Options& o, std::ostream& out) {
  const Loaded l = Load(o);
  auto w = SolveDrcwd(l.doc.election, l.cs, l.rule, l.k);
  if (!w) throw NotFound("no DiRe committee exists");
  EmitCommittee(o, l, *w, "dire", out);
  return kExitOk;
}

int RunFair(const Options& o, std::ostream& out) {
  const Loaded l = Load(o);
  const Notion notion = ToNotion(o, l);
  auto w = FindEnvyfreeDire(l.doc.election, l.cs, l.rule, l.k, notion,
                            ToScope(o.scope));
  if (!w) throw NotFound("no committee satisfies " + notion.ToString());
  EmitCommittee(o, l, *w, notion.ToString(), out);
  return kExitOk;
}

int RunCheck(const Options& o, std::ostream& out) {
  const Loaded l = Load(o);
  const Election& e = l.doc.election;
  const ElectionNames& names = l.doc.names;
  const std::vector<CandidateId> w = ParseCommittee(o.committee, names);
  if (static_cast<int>(w.size()) != l.k) {
    throw DomainError("committee has " + std::to_string(w.size()) +
                      " members, expected k = " + std::to_string(l.k));
  }
  const DireCheck dire = IsDire(e, w, l.cs);
  const int64_t score = CommitteeScore(e, w, l.rule);
  std::optional<EnvyReport> report;
  std::optional<Notion> notion;
  const Scope scope = ToScope(o.scope);
  if (!o.notion.empty()) {
    notion = ToNotion(o, l);
    EnvyEvaluator evaluator(e, l.cs, l.rule, l.k, scope);
    report = evaluator.Check(w, *notion);
  }
  auto violation_text = [&](const ConstraintViolation& v) {
    const bool voter = v.kind == ConstraintViolation::Kind::kRepresentation;
    return std::string(voter ? "representation " : "diversity ") +
           FormatAttributeIndex(v.id, voter, names) + " has " +
           std::to_string(v.actual) + " < " + std::to_string(v.required);
  };
  if (o.format == "json") {
    ordered_json j;
    j["committee"] = CommitteeJson(w, names);
    j["score"] = score;
    j["dire"] = dire.ok;
    j["violations"] = ordered_json::array();
    for (const auto& v : dire.violations) {
      j["violations"].push_back(violation_text(v));
    }
    if (report) {
      ordered_json env;
      env["notion"] = notion->ToString();
      env["scope"] = ScopeName(scope);
      env["envyfree"] = report->overall;
      env["proportion_envious"] = report->proportion_envious.ToString();
      env["pairs"] = ordered_json::array();
      for (const EnvyPair& p : report->pairs) {
        ordered_json pj;
        pj["first"] = FormatPopulation(report->populations[p.first], names);
        pj["second"] = FormatPopulation(report->populations[p.second], names);
        pj["measure"] = p.measure.ToString();
        pj["satisfied"] = p.satisfied;
        env["pairs"].push_back(pj);
      }
      j["envy"] = env;
    }
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "committee,score,dire,notion,scope,envyfree,prop_envious_num,"
           "prop_envious_den\n"
        << Members(w, names) << ',' << score << ',' << (dire.ok ? 1 : 0);
    if (report) {
      out << ',' << notion->ToString() << ',' << ScopeName(scope) << ','
          << (report->overall ? 1 : 0) << ','
          << report->proportion_envious.num() << ','
          << report->proportion_envious.den() << '\n';
    } else {
      out << ",,,,,\n";
    }
  } else {
    out << "committee " << FormatCommittee(w, names) << " score " << score
        << " (" << RuleName(l.rule) << ")\n";
    out << "dire: " << (dire.ok ? "yes" : "no") << '\n';
    for (const auto& v : dire.violations) {
      out << "  " << violation_text(v) << '\n';
    }
    if (report) {
      out << notion->ToString() << ' ' << ScopeName(scope) << ": "
          << (report->overall ? "envy-free" : "not envy-free") << '\n';
      for (const EnvyPair& p : report->pairs) {
        out << "  " << FormatPopulation(report->populations[p.first], names)
            << " vs " << FormatPopulation(report->populations[p.second], names)
            << ": measure " << p.measure.ToString()
            << (p.satisfied ? " ok" : " envious") << '\n';
      }
      out << "proportion envious: " << Rat(report->proportion_envious) << '\n';
    }
  }
  const bool pass = dire.ok && (!report || report->overall);
  return pass ? kExitOk : kExitNotFound;
}

PopulationId ResolvePopulation(const std::string& text,
                               const ElectionNames& names) {
  for (size_t a = 0; a < names.voter_attributes.size(); ++a) {
    for (size_t p = 0; p < names.population_labels[a].size(); ++p) {
      if (names.voter_attributes[a] + "=" + names.population_labels[a][p] ==
          text) {
        return {static_cast<int>(a), static_cast<int>(p)};
      }
    }
  }
  throw LookupError("unknown population '" + text + "'");
}

int RunManipulate(const Options& o, std::ostream& out) {
  const Loaded l = Load(o);
  const ElectionNames& names = l.doc.names;
  ManipulatorChoice who = ManipulatorChoice::Largest();
  if (o.any) who = ManipulatorChoice::Any();
  if (!o.population.empty()) {
    who = ManipulatorChoice::Specific(ResolvePopulation(o.population, names));
  }
  ConstraintSet bounds = l.cs;
  bounds.population_committees.clear();
  const ManipulationOutcome result =
      ManipulateDrcwd(l.doc.election, bounds, l.rule, l.k, who);
  if (!result.found) throw NotFound("no manipulation found");
  const std::string manipulator =
      FormatAttributeIndex(result.manipulator, true, names);
  const std::string a = names.candidates[result.swap.first];
  const std::string b = names.candidates[result.swap.second];
  auto winner = [&](const ElectionOutcome& oc) {
    return oc.winner ? FormatCommittee(oc.winner->members, names) +
                           " score " + std::to_string(oc.winner->score)
                     : std::string("none");
  };
  std::vector<std::string> harmed;
  for (const Harm& h : result.harmed) {
    switch (h.kind) {
      case Harm::Kind::kRepresentation:
        harmed.push_back("representation " +
                         FormatAttributeIndex(h.id, true, names) + " " +
                         std::to_string(h.after) + " < " +
                         std::to_string(h.before));
        break;
      case Harm::Kind::kDiversity:
        harmed.push_back("diversity " +
                         FormatAttributeIndex(h.id, false, names) + " " +
                         std::to_string(h.after) + " < " +
                         std::to_string(h.before));
        break;
      case Harm::Kind::kUtility:
        harmed.push_back("utility " + FormatAttributeIndex(h.id, true, names) +
                         " " + std::to_string(h.before) + " -> " +
                         std::to_string(h.after));
        break;
      case Harm::Kind::kNoCommittee:
        harmed.push_back("no DiRe committee left");
        break;
    }
  }
  if (o.format == "json") {
    ordered_json j;
    j["manipulator"] = manipulator;
    j["swap"] = {a, b};
    j["original"] = winner(result.original);
    j["manipulated"] = winner(result.manipulated);
    j["harmed"] = harmed;
    out << j.dump(2) << '\n';
  } else {
    out << "manipulator " << manipulator << " swaps " << a << "," << b << '\n';
    out << "original winner " << winner(result.original) << '\n';
    out << "manipulated winner " << winner(result.manipulated) << '\n';
    for (const std::string& h : harmed) out << "harmed " << h << '\n';
  }
  if (!o.out.empty()) {
    ElectionDocument doc = l.doc;
    doc.election = *result.manipulated_election;
    WriteElectionFile(o.out, doc);
  }
  return kExitOk;
}

int RunGenerate(const Options& o, std::ostream& out) {
  GenConfig cfg = o.gen;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw std::runtime_error("cannot open '" + o.config + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    cfg = ParseGenConfig(buffer.str());
  } else {
    cfg.seed = o.seed;
  }
  const Election e = GenerateElection(cfg);
  DefaultConstraintOptions opts;
  opts.rule = ToRule(o.rule);
  opts.literal_min = o.literal_min;
  ElectionDocument doc{e, DefaultNames(e), cfg.k,
                       DefaultConstraints(e, cfg.k, opts)};
  if (o.out.empty()) {
    out << SerializeElection(doc);
  } else {
    WriteElectionFile(o.out, doc);
  }
  return kExitOk;
}

int RunExperimentCommand(const Options& o, std::ostream& out) {
  std::ifstream in(o.config);
  if (!in) throw std::runtime_error("cannot open '" + o.config + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const ExperimentConfig cfg = ParseExperimentConfig(buffer.str());
  const ExperimentResult result = RunExperiment(cfg);
  if (o.out.empty()) {
    WriteExperimentCsv(result, out);
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + o.out + "'");
    WriteExperimentCsv(result, file);
  }
  if (!o.summary.empty()) {
    std::ofstream file(o.summary, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + o.summary + "'");
    WriteExperimentSummaryCsv(result, file);
  }
  return kExitOk;
}

int RunSimpsons(const Options& o, std::ostream& out) {
  const Loaded l = Load(o);
  const Notion notion = ToNotion(o, l);
  const SimpsonsReport r =
      DetectSimpsons(l.doc.election, l.cs, l.rule, l.k, notion);
  if (!r.applicable) {
    throw NotFound("Simpson's check needs at least two voter attributes");
  }
  auto show = [&](const std::optional<Committee>& w) {
    return w ? FormatCommittee(w->members, l.doc.names) : std::string("none");
  };
  if (o.format == "json") {
    ordered_json j;
    j["notion"] = notion.ToString();
    j["intersectional_best"] = show(r.intersectional_best);
    j["global_fails_intersectional_holds"] =
        r.global_fails_intersectional_holds;
    j["global_best"] = show(r.global_best);
    j["intersectional_fails_global_holds"] =
        r.intersectional_fails_global_holds;
    j["paradox"] = r.paradox();
    out << j.dump(2) << '\n';
  } else {
    out << notion.ToString() << '\n'
        << "intersectional best " << show(r.intersectional_best)
        << (r.global_fails_intersectional_holds ? " (fails globally)" : "")
        << '\n'
        << "global best " << show(r.global_best)
        << (r.intersectional_fails_global_holds ? " (fails intersectionally)"
                                                 : "")
        << '\n'
        << "paradox: " << (r.paradox() ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Diverse and representative committee selection with "
               "envy-freeness checks",
               "fairdire"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> kRules = {"kborda", "betacc"};
  const std::vector<std::string> kNotions = {"fec", "uec", "wec"};
  const std::vector<std::string> kScopes = {"global", "localized",
                                            "intersectional"};
  const std::vector<std::string> kFormats = {"text", "json", "csv"};

  auto common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) {
      sub->add_option("file", o.file, "Election file")->required();
    }
    sub->add_option("--rule", o.rule, "Committee scoring rule")
        ->check(CLI::IsMember(kRules));
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember(kFormats));
    sub->add_option("--out", o.out, "Output path");
  };
  auto election_flags = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Committee size (default: from file)")
        ->check(CLI::PositiveNumber);
  };
  auto envy_flags = [&](CLI::App* sub, bool notion_required) {
    auto* opt = sub->add_option("--notion", o.notion, "Envy-freeness notion")
                    ->check(CLI::IsMember(kNotions));
    if (notion_required) opt->required();
    sub->add_option("--bound", o.bound, "Bound: integer or p/q");
    sub->add_option("--scope", o.scope, "Population scope")
        ->check(CLI::IsMember(kScopes));
  };

  auto* solve = app.add_subcommand("solve", "Best DiRe committee");
  common(solve, true);
  election_flags(solve);

  auto* check = app.add_subcommand("check", "Check a committee");
  common(check, true);
  election_flags(check);
  envy_flags(check, false);
  check->add_option("--committee", o.committee, "e.g. c1,c3,c6,c8")
      ->required();

  auto* fair = app.add_subcommand("fair", "Best envy-free DiRe committee");
  common(fair, true);
  election_flags(fair);
  envy_flags(fair, true);

  auto* manipulate =
      app.add_subcommand("manipulate", "Search for a manipulating swap");
  common(manipulate, true);
  election_flags(manipulate);
  manipulate->add_option("--population", o.population,
                         "Manipulator as attribute=label");
  manipulate->add_flag("--any", o.any, "Try every population");

  auto* generate = app.add_subcommand("generate", "Synthetic election");
  common(generate, false);
  generate->add_option("--m", o.gen.m, "Candidates");
  generate->add_option("--n", o.gen.n, "Voters");
  generate->add_option("--k", o.gen.k, "Committee size");
  generate->add_option("--mu", o.gen.mu, "Candidate attributes");
  generate->add_option("--pi", o.gen.pi, "Voter attributes");
  generate->add_option("--phi", o.gen.phi, "Mallows dispersion");
  generate->add_option("--seed", o.seed, "Random seed");
  generate->add_option("--config", o.config, "Generator JSON");
  generate->add_flag("--literal-min", o.literal_min,
                     "Use min(1, k|P|/n) representation bounds");

  auto* experiment = app.add_subcommand("experiment", "Run a sweep");
  experiment->add_option("--config", o.config, "Experiment JSON")->required();
  experiment->add_option("--out", o.out, "CSV output path");
  experiment->add_option("--summary", o.summary, "Per-point summary CSV");

  auto* simpsons = app.add_subcommand("simpsons", "Scope reversal check");
  common(simpsons, true);
  election_flags(simpsons);
  envy_flags(simpsons, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return RunSolve(o, out);
    if (*check) return RunCheck(o, out);
    if (*fair) return RunFair(o, out);
    if (*manipulate) return RunManipulate(o, out);
    if (*generate) return RunGenerate(o, out);
    if (*experiment) return RunExperimentCommand(o, out);
    if (*simpsons) return RunSimpsons(o, out);
  } catch (const NotFound& e) {
    err << e.what() << '\n';
    return kExitNotFound;
  } catch (const ParseError& e) {
    err << o.file << ":" << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fairdire::cli
