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

#include "fairdire/results_io.h"

#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "json.hpp"

#include "fairdire/errors.h"

namespace fairdire {
namespace {

using nlohmann::json;

std::string FormatMean(double value) {
  if (std::isnan(value)) return "";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

json ParseObject(std::string_view text, std::string_view what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw DomainError(std::string(what) + " must be a JSON object");
  }
  return doc;
}

void RejectUnknown(const json& doc, const std::set<std::string>& allowed,
                   std::string_view what) {
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) {
      throw DomainError("unknown " + std::string(what) + " key '" + key + "'");
    }
  }
}

template <typename T>
T Get(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw DomainError("key '" + std::string(key) + "' has the wrong type");
  }
}

// Numbers keep their JSON spelling; strings are taken verbatim.
std::string ScalarText(const json& value, const char* key) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number()) return value.dump();
  throw DomainError("key '" + std::string(key) +
                    "' must hold numbers or strings");
}

GenConfig GenConfigFromJson(const json& doc) {
  RejectUnknown(doc,
                {"m", "n", "k", "mu", "pi", "phi", "seed", "sigma",
                 "group_count_min", "group_count_max"},
                "generator");
  GenConfig cfg;
  if (doc.contains("m")) cfg.m = Get<int>(doc, "m");
  if (doc.contains("n")) cfg.n = Get<int>(doc, "n");
  if (doc.contains("k")) cfg.k = Get<int>(doc, "k");
  if (doc.contains("mu")) cfg.mu = Get<int>(doc, "mu");
  if (doc.contains("pi")) cfg.pi = Get<int>(doc, "pi");
  if (doc.contains("phi")) cfg.phi = Get<double>(doc, "phi");
  if (doc.contains("seed")) cfg.seed = Get<uint64_t>(doc, "seed");
  if (doc.contains("sigma")) cfg.sigma = Get<std::vector<int>>(doc, "sigma");
  if (doc.contains("group_count_min")) {
    cfg.group_count_min = Get<int>(doc, "group_count_min");
  }
  if (doc.contains("group_count_max")) {
    cfg.group_count_max = Get<int>(doc, "group_count_max");
  }
  cfg.Validate();
  return cfg;
}

}  // namespace

void WriteExperimentCsv(const ExperimentResult& result, std::ostream& out) {
  out << kExperimentCsvHeader << '\n';
  for (const ExperimentRow& row : result.rows) {
    out << row.value << ',' << row.instance << ',' << (row.feasible ? 1 : 0)
        << ',' << (row.ef_exists ? 1 : 0) << ',';
    if (row.score_ef) out << *row.score_ef;
    out << ',';
    if (row.score_dire) out << *row.score_dire;
    out << ',';
    if (row.ratio) out << row.ratio->num() << ',' << row.ratio->den();
    else out << ',';
    out << ',';
    if (row.prop_envious) {
      out << row.prop_envious->num() << ',' << row.prop_envious->den();
    } else {
      out << ',';
    }
    out << ',';
    if (row.simpsons) out << (*row.simpsons ? "1" : "0");
    else out << "na";
    out << '\n';
  }
}

void WriteExperimentSummaryCsv(const ExperimentResult& result,
                               std::ostream& out) {
  out << "value,notion,scope,instances,infeasible,no_envyfree,simpsons,"
         "mean_utility_ratio,mean_prop_envious\n";
  for (const PointSummary& p : result.points) {
    out << p.value << ',' << p.notion.ToString() << ','
        << ScopeName(p.scope) << ',' << p.instances << ',' << p.infeasible
        << ',' << p.no_envyfree << ',' << p.simpsons << ','
        << FormatMean(p.mean_utility_ratio) << ','
        << FormatMean(p.mean_prop_envious) << '\n';
  }
}

GenConfig ParseGenConfig(std::string_view json_text) {
  return GenConfigFromJson(ParseObject(json_text, "generator config"));
}

ExperimentConfig ParseExperimentConfig(std::string_view json_text) {
  const json doc = ParseObject(json_text, "experiment config");
  RejectUnknown(doc,
                {"sweep", "values", "instances", "rule", "notions", "bound",
                 "scopes", "seed", "literal_min", "generator"},
                "experiment");
  ExperimentConfig cfg;
  if (doc.contains("generator")) {
    if (!doc["generator"].is_object()) {
      throw DomainError("key 'generator' must be an object");
    }
    cfg.generator = GenConfigFromJson(doc["generator"]);
  }
  if (doc.contains("sweep")) {
    const std::string name = Get<std::string>(doc, "sweep");
    auto sweep = ParseSweep(name);
    if (!sweep) throw DomainError("unknown sweep '" + name + "'");
    cfg.sweep = *sweep;
  }
  if (doc.contains("values")) {
    if (!doc["values"].is_array()) {
      throw DomainError("key 'values' must be an array");
    }
    for (const json& v : doc["values"]) {
      cfg.values.push_back(ScalarText(v, "values"));
    }
  }
  if (doc.contains("instances")) cfg.instances = Get<int>(doc, "instances");
  if (doc.contains("rule")) {
    const std::string name = Get<std::string>(doc, "rule");
    auto rule = ParseRule(name);
    if (!rule) throw DomainError("unknown rule '" + name + "'");
    cfg.rule = *rule;
  }
  const std::string bound =
      doc.contains("bound") ? ScalarText(doc["bound"], "bound") : "0";
  if (doc.contains("notions")) {
    cfg.notions.clear();
    for (const std::string& kind :
         Get<std::vector<std::string>>(doc, "notions")) {
      cfg.notions.push_back(Notion::Parse(kind, bound));
    }
  } else {
    cfg.notions = {Notion::Parse("fec", bound)};
  }
  if (doc.contains("scopes")) {
    cfg.scopes.clear();
    for (const std::string& name :
         Get<std::vector<std::string>>(doc, "scopes")) {
      auto scope = ParseScope(name);
      if (!scope) throw DomainError("unknown scope '" + name + "'");
      cfg.scopes.push_back(*scope);
    }
  }
  if (doc.contains("seed")) cfg.seed = Get<uint64_t>(doc, "seed");
  if (doc.contains("literal_min")) {
    cfg.constraints.literal_min = Get<bool>(doc, "literal_min");
  }
  cfg.constraints.rule = cfg.rule;
  cfg.Validate();
  return cfg;
}

}  // namespace fairdire
