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

#ifndef FAIRDIRE_RESULTS_IO_H_
#define FAIRDIRE_RESULTS_IO_H_

#include <ostream>
#include <string_view>

#include "fairdire/experiments.h"
#include "fairdire/synthgen.h"

namespace fairdire {

inline constexpr std::string_view kExperimentCsvHeader =
    "value,instance,feasible,ef_exists,score_ef,score_dire,ratio_num,"
    "ratio_den,prop_envious_num,prop_envious_den,simpsons_flag";

// One header line plus one line per row, in row order. Missing values are
// empty fields; simpsons_flag is 1, 0 or "na".
void WriteExperimentCsv(const ExperimentResult& result, std::ostream& out);

// Per-point means as CSV:
// value,notion,scope,instances,infeasible,no_envyfree,simpsons,
// mean_utility_ratio,mean_prop_envious
void WriteExperimentSummaryCsv(const ExperimentResult& result,
                               std::ostream& out);

// JSON configuration documents. Unknown keys are rejected; missing keys keep
// their defaults. Throws DomainError with the offending key.
//   generator: {"m", "n", "k", "mu", "pi", "phi", "seed", "sigma",
//               "group_count_min", "group_count_max"}
//   experiment: {"sweep", "values", "instances", "rule", "notions", "bound",
//                "scopes", "seed", "literal_min", "generator": {...}}
GenConfig ParseGenConfig(std::string_view json_text);
ExperimentConfig ParseExperimentConfig(std::string_view json_text);

}  // namespace fairdire

#endif  // FAIRDIRE_RESULTS_IO_H_
