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

#ifndef FAIRDIRE_TESTS_SUPPORT_FIXTURES_H_
#define FAIRDIRE_TESTS_SUPPORT_FIXTURES_H_

#include <string>
#include <vector>

#include "fairdire/election_file.h"

namespace fairdire::testing {

std::string DataPath(const std::string& name);

// The checked-in 8-candidate, 19-voter example election.
const ElectionDocument& Example1();

// Example constraints with W_P filled in.
const ConstraintSet& Example1Constraints();

// Candidate ids from 1-based labels, e.g. Ids({1, 6, 3, 8}) -> {0,2,5,7}.
std::vector<CandidateId> Ids(std::vector<int> labels);

}  // namespace fairdire::testing

#endif  // FAIRDIRE_TESTS_SUPPORT_FIXTURES_H_
