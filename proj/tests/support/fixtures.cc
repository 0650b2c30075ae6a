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

#include "fixtures.h"

#include <algorithm>

namespace fairdire::testing {

std::string DataPath(const std::string& name) {
  return std::string(FAIRDIRE_TEST_DATA_DIR) + "/" + name;
}

const ElectionDocument& Example1() {
  static const ElectionDocument doc =
      ReadElectionFile(DataPath("example1.election"));
  return doc;
}

const ConstraintSet& Example1Constraints() {
  static const ConstraintSet cs = WithPopulationCommittees(
      Example1().election, *Example1().constraints, Rule::kKBorda,
      Example1().k);
  return cs;
}

std::vector<CandidateId> Ids(std::vector<int> labels) {
  for (int& c : labels) --c;
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace fairdire::testing
