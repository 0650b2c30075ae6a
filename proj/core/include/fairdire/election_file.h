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

#ifndef FAIRDIRE_ELECTION_FILE_H_
#define FAIRDIRE_ELECTION_FILE_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fairdire/dire_solver.h"
#include "fairdire/election.h"
#include "fairdire/envyfree.h"

namespace fairdire {

// Display names for an election's ids and attribute labels.
struct ElectionNames {
  std::vector<std::string> candidates;
  std::vector<std::string> voters;
  std::vector<std::string> candidate_attributes;
  std::vector<std::string> voter_attributes;
  // group_labels[i][j]: label of group j of candidate attribute i.
  std::vector<std::vector<std::string>> group_labels;
  std::vector<std::vector<std::string>> population_labels;

  friend bool operator==(const ElectionNames&,
                         const ElectionNames&) = default;
};

// c1..cm, v1..vn, attributes a1.. / b1.., labels g1.. / p1...
ElectionNames DefaultNames(const Election& e);

struct ElectionDocument {
  Election election;
  ElectionNames names;
  int k = 1;
  // Present when the file has a [constraints] section.
  std::optional<ConstraintSet> constraints;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A syntactically valid document whose election or constraints fail
// validation.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// Parses the text election format (see README). Runs ValidateElection and
// ConstraintSet::Validate on the result.
ElectionDocument ParseElection(std::string_view text);
std::string SerializeElection(const ElectionDocument& doc);

ElectionDocument ReadElectionFile(const std::string& path);
void WriteElectionFile(const std::string& path, const ElectionDocument& doc);

// "{c1,c3,c6,c8}" in ascending id order.
std::string FormatCommittee(std::span<const CandidateId> members,
                            const ElectionNames& names);
// Comma-separated candidate names to sorted ids. Throws LookupError.
std::vector<CandidateId> ParseCommittee(std::string_view text,
                                        const ElectionNames& names);
std::string FormatPopulation(const ScopedPopulation& p,
                             const ElectionNames& names);
std::string FormatAttributeIndex(const AttributeIndex& id, bool voter_side,
                                 const ElectionNames& names);

}  // namespace fairdire

#endif  // FAIRDIRE_ELECTION_FILE_H_
