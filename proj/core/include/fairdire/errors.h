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

#ifndef FAIRDIRE_ERRORS_H_
#define FAIRDIRE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fairdire {

// Precondition on a value's domain failed (empty population, k out of range,
// phi outside [0,1], ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unknown candidate, voter, group or population id.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A ranking that is not a permutation of the candidate set.
class InvalidRankingError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The requested operation is not defined for the given rule or parameter
// (e.g. manipulation search under a non-separable rule).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fairdire

#endif  // FAIRDIRE_ERRORS_H_
