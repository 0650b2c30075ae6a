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

// Regenerates the worked-example fixture: make_example1 <output path>.

#include <chrono>
#include <iostream>

#include "example1_oracle.h"
#include "fairdire/election_file.h"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_example1 <output.election>\n";
    return 2;
  }
  const auto start = std::chrono::steady_clock::now();
  fairdire::testing::SearchStats stats;
  auto inst = fairdire::testing::ReconstructExample1(&stats);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  std::cerr << "ranking pairs " << stats.ranking_pairs_tried << " kept "
            << stats.ranking_pairs_kept << ", labelings "
            << stats.labelings_tried << ", score vectors "
            << stats.score_vectors_kept << ", splits " << stats.splits_tried
            << ", " << seconds << " s\n";
  if (!inst) {
    std::cerr << "no instance satisfies the example's facts\n";
    return 1;
  }
  fairdire::WriteElectionFile(argv[1], fairdire::testing::ToDocument(*inst));
  return 0;
}
