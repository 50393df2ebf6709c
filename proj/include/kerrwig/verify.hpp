// Copyright 2026 The kerrwig Authors
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

#ifndef KERRWIG_VERIFY_HPP
#define KERRWIG_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kerrwig {

/// Outcome of one cross-validation criterion: metric is the worst observed
/// deviation, bound the pinned tolerance it must stay under.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double metric = 0.0;
  double bound = 0.0;
  double seconds = 0.0;
};

/// Runs the full cross-validation battery at desk scale. When progress is
/// non-null, one pass/fail line per criterion is printed as it completes.
/// fig1_res controls the resolution of the figure-reproduction grids.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr,
                                            int fig1_res = 201);

/// True iff every criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace kerrwig

#endif  // KERRWIG_VERIFY_HPP
