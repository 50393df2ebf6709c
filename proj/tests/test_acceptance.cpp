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

// Runs the full cross-validation battery and prints one pass/fail line per
// criterion. Exit code 0 iff every criterion passes.

#include <cstdlib>
#include <iostream>

#include "kerrwig/verify.hpp"

int main(int argc, char** argv) {
  int res = 201;
  if (argc > 1) res = std::atoi(argv[1]);
  const auto results = kerrwig::run_acceptance(&std::cout, res);
  return kerrwig::all_passed(results) ? 0 : 1;
}
