// This file is part of relsc, a small-cancellation verification workbench.
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

#ifndef RELSC_SESSION_HPP
#define RELSC_SESSION_HPP

#include <cstdint>

namespace relsc {

// Per-run knobs. One seed drives all randomness; identical options and
// inputs must produce byte-identical reports.
struct Options {
  std::uint64_t seed = 1;
  std::uint64_t budget_nodes = 1'000'000;  // per search/reduction
  double budget_secs = 0.0;                // 0 = unlimited
  int workers = 0;                         // 0 = hardware concurrency
  int radius_cap = 6;
};

}  // namespace relsc

#endif  // RELSC_SESSION_HPP
