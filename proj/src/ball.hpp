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

#ifndef RELSC_BALL_HPP
#define RELSC_BALL_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "normal_form.hpp"
#include "session.hpp"

namespace relsc {

// BFS over the Cayley graph of a free product with alphabet X u H. The
// independent oracle for the relative metric: distances here come from
// breadth-first expansion, not from the syllable formula.
class Ball {
 public:
  struct Entry {
    NormalForm element;
    int distance = 0;
    // Indices into elements() of all BFS predecessors at distance-1;
    // parents realize every geodesic edge into this vertex.
    std::vector<std::uint32_t> parents;
  };

  const std::vector<Entry>& elements() const { return entries_; }
  int radius() const { return radius_; }

  // Index lookup by normal form; -1 when absent.
  std::int64_t find(const NormalForm& g) const;
  bool contains(const NormalForm& g) const { return find(g) >= 0; }

  std::size_t size() const { return entries_.size(); }

 private:
  friend Ball build_ball(const GroupSpec& spec, int radius, const Options& opts,
                         bool keep_parents);
  std::vector<Entry> entries_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index_;
  int radius_ = 0;
};

// Elements g with dist(1, g) <= radius, in BFS order (distance, then
// canonical bytes within a layer). Requires all parabolic factors finite;
// throws InfiniteFactorInBall otherwise and RadiusCapExceeded past the cap.
Ball build_ball(const GroupSpec& spec, int radius, const Options& opts = Options{},
                bool keep_parents = false);

// All single letters of the alphabet, in canonical order. Throws
// InfiniteFactorInBall when a parabolic factor is infinite.
std::vector<Syllable> alphabet_letters(const GroupSpec& spec);

}  // namespace relsc

#endif  // RELSC_BALL_HPP
