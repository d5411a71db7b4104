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

#ifndef RELSC_GROUP_HPP
#define RELSC_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace relsc {

// One factor of the free product H_1 * ... * H_k * F(X).
//
// Element values are int64:
//   cyclic n    -- residues 0..n-1, identity 0
//   table m     -- row indices 0..m-1, identity detected on load
//   zcyclic     -- arbitrary exponents, identity 0
struct FactorSpec {
  enum class Kind { Cyclic, Table, InfiniteCyclic };

  Kind kind = Kind::Cyclic;
  std::int64_t order = 0;                       // cyclic only
  std::vector<std::vector<int>> table;          // table only
  std::int64_t table_identity = 0;              // table only
  std::vector<std::int64_t> table_inverse;      // table only
  std::string name;                             // single-letter generator name

  bool finite() const { return kind != Kind::InfiniteCyclic; }

  // Number of nontrivial elements; only valid for finite factors.
  std::int64_t nontrivial_count() const {
    return kind == Kind::Cyclic ? order - 1
                                : static_cast<std::int64_t>(table.size()) - 1;
  }

  std::int64_t identity() const {
    return kind == Kind::Table ? table_identity : 0;
  }

  bool is_identity(std::int64_t v) const { return v == identity(); }

  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;
  bool valid_element(std::int64_t v) const;

  // Enumerates the nontrivial elements in a stable order (finite factors).
  std::vector<std::int64_t> nontrivial_elements() const;

  // Checks group axioms on a multiplication table; throws InvalidTable.
  static FactorSpec validated_table(std::vector<std::vector<int>> table);
  static FactorSpec cyclic(std::int64_t order);
  static FactorSpec infinite_cyclic();
};

// Limits from the module contract: piece scans are polynomial in factor
// order, so factor sizes are capped at desk scale.
constexpr std::int64_t kMaxCyclicOrder = 1 << 16;
constexpr std::int64_t kMaxTableOrder = 64;
constexpr int kMaxFactors = 26;
constexpr int kMaxFreeRank = 26;

class GroupSpec {
 public:
  GroupSpec(std::vector<FactorSpec> factors, std::vector<std::string> free_names,
            std::vector<std::string> relator_literals);

  const std::vector<FactorSpec>& factors() const { return factors_; }
  const FactorSpec& factor(std::uint32_t index) const { return factors_.at(index); }
  std::uint32_t factor_count() const { return static_cast<std::uint32_t>(factors_.size()); }

  std::uint32_t free_rank() const { return static_cast<std::uint32_t>(free_names_.size()); }
  const std::string& free_name(std::uint32_t index) const { return free_names_.at(index); }

  bool pure_free_product() const { return relator_literals_.empty(); }
  const std::vector<std::string>& relator_literals() const { return relator_literals_; }

  bool all_factors_finite() const;

  // Generator lookup for the word-literal parser. Returns (is_free, index).
  std::optional<std::pair<bool, std::uint32_t>> lookup_generator(const std::string& name) const;

  // Content hash of the canonical serialization; used for SpecMismatch
  // checks and cache keys.
  std::uint64_t hash() const { return hash_; }

  std::string describe() const;

  // Throws QuotientNotDecidable unless the spec is a pure free product.
  void require_pure(const char* operation) const;

 private:
  std::vector<FactorSpec> factors_;
  std::vector<std::string> free_names_;
  std::vector<std::string> relator_literals_;
  std::uint64_t hash_ = 0;
};

// Parses the group spec document:
//
//   factors: [cyclic N, table [[...],...], zcyclic, ...]
//   free: [x, y]
//   relators: ["x a b a^2 b^2"]
//
// '#' starts a comment. Factor i is named 'a'+i unless that collides with
// a free generator name, which is an error.
GroupSpec parse_group_spec(const std::string& text);

}  // namespace relsc

#endif  // RELSC_GROUP_HPP
