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

#ifndef RELSC_NORMAL_FORM_HPP
#define RELSC_NORMAL_FORM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "word.hpp"

namespace relsc {

// Canonical form of a free-product element: an alternating syllable
// sequence where adjacent syllables never lie in the same factor (or the
// same free generator) and no syllable is trivial. Two elements of the
// pure free product are equal iff their normal forms are identical.
class NormalForm {
 public:
  NormalForm() = default;

  const std::vector<Syllable>& syllables() const { return syl_; }
  std::size_t syllable_count() const { return syl_.size(); }
  bool is_identity() const { return syl_.empty(); }
  std::uint64_t spec_hash() const { return spec_hash_; }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.syl_ == b.syl_;
  }

  std::string bytes() const { return canonical_bytes(syl_); }

 private:
  friend class FreeProduct;
  std::vector<Syllable> syl_;
  std::uint64_t spec_hash_ = 0;
};

// Word arithmetic bound to one GroupSpec. All operations require a pure
// free product (no extra relators); they throw QuotientNotDecidable
// otherwise, and SpecMismatch when handed values from another spec.
class FreeProduct {
 public:
  explicit FreeProduct(const GroupSpec& spec) : spec_(spec) {}

  const GroupSpec& spec() const { return spec_; }

  NormalForm normal_form(const Word& w) const;
  NormalForm normal_form(std::span<const Syllable> letters) const;

  NormalForm multiply(const NormalForm& u, const NormalForm& v) const;
  NormalForm multiply(const NormalForm& u, const Syllable& letter) const;
  NormalForm invert(const NormalForm& u) const;
  // t^-1 g t
  NormalForm conjugate(const NormalForm& g, const NormalForm& t) const;
  NormalForm power(const NormalForm& g, std::int64_t n) const;
  NormalForm identity() const;
  NormalForm from_letter(const Syllable& s) const;
  NormalForm from_syllables(std::vector<Syllable> syllables) const;

  // dist_{X u H}(1, g): each parabolic syllable counts 1, each free
  // syllable x^k counts |k|.
  std::int64_t relative_length(const NormalForm& g) const;
  static std::int64_t relative_length_raw(std::span<const Syllable> syllables);

  // The geodesic spelling of g: parabolic syllables stay one letter, free
  // syllables x^k expand into |k| letters. Realizes relative_length.
  Word spell(const NormalForm& g) const;

  // Appends one letter to a syllable stack, keeping it normalized.
  void push_reduce(std::vector<Syllable>& stack, const Syllable& s) const;

  void check_same_spec(const NormalForm& u) const;
  void check_same_spec(const Word& w) const;

 private:
  const GroupSpec& spec_;
};

// 64-bit hash of a syllable sequence, aligned with canonical_bytes.
std::uint64_t hash_syllables(std::span<const Syllable> syllables);

}  // namespace relsc

#endif  // RELSC_NORMAL_FORM_HPP
