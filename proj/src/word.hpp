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

#ifndef RELSC_WORD_HPP
#define RELSC_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "group.hpp"

namespace relsc {

// A letter of the alphabet X u H, and also a syllable of a normal form.
//
// Parabolic: one nontrivial element of factor `index` (value = element id).
// Free: as a letter, value is +1/-1; as a syllable, any nonzero exponent.
struct Syllable {
  enum : std::uint8_t { kParabolic = 0, kFree = 1 };

  std::uint8_t kind = kParabolic;
  std::uint32_t index = 0;
  std::int64_t value = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;

  static Syllable parabolic(std::uint32_t factor, std::int64_t element) {
    return Syllable{kParabolic, factor, element};
  }
  static Syllable free_gen(std::uint32_t gen, std::int64_t exponent) {
    return Syllable{kFree, gen, exponent};
  }
};

// A word over X u H; the label of a path in the Cayley graph. Words need
// not be reduced. Free letters always carry exponent +1/-1.
struct Word {
  std::vector<Syllable> letters;
  std::uint64_t spec_hash = 0;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
};

// Validates that `s` is a legal letter for `spec` (nontrivial parabolic
// element or a +-1 free generator).
void check_letter(const GroupSpec& spec, const Syllable& s);

Syllable invert_letter(const GroupSpec& spec, const Syllable& s);

Word make_word(const GroupSpec& spec, std::vector<Syllable> letters);

// Word literal grammar: whitespace-separated `gen` or `gen^int` tokens.
// Parabolic powers fold into a single letter (mod order for cyclic
// factors); a power hitting the factor identity is a ZeroPower error.
// Free powers expand into |k| letters.
Word parse_word(const std::string& text, const GroupSpec& spec);

std::string word_to_string(const GroupSpec& spec, const Word& w);
std::string letter_to_string(const GroupSpec& spec, const Syllable& s);

Word invert_word(const GroupSpec& spec, const Word& w);
Word cyclic_shift(const Word& w, std::size_t offset);
Word concat(const Word& a, const Word& b);
Word subword(const Word& w, std::size_t begin, std::size_t end);

// Canonical byte encoding of a syllable sequence: per syllable one kind
// byte, a little-endian u32 index, and a little-endian i64 value. Stable
// across runs and platforms.
void append_canonical_bytes(std::string& out, const Syllable& s);
std::string canonical_bytes(const std::vector<Syllable>& syllables);
std::vector<Syllable> from_canonical_bytes(const std::string& bytes);
std::string to_hex(const std::string& bytes);
std::string from_hex(const std::string& hex);

}  // namespace relsc

#endif  // RELSC_WORD_HPP
