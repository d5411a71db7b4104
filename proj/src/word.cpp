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

#include "word.hpp"

#include <cctype>
#include <sstream>

namespace relsc {

void check_letter(const GroupSpec& spec, const Syllable& s) {
  if (s.kind == Syllable::kFree) {
    if (s.index >= spec.free_rank())
      fail(ErrorCode::UnknownGenerator, "free generator index out of range");
    if (s.value != 1 && s.value != -1)
      fail(ErrorCode::InternalError, "free letter exponent must be +-1");
    return;
  }
  if (s.index >= spec.factor_count())
    fail(ErrorCode::UnknownGenerator, "factor index out of range");
  const FactorSpec& f = spec.factor(s.index);
  if (!f.valid_element(s.value))
    fail(ErrorCode::UnknownGenerator, "element id out of range for factor " + f.name);
  if (f.is_identity(s.value))
    fail(ErrorCode::ZeroPower, "parabolic letter must be a nontrivial element of " + f.name);
}

Syllable invert_letter(const GroupSpec& spec, const Syllable& s) {
  if (s.kind == Syllable::kFree) return Syllable::free_gen(s.index, -s.value);
  return Syllable::parabolic(s.index, spec.factor(s.index).inv(s.value));
}

Word make_word(const GroupSpec& spec, std::vector<Syllable> letters) {
  for (const auto& s : letters) check_letter(spec, s);
  Word w;
  w.letters = std::move(letters);
  w.spec_hash = spec.hash();
  return w;
}

Word parse_word(const std::string& text, const GroupSpec& spec) {
  std::istringstream is(text);
  std::string tok;
  std::vector<Syllable> letters;
  while (is >> tok) {
    std::string name = tok;
    std::int64_t power = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string p = tok.substr(caret + 1);
      try {
        std::size_t pos = 0;
        power = std::stoll(p, &pos);
        if (pos != p.size()) throw std::invalid_argument(p);
      } catch (const std::exception&) {
        fail(ErrorCode::SyntaxError, "bad power in token '" + tok + "'");
      }
    }
    auto gen = spec.lookup_generator(name);
    if (!gen) fail(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'");
    if (gen->first) {
      // Free generator: expand power into |k| letters.
      std::int64_t sign = power >= 0 ? 1 : -1;
      for (std::int64_t i = 0; i < (power >= 0 ? power : -power); ++i)
        letters.push_back(Syllable::free_gen(gen->second, sign));
    } else {
      const FactorSpec& f = spec.factor(gen->second);
      std::int64_t element;
      switch (f.kind) {
        case FactorSpec::Kind::Cyclic: {
          element = power % f.order;
          if (element < 0) element += f.order;
          break;
        }
        case FactorSpec::Kind::InfiniteCyclic:
          element = power;
          break;
        case FactorSpec::Kind::Table: {
          // Table elements are referenced by index: a^k is element id k,
          // a^-k its inverse. Plain `a` is element 1.
          std::int64_t id = power >= 0 ? power : -power;
          if (!f.valid_element(id))
            fail(ErrorCode::UnknownGenerator,
                 "table factor " + f.name + " has no element " + std::to_string(id));
          element = power >= 0 ? id : f.inv(id);
          break;
        }
      }
      if (f.is_identity(element))
        fail(ErrorCode::ZeroPower, "token '" + tok + "' is the identity of factor " + f.name);
      letters.push_back(Syllable::parabolic(gen->second, element));
    }
  }
  Word w;
  w.letters = std::move(letters);
  w.spec_hash = spec.hash();
  return w;
}

std::string letter_to_string(const GroupSpec& spec, const Syllable& s) {
  std::ostringstream os;
  if (s.kind == Syllable::kFree) {
    os << spec.free_name(s.index);
    if (s.value != 1) os << "^" << s.value;
    return os.str();
  }
  const FactorSpec& f = spec.factor(s.index);
  os << f.name;
  if (f.kind == FactorSpec::Kind::Table) {
    os << "^" << s.value;
  } else if (s.value != 1) {
    os << "^" << s.value;
  }
  return os.str();
}

std::string word_to_string(const GroupSpec& spec, const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << " ";
    os << letter_to_string(spec, w.letters[i]);
  }
  return os.str();
}

Word invert_word(const GroupSpec& spec, const Word& w) {
  Word out;
  out.spec_hash = w.spec_hash;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(invert_letter(spec, *it));
  return out;
}

Word cyclic_shift(const Word& w, std::size_t offset) {
  Word out;
  out.spec_hash = w.spec_hash;
  std::size_t n = w.letters.size();
  if (n == 0) return out;
  offset %= n;
  out.letters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.letters.push_back(w.letters[(i + offset) % n]);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  if (out.spec_hash == 0) out.spec_hash = b.spec_hash;
  return out;
}

Word subword(const Word& w, std::size_t begin, std::size_t end) {
  Word out;
  out.spec_hash = w.spec_hash;
  out.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(begin),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

void append_canonical_bytes(std::string& out, const Syllable& s) {
  out.push_back(static_cast<char>(s.kind));
  std::uint32_t idx = s.index;
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((idx >> (8 * i)) & 0xff));
  std::uint64_t v = static_cast<std::uint64_t>(s.value);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::string canonical_bytes(const std::vector<Syllable>& syllables) {
  std::string out;
  out.reserve(syllables.size() * 13);
  for (const auto& s : syllables) append_canonical_bytes(out, s);
  return out;
}

std::vector<Syllable> from_canonical_bytes(const std::string& bytes) {
  if (bytes.size() % 13 != 0)
    fail(ErrorCode::CorruptReport, "canonical encoding length not a multiple of 13");
  std::vector<Syllable> out;
  out.reserve(bytes.size() / 13);
  for (std::size_t off = 0; off < bytes.size(); off += 13) {
    Syllable s;
    s.kind = static_cast<std::uint8_t>(bytes[off]);
    if (s.kind != Syllable::kParabolic && s.kind != Syllable::kFree)
      fail(ErrorCode::CorruptReport, "bad syllable kind byte");
    std::uint32_t idx = 0;
    for (int i = 0; i < 4; ++i)
      idx |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[off + 1 + i])) << (8 * i);
    s.index = idx;
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[off + 5 + i])) << (8 * i);
    s.value = static_cast<std::int64_t>(v);
    out.push_back(s);
  }
  return out;
}

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) fail(ErrorCode::CorruptReport, "odd hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    fail(ErrorCode::CorruptReport, "bad hex digit");
  };
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  return out;
}

}  // namespace relsc
