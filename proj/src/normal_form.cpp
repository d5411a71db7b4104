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

#include "normal_form.hpp"

namespace relsc {

void FreeProduct::check_same_spec(const NormalForm& u) const {
  if (u.spec_hash_ != 0 && u.spec_hash_ != spec_.hash())
    fail(ErrorCode::SpecMismatch, "normal form belongs to a different group spec");
}

void FreeProduct::check_same_spec(const Word& w) const {
  if (w.spec_hash != 0 && w.spec_hash != spec_.hash())
    fail(ErrorCode::SpecMismatch, "word belongs to a different group spec");
}

void FreeProduct::push_reduce(std::vector<Syllable>& stack, const Syllable& s) const {
  if (!stack.empty()) {
    Syllable& top = stack.back();
    if (top.kind == s.kind && top.index == s.index) {
      if (s.kind == Syllable::kFree) {
        std::int64_t e = top.value + s.value;
        if (e == 0)
          stack.pop_back();
        else
          top.value = e;
      } else {
        const FactorSpec& f = spec_.factor(s.index);
        std::int64_t e = f.mul(top.value, s.value);
        if (f.is_identity(e))
          stack.pop_back();
        else
          top.value = e;
      }
      return;
    }
  }
  stack.push_back(s);
}

NormalForm FreeProduct::normal_form(std::span<const Syllable> letters) const {
  spec_.require_pure("normal_form");
  NormalForm out;
  out.spec_hash_ = spec_.hash();
  out.syl_.reserve(letters.size());
  for (const auto& s : letters) push_reduce(out.syl_, s);
  return out;
}

NormalForm FreeProduct::normal_form(const Word& w) const {
  check_same_spec(w);
  return normal_form(std::span<const Syllable>(w.letters));
}

NormalForm FreeProduct::multiply(const NormalForm& u, const NormalForm& v) const {
  spec_.require_pure("multiply");
  check_same_spec(u);
  check_same_spec(v);
  NormalForm out;
  out.spec_hash_ = spec_.hash();
  out.syl_ = u.syl_;
  out.syl_.reserve(u.syl_.size() + v.syl_.size());
  for (const auto& s : v.syl_) push_reduce(out.syl_, s);
  return out;
}

NormalForm FreeProduct::multiply(const NormalForm& u, const Syllable& letter) const {
  NormalForm out;
  out.spec_hash_ = spec_.hash();
  out.syl_ = u.syl_;
  push_reduce(out.syl_, letter);
  return out;
}

NormalForm FreeProduct::invert(const NormalForm& u) const {
  spec_.require_pure("invert");
  check_same_spec(u);
  NormalForm out;
  out.spec_hash_ = spec_.hash();
  out.syl_.reserve(u.syl_.size());
  for (auto it = u.syl_.rbegin(); it != u.syl_.rend(); ++it) {
    if (it->kind == Syllable::kFree)
      out.syl_.push_back(Syllable::free_gen(it->index, -it->value));
    else
      out.syl_.push_back(Syllable::parabolic(it->index, spec_.factor(it->index).inv(it->value)));
  }
  return out;
}

NormalForm FreeProduct::conjugate(const NormalForm& g, const NormalForm& t) const {
  return multiply(multiply(invert(t), g), t);
}

NormalForm FreeProduct::power(const NormalForm& g, std::int64_t n) const {
  if (n < 0) return power(invert(g), -n);
  NormalForm acc = identity();
  for (std::int64_t i = 0; i < n; ++i) acc = multiply(acc, g);
  return acc;
}

NormalForm FreeProduct::identity() const {
  NormalForm out;
  out.spec_hash_ = spec_.hash();
  return out;
}

NormalForm FreeProduct::from_letter(const Syllable& s) const {
  check_letter(spec_, s);
  NormalForm out;
  out.spec_hash_ = spec_.hash();
  out.syl_.push_back(s);
  return out;
}

NormalForm FreeProduct::from_syllables(std::vector<Syllable> syllables) const {
  // Trusted path for deserialized witnesses: re-normalize to be safe.
  return normal_form(std::span<const Syllable>(syllables));
}

std::int64_t FreeProduct::relative_length_raw(std::span<const Syllable> syllables) {
  std::int64_t len = 0;
  for (const auto& s : syllables)
    len += s.kind == Syllable::kFree ? (s.value >= 0 ? s.value : -s.value) : 1;
  return len;
}

std::int64_t FreeProduct::relative_length(const NormalForm& g) const {
  spec_.require_pure("relative_length");
  check_same_spec(g);
  return relative_length_raw(g.syl_);
}

Word FreeProduct::spell(const NormalForm& g) const {
  check_same_spec(g);
  Word w;
  w.spec_hash = spec_.hash();
  for (const auto& s : g.syl_) {
    if (s.kind == Syllable::kFree) {
      std::int64_t sign = s.value >= 0 ? 1 : -1;
      std::int64_t count = s.value >= 0 ? s.value : -s.value;
      for (std::int64_t i = 0; i < count; ++i)
        w.letters.push_back(Syllable::free_gen(s.index, sign));
    } else {
      w.letters.push_back(s);
    }
  }
  return w;
}

std::uint64_t hash_syllables(std::span<const Syllable> syllables) {
  // splitmix-style mixing per syllable; cheap enough for scan hot paths.
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [](std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  };
  for (const auto& s : syllables) {
    std::uint64_t a = (static_cast<std::uint64_t>(s.kind) << 32) | s.index;
    h = mix(h ^ a);
    h = mix(h ^ static_cast<std::uint64_t>(s.value));
  }
  return h;
}

}  // namespace relsc
