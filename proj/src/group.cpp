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

#include "group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace relsc {

std::int64_t FactorSpec::mul(std::int64_t a, std::int64_t b) const {
  switch (kind) {
    case Kind::Cyclic: {
      std::int64_t s = (a + b) % order;
      return s < 0 ? s + order : s;
    }
    case Kind::Table:
      return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    case Kind::InfiniteCyclic:
      return a + b;
  }
  fail(ErrorCode::InternalError, "bad factor kind");
}

std::int64_t FactorSpec::inv(std::int64_t a) const {
  switch (kind) {
    case Kind::Cyclic:
      return a == 0 ? 0 : order - a;
    case Kind::Table:
      return table_inverse[static_cast<std::size_t>(a)];
    case Kind::InfiniteCyclic:
      return -a;
  }
  fail(ErrorCode::InternalError, "bad factor kind");
}

bool FactorSpec::valid_element(std::int64_t v) const {
  switch (kind) {
    case Kind::Cyclic:
      return v >= 0 && v < order;
    case Kind::Table:
      return v >= 0 && v < static_cast<std::int64_t>(table.size());
    case Kind::InfiniteCyclic:
      return true;
  }
  return false;
}

std::vector<std::int64_t> FactorSpec::nontrivial_elements() const {
  std::vector<std::int64_t> out;
  if (kind == Kind::InfiniteCyclic)
    fail(ErrorCode::InfiniteFactorInBall, "factor " + name + " is infinite cyclic");
  std::int64_t n = kind == Kind::Cyclic ? order : static_cast<std::int64_t>(table.size());
  out.reserve(static_cast<std::size_t>(n - 1));
  for (std::int64_t v = 0; v < n; ++v)
    if (!is_identity(v)) out.push_back(v);
  return out;
}

FactorSpec FactorSpec::cyclic(std::int64_t order) {
  if (order < 2) fail(ErrorCode::InvalidTable, "cyclic order must be >= 2");
  if (order > kMaxCyclicOrder)
    fail(ErrorCode::InvalidTable, "cyclic order exceeds the cap " + std::to_string(kMaxCyclicOrder));
  FactorSpec f;
  f.kind = Kind::Cyclic;
  f.order = order;
  return f;
}

FactorSpec FactorSpec::infinite_cyclic() {
  FactorSpec f;
  f.kind = Kind::InfiniteCyclic;
  return f;
}

FactorSpec FactorSpec::validated_table(std::vector<std::vector<int>> table) {
  std::size_t m = table.size();
  if (m < 2) fail(ErrorCode::InvalidTable, "table must have at least 2 elements");
  if (m > static_cast<std::size_t>(kMaxTableOrder))
    fail(ErrorCode::InvalidTable, "table order exceeds the cap " + std::to_string(kMaxTableOrder));
  for (const auto& row : table) {
    if (row.size() != m) fail(ErrorCode::InvalidTable, "table is not square");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= m)
        fail(ErrorCode::InvalidTable, "table entry out of range");
  }

  // Identity: a two-sided unit.
  std::int64_t identity = -1;
  for (std::size_t e = 0; e < m; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x)
      ok = table[e][x] == static_cast<int>(x) && table[x][e] == static_cast<int>(x);
    if (ok) {
      identity = static_cast<std::int64_t>(e);
      break;
    }
  }
  if (identity < 0) fail(ErrorCode::InvalidTable, "table has no identity element");

  // Inverses.
  std::vector<std::int64_t> inverse(m, -1);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (table[x][y] == identity && table[y][x] == identity) {
        inverse[x] = static_cast<std::int64_t>(y);
        break;
      }
    }
    if (inverse[x] < 0) fail(ErrorCode::InvalidTable, "element has no inverse");
  }

  // Associativity, O(m^3).
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          fail(ErrorCode::InvalidTable, "table is not associative");

  FactorSpec f;
  f.kind = Kind::Table;
  f.table = std::move(table);
  f.table_identity = identity;
  f.table_inverse = std::move(inverse);
  return f;
}

namespace {

std::uint64_t fnv64(std::uint64_t h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t fnv64_str(std::uint64_t h, const std::string& s) {
  return fnv64(h, s.data(), s.size());
}

}  // namespace

GroupSpec::GroupSpec(std::vector<FactorSpec> factors, std::vector<std::string> free_names,
                     std::vector<std::string> relator_literals)
    : factors_(std::move(factors)),
      free_names_(std::move(free_names)),
      relator_literals_(std::move(relator_literals)) {
  if (factors_.size() > static_cast<std::size_t>(kMaxFactors))
    fail(ErrorCode::SyntaxError, "too many factors");
  if (free_names_.size() > static_cast<std::size_t>(kMaxFreeRank))
    fail(ErrorCode::SyntaxError, "free rank too large");

  // Default factor names: a, b, c, ...
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].name.empty())
      factors_[i].name = std::string(1, static_cast<char>('a' + i));

  std::vector<std::string> seen;
  for (const auto& f : factors_) {
    if (std::find(seen.begin(), seen.end(), f.name) != seen.end())
      fail(ErrorCode::DuplicateFactorIndex, "duplicate factor name " + f.name);
    seen.push_back(f.name);
  }
  for (const auto& n : free_names_) {
    if (n.empty()) fail(ErrorCode::SyntaxError, "empty free generator name");
    if (std::find(seen.begin(), seen.end(), n) != seen.end())
      fail(ErrorCode::DuplicateFactorIndex, "generator name collision: " + n);
    seen.push_back(n);
  }

  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& f : factors_) {
    int kind = static_cast<int>(f.kind);
    h = fnv64(h, &kind, sizeof kind);
    h = fnv64(h, &f.order, sizeof f.order);
    for (const auto& row : f.table)
      h = fnv64(h, row.data(), row.size() * sizeof(int));
    h = fnv64_str(h, f.name);
  }
  for (const auto& n : free_names_) h = fnv64_str(h, n);
  for (const auto& r : relator_literals_) h = fnv64_str(h, r);
  hash_ = h;
}

bool GroupSpec::all_factors_finite() const {
  for (const auto& f : factors_)
    if (!f.finite()) return false;
  return true;
}

std::optional<std::pair<bool, std::uint32_t>> GroupSpec::lookup_generator(
    const std::string& name) const {
  for (std::uint32_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].name == name) return std::make_pair(false, i);
  for (std::uint32_t i = 0; i < free_names_.size(); ++i)
    if (free_names_[i] == name) return std::make_pair(true, i);
  return std::nullopt;
}

std::string GroupSpec::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " * ";
    const auto& f = factors_[i];
    switch (f.kind) {
      case FactorSpec::Kind::Cyclic: os << "Z/" << f.order; break;
      case FactorSpec::Kind::Table: os << "T" << f.table.size(); break;
      case FactorSpec::Kind::InfiniteCyclic: os << "Z"; break;
    }
    os << "<" << f.name << ">";
  }
  if (free_rank() > 0) {
    if (!factors_.empty()) os << " * ";
    os << "F(";
    for (std::uint32_t i = 0; i < free_rank(); ++i) {
      if (i) os << ",";
      os << free_names_[i];
    }
    os << ")";
  }
  if (!relator_literals_.empty()) os << " / <<" << relator_literals_.size() << " relators>>";
  return os.str();
}

void GroupSpec::require_pure(const char* operation) const {
  if (!pure_free_product())
    fail(ErrorCode::QuotientNotDecidable,
         std::string(operation) + " requires a pure free product; use the quotient commands");
}

namespace {

// Minimal tokenizer for the spec document. Understands words, integers,
// ':', ',', '[', ']', and quoted strings.
struct Tokenizer {
  explicit Tokenizer(const std::string& text) : text_(text) {}

  std::string next() {
    skip_space();
    if (pos_ >= text_.size()) return "";
    char c = text_[pos_];
    if (c == ':' || c == ',' || c == '[' || c == ']') {
      ++pos_;
      return std::string(1, c);
    }
    if (c == '"') {
      std::size_t end = text_.find('"', pos_ + 1);
      if (end == std::string::npos) fail(ErrorCode::SyntaxError, "unterminated string");
      std::string s = text_.substr(pos_, end - pos_ + 1);
      pos_ = end + 1;
      return s;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != ':' && text_[pos_] != ',' && text_[pos_] != '[' && text_[pos_] != ']')
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string peek() {
    std::size_t save = pos_;
    std::string t = next();
    pos_ = save;
    return t;
  }

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::int64_t expect_int(Tokenizer& tok, const char* what) {
  std::string t = tok.next();
  try {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::SyntaxError, std::string("expected integer for ") + what + ", got '" + t + "'");
  }
}

void expect(Tokenizer& tok, const std::string& want) {
  std::string t = tok.next();
  if (t != want) fail(ErrorCode::SyntaxError, "expected '" + want + "', got '" + t + "'");
}

std::vector<std::vector<int>> parse_table_literal(Tokenizer& tok) {
  expect(tok, "[");
  std::vector<std::vector<int>> rows;
  while (true) {
    std::string t = tok.peek();
    if (t == "]") {
      tok.next();
      break;
    }
    if (t == ",") {
      tok.next();
      continue;
    }
    expect(tok, "[");
    std::vector<int> row;
    while (true) {
      std::string u = tok.peek();
      if (u == "]") {
        tok.next();
        break;
      }
      if (u == ",") {
        tok.next();
        continue;
      }
      row.push_back(static_cast<int>(expect_int(tok, "table entry")));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  Tokenizer tok(text);
  std::vector<FactorSpec> factors;
  std::vector<std::string> free_names;
  std::vector<std::string> relators;
  bool saw_factors = false;

  while (!tok.done()) {
    std::string key = tok.next();
    if (key == ";") continue;
    expect(tok, ":");
    if (key == "factors") {
      saw_factors = true;
      expect(tok, "[");
      while (true) {
        std::string t = tok.next();
        if (t == "]") break;
        if (t == ",") continue;
        if (t == "cyclic") {
          factors.push_back(FactorSpec::cyclic(expect_int(tok, "cyclic order")));
        } else if (t == "table") {
          factors.push_back(FactorSpec::validated_table(parse_table_literal(tok)));
        } else if (t == "zcyclic") {
          factors.push_back(FactorSpec::infinite_cyclic());
        } else {
          fail(ErrorCode::SyntaxError, "unknown factor kind '" + t + "'");
        }
      }
    } else if (key == "free") {
      expect(tok, "[");
      while (true) {
        std::string t = tok.next();
        if (t == "]") break;
        if (t == ",") continue;
        free_names.push_back(t);
      }
    } else if (key == "relators") {
      expect(tok, "[");
      while (true) {
        std::string t = tok.next();
        if (t == "]") break;
        if (t == ",") continue;
        if (t.size() < 2 || t.front() != '"' || t.back() != '"')
          fail(ErrorCode::SyntaxError, "relators must be quoted word literals");
        relators.push_back(t.substr(1, t.size() - 2));
      }
    } else {
      fail(ErrorCode::SyntaxError, "unknown key '" + key + "'");
    }
  }

  if (!saw_factors && free_names.empty())
    fail(ErrorCode::SyntaxError, "spec declares neither factors nor free generators");
  return GroupSpec(std::move(factors), std::move(free_names), std::move(relators));
}

}  // namespace relsc
