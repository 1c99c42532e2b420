/*
   Copyright 2026 The equivloc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "equivloc/space.hpp"

#include <cctype>
#include <charconv>

#include "equivloc/error.hpp"

namespace equivloc {

SpaceDescriptor::SpaceDescriptor(SpaceKind kind, int m, int n)
    : kind_(kind), m_(m), n_(n) {
  if (n < 1) fail("space rank must be positive");
  switch (kind) {
    case SpaceKind::grass: root_ = RootSystemSpec::type_a(m, n); break;
    case SpaceKind::lagrangian: root_ = RootSystemSpec::of(RootType::C, n); break;
    case SpaceKind::og_even: root_ = RootSystemSpec::of(RootType::D, n); break;
    case SpaceKind::og_odd: root_ = RootSystemSpec::of(RootType::B, n); break;
  }
  dimension_ = static_cast<int>(complement_roots(root_).size());
  vars_ = VarTable::standard(n, residue_count());
}

SpaceDescriptor SpaceDescriptor::grass(int m, int n) { return {SpaceKind::grass, m, n}; }
SpaceDescriptor SpaceDescriptor::lagrangian(int n) { return {SpaceKind::lagrangian, n, n}; }
SpaceDescriptor SpaceDescriptor::og_even(int n) { return {SpaceKind::og_even, n, n}; }
SpaceDescriptor SpaceDescriptor::og_odd(int n) { return {SpaceKind::og_odd, n, n}; }

SpaceDescriptor SpaceDescriptor::from_root_system(const RootSystemSpec& spec) {
  spec.validate();
  switch (spec.type) {
    case RootType::A: return grass(spec.m, spec.rank);
    case RootType::B: return og_odd(spec.rank);
    case RootType::C: return lagrangian(spec.rank);
    case RootType::D: return og_even(spec.rank);
  }
  fail("unknown root type");
}

namespace {

std::vector<int> parse_ints(std::string_view text, char sep, std::size_t offset) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(sep, pos);
    std::string_view piece = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw ParseError("expected an integer in space spec", offset + pos);
    }
    out.push_back(value);
    if (end == std::string_view::npos) return out;
    pos = end + 1;
  }
}

}  // namespace

SpaceDescriptor SpaceDescriptor::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("space spec needs '<kind>:'", 0);
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  const std::size_t off = colon + 1;
  try {
    if (kind == "grass") {
      auto v = parse_ints(rest, ',', off);
      if (v.size() != 2) throw ParseError("grass expects m,n", off);
      return grass(v[0], v[1]);
    }
    auto single = [&]() {
      auto v = parse_ints(rest, ',', off);
      if (v.size() != 1) throw ParseError("expected a single rank", off);
      return v[0];
    };
    if (kind == "lg") return lagrangian(single());
    if (kind == "og-") return og_even(single());
    if (kind == "og+") return og_odd(single());
    if (kind == "root") {
      if (rest.size() < 3 || rest[1] != ':') throw ParseError("expected root:<A|B|C|D>:<n>[:m]", off);
      char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(rest[0])));
      auto v = parse_ints(rest.substr(2), ':', off + 2);
      RootSystemSpec spec;
      switch (letter) {
        case 'A': spec.type = RootType::A; break;
        case 'B': spec.type = RootType::B; break;
        case 'C': spec.type = RootType::C; break;
        case 'D': spec.type = RootType::D; break;
        default: throw ParseError("root type must be one of A, B, C, D", off);
      }
      if (spec.type == RootType::A ? (v.size() != 2) : (v.size() != 1)) {
        throw ParseError("root:A:<n>:<m> or root:<B|C|D>:<n>", off + 2);
      }
      spec.rank = v[0];
      spec.m = spec.type == RootType::A ? v[1] : 0;
      return from_root_system(spec);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), off);
  }
  throw ParseError("unknown space kind '" + std::string(kind) + "'", 0);
}

std::string SpaceDescriptor::spec_string() const {
  switch (kind_) {
    case SpaceKind::grass: return "grass:" + std::to_string(m_) + "," + std::to_string(n_);
    case SpaceKind::lagrangian: return "lg:" + std::to_string(n_);
    case SpaceKind::og_even: return "og-:" + std::to_string(n_);
    case SpaceKind::og_odd: return "og+:" + std::to_string(n_);
  }
  return {};
}

std::string SpaceDescriptor::name() const {
  const std::string n = std::to_string(n_);
  switch (kind_) {
    case SpaceKind::grass: return "Grass_" + std::to_string(m_) + "(C^" + n + ")";
    case SpaceKind::lagrangian: return "LG(" + n + ")";
    case SpaceKind::og_even: return "OG(" + n + "," + std::to_string(2 * n_) + ")";
    case SpaceKind::og_odd: return "OG(" + n + "," + std::to_string(2 * n_ + 1) + ")";
  }
  return {};
}

}  // namespace equivloc
