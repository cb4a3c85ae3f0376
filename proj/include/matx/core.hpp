// Copyright 2026 The Authors.
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

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace matx {

// Ground-set elements are bit positions in a 64-bit mask; element 0 here is
// element 1 in the text formats.
using ElemSet = std::uint64_t;
using Basis = ElemSet;

inline constexpr int kGroundCap = 64;

inline constexpr ElemSet elem_bit(int e) { return ElemSet{1} << e; }

inline constexpr ElemSet full_set(int n) {
  return n >= 64 ? ~ElemSet{0} : (ElemSet{1} << n) - 1;
}

inline int set_size(ElemSet s) { return std::popcount(s); }

inline bool contains(ElemSet s, int e) { return (s >> e) & 1; }

inline int lowest_element(ElemSet s) { return std::countr_zero(s); }

template <typename Fn>
void for_each_element(ElemSet s, Fn&& fn) {
  while (s != 0) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

// Order matching lexicographic order of the sorted element lists: the set
// holding the smallest element where the two differ comes first.
inline bool lex_less(ElemSet a, ElemSet b) {
  const ElemSet d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (~d + 1))) != 0;
}

inline std::vector<int> elements_of(ElemSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for_each_element(s, [&](int e) { out.push_back(e); });
  return out;
}

// 0-based element list -> mask.
inline ElemSet set_from(const std::vector<int>& elems) {
  ElemSet s = 0;
  for (int e : elems) s |= elem_bit(e);
  return s;
}

// Human-readable form, 1-based: "{1,3}".
inline std::string format_set(ElemSet s) {
  std::string out = "{";
  bool first = true;
  for_each_element(s, [&](int e) {
    if (!first) out += ",";
    out += std::to_string(e + 1);
    first = false;
  });
  out += "}";
  return out;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t seed = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ull;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
  v ^= v >> 31;
  return (h ^ v) * 0x100000001b3ull;
}

struct SetVectorHash {
  std::size_t operator()(const std::vector<ElemSet>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (ElemSet x : v) h = hash_mix(h, x);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace matx
