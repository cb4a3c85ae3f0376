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

#include <initializer_list>
#include <vector>

#include "matx/matroid.hpp"

namespace matx_test {

// 1-based element list -> mask, matching the notation in the text formats.
inline matx::ElemSet S(std::initializer_list<int> elems) {
  matx::ElemSet s = 0;
  for (int e : elems) s |= matx::elem_bit(e - 1);
  return s;
}

inline std::vector<matx::ElemSet> F(
    std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<matx::ElemSet> out;
  for (const auto& set : sets) out.push_back(S(set));
  return out;
}

// Rank-2 matroid on {1..4} with elements 3,4 parallel: all pairs except {3,4}.
inline matx::Matroid five_basis_matroid() {
  return matx::validate_bases(
      4, F({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
}

// Rank-2 matroid on {1..4} with 1,2,3 mutually parallel.
inline matx::Matroid three_parallel_matroid() {
  return matx::validate_bases(4, F({{1, 4}, {2, 4}, {3, 4}}));
}

// Test-side rank oracle: size of a largest subset of A contained in a basis,
// by direct subset enumeration. Independent of the max|B∩A| path.
inline int brute_force_rank(const matx::Matroid& m, matx::ElemSet a) {
  const std::vector<int> elems = matx::elements_of(a);
  int best = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << elems.size());
       ++pick) {
    matx::ElemSet sub = 0;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if ((pick >> i) & 1) sub |= matx::elem_bit(elems[i]);
    if (matx::set_size(sub) <= best) continue;
    bool extendable = false;
    for (matx::Basis b : m.bases)
      if ((sub & ~b) == 0) {
        extendable = true;
        break;
      }
    if (extendable) best = matx::set_size(sub);
  }
  return best;
}

}  // namespace matx_test
