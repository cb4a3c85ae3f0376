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

#include <deque>
#include <optional>
#include <vector>

#include "matx/matroid.hpp"

namespace matx {

// An ordered tuple of k pairwise disjoint bases covering the ground set.
struct BasePartition {
  std::vector<Basis> blocks;
};

// Witness for the failing direction of the matroid union theorem:
// k * rank(A) < |A|.
struct UnionViolation {
  ElemSet set = 0;
  int k = 0;
  int rank = 0;
};

// Partitions E into k disjoint bases when possible, by shortest augmenting
// paths in the exchange digraph over k copies of M. Deterministic: elements
// are inserted in increasing order and ties break toward the lowest index.
inline std::optional<BasePartition> partition_into_bases(const Matroid& m,
                                                         int k) {
  if (k < 1) fail(Errc::invalid_argument, "k must be >= 1");
  const int n = m.ground_size;
  if (static_cast<long long>(k) * m.rank != n) return std::nullopt;
  std::vector<ElemSet> part(static_cast<std::size_t>(k), 0);
  auto independent = [&](ElemSet s) { return rank(m, s) == set_size(s); };

  for (int x = 0; x < n; ++x) {
    // BFS from x; parent[y] = (prev element, copy index) meaning prev enters
    // part[copy] and y leaves it.
    std::vector<int> parent_elem(static_cast<std::size_t>(n), -2);
    std::vector<int> parent_copy(static_cast<std::size_t>(n), -1);
    parent_elem[static_cast<std::size_t>(x)] = -1;
    std::deque<int> queue{x};
    int terminal_elem = -1, terminal_copy = -1;
    while (!queue.empty() && terminal_elem < 0) {
      const int u = queue.front();
      queue.pop_front();
      for (int i = 0; i < k && terminal_elem < 0; ++i) {
        const ElemSet block = part[static_cast<std::size_t>(i)];
        if (contains(block, u)) continue;
        if (independent(block | elem_bit(u))) {
          terminal_elem = u;
          terminal_copy = i;
          break;
        }
        for_each_element(block, [&](int z) {
          if (parent_elem[static_cast<std::size_t>(z)] != -2) return;
          if (independent((block ^ elem_bit(z)) | elem_bit(u))) {
            parent_elem[static_cast<std::size_t>(z)] = u;
            parent_copy[static_cast<std::size_t>(z)] = i;
            queue.push_back(z);
          }
        });
      }
    }
    if (terminal_elem < 0) return std::nullopt;
    // Apply the augmenting path backwards.
    int v = terminal_elem;
    part[static_cast<std::size_t>(terminal_copy)] |= elem_bit(v);
    while (parent_elem[static_cast<std::size_t>(v)] != -1) {
      const int prev = parent_elem[static_cast<std::size_t>(v)];
      const int copy = parent_copy[static_cast<std::size_t>(v)];
      part[static_cast<std::size_t>(copy)] =
          (part[static_cast<std::size_t>(copy)] ^ elem_bit(v)) | elem_bit(prev);
      v = prev;
    }
    for (const ElemSet block : part)
      if (!independent(block))
        fail(Errc::internal, "augmenting step produced a dependent block");
  }
  return BasePartition{std::move(part)};
}

// Exhaustive search for a set violating k*rank(A) >= |A|. Ties break toward
// smaller sets, then lexicographically. The ground size is capped: the scan
// is 2^n.
inline std::optional<UnionViolation> violating_set(const Matroid& m, int k,
                                                   int cap = 20) {
  if (k < 1) fail(Errc::invalid_argument, "k must be >= 1");
  if (m.ground_size > cap)
    fail(Errc::cap_exceeded, "violating_set cap is n <= " + std::to_string(cap));
  bool found = false;
  ElemSet best = 0;
  int best_rank = 0;
  for (ElemSet a = 1; a <= m.ground_mask; ++a) {
    const int ra = rank(m, a);
    if (static_cast<long long>(k) * ra >= set_size(a)) continue;
    if (!found || set_size(a) < set_size(best) ||
        (set_size(a) == set_size(best) && lex_less(a, best))) {
      found = true;
      best = a;
      best_rank = ra;
    }
  }
  if (!found) return std::nullopt;
  return UnionViolation{best, k, best_rank};
}

inline bool is_k_matroid(const Matroid& m, int k) {
  if (k < 1) fail(Errc::invalid_argument, "k must be >= 1");
  if (static_cast<long long>(k) * m.rank != m.ground_size) return false;
  if (m.loops() != 0) return false;
  return partition_into_bases(m, k).has_value();
}

namespace detail {

// Complementarity test without re-validating that M is a k-matroid.
inline bool complement_partitions(const Matroid& m, Basis b, int k) {
  if (k == 1) return true;  // empty complement, empty partition
  try {
    const MinorResult res = minor(m, b, 0);
    return partition_into_bases(res.matroid, k - 1).has_value();
  } catch (const Error& e) {
    if (e.code() == Errc::rank_collapse) return false;
    throw;
  }
}

}  // namespace detail

// True iff the complement of B partitions into k-1 pairwise disjoint bases.
inline bool is_complementary(const Matroid& m, Basis b, int k) {
  if (!m.is_basis(b))
    fail(Errc::not_a_basis, format_set(b) + " is not a basis");
  if (!is_k_matroid(m, k))
    fail(Errc::not_k_matroid,
         "matroid is not a " + std::to_string(k) + "-matroid");
  return detail::complement_partitions(m, b, k);
}

namespace detail {

template <typename Fn>
bool partitions_rec(const std::vector<Basis>& candidates, ElemSet remaining,
                    int blocks_left, std::vector<Basis>& current, Fn&& emit) {
  if (remaining == 0) {
    return blocks_left == 0 ? emit(current) : true;
  }
  if (blocks_left == 0) return true;
  const ElemSet low = remaining & (~remaining + 1);
  ElemSet coverable = 0;
  for (Basis b : candidates)
    if ((b & ~remaining) == 0) coverable |= b;
  if (coverable != remaining) return true;  // some element unreachable
  for (Basis b : candidates) {
    if ((b & ~remaining) != 0 || !(b & low)) continue;
    current.push_back(b);
    const bool keep_going =
        partitions_rec(candidates, remaining & ~b, blocks_left - 1, current,
                       emit);
    current.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace detail

// Enumerates all unordered partitions of `region` into `blocks` bases of M
// lying inside the region. Emitted blocks are lex-increasing; the callback
// returns false to stop early. Visit order is deterministic.
template <typename Fn>
void for_each_base_partition(const Matroid& m, int blocks, ElemSet region,
                             Fn&& emit) {
  if (blocks < 0) fail(Errc::invalid_argument, "block count must be >= 0");
  if (region & ~m.ground_mask)
    fail(Errc::element_out_of_range, "region outside ground set");
  if (static_cast<long long>(blocks) * m.rank != set_size(region)) return;
  std::vector<Basis> current;
  detail::partitions_rec(m.bases, region, blocks, current, emit);
}

// All partitions as a list, capped.
inline std::vector<std::vector<Basis>> enumerate_base_partitions(
    const Matroid& m, int blocks, ElemSet region, std::size_t cap) {
  std::vector<std::vector<Basis>> out;
  for_each_base_partition(m, blocks, region, [&](const std::vector<Basis>& p) {
    if (out.size() >= cap)
      fail(Errc::cap_exceeded,
           "partition enumeration exceeds cap " + std::to_string(cap));
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace matx
