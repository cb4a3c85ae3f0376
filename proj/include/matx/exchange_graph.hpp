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

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matx/partition.hpp"

namespace matx {

enum class GraphKind { basis, complementary, kbase, kbase_modified };

inline const char* graph_kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::basis: return "basis";
    case GraphKind::complementary: return "complementary";
    case GraphKind::kbase: return "kbase";
    case GraphKind::kbase_modified: return "kbase-modified";
  }
  return "?";
}

// One of the paper-style graphs over a matroid: vertices are bases (basis,
// complementary, kbase_modified kinds) or unordered partitions into k bases
// (kbase kind). Edge lists hold index pairs i < j.
struct ExchangeGraph {
  GraphKind kind = GraphKind::basis;
  int k = 0;
  std::uint64_t matroid_hash = 0;
  std::vector<Basis> basis_vertices;
  std::vector<std::vector<Basis>> partition_vertices;
  std::vector<std::pair<int, int>> edges;

  std::size_t vertex_count() const {
    return kind == GraphKind::kbase ? partition_vertices.size()
                                    : basis_vertices.size();
  }
};

namespace detail {

// Neighboring bases share an (r-1)-subset, so bucketing by dropped element
// finds all symmetric-difference-2 pairs without a pairwise scan.
inline std::vector<std::pair<int, int>> neighbor_edges(
    const std::vector<Basis>& vertices) {
  std::unordered_map<Basis, std::vector<int>> buckets;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    for_each_element(vertices[static_cast<std::size_t>(i)], [&](int e) {
      buckets[vertices[static_cast<std::size_t>(i)] ^ elem_bit(e)].push_back(i);
    });
  std::vector<std::pair<int, int>> edges;
  for (const auto& [stem, members] : buckets) {
    (void)stem;
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        edges.emplace_back(std::min(members[a], members[b]),
                           std::max(members[a], members[b]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace detail

// Graph on all bases, adjacent when the symmetric difference has two
// elements.
inline ExchangeGraph basis_graph(const Matroid& m,
                                 std::size_t cap = 1'000'000) {
  if (m.bases.size() > cap)
    fail(Errc::vertex_cap_exceeded,
         std::to_string(m.bases.size()) + " bases exceed cap " +
             std::to_string(cap));
  ExchangeGraph g;
  g.kind = GraphKind::basis;
  g.matroid_hash = m.hash();
  g.basis_vertices = m.bases;
  g.edges = detail::neighbor_edges(g.basis_vertices);
  return g;
}

// Restriction of the basis graph to complementary bases. With modified=true
// (k=2 only) an edge joins every complementary basis with its complement.
inline ExchangeGraph complementary_basis_graph(const Matroid& m, int k,
                                               bool modified = false) {
  if (!is_k_matroid(m, k))
    fail(Errc::not_k_matroid,
         "matroid is not a " + std::to_string(k) + "-matroid");
  if (modified && k != 2)
    fail(Errc::invalid_argument, "modified graph is defined for k=2 only");
  ExchangeGraph g;
  g.kind = modified ? GraphKind::kbase_modified : GraphKind::complementary;
  g.k = k;
  g.matroid_hash = m.hash();
  for (Basis b : m.bases)
    if (detail::complement_partitions(m, b, k)) g.basis_vertices.push_back(b);
  g.edges = detail::neighbor_edges(g.basis_vertices);
  if (modified) {
    std::unordered_map<Basis, int> index;
    for (int i = 0; i < static_cast<int>(g.basis_vertices.size()); ++i)
      index[g.basis_vertices[static_cast<std::size_t>(i)]] = i;
    for (int i = 0; i < static_cast<int>(g.basis_vertices.size()); ++i) {
      const Basis b = g.basis_vertices[static_cast<std::size_t>(i)];
      const Basis comp = m.ground_mask & ~b;
      const auto it = index.find(comp);
      if (it == index.end())
        fail(Errc::internal, "complement of a complementary basis missing");
      if (i < it->second) g.edges.emplace_back(i, it->second);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  }
  return g;
}

// Graph on unordered partitions of E into k bases, adjacent when they share
// a block. The paper defines it for k >= 3; k=2 sits behind a flag.
inline ExchangeGraph k_base_graph(const Matroid& m, int k,
                                  bool allow_k2 = false,
                                  std::size_t cap = 1'000'000) {
  if (k < 3 && !(k == 2 && allow_k2))
    fail(Errc::invalid_argument,
         "k-base graph needs k >= 3 (k=2 only behind the flag)");
  if (!is_k_matroid(m, k))
    fail(Errc::not_k_matroid,
         "matroid is not a " + std::to_string(k) + "-matroid");
  ExchangeGraph g;
  g.kind = GraphKind::kbase;
  g.k = k;
  g.matroid_hash = m.hash();
  try {
    g.partition_vertices = enumerate_base_partitions(m, k, m.ground_mask, cap);
  } catch (const Error& e) {
    if (e.code() == Errc::cap_exceeded)
      fail(Errc::vertex_cap_exceeded,
           "k-base graph vertex cap " + std::to_string(cap) + " exceeded");
    throw;
  }
  std::unordered_map<Basis, std::vector<int>> by_block;
  for (int i = 0; i < static_cast<int>(g.partition_vertices.size()); ++i)
    for (Basis b : g.partition_vertices[static_cast<std::size_t>(i)])
      by_block[b].push_back(i);
  for (const auto& [block, members] : by_block) {
    (void)block;
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        g.edges.emplace_back(members[a], members[b]);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

struct GraphAnalysis {
  int component_count = 0;
  std::vector<int> component_sizes;  // descending
  bool is_connected = true;
  std::optional<int> diameter_of_largest;
  bool diameter_skipped = false;
};

inline GraphAnalysis analyze(const ExchangeGraph& g,
                             std::size_t diameter_threshold = 20'000) {
  const int n = static_cast<int>(g.vertex_count());
  GraphAnalysis out;
  if (n == 0) return out;
  detail::UnionFind uf(n);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : g.edges) {
    uf.merge(a, b);
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::map<int, int> sizes;
  for (int i = 0; i < n; ++i) ++sizes[uf.find(i)];
  for (const auto& [root, size] : sizes) {
    (void)root;
    out.component_sizes.push_back(size);
  }
  std::sort(out.component_sizes.rbegin(), out.component_sizes.rend());
  out.component_count = static_cast<int>(sizes.size());
  out.is_connected = out.component_count == 1;

  const int largest = out.component_sizes.front();
  if (static_cast<std::size_t>(largest) > diameter_threshold) {
    out.diameter_skipped = true;
    return out;
  }
  int largest_root = -1;
  for (const auto& [root, size] : sizes)
    if (size == largest) {
      largest_root = root;
      break;
    }
  int diameter = 0;
  std::vector<int> dist(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    if (uf.find(s) != largest_root) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      diameter = std::max(diameter, dist[static_cast<std::size_t>(u)]);
      for (int v : adj[static_cast<std::size_t>(u)])
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
    }
  }
  out.diameter_of_largest = diameter;
  return out;
}

}  // namespace matx
