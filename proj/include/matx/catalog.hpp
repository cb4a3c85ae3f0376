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
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "matx/matroid.hpp"

namespace matx {

enum class CatalogMode { exhaustive, constructed };

struct CatalogEntry {
  std::string name;
  Matroid matroid;
};

namespace detail {

inline std::string zero_pad(int v, int width) {
  std::string s = std::to_string(v);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

// All r-subsets of [n] in lex order.
inline std::vector<ElemSet> r_subsets(int r, int n) {
  std::vector<ElemSet> out;
  if (r == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    ElemSet s = 0;
    for (int e : idx) s |= elem_bit(e);
    out.push_back(s);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

inline std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Exhaustive scan over all basis families of r-subsets of [n] satisfying the
// exchange axiom, reduced to lex-minimum representatives under ground-set
// relabeling.
inline std::vector<Matroid> exhaustive_rank_n(int r, int n) {
  const std::vector<ElemSet> subsets = r_subsets(r, n);
  const int c = static_cast<int>(subsets.size());
  if (c > 24) fail(Errc::cap_exceeded, "exhaustive family space too large");
  std::map<ElemSet, int> index;
  for (int i = 0; i < c; ++i) index[subsets[static_cast<std::size_t>(i)]] = i;

  // needed[a][b*r + t]: family bits whose presence satisfies the exchange
  // requirement for the t-th element of B_a \ B_b.
  std::vector<std::vector<std::uint32_t>> needed(
      static_cast<std::size_t>(c),
      std::vector<std::uint32_t>(static_cast<std::size_t>(c) *
                                 static_cast<std::size_t>(std::max(r, 1))));
  std::vector<std::vector<int>> out_count(
      static_cast<std::size_t>(c), std::vector<int>(static_cast<std::size_t>(c)));
  for (int a = 0; a < c; ++a) {
    for (int b = 0; b < c; ++b) {
      if (a == b) continue;
      const ElemSet ba = subsets[static_cast<std::size_t>(a)];
      const ElemSet bb = subsets[static_cast<std::size_t>(b)];
      int t = 0;
      for_each_element(ba & ~bb, [&](int e) {
        std::uint32_t mask = 0;
        for_each_element(bb & ~ba, [&](int f) {
          const auto it = index.find((ba ^ elem_bit(e)) | elem_bit(f));
          if (it != index.end()) mask |= 1u << it->second;
        });
        needed[static_cast<std::size_t>(a)]
              [static_cast<std::size_t>(b) * static_cast<std::size_t>(r) +
               static_cast<std::size_t>(t)] = mask;
        ++t;
      });
      out_count[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = t;
    }
  }

  // Relabeling action on subset indices.
  const std::vector<std::vector<int>> perms = permutations_of(n);
  std::vector<std::vector<int>> perm_subset(perms.size(),
                                            std::vector<int>(static_cast<std::size_t>(c)));
  for (std::size_t p = 0; p < perms.size(); ++p) {
    for (int i = 0; i < c; ++i) {
      ElemSet t = 0;
      for_each_element(subsets[static_cast<std::size_t>(i)], [&](int e) {
        t |= elem_bit(perms[p][static_cast<std::size_t>(e)]);
      });
      perm_subset[p][static_cast<std::size_t>(i)] = index.at(t);
    }
  }

  std::vector<Matroid> result;
  std::vector<int> members;
  const std::uint32_t limit = static_cast<std::uint32_t>(1) << c;
  for (std::uint32_t fam = 1; fam < limit; ++fam) {
    members.clear();
    for (std::uint32_t rest = fam; rest;) {
      const int i = std::countr_zero(rest);
      members.push_back(i);
      rest &= rest - 1;
    }
    bool ok = true;
    for (std::size_t ai = 0; ai < members.size() && ok; ++ai) {
      const int a = members[ai];
      for (std::size_t bi = 0; bi < members.size() && ok; ++bi) {
        const int b = members[bi];
        if (a == b) continue;
        const int cnt = out_count[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        for (int t = 0; t < cnt; ++t) {
          if ((fam &
               needed[static_cast<std::size_t>(a)]
                     [static_cast<std::size_t>(b) * static_cast<std::size_t>(r) +
                      static_cast<std::size_t>(t)]) == 0) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;
    // Keep only lex-minimum representatives under relabeling.
    bool canonical = true;
    for (std::size_t p = 0; p < perms.size() && canonical; ++p) {
      std::uint32_t image = 0;
      for (int i : members)
        image |= 1u << perm_subset[p][static_cast<std::size_t>(i)];
      if (image < fam) canonical = false;
    }
    if (!canonical) continue;
    std::vector<Basis> family;
    for (int i : members) family.push_back(subsets[static_cast<std::size_t>(i)]);
    result.push_back(make_matroid(n, std::move(family)));
  }
  return result;
}

// Connected multigraphs (no loops) on v labeled vertices with the given edge
// count, as multiplicity vectors over the vertex pairs, reduced to
// lex-minimum representatives under vertex relabeling.
inline std::vector<std::vector<std::pair<int, int>>> connected_multigraphs(
    int v, int edge_total) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
  const int np = static_cast<int>(pairs.size());
  std::map<std::pair<int, int>, int> pair_index;
  for (int i = 0; i < np; ++i) pair_index[pairs[static_cast<std::size_t>(i)]] = i;
  const std::vector<std::vector<int>> perms = permutations_of(v);

  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> counts(static_cast<std::size_t>(np), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == np) {
      if (remaining != 0) return;
      // Connectivity of the support.
      UnionFind uf(v);
      int comps = v;
      for (int i = 0; i < np; ++i)
        if (counts[static_cast<std::size_t>(i)] > 0 &&
            uf.merge(pairs[static_cast<std::size_t>(i)].first,
                     pairs[static_cast<std::size_t>(i)].second))
          --comps;
      if (comps != 1) return;
      // Canonical under vertex relabeling.
      for (const auto& perm : perms) {
        std::vector<int> image(static_cast<std::size_t>(np), 0);
        for (int i = 0; i < np; ++i) {
          if (counts[static_cast<std::size_t>(i)] == 0) continue;
          int a = perm[static_cast<std::size_t>(
              pairs[static_cast<std::size_t>(i)].first)];
          int b = perm[static_cast<std::size_t>(
              pairs[static_cast<std::size_t>(i)].second)];
          if (a > b) std::swap(a, b);
          image[static_cast<std::size_t>(pair_index.at({a, b}))] =
              counts[static_cast<std::size_t>(i)];
        }
        if (std::lexicographical_compare(image.begin(), image.end(),
                                         counts.begin(), counts.end()))
          return;  // a smaller relabeling exists
      }
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < np; ++i)
        for (int cpy = 0; cpy < counts[static_cast<std::size_t>(i)]; ++cpy)
          edges.push_back(pairs[static_cast<std::size_t>(i)]);
      out.push_back(std::move(edges));
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      counts[static_cast<std::size_t>(pos)] = take;
      self(self, pos + 1, remaining - take);
    }
    counts[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, edge_total);
  return out;
}

}  // namespace detail

// Lex-minimum relabeling of the basis family under ground-set permutations.
// Brute force, so capped at n <= 8.
inline Matroid canonical_relabel(const Matroid& m) {
  if (m.ground_size > 8)
    fail(Errc::cap_exceeded, "isomorphism dedup is limited to n <= 8");
  const auto perms = detail::permutations_of(m.ground_size);
  std::vector<Basis> best = m.bases;
  std::vector<Basis> mapped;
  for (const auto& perm : perms) {
    mapped.clear();
    for (Basis b : m.bases) {
      ElemSet t = 0;
      for_each_element(b, [&](int e) {
        t |= elem_bit(perm[static_cast<std::size_t>(e)]);
      });
      mapped.push_back(t);
    }
    std::sort(mapped.begin(), mapped.end(), lex_less);
    if (std::lexicographical_compare(mapped.begin(), mapped.end(),
                                     best.begin(), best.end(), lex_less))
      best = mapped;
  }
  return make_matroid(m.ground_size, std::move(best));
}

// Multigraphs on up to max_vertices vertices with exactly 2(v-1) edges, the
// candidate instances for graphic 2-matroids (edge sets that may split into
// two spanning trees). Callers filter with is_k_matroid.
inline std::vector<CatalogEntry> two_spanning_tree_graphs(int max_vertices) {
  std::vector<CatalogEntry> out;
  for (int v = 2; v <= std::min(max_vertices, 5); ++v) {
    const auto graphs = detail::connected_multigraphs(v, 2 * (v - 1));
    int i = 0;
    for (const auto& edges : graphs) {
      out.push_back(CatalogEntry{
          "g2t-v" + std::to_string(v) + "-" + detail::zero_pad(i, 3),
          graphic(v, edges)});
      ++i;
    }
  }
  return out;
}

// Deterministic catalog generator. Exhaustive mode enumerates every matroid
// of rank r on n = r..n_max elements up to relabeling (r <= 3, n_max <= 6).
// Constructed mode assembles uniforms, graphic matroids on up to five
// vertices, small GF(2)/GF(3) linear matroids, blow-ups, and truncations of
// rank r, deduplicated exactly.
inline std::vector<CatalogEntry> catalog_generate(CatalogMode mode, int r,
                                                  int n_max) {
  std::vector<CatalogEntry> out;
  if (mode == CatalogMode::exhaustive) {
    if (r < 1 || r > 3 || n_max > 6)
      fail(Errc::cap_exceeded,
           "exhaustive mode is limited to r <= 3 and n_max <= 6");
    for (int n = std::max(r, 1); n <= n_max; ++n) {
      const auto ms = detail::exhaustive_rank_n(r, n);
      int i = 0;
      for (const Matroid& m : ms) {
        out.push_back(CatalogEntry{"ex-r" + std::to_string(r) + "-n" +
                                       std::to_string(n) + "-" +
                                       detail::zero_pad(i, 4),
                                   m});
        ++i;
      }
    }
    return out;
  }

  std::map<std::pair<int, std::vector<Basis>>, bool> seen;
  auto add = [&](const std::string& name, const Matroid& m) {
    if (m.rank != r || m.ground_size > n_max) return;
    if (!seen.emplace(std::make_pair(m.ground_size, m.bases), true).second)
      return;
    out.push_back(CatalogEntry{name, m});
  };

  for (int n = r; n <= std::min(9, n_max); ++n)
    add("uniform-r" + std::to_string(r) + "-n" + std::to_string(n),
        uniform(r, n));

  // Connected simple graphs on r+1 vertices (rank r), up to isomorphism.
  const int v = r + 1;
  if (v >= 2 && v <= 5) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
    const auto perms = detail::permutations_of(v);
    std::map<std::pair<int, int>, int> pair_index;
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
      pair_index[pairs[static_cast<std::size_t>(i)]] = i;
    int gi = 0;
    for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
      detail::UnionFind uf(v);
      int comps = v;
      for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
        if ((mask >> i) & 1 &&
            uf.merge(pairs[static_cast<std::size_t>(i)].first,
                     pairs[static_cast<std::size_t>(i)].second))
          --comps;
      if (comps != 1) continue;
      bool canonical = true;
      for (const auto& perm : perms) {
        std::uint32_t image = 0;
        for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
          if (!((mask >> i) & 1)) continue;
          int a = perm[static_cast<std::size_t>(
              pairs[static_cast<std::size_t>(i)].first)];
          int b = perm[static_cast<std::size_t>(
              pairs[static_cast<std::size_t>(i)].second)];
          if (a > b) std::swap(a, b);
          image |= 1u << pair_index.at({a, b});
        }
        if (image < mask) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
        if ((mask >> i) & 1) edges.push_back(pairs[static_cast<std::size_t>(i)]);
      add("graphic-v" + std::to_string(v) + "-" + detail::zero_pad(gi, 3),
          graphic(v, edges));
      ++gi;
    }
  }

  for (const CatalogEntry& e : two_spanning_tree_graphs(v))
    add(e.name, e.matroid);

  // Small linear matroids: nondecreasing multisets of nonzero columns.
  auto add_linear = [&](int p, int rows, int max_cols,
                        const std::string& tag) {
    std::vector<std::vector<int>> columns;
    int total = 1;
    for (int i = 0; i < rows; ++i) total *= p;
    for (int code = 1; code < total; ++code) {
      std::vector<int> col(static_cast<std::size_t>(rows));
      int rest = code;
      for (int i = 0; i < rows; ++i) {
        col[static_cast<std::size_t>(i)] = rest % p;
        rest /= p;
      }
      columns.push_back(col);
    }
    int li = 0;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, int want) -> void {
      if (want == 0) {
        std::vector<std::vector<int>> mat(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i)
          for (int ci : pick)
            mat[static_cast<std::size_t>(i)].push_back(
                columns[static_cast<std::size_t>(ci)][static_cast<std::size_t>(i)]);
        const Matroid m = linear_gf(mat, p);
        if (m.rank == r)
          add(tag + "-" + detail::zero_pad(li++, 3), m);
        return;
      }
      for (int i = from; i < static_cast<int>(columns.size()); ++i) {
        pick.push_back(i);
        self(self, i, want - 1);
        pick.pop_back();
      }
    };
    for (int nc = std::max(rows, 1); nc <= max_cols; ++nc) rec(rec, 0, nc);
  };
  if (r >= 1 && r <= 3) add_linear(2, r, std::min(5, n_max), "gf2-r" + std::to_string(r));
  if (r >= 1 && r <= 2) add_linear(3, r, std::min(4, n_max), "gf3-r" + std::to_string(r));

  // Parallel extensions.
  if (2 * r <= n_max)
    add("blowup-ur" + std::to_string(r) + "-k2",
        blow_up(uniform(r, r), full_set(r), 2).matroid);
  if (3 * r <= n_max)
    add("blowup-ur" + std::to_string(r) + "-k3",
        blow_up(uniform(r, r), full_set(r), 3).matroid);
  if (r + 2 <= n_max)
    add("blowup-ur" + std::to_string(r) + "p1",
        blow_up(uniform(r, r + 1), elem_bit(0), 2).matroid);

  // Truncations of graphs one rank up.
  const int tv = r + 2;
  if (tv >= 3 && tv <= 5) {
    std::vector<std::pair<int, int>> complete;
    for (int a = 0; a < tv; ++a)
      for (int b = a + 1; b < tv; ++b) complete.emplace_back(a, b);
    add("trunc-k" + std::to_string(tv), truncate(graphic(tv, complete)));
  }
  return out;
}

}  // namespace matx
