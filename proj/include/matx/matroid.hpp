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
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matx/core.hpp"
#include "matx/error.hpp"

namespace matx {

// A matroid given by its explicit basis family. Immutable after construction;
// bases are lex-sorted and deduplicated, each an r-element subset of the
// ground mask. Elements are 0-based bit positions.
struct Matroid {
  int ground_size = 0;
  int rank = 0;
  ElemSet ground_mask = 0;
  std::vector<Basis> bases;
  std::unordered_set<Basis> basis_set;

  bool is_basis(Basis b) const { return basis_set.find(b) != basis_set.end(); }

  // Elements contained in no basis.
  ElemSet loops() const {
    ElemSet covered = 0;
    for (Basis b : bases) covered |= b;
    return ground_mask & ~covered;
  }

  std::uint64_t hash() const {
    std::uint64_t h = fnv1a64(&ground_size, sizeof(ground_size));
    h = hash_mix(h, static_cast<std::uint64_t>(rank));
    for (Basis b : bases) h = hash_mix(h, b);
    return h;
  }

  bool operator==(const Matroid& o) const {
    return ground_size == o.ground_size && bases == o.bases;
  }
};

// Canonicalizes a basis family into a Matroid without checking the exchange
// axiom. For constructors whose output is a matroid by construction.
inline Matroid make_matroid(int n, std::vector<Basis> family) {
  Matroid m;
  m.ground_size = n;
  m.ground_mask = full_set(n);
  std::sort(family.begin(), family.end(), lex_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  m.bases = std::move(family);
  m.rank = m.bases.empty() ? 0 : set_size(m.bases.front());
  m.basis_set.reserve(m.bases.size() * 2);
  for (Basis b : m.bases) m.basis_set.insert(b);
  return m;
}

// Checks the basis exchange axiom over a canonical family; throws the first
// violation found in scan order (lex pairs, ascending e).
inline void check_exchange_axiom(const Matroid& m) {
  for (Basis b1 : m.bases) {
    for (Basis b2 : m.bases) {
      if (b1 == b2) continue;
      ElemSet out = b1 & ~b2;
      ElemSet in = b2 & ~b1;
      bool bad = false;
      int bad_e = -1;
      for_each_element(out, [&](int e) {
        if (bad) return;
        const Basis stem = b1 ^ elem_bit(e);
        bool found = false;
        for_each_element(in, [&](int f) {
          if (!found && m.is_basis(stem | elem_bit(f))) found = true;
        });
        if (!found) {
          bad = true;
          bad_e = e;
        }
      });
      if (bad) {
        Error err(Errc::exchange_axiom_failure,
                  "no exchange for element " + std::to_string(bad_e + 1) +
                      " of " + format_set(b1) + " against " + format_set(b2));
        err.set_a = b1;
        err.set_b = b2;
        err.element = bad_e;
        throw err;
      }
    }
  }
}

inline Matroid validate_bases(int n, const std::vector<ElemSet>& family) {
  if (n < 1) fail(Errc::invalid_argument, "ground size must be positive");
  if (n > kGroundCap)
    fail(Errc::ground_set_too_large,
         "ground size " + std::to_string(n) + " exceeds cap " +
             std::to_string(kGroundCap));
  if (family.empty()) fail(Errc::empty_family, "basis family is empty");
  const ElemSet ground = full_set(n);
  for (ElemSet b : family) {
    if (b & ~ground) {
      Error err(Errc::element_out_of_range,
                "basis " + format_set(b) + " leaves ground set of size " +
                    std::to_string(n));
      err.set_a = b;
      throw err;
    }
  }
  const int r = set_size(family.front());
  for (ElemSet b : family) {
    if (set_size(b) != r) {
      Error err(Errc::unequal_cardinality,
                format_set(family.front()) + " and " + format_set(b) +
                    " have different sizes");
      err.set_a = family.front();
      err.set_b = b;
      throw err;
    }
  }
  Matroid m = make_matroid(n, family);
  check_exchange_axiom(m);
  return m;
}

// rank(A) = max over bases of |B ∩ A|; exact for matroids with explicit
// basis lists, short-circuiting at min(|A|, r).
inline int rank(const Matroid& m, ElemSet a) {
  if (a & ~m.ground_mask)
    fail(Errc::element_out_of_range,
         "subset " + format_set(a & ~m.ground_mask) + " outside ground set");
  const int cap = std::min(set_size(a), m.rank);
  int best = 0;
  for (Basis b : m.bases) {
    best = std::max(best, set_size(b & a));
    if (best == cap) break;
  }
  return best;
}

inline bool is_independent(const Matroid& m, ElemSet a) {
  return rank(m, a) == set_size(a);
}

inline Matroid uniform(int r, int n) {
  if (n < 1) fail(Errc::invalid_argument, "ground size must be positive");
  if (r < 0 || r > n)
    fail(Errc::invalid_rank,
         "rank " + std::to_string(r) + " not in [0," + std::to_string(n) + "]");
  if (n > kGroundCap) fail(Errc::ground_set_too_large, "n exceeds cap");
  std::vector<Basis> family;
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  if (r == 0) {
    family.push_back(0);
  } else {
    for (;;) {
      ElemSet b = 0;
      for (int e : idx) b |= elem_bit(e);
      family.push_back(b);
      int i = r - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return make_matroid(n, std::move(family));
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

inline void forest_search(const std::vector<std::pair<int, int>>& edges,
                          int start, const UnionFind& uf, ElemSet chosen,
                          int count, int target, std::vector<Basis>& out) {
  if (count == target) {
    out.push_back(chosen);
    return;
  }
  const int m = static_cast<int>(edges.size());
  for (int i = start; i < m; ++i) {
    if (m - i < target - count) break;
    const auto [u, v] = edges[static_cast<std::size_t>(i)];
    if (u == v) continue;
    UnionFind next = uf;
    if (!next.merge(u, v)) continue;
    forest_search(edges, i + 1, next, chosen | elem_bit(i), count + 1, target,
                  out);
  }
}

}  // namespace detail

// Graphic matroid on the edge list (0-based vertices; loops and multi-edges
// allowed). Bases are the maximum spanning forests; rank = vertices minus
// connected components.
inline Matroid graphic(int vertex_count,
                       const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 1) fail(Errc::empty_graph, "graph has no vertices");
  if (edges.empty()) fail(Errc::empty_graph, "graph has no edges");
  if (static_cast<int>(edges.size()) > kGroundCap)
    fail(Errc::ground_set_too_large, "edge count exceeds cap");
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      fail(Errc::element_out_of_range, "edge endpoint outside vertex range");
  }
  detail::UnionFind uf(vertex_count);
  int components = vertex_count;
  for (const auto& [u, v] : edges) {
    if (u != v && uf.merge(u, v)) --components;
  }
  const int rank = vertex_count - components;
  std::vector<Basis> family;
  detail::forest_search(edges, 0, detail::UnionFind(vertex_count), 0, 0, rank,
                        family);
  return make_matroid(static_cast<int>(edges.size()), std::move(family));
}

namespace detail {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Rank of the column-submatrix selected by `cols` over GF(p).
inline int gf_rank(const std::vector<std::vector<int>>& rows, int p,
                   const std::vector<int>& cols) {
  const std::size_t nr = rows.size();
  const std::size_t nc = cols.size();
  std::vector<std::vector<int>> a(nr, std::vector<int>(nc));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      a[i][j] = ((rows[i][static_cast<std::size_t>(cols[j])] % p) + p) % p;
  int rank = 0;
  for (std::size_t col = 0; col < nc && rank < static_cast<int>(nr); ++col) {
    std::size_t pivot = nr;
    for (std::size_t i = static_cast<std::size_t>(rank); i < nr; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot == nr) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[pivot]);
    int inv = 1;
    // Fermat inverse.
    for (int e = p - 2, base = a[static_cast<std::size_t>(rank)][col]; e > 0;
         e >>= 1) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
    }
    for (std::size_t j = col; j < nc; ++j)
      a[static_cast<std::size_t>(rank)][j] =
          a[static_cast<std::size_t>(rank)][j] * inv % p;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == static_cast<std::size_t>(rank) || a[i][col] == 0) continue;
      const int factor = a[i][col];
      for (std::size_t j = col; j < nc; ++j)
        a[i][j] = ((a[i][j] - factor * a[static_cast<std::size_t>(rank)][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Linear matroid of the matrix columns over GF(p).
inline Matroid linear_gf(const std::vector<std::vector<int>>& rows, int p) {
  if (!detail::is_prime(p)) fail(Errc::non_prime_modulus, std::to_string(p));
  if (rows.empty() || rows.front().empty())
    fail(Errc::invalid_argument, "matrix must be nonempty");
  const std::size_t n = rows.front().size();
  for (const auto& row : rows)
    if (row.size() != n) fail(Errc::invalid_argument, "ragged matrix rows");
  if (static_cast<int>(n) > kGroundCap)
    fail(Errc::ground_set_too_large, "column count exceeds cap");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  const int r = detail::gf_rank(rows, p, all);
  std::vector<Basis> family;
  if (r == 0) {
    family.push_back(0);
  } else {
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      if (detail::gf_rank(rows, p, idx) == r) {
        ElemSet b = 0;
        for (int e : idx) b |= elem_bit(e);
        family.push_back(b);
      }
      int i = r - 1;
      while (i >= 0 &&
             idx[static_cast<std::size_t>(i)] == static_cast<int>(n) - r + i)
        --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return make_matroid(static_cast<int>(n), std::move(family));
}

struct MinorResult {
  Matroid matroid;
  std::vector<int> old_to_new;  // -1 for deleted/contracted elements
  std::vector<int> new_to_old;
};

// M \ del / contract, re-indexed onto 0..n'-1 in increasing element order.
inline MinorResult minor(const Matroid& m, ElemSet del, ElemSet contract) {
  if (del & contract)
    fail(Errc::overlapping_arguments,
         "delete and contract sets share " + format_set(del & contract));
  if ((del | contract) & ~m.ground_mask)
    fail(Errc::element_out_of_range, "minor arguments outside ground set");
  if (rank(m, contract) != set_size(contract))
    fail(Errc::dependent_contraction,
         format_set(contract) + " is dependent");
  const ElemSet kept = m.ground_mask & ~(del | contract);
  std::vector<int> old_to_new(static_cast<std::size_t>(m.ground_size), -1);
  std::vector<int> new_to_old;
  for_each_element(kept, [&](int e) {
    old_to_new[static_cast<std::size_t>(e)] = static_cast<int>(new_to_old.size());
    new_to_old.push_back(e);
  });
  std::vector<Basis> family;
  for (Basis b : m.bases) {
    if (b & del) continue;
    if ((b & contract) != contract) continue;
    ElemSet nb = 0;
    for_each_element(b & ~contract, [&](int e) {
      nb |= elem_bit(old_to_new[static_cast<std::size_t>(e)]);
    });
    family.push_back(nb);
  }
  if (family.empty())
    fail(Errc::rank_collapse, "no basis survives the minor operation");
  MinorResult out{make_matroid(static_cast<int>(new_to_old.size()),
                               std::move(family)),
                  std::move(old_to_new), std::move(new_to_old)};
  return out;
}

// Ground-set map from a source matroid onto a target of equal rank. Valid
// when every choice of representatives over any target basis's preimages is
// a source basis.
struct MatroidMorphism {
  Matroid source;
  Matroid target;
  std::vector<int> map;  // source element -> target element

  ElemSet image(Basis b) const {
    ElemSet out = 0;
    for_each_element(b, [&](int e) {
      out |= elem_bit(map[static_cast<std::size_t>(e)]);
    });
    return out;
  }
};

struct MorphismCheck {
  bool ok = true;
  Basis target_basis = 0;   // witness on failure
  ElemSet witness_choice = 0;
};

inline MorphismCheck verify_morphism(const MatroidMorphism& psi) {
  if (static_cast<int>(psi.map.size()) != psi.source.ground_size)
    fail(Errc::invalid_argument, "morphism map is not total");
  for (int t : psi.map)
    if (t < 0 || t >= psi.target.ground_size)
      fail(Errc::element_out_of_range, "morphism image outside target ground");
  if (psi.source.rank != psi.target.rank)
    fail(Errc::invalid_argument, "morphism requires equal ranks");
  std::vector<std::vector<int>> preimage(
      static_cast<std::size_t>(psi.target.ground_size));
  for (int e = 0; e < psi.source.ground_size; ++e)
    preimage[static_cast<std::size_t>(psi.map[static_cast<std::size_t>(e)])]
        .push_back(e);
  for (Basis tb : psi.target.bases) {
    std::vector<const std::vector<int>*> classes;
    bool empty_class = false;
    for_each_element(tb, [&](int t) {
      const auto& cls = preimage[static_cast<std::size_t>(t)];
      if (cls.empty()) empty_class = true;
      classes.push_back(&cls);
    });
    if (empty_class) return MorphismCheck{false, tb, 0};
    std::vector<std::size_t> pick(classes.size(), 0);
    for (;;) {
      ElemSet choice = 0;
      for (std::size_t i = 0; i < classes.size(); ++i)
        choice |= elem_bit((*classes[i])[pick[i]]);
      if (!psi.source.is_basis(choice)) return MorphismCheck{false, tb, choice};
      std::size_t i = 0;
      while (i < classes.size() && pick[i] + 1 == classes[i]->size()) {
        pick[i] = 0;
        ++i;
      }
      if (i == classes.size()) break;
      ++pick[i];
    }
  }
  return MorphismCheck{};
}

struct BlowUpResult {
  Matroid matroid;
  MatroidMorphism morphism;  // blow-up -> original, collapsing parallel copies
};

// Replaces every element of A by k parallel copies. Copies of element e are
// consecutive in the new indexing, elements ordered as in M.
inline BlowUpResult blow_up(const Matroid& m, ElemSet a, int k) {
  if (k < 1) fail(Errc::invalid_argument, "multiplicity must be >= 1");
  if (a & ~m.ground_mask)
    fail(Errc::element_out_of_range, "blow-up set outside ground set");
  const long long n2 =
      m.ground_size + static_cast<long long>(set_size(a)) * (k - 1);
  if (n2 > kGroundCap)
    fail(Errc::ground_set_too_large,
         "blow-up ground size " + std::to_string(n2) + " exceeds cap");
  std::vector<std::vector<int>> copies(static_cast<std::size_t>(m.ground_size));
  std::vector<int> to_old;
  for (int e = 0; e < m.ground_size; ++e) {
    const int reps = contains(a, e) ? k : 1;
    for (int c = 0; c < reps; ++c) {
      copies[static_cast<std::size_t>(e)].push_back(
          static_cast<int>(to_old.size()));
      to_old.push_back(e);
    }
  }
  std::vector<Basis> family;
  std::vector<int> elems;
  for (Basis b : m.bases) {
    elems = elements_of(b);
    std::vector<std::size_t> pick(elems.size(), 0);
    for (;;) {
      ElemSet nb = 0;
      for (std::size_t i = 0; i < elems.size(); ++i)
        nb |= elem_bit(copies[static_cast<std::size_t>(elems[i])][pick[i]]);
      family.push_back(nb);
      std::size_t i = 0;
      while (i < elems.size() &&
             pick[i] + 1 == copies[static_cast<std::size_t>(elems[i])].size()) {
        pick[i] = 0;
        ++i;
      }
      if (i == elems.size()) break;
      ++pick[i];
    }
  }
  Matroid blown = make_matroid(static_cast<int>(to_old.size()), std::move(family));
  MatroidMorphism psi{blown, m, std::move(to_old)};
  return BlowUpResult{std::move(blown), std::move(psi)};
}

struct ExchangeWitness {
  int e = -1;
  int f = -1;
  Basis b1_after = 0;
  Basis b2_after = 0;
};

// All f in B2\B1 completing a symmetric exchange with e in B1\B2. Nonempty
// for every valid matroid; an empty result signals corrupted basis data.
inline std::vector<ExchangeWitness> symmetric_exchange_partners(
    const Matroid& m, Basis b1, Basis b2, int e) {
  if (!m.is_basis(b1) || !m.is_basis(b2))
    fail(Errc::not_a_basis,
         (m.is_basis(b1) ? format_set(b2) : format_set(b1)) + " is not a basis");
  if (!(b1 & ~b2 & elem_bit(e)))
    fail(Errc::invalid_argument,
         "element " + std::to_string(e + 1) + " is not in B1\\B2");
  std::vector<ExchangeWitness> out;
  const Basis stem1 = b1 ^ elem_bit(e);
  for_each_element(b2 & ~b1, [&](int f) {
    const Basis nb1 = stem1 | elem_bit(f);
    const Basis nb2 = (b2 ^ elem_bit(f)) | elem_bit(e);
    if (m.is_basis(nb1) && m.is_basis(nb2))
      out.push_back(ExchangeWitness{e, f, nb1, nb2});
  });
  if (out.empty()) {
    Error err(Errc::element_not_exchangeable,
              "no symmetric exchange for " + std::to_string(e + 1) +
                  " between " + format_set(b1) + " and " + format_set(b2));
    err.set_a = b1;
    err.set_b = b2;
    err.element = e;
    throw err;
  }
  return out;
}

// Truncation: bases become the (r-1)-element independent sets.
inline Matroid truncate(const Matroid& m) {
  if (m.rank < 1) fail(Errc::invalid_rank, "cannot truncate a rank-0 matroid");
  std::vector<Basis> family;
  for (Basis b : m.bases)
    for_each_element(b, [&](int e) { family.push_back(b ^ elem_bit(e)); });
  return make_matroid(m.ground_size, std::move(family));
}

}  // namespace matx
