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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matx/catalog.hpp"
#include "matx/exchange_graph.hpp"
#include "matx/fiber.hpp"
#include "matx/partition.hpp"
#include "matx/workers.hpp"

namespace matx {

struct ConnectivityReport {
  bool connected = false;
  ExchangeGraph graph;
  GraphAnalysis analysis;
};

// Conjecture: the complementary basis graph of a k-matroid is connected.
// A disconnection here would be a refuting counterexample, so the whole
// graph is returned for persistence.
inline ConnectivityReport check_complementary_connected(const Matroid& m,
                                                        int k) {
  ConnectivityReport out;
  out.graph = complementary_basis_graph(m, k);
  out.analysis = analyze(out.graph);
  out.connected = out.analysis.is_connected;
  return out;
}

struct Kr1Witness {
  std::vector<Basis> partition_x;
  std::vector<Basis> partition_y;
  Basis shared = 0;
};

enum class Kr1Status { holds, fails, not_applicable };

struct Kr1Result {
  Kr1Status status = Kr1Status::not_applicable;
  std::optional<Kr1Witness> witness;
};

// Conjecture on ground sets of size kr+1: partitions of E\x and E\y into k
// disjoint bases can be chosen sharing a block. Exhaustive over all
// partitions of both sides, capped.
inline Kr1Result check_kr_plus_1(const Matroid& m, int k, int x, int y,
                                 std::size_t cap = 1'000'000) {
  if (k < 1) fail(Errc::invalid_argument, "k must be >= 1");
  if (static_cast<long long>(k) * m.rank + 1 != m.ground_size)
    fail(Errc::size_mismatch, "ground size must be k*r + 1");
  if (x == y || x < 0 || y < 0 || x >= m.ground_size || y >= m.ground_size)
    fail(Errc::invalid_argument, "x and y must be distinct ground elements");
  const ElemSet region_x = m.ground_mask & ~elem_bit(x);
  const ElemSet region_y = m.ground_mask & ~elem_bit(y);

  std::vector<std::vector<Basis>> parts_x =
      enumerate_base_partitions(m, k, region_x, cap);
  if (parts_x.empty()) return Kr1Result{};
  // First partition of E\x containing each block, for witness quality.
  std::unordered_map<Basis, int> first_with_block;
  for (int i = 0; i < static_cast<int>(parts_x.size()); ++i)
    for (Basis b : parts_x[static_cast<std::size_t>(i)])
      first_with_block.emplace(b, i);

  bool y_side_nonempty = false;
  std::optional<Kr1Witness> witness;
  for_each_base_partition(m, k, region_y, [&](const std::vector<Basis>& py) {
    y_side_nonempty = true;
    for (Basis b : py) {
      const auto it = first_with_block.find(b);
      if (it != first_with_block.end()) {
        witness = Kr1Witness{parts_x[static_cast<std::size_t>(it->second)], py,
                             b};
        return false;
      }
    }
    return true;
  });
  if (!y_side_nonempty) return Kr1Result{};
  if (witness) return Kr1Result{Kr1Status::holds, std::move(witness)};
  return Kr1Result{Kr1Status::fails, std::nullopt};
}

struct BoundAudit {
  long count = 0;
  unsigned long long bound = 0;
  bool ok = false;
};

namespace detail {

inline unsigned long long saturating_factorial(int n) {
  unsigned long long out = 1;
  for (int i = 2; i <= n; ++i) {
    if (out > ~0ull / static_cast<unsigned long long>(i)) return ~0ull;
    out *= static_cast<unsigned long long>(i);
  }
  return out;
}

}  // namespace detail

// Audits the theorem that among k-s pairwise disjoint bases of a k-matroid
// at most r(r+2)! + s(r+1)! are not complementary. ok=false would contradict
// a theorem and therefore flags an implementation bug.
inline BoundAudit audit_noncomplementary_bound(const Matroid& m, int k, int s,
                                               const std::vector<Basis>& d) {
  if (s < 0 || static_cast<int>(d.size()) != k - s)
    fail(Errc::invalid_argument, "need |D| = k - s with s >= 0");
  if (!is_k_matroid(m, k))
    fail(Errc::not_k_matroid,
         "matroid is not a " + std::to_string(k) + "-matroid");
  ElemSet seen = 0;
  for (Basis b : d) {
    if (!m.is_basis(b)) fail(Errc::not_a_basis, format_set(b) + " is not a basis");
    if (seen & b)
      fail(Errc::not_disjoint, "bases overlap on " + format_set(seen & b));
    seen |= b;
  }
  BoundAudit out;
  for (Basis b : d)
    if (!detail::complement_partitions(m, b, k)) ++out.count;
  const unsigned long long r = static_cast<unsigned long long>(m.rank);
  out.bound = r * detail::saturating_factorial(m.rank + 2) +
              static_cast<unsigned long long>(s) *
                  detail::saturating_factorial(m.rank + 1);
  out.ok = static_cast<unsigned long long>(out.count) <= out.bound;
  return out;
}

// A labeling of disjoint bases certifying that they contain the blow-up of
// the first basis (in B1 ∪ F when F is nonempty): every basis gets all r
// labels, B1's own elements are fixed, and every mixed choice that should be
// a basis is one.
struct BlowupLabeling {
  std::vector<Basis> bases;
  ElemSet untouched = 0;          // F
  std::vector<int> label;         // element -> label in [0, r); -1 elsewhere
};

namespace detail {

struct BlowupSearch {
  const Matroid& m;
  int r;
  ElemSet f_mask;
  std::vector<Basis> target_bases;             // bases inside B1 ∪ F
  std::vector<std::vector<int>> classes;       // label -> assigned elements
  std::vector<int> label;                      // element -> label or -1
  std::vector<int> order;                      // assignment order
  std::vector<int> basis_of;                   // element -> index in Bs

  // Checks every fully-assigned representative choice that includes the
  // newly labeled element x against the basis set.
  bool consistent_after(int x) {
    const int lx = label[static_cast<std::size_t>(x)];
    for (Basis tb : target_bases) {
      ElemSet s_part = tb & ~f_mask;
      if (!(s_part & classes_key(lx))) continue;
      // Representative choices over the labels of s_part, x fixed for lx.
      std::vector<const std::vector<int>*> pools;
      for_each_element(s_part, [&](int b1_elem) {
        const int lb = label[static_cast<std::size_t>(b1_elem)];
        if (lb != lx) pools.push_back(&classes[static_cast<std::size_t>(lb)]);
      });
      const ElemSet t_part = tb & f_mask;
      std::vector<std::size_t> pick(pools.size(), 0);
      for (;;) {
        ElemSet choice = elem_bit(x) | t_part;
        for (std::size_t i = 0; i < pools.size(); ++i)
          choice |= elem_bit((*pools[i])[pick[i]]);
        if (!m.is_basis(choice)) return false;
        std::size_t i = 0;
        while (i < pools.size() && pick[i] + 1 == pools[i]->size()) {
          pick[i] = 0;
          ++i;
        }
        if (i == pools.size()) break;
        ++pick[i];
      }
    }
    return true;
  }

  ElemSet classes_key(int lb) {
    ElemSet s = 0;
    for (int e : classes[static_cast<std::size_t>(lb)])
      if (basis_of[static_cast<std::size_t>(e)] == 0) s |= elem_bit(e);
    return s;
  }

  bool search(std::size_t pos, std::vector<ElemSet>& used_labels) {
    if (pos == order.size()) return true;
    const int x = order[pos];
    const int bi = basis_of[static_cast<std::size_t>(x)];
    for (int lb = 0; lb < r; ++lb) {
      if (contains(used_labels[static_cast<std::size_t>(bi)], lb)) continue;
      label[static_cast<std::size_t>(x)] = lb;
      classes[static_cast<std::size_t>(lb)].push_back(x);
      used_labels[static_cast<std::size_t>(bi)] |= elem_bit(lb);
      if (consistent_after(x) && search(pos + 1, used_labels)) return true;
      used_labels[static_cast<std::size_t>(bi)] &= ~elem_bit(lb);
      classes[static_cast<std::size_t>(lb)].pop_back();
      label[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  }
};

}  // namespace detail

// Searches for a labeling witnessing that the disjoint bases Bs contain the
// |Bs|-th blow-up of Bs[0] in Bs[0] ∪ F. Elements of Bs[0] keep their own
// labels; other elements are assigned by backtracking, most-constrained
// first.
inline std::optional<BlowupLabeling> detect_blowup_containment(
    const Matroid& m, const std::vector<Basis>& bs, ElemSet f = 0) {
  if (bs.empty()) fail(Errc::invalid_argument, "need at least one basis");
  ElemSet covered = 0;
  for (Basis b : bs) {
    if (!m.is_basis(b)) fail(Errc::not_a_basis, format_set(b) + " is not a basis");
    if (covered & b)
      fail(Errc::not_disjoint, "bases overlap on " + format_set(covered & b));
    covered |= b;
  }
  if (f & covered)
    fail(Errc::not_disjoint, "F meets the bases on " + format_set(f & covered));
  if (f & ~m.ground_mask)
    fail(Errc::element_out_of_range, "F outside ground set");

  const int r = m.rank;
  detail::BlowupSearch search{
      m, r, f, {}, {}, {}, {}, {}};
  search.label.assign(static_cast<std::size_t>(m.ground_size), -1);
  search.basis_of.assign(static_cast<std::size_t>(m.ground_size), -1);
  search.classes.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < static_cast<int>(bs.size()); ++i)
    for_each_element(bs[static_cast<std::size_t>(i)], [&](int e) {
      search.basis_of[static_cast<std::size_t>(e)] = i;
    });
  // B1's elements carry labels 0..r-1 in element order.
  {
    int lb = 0;
    for_each_element(bs.front(), [&](int e) {
      search.label[static_cast<std::size_t>(e)] = lb;
      search.classes[static_cast<std::size_t>(lb)].push_back(e);
      ++lb;
    });
  }
  // Target bases: all bases of M inside B1 ∪ F.
  const ElemSet target_region = bs.front() | f;
  for (Basis b : m.bases)
    if ((b & ~target_region) == 0) search.target_bases.push_back(b);

  // Assignment order: most-constrained elements (those in the most
  // non-bases within the region) first, ties by element index.
  std::vector<int> rest;
  for (int i = 1; i < static_cast<int>(bs.size()); ++i)
    for_each_element(bs[static_cast<std::size_t>(i)],
                     [&](int e) { rest.push_back(e); });
  const ElemSet region = covered | f;
  std::vector<long> constraint(static_cast<std::size_t>(m.ground_size), 0);
  {
    const std::vector<int> elems = elements_of(region);
    const int nr = static_cast<int>(elems.size());
    double combos = 1;
    for (int i = 0; i < r && combos <= 2e5; ++i) combos *= nr;
    if (r >= 1 && combos <= 2e5) {
      std::function<void(int, int, ElemSet)> walk = [&](int from, int depth,
                                                        ElemSet acc) {
        if (depth == r) {
          if (!m.is_basis(acc))
            for_each_element(acc, [&](int e) {
              ++constraint[static_cast<std::size_t>(e)];
            });
          return;
        }
        for (int i = from; i < nr; ++i)
          walk(i + 1, depth + 1, acc | elem_bit(elems[static_cast<std::size_t>(i)]));
      };
      walk(0, 0, 0);
    }
  }
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    if (constraint[static_cast<std::size_t>(a)] !=
        constraint[static_cast<std::size_t>(b)])
      return constraint[static_cast<std::size_t>(a)] >
             constraint[static_cast<std::size_t>(b)];
    return a < b;
  });
  search.order = rest;

  std::vector<ElemSet> used_labels(bs.size(), 0);
  used_labels.front() = full_set(r);
  if (!search.search(0, used_labels)) return std::nullopt;
  return BlowupLabeling{bs, f, search.label};
}

enum class ScanStatus { pass, fail, skip, not_applicable };

inline const char* scan_status_name(ScanStatus s) {
  switch (s) {
    case ScanStatus::pass: return "pass";
    case ScanStatus::fail: return "fail";
    case ScanStatus::skip: return "skip";
    case ScanStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

struct ScanItem {
  std::string matroid;
  std::string check;
  ScanStatus status = ScanStatus::skip;
  std::string detail;
};

struct ScanReport {
  std::vector<ScanItem> items;
  long pass = 0;
  long fail = 0;
  long skipped = 0;
  long not_applicable = 0;
  std::string note;
};

// Bounded instance scan behind Corollary 1.5: per catalog entry of the given
// rank, connectivity of the k-base graph (k >= 3) or the plain and modified
// complementary graphs (k = 2), plus per-degree fiber connectivity under all
// three move variants. Items hitting a cap become skips. The full
// decidability procedure needs k up to (r+3)!, far beyond desk scale; this
// scan is explicitly a truncation.
inline ScanReport corollary_scan(const std::vector<CatalogEntry>& catalog,
                                 int r, const std::vector<int>& k_range,
                                 const std::vector<int>& d_range,
                                 std::size_t cap = 1'000'000, int workers = 1) {
  struct Task {
    const CatalogEntry* entry;
    enum { graph_check, white_check } type;
    int k = 0;
    bool modified = false;
    int d = 0;
    MoveVariant variant = MoveVariant::W2;
    std::string name;
  };
  std::vector<Task> tasks;
  for (const CatalogEntry& e : catalog) {
    if (e.matroid.rank != r) continue;
    for (int k : k_range) {
      if (k == 2) {
        tasks.push_back(Task{&e, Task::graph_check, 2, false, 0,
                             MoveVariant::W2, "comp-k2"});
        tasks.push_back(Task{&e, Task::graph_check, 2, true, 0,
                             MoveVariant::W2, "comp-modified-k2"});
      } else if (k >= 3) {
        tasks.push_back(Task{&e, Task::graph_check, k, false, 0,
                             MoveVariant::W2, "kbase-k" + std::to_string(k)});
      }
    }
    for (int d : d_range) {
      for (MoveVariant v :
           {MoveVariant::W1, MoveVariant::W2, MoveVariant::W3}) {
        tasks.push_back(Task{&e, Task::white_check, 0, false, d, v,
                             std::string("white-") + variant_name(v) + "-d" +
                                 std::to_string(d)});
      }
    }
  }
  std::vector<ScanItem> items(tasks.size());
  parallel_for(tasks.size(), workers, [&](std::size_t i) {
    const Task& t = tasks[i];
    ScanItem item;
    item.matroid = t.entry->name;
    item.check = t.name;
    try {
      if (t.type == Task::graph_check) {
        if (!is_k_matroid(t.entry->matroid, t.k)) {
          item.status = ScanStatus::not_applicable;
          item.detail = "not a " + std::to_string(t.k) + "-matroid";
        } else {
          const ExchangeGraph g =
              t.k == 2 ? complementary_basis_graph(t.entry->matroid, 2,
                                                   t.modified)
                       : k_base_graph(t.entry->matroid, t.k, false, cap);
          const GraphAnalysis a = analyze(g);
          item.status = a.is_connected ? ScanStatus::pass : ScanStatus::fail;
          item.detail = std::to_string(g.vertex_count()) + " vertices, " +
                        std::to_string(g.edges.size()) + " edges, " +
                        std::to_string(a.component_count) + " components";
        }
      } else {
        const FiberReport r2 = check_white_degree(t.entry->matroid, t.d,
                                                  t.variant, cap, 1);
        item.status =
            r2.all_connected() ? ScanStatus::pass : ScanStatus::fail;
        item.detail = std::to_string(r2.fibers_connected) + "/" +
                      std::to_string(r2.fibers_total) + " fibers connected";
      }
    } catch (const Error& err) {
      if (err.code() == Errc::cap_exceeded ||
          err.code() == Errc::vertex_cap_exceeded ||
          err.code() == Errc::fiber_cap_exceeded) {
        item.status = ScanStatus::skip;
        item.detail = err.what();
      } else {
        throw;
      }
    }
    items[i] = std::move(item);
  });
  ScanReport report;
  report.items = std::move(items);
  for (const ScanItem& item : report.items) {
    switch (item.status) {
      case ScanStatus::pass: ++report.pass; break;
      case ScanStatus::fail: ++report.fail; break;
      case ScanStatus::skip: ++report.skipped; break;
      case ScanStatus::not_applicable: ++report.not_applicable; break;
    }
  }
  report.note =
      "truncated scan: the full rank-" + std::to_string(r) +
      " procedure requires k up to (r+3)!, far beyond desk scale; for such k "
      "the k-base graph would have diameter <= 2";
  return report;
}

// Builds the morphism certified by a labeling (restriction of M to the
// labeled region onto the restriction to B1 ∪ F) for replay through
// verify_morphism.
inline MatroidMorphism labeling_morphism(const Matroid& m,
                                         const BlowupLabeling& lab) {
  ElemSet covered = 0;
  for (Basis b : lab.bases) covered |= b;
  const ElemSet source_region = covered | lab.untouched;
  const ElemSet target_region = lab.bases.front() | lab.untouched;
  const MinorResult src = minor(m, m.ground_mask & ~source_region, 0);
  const MinorResult tgt = minor(m, m.ground_mask & ~target_region, 0);
  std::vector<int> label_to_b1(static_cast<std::size_t>(m.rank), -1);
  for_each_element(lab.bases.front(), [&](int e) {
    label_to_b1[static_cast<std::size_t>(
        lab.label[static_cast<std::size_t>(e)])] = e;
  });
  std::vector<int> map(static_cast<std::size_t>(src.matroid.ground_size), -1);
  for (int ne = 0; ne < src.matroid.ground_size; ++ne) {
    const int old_elem = src.new_to_old[static_cast<std::size_t>(ne)];
    int old_target;
    if (contains(lab.untouched, old_elem)) {
      old_target = old_elem;
    } else {
      old_target =
          label_to_b1[static_cast<std::size_t>(
              lab.label[static_cast<std::size_t>(old_elem)])];
    }
    map[static_cast<std::size_t>(ne)] =
        tgt.old_to_new[static_cast<std::size_t>(old_target)];
  }
  return MatroidMorphism{src.matroid, tgt.matroid, std::move(map)};
}

}  // namespace matx
