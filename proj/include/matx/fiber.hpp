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

#include "matx/matroid.hpp"
#include "matx/workers.hpp"

namespace matx {

// A fiber state: a degree-d monomial in the basis variables. W1/W2 states are
// multisets kept lex-sorted; W3 states are ordered sequences.
using State = std::vector<Basis>;

enum class MoveVariant { W1, W2, W3 };

inline const char* variant_name(MoveVariant v) {
  switch (v) {
    case MoveVariant::W1: return "w1";
    case MoveVariant::W2: return "w2";
    case MoveVariant::W3: return "w3";
  }
  return "?";
}

// One generator application. Positions index the state the move is applied
// to (canonical order for multisets). d1 replaces entry i, d2 entry j. W2/W3
// moves also carry the exchanged elements e (leaving entry i) and f.
struct Move {
  MoveVariant variant = MoveVariant::W2;
  int i = 0;
  int j = 0;
  Basis d1 = 0;
  Basis d2 = 0;
  int e = -1;
  int f = -1;
};

inline bool is_sequence_variant(MoveVariant v) { return v == MoveVariant::W3; }

inline State canonical_multiset(State s) {
  std::sort(s.begin(), s.end(), lex_less);
  return s;
}

inline std::vector<int> union_vector(const Matroid& m, const State& s) {
  std::vector<int> u(static_cast<std::size_t>(m.ground_size), 0);
  for (Basis b : s)
    for_each_element(b, [&](int e) { ++u[static_cast<std::size_t>(e)]; });
  return u;
}

inline State apply_move(const State& s, const Move& mv, MoveVariant variant) {
  if (mv.i < 0 || mv.j < 0 || mv.i >= static_cast<int>(s.size()) ||
      mv.j >= static_cast<int>(s.size()) || mv.i == mv.j)
    fail(Errc::invalid_argument, "move positions out of range");
  State next = s;
  next[static_cast<std::size_t>(mv.i)] = mv.d1;
  next[static_cast<std::size_t>(mv.j)] = mv.d2;
  return is_sequence_variant(variant) ? next : canonical_multiset(next);
}

inline State apply_path(const State& s, const std::vector<Move>& path,
                        MoveVariant variant) {
  State cur = is_sequence_variant(variant) ? s : canonical_multiset(s);
  for (const Move& mv : path) cur = apply_move(cur, mv, variant);
  return cur;
}

// All degree-d multisets of bases with the given union vector, in canonical
// order, by backtracking over lex-nondecreasing basis choices against the
// residual vector.
inline std::vector<State> enumerate_fiber(const Matroid& m,
                                          const std::vector<int>& u, int d,
                                          std::size_t cap = 1'000'000) {
  if (static_cast<int>(u.size()) != m.ground_size)
    fail(Errc::invalid_argument, "union vector length mismatch");
  long long total = 0;
  for (int v : u) {
    if (v < 0 || v > d)
      fail(Errc::invalid_argument, "union vector entry outside [0, d]");
    total += v;
  }
  if (total != static_cast<long long>(d) * m.rank)
    fail(Errc::invalid_argument, "union vector total must equal d*r");
  std::vector<State> out;
  std::vector<int> residual = u;
  State current;
  const int nbases = static_cast<int>(m.bases.size());

  auto fits = [&](Basis b) {
    bool ok = true;
    for_each_element(b, [&](int e) {
      if (residual[static_cast<std::size_t>(e)] == 0) ok = false;
    });
    return ok;
  };
  auto feasible = [&](int remaining_entries) {
    for (int v : residual)
      if (v > remaining_entries) return false;
    return true;
  };

  auto rec = [&](auto&& self, int from, int depth) -> void {
    if (depth == d) {
      out.push_back(current);
      if (out.size() > cap)
        fail(Errc::fiber_cap_exceeded,
             "fiber exceeds cap " + std::to_string(cap));
      return;
    }
    for (int bi = from; bi < nbases; ++bi) {
      const Basis b = m.bases[static_cast<std::size_t>(bi)];
      if (!fits(b)) continue;
      for_each_element(b, [&](int e) { --residual[static_cast<std::size_t>(e)]; });
      if (feasible(d - depth - 1)) {
        current.push_back(b);
        self(self, bi, depth + 1);
        current.pop_back();
      }
      for_each_element(b, [&](int e) { ++residual[static_cast<std::size_t>(e)]; });
    }
  };
  rec(rec, 0, 0);
  return out;
}

namespace detail {

template <typename Fn>
void w2_exchanges(const Matroid& m, Basis b1, Basis b2, Fn&& emit) {
  for_each_element(b1 & ~b2, [&](int e) {
    const Basis stem = b1 ^ elem_bit(e);
    for_each_element(b2 & ~b1, [&](int f) {
      const Basis p = stem | elem_bit(f);
      const Basis q = (b2 ^ elem_bit(f)) | elem_bit(e);
      if (m.is_basis(p) && m.is_basis(q)) emit(e, f, p, q);
    });
  });
}

}  // namespace detail

// All states one move away, deduplicated by resulting state (keeping the
// first move in enumeration order). Self-loops are dropped.
inline std::vector<std::pair<Move, State>> neighbors(const Matroid& m,
                                                     const State& state,
                                                     MoveVariant variant,
                                                     bool strict_w3 = false) {
  const int d = static_cast<int>(state.size());
  std::vector<std::pair<Move, State>> out;
  std::unordered_map<State, bool, SetVectorHash> seen;
  auto push = [&](Move mv, State next) {
    if (next == state) return;
    if (seen.emplace(next, true).second)
      out.emplace_back(mv, std::move(next));
  };

  if (variant == MoveVariant::W3) {
    for (int i = 0; i + 1 < d; ++i) {
      const Basis b1 = state[static_cast<std::size_t>(i)];
      const Basis b2 = state[static_cast<std::size_t>(i + 1)];
      detail::w2_exchanges(m, b1, b2, [&](int e, int f, Basis p, Basis q) {
        push(Move{MoveVariant::W3, i, i + 1, p, q, e, f},
             apply_move(state, Move{MoveVariant::W3, i, i + 1, p, q, e, f},
                        variant));
        if (!strict_w3)
          push(Move{MoveVariant::W3, i, i + 1, q, p, e, f},
               apply_move(state, Move{MoveVariant::W3, i, i + 1, q, p, e, f},
                          variant));
      });
    }
    return out;
  }

  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const Basis b1 = state[static_cast<std::size_t>(i)];
      const Basis b2 = state[static_cast<std::size_t>(j)];
      if (variant == MoveVariant::W2) {
        detail::w2_exchanges(m, b1, b2, [&](int e, int f, Basis p, Basis q) {
          const Move mv{MoveVariant::W2, i, j, p, q, e, f};
          push(mv, apply_move(state, mv, variant));
        });
      } else {  // W1: any replacement pair with the same union
        const ElemSet both = b1 & b2;
        const ElemSet once = b1 ^ b2;
        for (Basis d1 : m.bases) {
          if ((both & ~d1) != 0 || (d1 & ~(both | once)) != 0) continue;
          const Basis d2 = both | (once & ~d1);
          if (!m.is_basis(d2)) continue;
          const Move mv{MoveVariant::W1, i, j, d1, d2, -1, -1};
          push(mv, apply_move(state, mv, variant));
        }
      }
    }
  }
  return out;
}

struct FiberCounterexample {
  std::vector<int> u;
  State s1;
  State s2;
};

struct FiberReport {
  long fibers_total = 0;
  long fibers_connected = 0;
  std::vector<FiberCounterexample> counterexamples;
  bool all_connected() const { return fibers_total == fibers_connected; }
};

namespace detail {

// Connectivity of one fiber, vertices given. Returns a counterexample pair
// when disconnected: the first states of the first two components.
inline std::optional<std::pair<State, State>> fiber_components(
    const Matroid& m, const std::vector<State>& states, MoveVariant variant,
    bool strict_w3) {
  std::unordered_map<State, int, SetVectorHash> component;
  component.reserve(states.size() * 2);
  int comp_id = 0;
  std::optional<std::pair<State, State>> witness;
  for (const State& start : states) {
    if (component.count(start)) continue;
    if (comp_id == 1 && !witness)
      witness = std::make_pair(states.front(), start);
    component[start] = comp_id;
    std::deque<State> queue{start};
    while (!queue.empty()) {
      const State cur = queue.front();
      queue.pop_front();
      for (auto& [mv, next] : neighbors(m, cur, variant, strict_w3)) {
        (void)mv;
        if (component.emplace(next, comp_id).second) queue.push_back(next);
      }
    }
    ++comp_id;
  }
  return witness;
}

inline std::vector<State> expand_sequences(const std::vector<State>& fiber) {
  std::vector<State> out;
  for (const State& s : fiber) {
    State perm = s;
    do {
      out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end(), lex_less));
  }
  return out;
}

}  // namespace detail

// Per-degree decision procedure for the White-style conjectures: enumerates
// every union vector realized by d bases, builds each fiber, and checks move
// connectivity. A disconnected fiber is recorded in full.
inline FiberReport check_white_degree(const Matroid& m, int d,
                                      MoveVariant variant,
                                      std::size_t cap = 1'000'000,
                                      int workers = 1, bool strict_w3 = false) {
  if (d < 2) fail(Errc::invalid_argument, "degree must be >= 2");
  // Enumerate canonical d-multisets once and bucket them by union vector.
  std::map<std::vector<int>, std::vector<State>> fibers;
  State current;
  std::size_t produced = 0;
  auto rec = [&](auto&& self, int from, int depth) -> void {
    if (depth == d) {
      if (++produced > cap)
        fail(Errc::fiber_cap_exceeded,
             "degree-" + std::to_string(d) + " state count exceeds cap " +
                 std::to_string(cap));
      fibers[union_vector(m, current)].push_back(current);
      return;
    }
    for (int bi = from; bi < static_cast<int>(m.bases.size()); ++bi) {
      current.push_back(m.bases[static_cast<std::size_t>(bi)]);
      self(self, bi, depth + 1);
      current.pop_back();
    }
  };
  rec(rec, 0, 0);

  std::vector<const std::vector<int>*> keys;
  std::vector<const std::vector<State>*> groups;
  for (const auto& [u, states] : fibers) {
    keys.push_back(&u);
    groups.push_back(&states);
  }
  FiberReport report;
  report.fibers_total = static_cast<long>(groups.size());
  std::vector<std::optional<std::pair<State, State>>> results(groups.size());
  parallel_for(groups.size(), workers, [&](std::size_t i) {
    const std::vector<State>& states =
        is_sequence_variant(variant)
            ? detail::expand_sequences(*groups[i])
            : *groups[i];
    if (states.size() > cap)
      fail(Errc::fiber_cap_exceeded,
           "fiber exceeds cap " + std::to_string(cap));
    results[i] = detail::fiber_components(m, states, variant, strict_w3);
  });
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (!results[i]) {
      ++report.fibers_connected;
    } else {
      report.counterexamples.push_back(
          FiberCounterexample{*keys[i], results[i]->first, results[i]->second});
    }
  }
  return report;
}

// Shortest move sequence from s1 to s2, or nullopt when they lie in
// different components. Replaying the result transforms s1 into s2 exactly.
inline std::optional<std::vector<Move>> generation_path(
    const Matroid& m, State s1, State s2, MoveVariant variant,
    std::size_t cap = 1'000'000, bool strict_w3 = false) {
  for (const State* s : {&s1, &s2})
    for (Basis b : *s)
      if (!m.is_basis(b))
        fail(Errc::not_a_basis, format_set(b) + " is not a basis");
  if (union_vector(m, s1) != union_vector(m, s2))
    fail(Errc::invalid_argument, "states have different union vectors");
  if (!is_sequence_variant(variant)) {
    s1 = canonical_multiset(std::move(s1));
    s2 = canonical_multiset(std::move(s2));
  }
  if (s1 == s2) return std::vector<Move>{};
  std::unordered_map<State, std::pair<State, Move>, SetVectorHash> parent;
  parent.reserve(1024);
  std::deque<State> queue{s1};
  parent.emplace(s1, std::make_pair(State{}, Move{}));
  while (!queue.empty()) {
    const State cur = queue.front();
    queue.pop_front();
    for (auto& [mv, next] : neighbors(m, cur, variant, strict_w3)) {
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(cur, mv));
      if (next == s2) {
        std::vector<Move> path;
        State walk = next;
        while (walk != s1) {
          const auto& [prev, move] = parent.at(walk);
          path.push_back(move);
          walk = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (parent.size() > cap)
        fail(Errc::fiber_cap_exceeded,
             "path search exceeds cap " + std::to_string(cap));
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

// Lifts a W2 path along a matroid morphism: every symmetric exchange between
// images lifts to one between the chosen representatives. When a target
// state s2 in the same fiber and the same morphism-fiber is supplied, a
// closing segment of representative swaps is appended so the replayed path
// ends at s2 exactly.
inline std::vector<Move> lift_path(const MatroidMorphism& psi, const State& s1,
                                   const std::vector<Move>& target_path,
                                   const std::optional<State>& s2 =
                                       std::nullopt) {
  if (static_cast<int>(psi.map.size()) != psi.source.ground_size)
    fail(Errc::invalid_argument, "morphism map is not total");
  if (psi.source.rank != psi.target.rank)
    fail(Errc::invalid_argument, "morphism requires equal ranks");
  const int r = psi.source.rank;
  auto image_basis = [&](Basis b) {
    const ElemSet img = psi.image(b);
    if (set_size(img) != r || !psi.target.is_basis(img)) {
      Error err(Errc::entry_not_mapped,
                format_set(b) + " does not map onto a target basis");
      err.set_a = b;
      throw err;
    }
    return img;
  };

  std::vector<Basis> source = s1;  // stable slots
  for (Basis b : source)
    if (!psi.source.is_basis(b))
      fail(Errc::not_a_basis, format_set(b) + " is not a source basis");
  const int d = static_cast<int>(source.size());
  std::vector<Basis> target(source.size());
  for (int i = 0; i < d; ++i)
    target[static_cast<std::size_t>(i)] =
        image_basis(source[static_cast<std::size_t>(i)]);

  // Canonical view of the image multiset with a deterministic slot
  // alignment: sort slots by (image, source).
  auto canonical_slots = [&] {
    std::vector<int> order(source.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const Basis ta = target[static_cast<std::size_t>(a)];
      const Basis tb = target[static_cast<std::size_t>(b)];
      if (ta != tb) return lex_less(ta, tb);
      const Basis sa = source[static_cast<std::size_t>(a)];
      const Basis sb = source[static_cast<std::size_t>(b)];
      if (sa != sb) return lex_less(sa, sb);
      return a < b;
    });
    return order;
  };
  auto emit_move = [&](int slot_a, int slot_b, int e, int f, Basis pa,
                       Basis pb) {
    // Positions in the canonical source multiset before the move.
    std::vector<Basis> sorted = source;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    const Basis ba = source[static_cast<std::size_t>(slot_a)];
    const Basis bb = source[static_cast<std::size_t>(slot_b)];
    int pos_a = static_cast<int>(
        std::find(sorted.begin(), sorted.end(), ba) - sorted.begin());
    int pos_b = static_cast<int>(
        std::find(sorted.begin(), sorted.end(), bb) - sorted.begin());
    if (pos_a == pos_b) ++pos_b;  // equal values: use distinct copies
    Move mv{MoveVariant::W2, pos_a, pos_b, pa, pb, e, f};
    if (pos_a > pos_b) mv = Move{MoveVariant::W2, pos_b, pos_a, pb, pa, f, e};
    return mv;
  };

  std::vector<Move> lifted;
  for (const Move& mv : target_path) {
    if (mv.variant != MoveVariant::W2)
      fail(Errc::invalid_argument, "lift_path expects a W2 path");
    const std::vector<int> order = canonical_slots();
    if (mv.i < 0 || mv.j < 0 || mv.i >= d || mv.j >= d || mv.i == mv.j)
      fail(Errc::invalid_argument, "target move positions out of range");
    const int slot_i = order[static_cast<std::size_t>(mv.i)];
    const int slot_j = order[static_cast<std::size_t>(mv.j)];
    const Basis ti = target[static_cast<std::size_t>(slot_i)];
    const Basis tj = target[static_cast<std::size_t>(slot_j)];
    if (!(ti & ~tj & elem_bit(mv.e)) || !(tj & ~ti & elem_bit(mv.f)) ||
        ((ti ^ elem_bit(mv.e)) | elem_bit(mv.f)) != mv.d1 ||
        ((tj ^ elem_bit(mv.f)) | elem_bit(mv.e)) != mv.d2)
      fail(Errc::invalid_argument, "target path does not replay");
    const Basis bi = source[static_cast<std::size_t>(slot_i)];
    const Basis bj = source[static_cast<std::size_t>(slot_j)];
    int src_e = -1, src_f = -1;
    for_each_element(bi, [&](int x) {
      if (psi.map[static_cast<std::size_t>(x)] == mv.e) src_e = x;
    });
    for_each_element(bj, [&](int x) {
      if (psi.map[static_cast<std::size_t>(x)] == mv.f) src_f = x;
    });
    if (src_e < 0 || src_f < 0)
      fail(Errc::lift_failure, "exchanged element has no representative");
    const Basis p = (bi ^ elem_bit(src_e)) | elem_bit(src_f);
    const Basis q = (bj ^ elem_bit(src_f)) | elem_bit(src_e);
    if (!psi.source.is_basis(p) || !psi.source.is_basis(q))
      fail(Errc::lift_failure,
           "lifted exchange is not a pair of bases; morphism invariant "
           "violated");
    lifted.push_back(emit_move(slot_i, slot_j, src_e, src_f, p, q));
    source[static_cast<std::size_t>(slot_i)] = p;
    source[static_cast<std::size_t>(slot_j)] = q;
    target[static_cast<std::size_t>(slot_i)] = mv.d1;
    target[static_cast<std::size_t>(slot_j)] = mv.d2;
  }

  if (!s2) return lifted;

  // Closing segment: swap same-class representatives between entries until
  // the multiset equals s2. Valid because every representative choice over
  // a target basis is a source basis.
  State goal = canonical_multiset(*s2);
  if (static_cast<int>(goal.size()) != d)
    fail(Errc::invalid_argument, "target state has a different degree");
  {
    State u1 = s1;
    if (union_vector(psi.source, u1) != union_vector(psi.source, goal))
      fail(Errc::invalid_argument, "target state lies in a different fiber");
    std::vector<Basis> goal_imgs, cur_imgs;
    for (Basis b : goal) goal_imgs.push_back(image_basis(b));
    for (int i = 0; i < d; ++i)
      cur_imgs.push_back(target[static_cast<std::size_t>(i)]);
    std::sort(goal_imgs.begin(), goal_imgs.end(), lex_less);
    std::sort(cur_imgs.begin(), cur_imgs.end(), lex_less);
    if (goal_imgs != cur_imgs)
      fail(Errc::invalid_argument,
           "target state lies in a different morphism fiber");
  }
  // Match slots to goal entries group-wise by image.
  std::vector<int> assignment(static_cast<std::size_t>(d), -1);
  {
    std::map<Basis, std::vector<int>, bool (*)(Basis, Basis)> slot_groups(
        lex_less),
        goal_groups(lex_less);
    for (int i = 0; i < d; ++i)
      slot_groups[target[static_cast<std::size_t>(i)]].push_back(i);
    for (int i = 0; i < d; ++i)
      goal_groups[image_basis(goal[static_cast<std::size_t>(i)])].push_back(i);
    for (auto& [img, slots] : slot_groups) {
      auto& goals = goal_groups[img];
      if (goals.size() != slots.size())
        fail(Errc::internal, "morphism fiber grouping mismatch");
      std::sort(slots.begin(), slots.end(), [&](int a, int b) {
        const Basis sa = source[static_cast<std::size_t>(a)];
        const Basis sb = source[static_cast<std::size_t>(b)];
        return sa != sb ? lex_less(sa, sb) : a < b;
      });
      std::sort(goals.begin(), goals.end(), [&](int a, int b) {
        const Basis sa = goal[static_cast<std::size_t>(a)];
        const Basis sb = goal[static_cast<std::size_t>(b)];
        return sa != sb ? lex_less(sa, sb) : a < b;
      });
      for (std::size_t i = 0; i < slots.size(); ++i)
        assignment[static_cast<std::size_t>(slots[i])] = goals[i];
    }
  }
  // Fix class by class.
  for (int t = 0; t < psi.target.ground_size; ++t) {
    std::vector<int> slots;  // slots whose image contains class t
    for (int i = 0; i < d; ++i)
      if (contains(target[static_cast<std::size_t>(i)], t)) slots.push_back(i);
    auto rep = [&](Basis b) {
      int found = -1;
      for_each_element(b, [&](int x) {
        if (psi.map[static_cast<std::size_t>(x)] == t) found = x;
      });
      return found;
    };
    for (std::size_t si = 0; si < slots.size(); ++si) {
      const int p = slots[si];
      const Basis want_entry =
          goal[static_cast<std::size_t>(assignment[static_cast<std::size_t>(p)])];
      const int want = rep(want_entry);
      const int have = rep(source[static_cast<std::size_t>(p)]);
      if (want < 0 || have < 0)
        fail(Errc::internal, "class representative missing");
      if (want == have) continue;
      int q = -1;
      for (std::size_t sj = si + 1; sj < slots.size(); ++sj)
        if (rep(source[static_cast<std::size_t>(slots[sj])]) == want) {
          q = slots[sj];
          break;
        }
      if (q < 0) fail(Errc::internal, "representative multiset mismatch");
      const Basis bp = source[static_cast<std::size_t>(p)];
      const Basis bq = source[static_cast<std::size_t>(q)];
      const Basis np = (bp ^ elem_bit(have)) | elem_bit(want);
      const Basis nq = (bq ^ elem_bit(want)) | elem_bit(have);
      if (!psi.source.is_basis(np) || !psi.source.is_basis(nq))
        fail(Errc::lift_failure,
             "representative swap is not a pair of bases; morphism invariant "
             "violated");
      lifted.push_back(emit_move(p, q, have, want, np, nq));
      source[static_cast<std::size_t>(p)] = np;
      source[static_cast<std::size_t>(q)] = nq;
    }
  }
  if (canonical_multiset(source) != goal)
    fail(Errc::internal, "closing segment did not reach the target state");
  return lifted;
}

// Claim-4 style saturation probe: pads both sides of a degree-n binomial
// with r*n copies of B and tests W2 connectivity of the padded states.
inline bool saturation_check(const Matroid& m, const State& s1,
                             const State& s2, Basis b,
                             std::size_t cap = 1'000'000) {
  if (!m.is_basis(b)) fail(Errc::not_a_basis, format_set(b) + " is not a basis");
  if (s1.size() != s2.size())
    fail(Errc::invalid_argument, "binomial sides have different degrees");
  if (union_vector(m, s1) != union_vector(m, s2))
    fail(Errc::invalid_argument, "binomial sides have different unions");
  const int pad = m.rank * static_cast<int>(s1.size());
  State p1 = s1, p2 = s2;
  for (int i = 0; i < pad; ++i) {
    p1.push_back(b);
    p2.push_back(b);
  }
  return generation_path(m, std::move(p1), std::move(p2), MoveVariant::W2, cap)
      .has_value();
}

}  // namespace matx
