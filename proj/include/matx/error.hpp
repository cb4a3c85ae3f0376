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

#include <stdexcept>
#include <string>

#include "matx/core.hpp"

namespace matx {

enum class Errc {
  empty_family,
  unequal_cardinality,
  exchange_axiom_failure,
  element_out_of_range,
  ground_set_too_large,
  overlapping_arguments,
  dependent_contraction,
  rank_collapse,
  invalid_rank,
  empty_graph,
  non_prime_modulus,
  not_a_basis,
  element_not_exchangeable,
  not_k_matroid,
  cap_exceeded,
  vertex_cap_exceeded,
  fiber_cap_exceeded,
  size_mismatch,
  not_disjoint,
  entry_not_mapped,
  lift_failure,
  syntax_error,
  invalid_argument,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_family: return "EmptyFamily";
    case Errc::unequal_cardinality: return "UnequalCardinality";
    case Errc::exchange_axiom_failure: return "ExchangeAxiomFailure";
    case Errc::element_out_of_range: return "ElementOutOfRange";
    case Errc::ground_set_too_large: return "GroundSetTooLarge";
    case Errc::overlapping_arguments: return "OverlappingArguments";
    case Errc::dependent_contraction: return "DependentContraction";
    case Errc::rank_collapse: return "RankCollapse";
    case Errc::invalid_rank: return "InvalidRank";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::non_prime_modulus: return "NonPrimeModulus";
    case Errc::not_a_basis: return "NotABasis";
    case Errc::element_not_exchangeable: return "ElementNotExchangeable";
    case Errc::not_k_matroid: return "NotKMatroid";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::vertex_cap_exceeded: return "VertexCountCapExceeded";
    case Errc::fiber_cap_exceeded: return "FiberCapExceeded";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::not_disjoint: return "NotDisjoint";
    case Errc::entry_not_mapped: return "EntryNotMappedToBasis";
    case Errc::lift_failure: return "LiftFailure";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const { return code_; }

  // Optional witness payload; meaning depends on code().
  ElemSet set_a = 0;
  ElemSet set_b = 0;
  int element = -1;
  int line = 0;
  int column = 0;

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace matx
