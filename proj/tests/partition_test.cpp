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

#include "matx/partition.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace matx;
using matx_test::F;
using matx_test::S;

namespace {

void require_valid_partition(const Matroid& m, const BasePartition& p, int k) {
  REQUIRE(static_cast<int>(p.blocks.size()) == k);
  ElemSet seen = 0;
  for (Basis b : p.blocks) {
    REQUIRE(m.is_basis(b));
    REQUIRE((seen & b) == 0);
    seen |= b;
  }
  REQUIRE(seen == m.ground_mask);
}

}  // namespace

TEST_CASE("partition_into_bases on spec instances") {
  SECTION("U_{2,4} with k=2") {
    const Matroid m = uniform(2, 4);
    const auto p = partition_into_bases(m, 2);
    REQUIRE(p.has_value());
    require_valid_partition(m, *p, 2);
    CHECK(p->blocks == std::vector<Basis>{S({1, 2}), S({3, 4})});
  }
  SECTION("K4 splits into two spanning trees") {
    const Matroid k4 =
        graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto p = partition_into_bases(k4, 2);
    REQUIRE(p.has_value());
    require_valid_partition(k4, *p, 2);
  }
  SECTION("three parallel elements fail") {
    CHECK_FALSE(partition_into_bases(matx_test::three_parallel_matroid(), 2)
                    .has_value());
  }
  SECTION("size mismatch short-circuits") {
    CHECK_FALSE(partition_into_bases(uniform(2, 5), 2).has_value());
  }
  SECTION("k=1 needs the ground set to be a basis") {
    CHECK(partition_into_bases(uniform(2, 2), 1).has_value());
    CHECK_FALSE(partition_into_bases(matx_test::five_basis_matroid(), 1)
                    .has_value());
  }
  SECTION("deterministic across repeated runs") {
    const Matroid m = uniform(3, 9);
    const auto p1 = partition_into_bases(m, 3);
    const auto p2 = partition_into_bases(m, 3);
    REQUIRE(p1.has_value());
    CHECK(p1->blocks == p2->blocks);
  }
}

TEST_CASE("violating_set on spec instances") {
  CHECK_FALSE(violating_set(uniform(2, 4), 2).has_value());
  SECTION("minimal violator of the three-parallel matroid") {
    const auto v = violating_set(matx_test::three_parallel_matroid(), 2);
    REQUIRE(v.has_value());
    CHECK(v->set == S({1, 2, 3}));
    CHECK(v->rank == 1);
  }
  SECTION("a loop is a singleton violator") {
    const Matroid with_loop = validate_bases(3, F({{1}, {2}}));
    const auto v = violating_set(with_loop, 3);
    REQUIRE(v.has_value());
    CHECK(v->set == S({3}));
    CHECK(v->rank == 0);
  }
  SECTION("cap") {
    CHECK_THROWS_AS(violating_set(uniform(2, 4), 2, 3), Error);
  }
}

TEST_CASE("is_k_matroid matches Theorem 2.1 on small instances") {
  const std::vector<Matroid> pool = {
      uniform(2, 4),
      uniform(2, 5),
      uniform(2, 6),
      uniform(1, 4),
      uniform(3, 6),
      matx_test::five_basis_matroid(),
      matx_test::three_parallel_matroid(),
      graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
      validate_bases(3, F({{1}, {2}})),
  };
  for (const Matroid& m : pool) {
    for (int k = 1; k <= 4; ++k) {
      const bool via_partition = is_k_matroid(m, k);
      const bool via_rank_check =
          !violating_set(m, k).has_value() &&
          static_cast<long long>(k) * m.rank == m.ground_size;
      REQUIRE(via_partition == via_rank_check);
    }
  }
}

TEST_CASE("is_k_matroid examples") {
  CHECK(is_k_matroid(uniform(2, 4), 2));
  CHECK_FALSE(is_k_matroid(uniform(2, 5), 2));
  CHECK_FALSE(is_k_matroid(matx_test::three_parallel_matroid(), 2));
}

TEST_CASE("every partition block is complementary") {
  const std::vector<std::pair<Matroid, int>> instances = {
      {uniform(2, 4), 2},
      {uniform(2, 6), 3},
      {uniform(3, 6), 2},
      {graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), 2}};
  for (const auto& [m, k] : instances) {
    const auto p = partition_into_bases(m, k);
    REQUIRE(p.has_value());
    for (Basis b : p->blocks) CHECK(is_complementary(m, b, k));
  }
}

TEST_CASE("is_complementary on spec instances") {
  const Matroid m5 = matx_test::five_basis_matroid();
  CHECK(is_complementary(uniform(2, 4), S({1, 3}), 2));
  CHECK_FALSE(is_complementary(m5, S({1, 2}), 2));
  CHECK(is_complementary(m5, S({1, 3}), 2));
  SECTION("k=1 convention") {
    CHECK(is_complementary(uniform(2, 2), S({1, 2}), 1));
  }
  SECTION("errors") {
    CHECK_THROWS_AS(is_complementary(m5, S({3, 4}), 2), Error);
    CHECK_THROWS_AS(is_complementary(uniform(2, 5), S({1, 2}), 2), Error);
  }
}

TEST_CASE("partition enumeration is exhaustive on U_{2,6}") {
  const Matroid m = uniform(2, 6);
  const auto parts = enumerate_base_partitions(m, 3, m.ground_mask, 1000);
  CHECK(parts.size() == 15);  // perfect matchings of six elements
  for (const auto& p : parts) {
    ElemSet seen = 0;
    for (Basis b : p) {
      REQUIRE(m.is_basis(b));
      REQUIRE((seen & b) == 0);
      seen |= b;
    }
    REQUIRE(seen == m.ground_mask);
    REQUIRE(std::is_sorted(p.begin(), p.end(), lex_less));
  }
}

TEST_CASE("partition enumeration agrees with the augmenting search") {
  // Existence via enumeration must match partition_into_bases; the two are
  // independent code paths.
  const std::vector<Matroid> pool = {
      uniform(2, 4),
      uniform(2, 6),
      uniform(3, 6),
      matx_test::five_basis_matroid(),
      matx_test::three_parallel_matroid(),
      blow_up(uniform(2, 3), full_set(3), 2).matroid};
  for (const Matroid& m : pool) {
    for (int k = 1; k <= 3; ++k) {
      bool any = false;
      for_each_base_partition(m, k, m.ground_mask,
                              [&](const std::vector<Basis>&) {
                                any = true;
                                return false;
                              });
      const bool via_algorithm = partition_into_bases(m, k).has_value();
      REQUIRE(any == via_algorithm);
    }
  }
}
