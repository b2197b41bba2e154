#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "rescube/resilient.hpp"

using namespace rescube;

TEST_CASE("indicator and balance") {
  const VbFunction f(2, 1, {0, 1, 1, 0});
  CHECK(indicator(f, 0) == VertexSet::of(2, {0, 3}));
  CHECK(indicator(f, 1) == VertexSet::of(2, {1, 2}));
  CHECK(is_balanced(f));
  CHECK(!is_balanced(VbFunction(2, 1, {0, 0, 0, 1})));
  CHECK(!is_balanced(VbFunction(2, 2, {0, 0, 1, 2})));  // value 3 missing
}

TEST_CASE("max_resilience_bound") {
  CHECK(max_resilience_bound(9, 2) == 5);
  CHECK(max_resilience_bound(3, 2) == 1);
  CHECK(max_resilience_bound(12, 2) == 7);
  CHECK(max_resilience_bound(6, 2) == 3);
  CHECK(max_resilience_bound(4, 1) == 3);  // parity reaches n-1
}

TEST_CASE("linear_function is maximally resilient") {
  const VbFunction f = linear_function(9);
  CHECK(f.n == 9);
  CHECK(f.m == 2);
  const std::vector<std::uint8_t> head(f.table.begin(), f.table.begin() + 16);
  CHECK(head == std::vector<std::uint8_t>{0, 1, 1, 0, 1, 0, 0, 1, 2, 3, 3, 2,
                                          3, 2, 2, 3});
  CHECK(is_balanced(f));
  CHECK(ci_order(f, CiMethod::Direct) == 5);
  CHECK(ci_order(f, CiMethod::Spectral) == 5);
  CHECK(is_resilient(f, 5));
  CHECK(!is_resilient(f, 6));

  CHECK(ci_order(linear_function(3)) == 1);
  CHECK(ci_order(linear_function(6)) == 3);
  CHECK_THROWS_AS(linear_function(7), Error);
}

TEST_CASE("ci_order edge cases") {
  // Constant functions are immune of every order but never balanced.
  const VbFunction c(3, 1, std::vector<std::uint8_t>(8, 0));
  CHECK(ci_order(c, CiMethod::Direct) == 3);
  CHECK(ci_order(c, CiMethod::Spectral) == 3);
  CHECK(!is_resilient(c, 0));

  // A single coordinate is balanced but sensitive to fixing itself.
  std::vector<std::uint8_t> proj(8);
  for (Vertex v = 0; v < 8; ++v) proj[v] = v & 1;
  const VbFunction g(3, 1, proj);
  CHECK(ci_order(g, CiMethod::Direct) == 0);
  CHECK(is_resilient(g, 0));
  CHECK(!is_resilient(g, 1));
}

TEST_CASE("direct and spectral ci_order agree on random functions") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int m = 1 + static_cast<int>(rng() % 2);
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (auto& t : table) t = static_cast<std::uint8_t>(rng() & ((1u << m) - 1));
    const VbFunction f(n, m, table);
    CHECK(ci_order(f, CiMethod::Direct) == ci_order(f, CiMethod::Spectral));
  }
}

TEST_CASE("partition_of and function_of round trip") {
  const VbFunction f = linear_function(3);
  const CubePartition p = partition_of(f);
  CHECK(p.cells() == 4);
  CHECK(function_of(p, 2) == f);
  CHECK_THROWS_AS(function_of(p, 1), Error);

  // Functions missing a value still round trip through the partition.
  const VbFunction g(2, 2, {0, 0, 1, 1});
  const CubePartition q = partition_of(g);
  CHECK(q.has_empty_cell());
  CHECK(function_of(q, 2) == g);
}
