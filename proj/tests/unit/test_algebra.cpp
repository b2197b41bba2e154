#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "rescube/algebra.hpp"
#include "rescube/bridge.hpp"
#include "rescube/resilient.hpp"

using namespace rescube;

namespace {

// 2-cell partition (preimage of 0, rest) of a balanced (n,2)-function.
CubePartition s2_of(const VbFunction& f) {
  std::vector<std::uint8_t> labels(f.table.size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    labels[x] = f.table[x] == 0 ? 0 : 1;
  }
  return CubePartition(f.n, 2, labels);
}

}  // namespace

TEST_CASE("affine rank, basis and dual") {
  const VertexSet pair = VertexSet::of(3, {0, 7});
  CHECK(affine_rank(pair) == 1);
  CHECK(difference_basis(pair) == std::vector<Vertex>{7});
  CHECK(affine_dual(pair) == VertexSet::of(3, {0, 3, 5, 6}));

  // Affine rank is translation invariant; duals translate to the same set.
  CHECK(affine_rank(pair.translated(5)) == 1);
  CHECK(affine_dual(pair.translated(5)) == affine_dual(pair));

  CHECK(affine_rank(VertexSet::full(4)) == 4);
  CHECK(affine_dual(VertexSet::full(4)) == VertexSet::of(4, {0}));
  CHECK(affine_rank(VertexSet::of(5, {9})) == 0);
  CHECK_THROWS_AS(affine_rank(VertexSet(5)), Error);

  // dual size = 2^(n - rank)
  const VertexSet c = VertexSet::of(6, {0, 3, 12, 15, 48, 51, 60, 63});
  CHECK(affine_rank(c) == 3);
  CHECK(affine_dual(c).count() == 8);
}

TEST_CASE("rank classes of the linear family") {
  const RankReport r2 = rank_class_s2(s2_of(linear_function(9)));
  CHECK(r2.cls == RankClass::Linear);
  CHECK(r2.rank == 7);

  const RankReport r4 = rank_class_s4(partition_of(linear_function(9)));
  CHECK(r4.cls == RankClass::Linear);
  CHECK(r4.rank == 9);

  CHECK(to_string(RankClass::Linear) == "linear");
  CHECK(to_string(RankClass::StrictlySemilinear) == "strictly-semilinear");
  CHECK(to_string(RankClass::FullRank) == "full-rank");
}

TEST_CASE("graph_of uses the low m bits for the value") {
  const VbFunction f(2, 2, {0, 1, 2, 3});
  CHECK(graph_of(f) == VertexSet::of(4, {0b0000, 0b0101, 0b1010, 0b1111}));
}

TEST_CASE("rank relation between a 4-cell partition and its expansion") {
  const CubePartition antipodal(3, 4, {0, 1, 2, 3, 3, 2, 1, 0});
  CHECK(rank_relation_check(antipodal));
  CHECK(rank_relation_check(partition_of(linear_function(9))));
  CHECK_THROWS_AS(rank_relation_check(CubePartition(2, 4, {0, 1, 2, 3})),
                  Error);
  CHECK_THROWS_AS(
      rank_relation_check(CubePartition(3, 4, {0, 1, 2, 3, 3, 2, 0, 1})),
      WrongMatrixError);
}

TEST_CASE("move_dual_to_suffix") {
  const CubePartition p = s2_of(linear_function(9));
  const MovedDual moved = move_dual_to_suffix(p);
  CHECK(moved.dual_word == ((Vertex{0b111111} << 3)));
  CHECK(affine_dual(moved.partition.cell(0)).contains(moved.dual_word));
  // The move is exactly the claimed coordinate permutation of the input.
  CHECK(moved.partition == p.permuted(moved.perm));
  // Output still has the right matrix.
  const EquitableResult q = quotient_matrix(moved.partition);
  REQUIRE(q.ok());
  CHECK(*q.matrix == standard_matrix(StandardKind::S2, 9));

  // A half-cube split is equitable but has the wrong matrix.
  CHECK_THROWS_AS(
      move_dual_to_suffix(CubePartition(3, 2, {0, 0, 0, 0, 1, 1, 1, 1})),
      WrongMatrixError);
}

TEST_CASE("randomized: dual of a translated/permuted cell keeps its weights") {
  std::mt19937 rng(99);
  const CubePartition base = s2_of(linear_function(6));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint8_t> bits(6);
    CoordPerm perm = CoordPerm::identity(6);
    for (int i = 5; i > 0; --i) {
      std::swap(perm.map[i], perm.map[rng() % (i + 1)]);
    }
    const Vertex shift = static_cast<Vertex>(rng() & 63);
    const CubePartition p = base.permuted(perm).translated(shift);
    const VertexSet dual = affine_dual(p.cell(0));
    CHECK(dual.count() == 4);
    dual.for_each([&](Vertex w) {
      if (w) CHECK(weight(w) == 4);
    });
  }
}
