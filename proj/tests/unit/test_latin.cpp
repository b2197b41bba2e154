#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "rescube/latin.hpp"
#include "rescube/resilient.hpp"

using namespace rescube;

TEST_CASE("linear_latin and the Hamming quotient") {
  const HammingPartition p1 = linear_latin(1);
  CHECK(p1.cells() == 4);
  for (int i = 0; i < 4; ++i) CHECK(p1.cell_size(i) == 1);

  const HammingPartition p2 = linear_latin(2);
  const EquitableResult q = quotient_matrix_h4(p2);
  REQUIRE(q.ok());
  CHECK(*q.matrix == standard_matrix(StandardKind::S4, 6));

  // label = XOR of the two digits.
  for (std::uint32_t v = 0; v < 16; ++v) {
    CHECK(p2.label(v) == ((v >> 2) ^ (v & 3)));
  }
}

TEST_CASE("all 576 Latin squares enumerate in lexicographic order") {
  const std::vector<HammingPartition> squares = enumerate_latin_squares();
  CHECK(squares.size() == 576);
  CHECK(squares.front() == linear_latin(2));  // the XOR square is lex-least
  for (std::size_t i = 1; i < squares.size(); ++i) {
    CHECK(squares[i - 1].labels() < squares[i].labels());
  }
  for (std::size_t i = 0; i < squares.size(); i += 97) {
    const EquitableResult q = quotient_matrix_h4(squares[i]);
    REQUIRE(q.ok());
    CHECK(*q.matrix == standard_matrix(StandardKind::S4, 6));
    for (int cell = 0; cell < 4; ++cell) {
      CHECK(clique_balance_check(squares[i], cell));
    }
  }
}

TEST_CASE("latin_from_mds and mds_from_latin invert each other") {
  const std::vector<HammingPartition> squares = enumerate_latin_squares();
  for (std::size_t i = 0; i < squares.size(); i += 53) {
    const HammingPartition mds = mds_from_latin(squares[i]);
    CHECK(mds.coords() == 3);
    CHECK(mds.cells() == 2);
    const EquitableResult q = quotient_matrix_h4(mds);
    REQUIRE(q.ok());
    CHECK(*q.matrix == standard_matrix(StandardKind::S2, 9));
    CHECK(latin_from_mds(mds) == squares[i]);
  }
  // A 2-cell partition that is not distance-2 MDS is rejected.
  std::vector<std::uint8_t> bad(16, 1);
  bad[0] = bad[1] = bad[5] = bad[10] = 0;  // 00,01 differ in one digit
  CHECK_THROWS_AS(latin_from_mds(HammingPartition(2, 2, bad)), Error);
}

TEST_CASE("lift_cell_partition is the antipodal table") {
  const CubePartition t = lift_cell_partition();
  CHECK(t.labels() == std::vector<std::uint8_t>{0, 3, 1, 2, 2, 1, 3, 0});
  const EquitableResult q = quotient_matrix(t);
  REQUIRE(q.ok());
  CHECK(*q.matrix == standard_matrix(StandardKind::S4, 3));
}

TEST_CASE("lift carries H(r,4) partitions to Q_3r") {
  const CubePartition l = lift(linear_latin(2));
  CHECK(l.dim() == 6);
  const EquitableResult q = quotient_matrix(l);
  REQUIRE(q.ok());
  CHECK(*q.matrix == standard_matrix(StandardKind::S4, 6));

  // lift == concat with antipodal inner blocks.
  const std::vector<CubePartition> inners(2, lift_cell_partition());
  CHECK(concat(linear_latin(2), inners) == l);

  // Block 1 occupies the highest bits: vertex (u1 u2) with u1 = 000 and
  // u2 = 111 lifts from digit pair (T-index 0, T-index 0) = Hamming vertex 0.
  CHECK(l.label(0b000111) == linear_latin(2).label(0));

  // An MDS first cell lifts to an S2(9) first cell.
  const CubePartition l2 = lift(mds_from_latin(linear_latin(2)));
  const EquitableResult q2 = quotient_matrix(l2);
  REQUIRE(q2.ok());
  CHECK(*q2.matrix == standard_matrix(StandardKind::S2, 9));
}

TEST_CASE("concat mixes inner partitions of different dimensions") {
  const CubePartition antipodal(3, 4, {0, 1, 2, 3, 3, 2, 1, 0});
  const CubePartition inner6 = lift(linear_latin(2));
  const CubePartition c = concat(linear_latin(2), {antipodal, inner6});
  CHECK(c.dim() == 9);
  const EquitableResult q = quotient_matrix(c);
  REQUIRE(q.ok());
  CHECK(*q.matrix == standard_matrix(StandardKind::S4, 9));

  CHECK_THROWS_AS(concat(linear_latin(2), {antipodal}), Error);
  // Inners must verify the 4-cell standard matrix.
  CHECK_THROWS_AS(concat(linear_latin(2),
                         {antipodal, CubePartition(3, 4, {0, 1, 2, 3, 3, 2, 0, 1})}),
                  Error);
}

TEST_CASE("detect_reducible finds concatenation structure") {
  const CubePartition l = lift(linear_latin(2));
  const ReducibilityReport rep = detect_reducible(l, StandardKind::S4);
  REQUIRE(rep.reducible);
  REQUIRE(rep.witness.has_value());
  // The XOR-square lift is linear, so the first bipartition in enumeration
  // order already decomposes it; the natural {1,2,3} split works too but
  // comes later.
  CHECK(rep.witness->block_coords == std::vector<int>{3, 4, 5});
  CHECK(rep.witness->block_coords.size() == 3);
  const EquitableResult qi = quotient_matrix(rep.witness->inner1);
  REQUIRE(qi.ok());
  CHECK(*qi.matrix == standard_matrix(StandardKind::S4, 3));
  const EquitableResult qo = quotient_matrix_h4(rep.witness->outer);
  REQUIRE(qo.ok());
  CHECK(*qo.matrix == standard_matrix(StandardKind::S4, 6));

  // Scrambling coordinates and translating does not hide reducibility.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    CoordPerm perm = CoordPerm::identity(6);
    for (int i = 5; i > 0; --i) {
      std::swap(perm.map[i], perm.map[rng() % (i + 1)]);
    }
    const CubePartition scrambled =
        l.permuted(perm).translated(static_cast<Vertex>(rng() & 63));
    CHECK(detect_reducible(scrambled, StandardKind::S4).reducible);
  }

  // The antipodal partition of Q_3 admits no 3+3 bipartition at all.
  const CubePartition antipodal(3, 4, {0, 1, 2, 3, 3, 2, 1, 0});
  CHECK(!detect_reducible(antipodal, StandardKind::S4).reducible);
}

TEST_CASE("detect_reducible handles the 2-cell kind") {
  const CubePartition mds_lift = lift(mds_from_latin(linear_latin(2)));
  const ReducibilityReport rep = detect_reducible(mds_lift, StandardKind::S2);
  CHECK(rep.reducible);

  // The linear S2(6) built directly from forms is NOT a length-2
  // concatenation of S4(3) blocks unless its dual words align with a
  // 3+3 coordinate split; the canonical one is reducible.
  std::vector<std::uint8_t> labels(64);
  const VbFunction f = linear_function(6);
  for (std::size_t x = 0; x < 64; ++x) labels[x] = f.table[x] == 0 ? 0 : 1;
  const CubePartition lin(6, 2, labels);
  CHECK(detect_reducible(lin, StandardKind::S2).reducible);
}

TEST_CASE("HammingPartition symmetries preserve the quotient") {
  std::mt19937 rng(11);
  const HammingPartition base = enumerate_latin_squares()[123];
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> perm{0, 1};
    if (rng() & 1) std::swap(perm[0], perm[1]);
    std::vector<std::array<std::uint8_t, 4>> sp(2);
    for (auto& s : sp) {
      s = {0, 1, 2, 3};
      for (int i = 3; i > 0; --i) {
        std::swap(s[i], s[rng() % (i + 1)]);
      }
    }
    const HammingPartition moved =
        base.coord_permuted(perm).symbol_permuted(sp);
    const EquitableResult q = quotient_matrix_h4(moved);
    REQUIRE(q.ok());
    CHECK(*q.matrix == standard_matrix(StandardKind::S4, 6));
  }
}
