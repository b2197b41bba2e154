#include <cstdint>
#include <vector>

#include "doctest.h"
#include "rescube/core.hpp"

using namespace rescube;

namespace {

const std::vector<std::uint8_t> kAntipodal{0, 1, 2, 3, 3, 2, 1, 0};

}  // namespace

TEST_CASE("weight and check_dim") {
  CHECK(weight(0) == 0);
  CHECK(weight(7) == 3);
  CHECK(weight((Vertex{1} << 27) | 1) == 2);
  CHECK_THROWS_AS(check_dim(kMaxDim + 1), Error);
  CHECK_THROWS_AS(check_dim(-1), Error);
}

TEST_CASE("CoordPerm basics") {
  const CoordPerm id = CoordPerm::identity(5);
  CHECK(id.dim() == 5);
  CHECK(id.apply(19) == 19);

  // Send bit 0 -> bit 2, bit 1 -> bit 0, bit 2 -> bit 1.
  CoordPerm p;
  p.map = {2, 0, 1};
  CHECK(p.apply(0b001) == 0b100);
  CHECK(p.apply(0b010) == 0b001);
  CHECK(p.apply(0b110) == 0b011);

  const CoordPerm q = p.inverse();
  CHECK(q.apply(p.apply(5)) == 5);
  CHECK(p.then(q).apply(6) == 6);

  // then: first p, then r.
  CoordPerm r;
  r.map = {1, 2, 0};
  const CoordPerm pr = p.then(r);
  for (Vertex v = 0; v < 8; ++v) CHECK(pr.apply(v) == r.apply(p.apply(v)));
}

TEST_CASE("VertexSet operations") {
  const VertexSet s = VertexSet::of(3, {0, 7});
  CHECK(s.count() == 2);
  CHECK(s.contains(7));
  CHECK(!s.contains(3));
  CHECK(s.min_element() == 0);
  CHECK(s.to_vector() == std::vector<Vertex>{0, 7});

  CHECK(s.translated(7) == s);
  CHECK(s.translated(1) == VertexSet::of(3, {1, 6}));

  CoordPerm p;
  p.map = {1, 0, 2};  // swap bits 0 and 1
  CHECK(s.permuted(p) == s);
  CHECK(VertexSet::of(3, {1}).permuted(p) == VertexSet::of(3, {2}));

  const VertexSet full = VertexSet::full(3);
  CHECK(full.count() == 8);
  CHECK(s.complement() == VertexSet::of(3, {1, 2, 3, 4, 5, 6}));
  CHECK((s & full) == s);
  CHECK((s | s.complement()) == full);
  CHECK((s ^ s).count() == 0);
  CHECK(s.is_subset_of(full));
  CHECK(s.disjoint_with(s.complement()));
}

TEST_CASE("standard matrices") {
  CHECK(standard_matrix(StandardKind::S4, 9).to_string() ==
        "[[0,3,3,3],[3,0,3,3],[3,3,0,3],[3,3,3,0]]");
  CHECK(standard_matrix(StandardKind::S2, 9).to_string() == "[[0,9],[3,6]]");
  CHECK(standard_matrix(StandardKind::S3, 9).to_string() ==
        "[[0,3,6],[3,0,6],[3,3,3]]");
  CHECK(standard_matrix(StandardKind::Eperf, 8).to_string() ==
        "[[0,0,8],[0,0,8],[4,4,0]]");
  CHECK_THROWS_AS(standard_matrix(StandardKind::S4, 7), Error);
  CHECK_THROWS_AS(standard_matrix(StandardKind::Eperf, 7), Error);
  for (int i = 0; i < 4; ++i) {
    CHECK(standard_matrix(StandardKind::S4, 12).row_sum(i) == 12);
  }
  CHECK(standard_kind_from_string("EPERF") == StandardKind::Eperf);
  CHECK(to_string(StandardKind::S3) == "S3");
  CHECK_THROWS_AS(standard_kind_from_string("S5"), Error);
}

TEST_CASE("quotient_matrix on the antipodal partition") {
  const CubePartition p(3, 4, kAntipodal);
  const EquitableResult r = quotient_matrix(p);
  REQUIRE(r.ok());
  CHECK(*r.matrix == standard_matrix(StandardKind::S4, 3));

  // Corrupting one label breaks equitability with a concrete witness.
  std::vector<std::uint8_t> bad = kAntipodal;
  bad[7] = 1;
  const EquitableResult rb = quotient_matrix(CubePartition(3, 4, bad));
  REQUIRE(!rb.ok());
  CHECK(rb.failure->observed != rb.failure->expected);
  CHECK(!rb.failure->describe().empty());
}

TEST_CASE("quotient_matrix requires nonempty cells") {
  const CubePartition p(2, 3, {0, 0, 1, 1});  // cell 2 empty
  CHECK(p.has_empty_cell());
  CHECK_THROWS_AS(quotient_matrix(p), Error);
}

TEST_CASE("CubePartition transforms") {
  const CubePartition p(3, 4, kAntipodal);
  CHECK(p.cell(0) == VertexSet::of(3, {0, 7}));
  CHECK(p.cell_size(2) == 2);

  // Translation by 7 maps each antipodal pair to itself.
  CHECK(p.translated(7) == p);
  const CubePartition q = p.translated(1);
  CHECK(q.label(1) == 0);
  CHECK(q.cell(0) == VertexSet::of(3, {1, 6}));

  CoordPerm perm;
  perm.map = {2, 1, 0};
  const CubePartition r = p.permuted(perm);
  for (Vertex v = 0; v < 8; ++v) CHECK(r.label(perm.apply(v)) == p.label(v));

  const CubePartition s = p.relabeled({3, 2, 1, 0});
  CHECK(s.label(0) == 3);
  CHECK(s.cell(3) == p.cell(0));

  const CubePartition t = CubePartition::from_cells(
      3, {p.cell(0), p.cell(1), p.cell(2), p.cell(3)});
  CHECK(t == p);
  CHECK_THROWS_AS(CubePartition(3, 4, {0, 1, 2, 4, 4, 2, 1, 0}), Error);
}

TEST_CASE("subcube uses 1-based coordinates with coordinate n lowest") {
  CHECK(subcube(3, {3}, 1) == VertexSet::of(3, {1, 3, 5, 7}));
  CHECK(subcube(3, {1}, 0) == VertexSet::of(3, {0, 1, 2, 3}));
  CHECK(subcube(3, {1, 3}, 0b100) == VertexSet::of(3, {4, 6}));
  CHECK_THROWS_AS(subcube(3, {4}, 0), Error);
  CHECK_THROWS_AS(subcube(3, {1}, 1), Error);  // value off the fixed coord
}

TEST_CASE("walsh transform") {
  std::vector<std::int64_t> delta(8, 0);
  delta[0] = 1;
  CHECK(walsh_transform(delta) == std::vector<std::int64_t>(8, 1));

  std::vector<std::int64_t> ones(8, 1);
  const auto h = walsh_transform(ones);
  CHECK(h[0] == 8);
  for (int w = 1; w < 8; ++w) CHECK(h[w] == 0);

  // Involution up to the factor 2^n.
  std::vector<std::int64_t> g{3, -1, 4, 1, -5, 9, 2, 6};
  auto gg = walsh_transform(walsh_transform(g));
  for (int i = 0; i < 8; ++i) CHECK(gg[i] == 8 * g[i]);
}
