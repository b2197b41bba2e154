#include "rescube/algebra.hpp"

#include <algorithm>

#include "rescube/bridge.hpp"

namespace rescube {

std::string to_string(RankClass c) {
  switch (c) {
    case RankClass::Linear: return "linear";
    case RankClass::StrictlySemilinear: return "strictly-semilinear";
    case RankClass::FullRank: return "full-rank";
  }
  return "?";
}

std::vector<Vertex> difference_basis(const VertexSet& c) {
  if (c.empty()) throw Error("affine rank of empty set");
  const Vertex c0 = c.min_element();
  std::vector<Vertex> basis;  // basis[i] has a leading bit no later entry has
  c.for_each([&](Vertex v) {
    Vertex d = v ^ c0;
    for (Vertex b : basis) d = std::min(d, d ^ b);
    if (d) basis.push_back(d);
  });
  // Reduce to a canonical echelon basis sorted by leading bit.
  std::sort(basis.begin(), basis.end());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      basis[j] = std::min(basis[j], basis[j] ^ basis[i]);
    }
    std::sort(basis.begin() + static_cast<std::ptrdiff_t>(i) + 1, basis.end());
  }
  return basis;
}

int affine_rank(const VertexSet& c) {
  return static_cast<int>(difference_basis(c).size());
}

VertexSet affine_dual(const VertexSet& c) {
  const int n = c.dim();
  std::vector<Vertex> basis = difference_basis(c);
  // Nullspace of the basis rows: v with <b, v> = 0 for every basis vector b.
  // Gaussian elimination on the rows, tracking pivot columns.
  std::vector<Vertex> rows = basis;
  std::vector<int> pivot;  // bit position of each row's pivot
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int pb = 31 - __builtin_clz(rows[i]);  // rows are nonzero
    pivot.push_back(pb);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j != i && ((rows[j] >> pb) & 1u)) rows[j] ^= rows[i];
    }
  }
  std::vector<int> free_bits;
  for (int b = 0; b < n; ++b) {
    if (std::find(pivot.begin(), pivot.end(), b) == pivot.end()) free_bits.push_back(b);
  }
  // One nullspace basis vector per free bit.
  std::vector<Vertex> nullb;
  for (int fb : free_bits) {
    Vertex v = Vertex{1} << fb;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((rows[i] >> fb) & 1u) v |= Vertex{1} << pivot[i];
    }
    nullb.push_back(v);
  }
  VertexSet out(n);
  const std::size_t dim = nullb.size();
  for (std::size_t s = 0; s < (std::size_t{1} << dim); ++s) {
    Vertex v = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if ((s >> i) & 1u) v ^= nullb[i];
    }
    out.insert(v);
  }
  return out;
}

RankReport rank_class_s2(const CubePartition& p) {
  const int n = p.dim();
  EquitableResult q = quotient_matrix(p);
  if (!q.ok() || *q.matrix != standard_matrix(StandardKind::S2, n)) {
    throw WrongMatrixError("partition does not verify the S2 matrix");
  }
  int r = affine_rank(p.cell(0));
  if (r == n - 2) return {RankClass::Linear, r};
  if (r == n - 1) return {RankClass::StrictlySemilinear, r};
  return {RankClass::FullRank, r};
}

VertexSet graph_of(const VbFunction& f) {
  VertexSet g(f.n + f.m);
  for (std::size_t x = 0; x < f.table.size(); ++x) {
    g.insert((static_cast<Vertex>(x) << f.m) | f.table[x]);
  }
  return g;
}

RankReport rank_class_s4(const CubePartition& p) {
  const int n = p.dim();
  EquitableResult q = quotient_matrix(p);
  if (!q.ok() || *q.matrix != standard_matrix(StandardKind::S4, n)) {
    throw WrongMatrixError("partition does not verify the S4 matrix");
  }
  int r = affine_rank(graph_of(function_of(p, 2)));
  if (r == n) return {RankClass::Linear, r};
  if (r == n + 1) return {RankClass::StrictlySemilinear, r};
  return {RankClass::FullRank, r};
}

bool rank_relation_check(const CubePartition& p4) {
  const VbFunction f = function_of(p4, 2);
  const int lhs = affine_rank(graph_of(f));
  const CubePartition p2 = expand_s4_to_s2(p4);
  const int rhs = affine_rank(p2.cell(0));
  return lhs + 1 == rhs;
}

MovedDual move_dual_to_suffix(const CubePartition& p) {
  const int n = p.dim();
  if (n % 3 != 0) throw Error("dimension not divisible by 3");
  EquitableResult q = quotient_matrix(p);
  if (!q.ok() || *q.matrix != standard_matrix(StandardKind::S2, n)) {
    throw WrongMatrixError("partition does not verify the S2 matrix");
  }
  const VertexSet dual = affine_dual(p.cell(0));
  // Lexicographically smallest nonzero dual word; as strings read
  // left-to-right this is the numerically smallest nonzero member.
  Vertex d = 0;
  {
    std::vector<Vertex> all = dual.to_vector();
    for (Vertex v : all) {
      if (v != 0) {
        d = v;
        break;
      }
    }
  }
  if (d == 0) throw Error("cell 0 has no nonzero dual word (full rank)");
  const int r = n / 3;
  if (weight(d) != 2 * r) {
    throw Error("dual word has weight " + std::to_string(weight(d)) +
                ", expected " + std::to_string(2 * r));
  }
  // One-bits go to the top 2r positions, zero-bits to the bottom r, both
  // keeping relative order.  Positions are processed from high to low.
  CoordPerm perm;
  perm.map.resize(n);
  int next_one = n - 1;   // next target for a one-bit
  int next_zero = r - 1;  // next target for a zero-bit
  for (int b = n - 1; b >= 0; --b) {
    if ((d >> b) & 1u) {
      perm.map[b] = static_cast<std::uint8_t>(next_one--);
    } else {
      perm.map[b] = static_cast<std::uint8_t>(next_zero--);
    }
  }
  MovedDual out{p.permuted(perm), perm, perm.apply(d)};
  return out;
}

}  // namespace rescube
