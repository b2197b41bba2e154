// GF(2) affine-algebraic invariants: affine rank, affine dual, the
// linear / strictly-semilinear / full-rank trichotomy for S2-partitions,
// and the graph-of-function rank relation.
#pragma once

#include <vector>

#include "rescube/core.hpp"
#include "rescube/resilient.hpp"

namespace rescube {

enum class RankClass { Linear, StrictlySemilinear, FullRank };

std::string to_string(RankClass c);

// Dimension of the affine span of a non-empty set: rank over GF(2) of
// {c ^ c0 : c in C} where c0 is the lowest-index element.
int affine_rank(const VertexSet& c);

// GF(2) basis (reduced, increasing leading bits) of {c ^ c0 : c in C}.
std::vector<Vertex> difference_basis(const VertexSet& c);

// Affine dual: all v with <c, v> constant over C.  Always contains 0 and
// has size 2^(n - affine_rank(C)).
VertexSet affine_dual(const VertexSet& c);

struct RankReport {
  RankClass cls;
  int rank;  // affine rank of the classified object
};

// Classification of an S2-partition by the affine rank of its first cell:
// n-2 Linear, n-1 StrictlySemilinear, n FullRank.  Requires the S2 matrix.
RankReport rank_class_s2(const CubePartition& p);

// Graph G(f) = { x || f(x) } in Q_(n+m), with f(x) on the m lowest bits.
VertexSet graph_of(const VbFunction& f);

// Rank class of an S4-partition via the graph of its function:
// rank n Linear, n+1 StrictlySemilinear, n+2 FullRank.
RankReport rank_class_s4(const CubePartition& p);

// affine_rank(graph_of(function_of(p))) + 1 == affine_rank(first cell of
// expand_s4_to_s2(p)).  Requires the S4 matrix.
bool rank_relation_check(const CubePartition& p4);

struct MovedDual {
  CubePartition partition;
  CoordPerm perm;       // applied coordinate permutation
  Vertex dual_word;     // dual word of the output first cell, 1^(2n/3)0^(n/3)
};

// Permute coordinates so the lexicographically smallest nonzero dual word of
// cell 0 (necessarily of weight 2n/3) becomes 1^(2n/3) 0^(n/3).  One-bits and
// zero-bits keep their relative order, so an input already in position gets
// the identity permutation.  Errors when cell 0 has no nonzero dual word.
MovedDual move_dual_to_suffix(const CubePartition& p);

}  // namespace rescube
