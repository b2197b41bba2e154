// Multifold 1-perfect binary codes and the correspondence between
// S2(3r)-partitions having the dual word 1^(2r) 0^r and the 3-cell
// partitions of Q_(2r) with quotient matrix [[0,0,2r],[0,0,2r],[r,r,0]]
// ("EPERF"), built from parity-extended r-fold 1-perfect codes.
#pragma once

#include <utility>
#include <vector>

#include "rescube/core.hpp"

namespace rescube {

// t-fold 1-perfect code: |C intersect B| = t for every radius-1 ball B.
struct MultifoldCode {
  int length = 0;      // code length m; words live in Q_m
  int fold = 0;        // t
  VertexSet words;

  MultifoldCode(int length_, int fold_, VertexSet words_);
};

// Every radius-1 ball meets C in exactly t vertices.
bool is_multifold_perfect(const VertexSet& c, int t);

// Hamming code of length 2^mp - 1 (mp >= 2): codewords are the vertices
// whose set coordinates XOR to zero when coordinate j is encoded as the
// mp-bit value j.  Linear, contains 0, 1-fold perfect.
MultifoldCode hamming_code(int mp);

// Union of the translates base + w over the given distinct weight-1 words;
// translates must be pairwise disjoint.  Fold multiplies by the number of
// translates.  The result is re-verified.
MultifoldCode multifold_union(const MultifoldCode& base,
                              const std::vector<Vertex>& translates);

// Append an even-weight parity bit as the lowest bit: Q_m -> Q_(m+1).
VertexSet extend_parity(const MultifoldCode& c);

// (D, even \ D, odd) over Q_(2r) for an even-weight-only D.  Verifies the
// EPERF matrix exactly when D is the parity extension of an r-fold code.
CubePartition eperf_partition(const VertexSet& d);

// Code-to-partition correspondence: EPERF partition dp = (D, D', odd) of Q_(2r) plus a
// sign in {0,1} -> S2(3r)-partition whose first cell C has the dual word
// v = 1^(2r) 0^r with <c, v> = sign for all c in C.
// sign=0: C = (D x Q_(r,even)) union (D' x Q_(r,odd)); sign=1 additionally
// translates by the last coordinate of the first block (vertex 1 << r).
CubePartition semi_to_s2(const CubePartition& dp, int sign);

// Inverse of semi_to_s2; recovers (dp, sign).  Errors when the dual word
// 1^(2r) 0^r is absent from the first cell's dual.
std::pair<CubePartition, int> s2_to_semi(const CubePartition& p);

// Complete a semilinear S2(3r)-partition whose dual word has been moved to
// the suffix into an S4(3r)-partition with cell 0 preserved exactly.
// Cell 1 is the corresponding companion C'; the remaining cell C'' = D'' x Q_r
// splits into cells 2 and 3 by the parity of wt(x_1..x_r) + wt(y).
CubePartition semilinear_complete_to_s4(const CubePartition& p);

}  // namespace rescube
