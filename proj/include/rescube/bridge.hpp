// Bridges between the standard partition families:
//   S2(n) -> S3(n) by splitting the first cell against its e_n-translate,
//   S4(n) <-> S2(n+3) via the three-bit suffix construction; the S2 side is
//   invariant under translation by 0...0111.
//
// The suffix encoding appends c_i = binary(i) (i = 0..3) as the three lowest
// bits and pairs it with c_i XOR 111, so the first cell is
//   C = union_i C_i x {c_i, c_i XOR 111}.
// Every output is re-verified against its standard matrix before return.
#pragma once

#include "rescube/core.hpp"

namespace rescube {

// C XOR w == C.
bool is_translation_invariant(const VertexSet& c, Vertex w);

// (C, complement) with the S2(n) matrix -> (C, C XOR e_n, rest) with S3(n).
CubePartition split_s2_to_s3(const CubePartition& p);

// S4(n) partition -> S2(n+3) partition whose first cell satisfies
// C = C XOR 0...0111.
CubePartition expand_s4_to_s2(const CubePartition& p4);

// Inverse of expand_s4_to_s2.  Requires the S2(n+3) matrix and first-cell
// invariance under XOR with 0...0111 (reported distinctly).
CubePartition contract_s2_to_s4(const CubePartition& p2);

}  // namespace rescube
