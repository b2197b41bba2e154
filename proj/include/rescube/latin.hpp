// Equitable partitions of the Hamming graph H(r,4) (vertices: base-4 words
// of length r; edges: Hamming distance 1; degree 3r), Latin hypercubes of
// order 4 as their S4-analogues, MDS codes with distance 2 as the S2-analogue
// first cells, and the lift H(r,4) -> Q_(3r) that triples each coordinate.
//
// Conventions mirror the cube: coordinate j (1-based) of a Hamming vertex is
// its base-4 digit number r-j, so coordinate r is the least significant
// digit and the vertex index is the word read left-to-right in base 4.
//
// The lift replaces symbol v by the antipodal pair T_v of Q_3:
//   T_0 = {000, 111}, T_1 = {010, 101}, T_2 = {100, 011}, T_3 = {110, 001}.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rescube/core.hpp"

namespace rescube {

class HammingPartition {
 public:
  HammingPartition(int r, int k, std::vector<std::uint8_t> labels);

  int coords() const { return r_; }
  int cells() const { return k_; }
  std::uint64_t universe_size() const { return labels_.size(); }
  std::uint8_t label(std::uint32_t v) const { return labels_[v]; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }
  std::uint64_t cell_size(int i) const;

  // Isometries of H(r,4) for tests and randomized inputs.
  HammingPartition coord_permuted(const std::vector<int>& perm) const;
  // symbol_perms[j][s] is the image of symbol s at coordinate j (0-based
  // coordinate index in our digit order, i.e. digit position r-1-j).
  HammingPartition symbol_permuted(
      const std::vector<std::array<std::uint8_t, 4>>& symbol_perms) const;
  HammingPartition relabeled(const std::vector<std::uint8_t>& beta) const;

  bool operator==(const HammingPartition&) const = default;

 private:
  int r_;
  int k_;
  std::vector<std::uint8_t> labels_;  // 4^r entries
};

// Quotient matrix over H(r,4), with the same witness semantics as the cube
// version; NotEquitable.vertex holds the base-4 index.
EquitableResult quotient_matrix_h4(const HammingPartition& p);

// The S2/S3/S4 analogues on H(r,4) are standard_matrix(kind, 3r).

// MDS code <-> Latin hypercube (Singleton-tight distance-2 codes in
// H(r+1,4)).  The code side is a 2-cell partition verifying the S2 analogue;
// cell i of the Latin side is { v : v || i in C }.
HammingPartition latin_from_mds(const HammingPartition& mds2);
HammingPartition mds_from_latin(const HammingPartition& latin);

// label(v) = XOR of all digits of v under the Z_2 x Z_2 identification of
// the symbols.  r = 1 gives the four singletons.
HammingPartition linear_latin(int r);

// All 576 Latin squares of order 4 as HammingPartitions with r = 2
// (coordinate 1 = row, coordinate 2 = column), in lexicographic order of
// their label tables.
std::vector<HammingPartition> enumerate_latin_squares();

// The antipodal S4(3)-partition whose cell v is T_v; the lift's inner table.
CubePartition lift_cell_partition();

// Lift: cube vertex u belongs to the cell of the Hamming vertex whose digit
// j is the T-index of u's j-th 3-bit block.  Preserves quotient matrices.
CubePartition lift(const HammingPartition& p);

// Concatenation: Hamming coordinate j is replaced by an S4(n_j)-partition
// occupying the j-th contiguous coordinate block of Q_(n_1+...+n_r); cell i
// of the output collects the blocks whose inner cells spell a vertex of
// cell i.  lift(p) equals concat(p, [lift_cell_partition() x r]).
CubePartition concat(const HammingPartition& p,
                     const std::vector<CubePartition>& inners);

// Every line (maximal 4-clique: one coordinate free, the rest fixed) meets
// cell i in exactly |cell i| / 4^(r-1) vertices.
bool clique_balance_check(const HammingPartition& p, int cell);

struct ReducibilityWitness {
  // 1-based cube coordinates of the first block B (the complement forms the
  // second block); inner partitions on Q_|B| and Q_|complement|; the induced
  // outer partition of H(2,4).
  std::vector<int> block_coords;
  CubePartition inner1;
  CubePartition inner2;
  HammingPartition outer;
};

struct ReducibilityReport {
  bool reducible = false;
  std::optional<ReducibilityWitness> witness;
};

// Decide whether a k-cell cube partition (k = 2 for S2, 4 for S4) is a
// concatenation over some coordinate bipartition B | B-complement with
// |B|, |B-complement| >= 3 and both divisible by 3.  Returns the first
// witness in the fixed enumeration order of bipartitions.
ReducibilityReport detect_reducible(const CubePartition& p, StandardKind kind);

}  // namespace rescube
