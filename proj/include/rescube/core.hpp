// Core types for equitable partitions of the binary hypercube Q_n.
//
// Conventions used throughout this library:
//   * A vertex of Q_n is an unsigned integer in [0, 2^n).  A word read
//     left-to-right is the index in binary, so coordinate j (1-based, j = 1..n)
//     sits at bit position n-j.  Coordinate n is the least significant bit.
//   * "The last k positions" of a word therefore means its k lowest bits;
//     the word 0...0111 is the integer 7.
//   * Translation means XOR; the isometry group of Q_n is generated by
//     coordinate permutations and translations.
//   * Dimensions are capped at n = 28 so vertex sets stay addressable as
//     flat bitsets.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rescube {

inline constexpr int kMaxDim = 28;

using Vertex = std::uint32_t;

// Base error for violated preconditions / malformed inputs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input partition does not carry the quotient matrix an operation requires.
class WrongMatrixError : public Error {
 public:
  using Error::Error;
};

// Input set/partition is not invariant under the required translation.
// Reported distinctly from WrongMatrixError on purpose.
class NotInvariantError : public Error {
 public:
  using Error::Error;
};

inline int weight(Vertex v) { return __builtin_popcount(v); }

void check_dim(int n);  // throws Error unless 0 <= n <= kMaxDim

// Permutation of the n bit positions of a vertex; map[b] is the image
// position of source position b.  Acts on vertices by moving bits.
struct CoordPerm {
  std::vector<std::uint8_t> map;

  static CoordPerm identity(int n);
  int dim() const { return static_cast<int>(map.size()); }
  Vertex apply(Vertex v) const;
  CoordPerm inverse() const;
  // Composition acting as "first this, then next".
  CoordPerm then(const CoordPerm& next) const;
  bool operator==(const CoordPerm&) const = default;
};

// Subset of Q_n backed by a flat bitset over all 2^n vertices.
class VertexSet {
 public:
  explicit VertexSet(int n);
  static VertexSet full(int n);
  static VertexSet of(int n, std::initializer_list<Vertex> vs);
  static VertexSet of(int n, const std::vector<Vertex>& vs);

  int dim() const { return n_; }
  std::uint64_t universe_size() const { return std::uint64_t{1} << n_; }
  std::uint64_t count() const;
  bool empty() const { return count() == 0; }
  bool contains(Vertex v) const {
    return (w_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(Vertex v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  Vertex min_element() const;  // throws Error if empty
  std::vector<Vertex> to_vector() const;

  VertexSet translated(Vertex w) const;
  VertexSet permuted(const CoordPerm& p) const;
  VertexSet complement() const;

  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator^(const VertexSet& o) const;
  bool operator==(const VertexSet&) const = default;
  bool is_subset_of(const VertexSet& o) const;
  bool disjoint_with(const VertexSet& o) const;

  // Calls f(v) for every member, in increasing index order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t b = w_[i];
      while (b) {
        f(static_cast<Vertex>((i << 6) + __builtin_ctzll(b)));
        b &= b - 1;
      }
    }
  }

 private:
  int n_;
  std::vector<std::uint64_t> w_;
};

// k x k integer matrix, row-major.
struct QuotientMatrix {
  int k = 0;
  std::vector<int> a;

  QuotientMatrix() = default;
  QuotientMatrix(int kk, std::vector<int> entries);
  int& at(int i, int j) { return a[static_cast<std::size_t>(i) * k + j]; }
  int at(int i, int j) const { return a[static_cast<std::size_t>(i) * k + j]; }
  int row_sum(int i) const;
  std::string to_string() const;  // "[[0,3],[1,2]]"
  bool operator==(const QuotientMatrix&) const = default;
};

enum class StandardKind { S2, S3, S4, Eperf };

StandardKind standard_kind_from_string(const std::string& s);  // "S2" etc.
std::string to_string(StandardKind k);

// The standard quotient matrices with row sum n.  S2/S3/S4 require 3 | n;
// Eperf requires n even (it lives on Q_(2r) with r = n/2).
QuotientMatrix standard_matrix(StandardKind kind, int n);

// Partition of Q_n into k labelled cells; labels[v] in [0, k).
class CubePartition {
 public:
  CubePartition(int n, int k, std::vector<std::uint8_t> labels);
  static CubePartition from_cells(int n, const std::vector<VertexSet>& cells);

  int dim() const { return n_; }
  int cells() const { return k_; }
  std::uint8_t label(Vertex v) const { return labels_[v]; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }
  VertexSet cell(int i) const;
  std::uint64_t cell_size(int i) const;
  bool has_empty_cell() const;

  CubePartition translated(Vertex w) const;
  CubePartition permuted(const CoordPerm& p) const;
  // beta[i] is the new label of old cell i; beta must be a permutation of [0,k).
  CubePartition relabeled(const std::vector<std::uint8_t>& beta) const;

  bool operator==(const CubePartition&) const = default;

 private:
  int n_;
  int k_;
  std::vector<std::uint8_t> labels_;
};

// Witness that a partition is not equitable: the first vertex (in index
// order) whose neighbour-count row differs from the row of its cell's
// lowest-index representative.
struct NotEquitable {
  Vertex vertex = 0;
  int cell = 0;
  std::vector<int> observed;
  std::vector<int> expected;
  std::string describe() const;
};

struct EquitableResult {
  std::optional<QuotientMatrix> matrix;
  std::optional<NotEquitable> failure;
  bool ok() const { return matrix.has_value(); }
};

// Quotient matrix of a partition of Q_n, or a witness of non-equitability.
// Requires every cell non-empty.
EquitableResult quotient_matrix(const CubePartition& p);

// Subcube of Q_n with the given 1-based coordinates fixed.  fixed_values is a
// word whose bits may only lie on the fixed coordinates.
VertexSet subcube(int n, const std::vector<int>& fixed_coords,
                  Vertex fixed_values);

// Walsh-Hadamard transform: g_hat(w) = sum_x g(x) * (-1)^<w,x>.
// Table length must be a power of two.  O(n 2^n).
std::vector<std::int64_t> walsh_transform(const std::vector<std::int64_t>& g);
void walsh_transform_inplace(std::vector<std::int64_t>& g);

}  // namespace rescube
