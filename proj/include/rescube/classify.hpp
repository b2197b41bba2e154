// classify.hpp -- equivalence of (n,2)-functions / S4-partitions, canonical
// forms, and exhaustive isomorph-free classification.
//
// The equivalence group on (n,m)-functions is the set of pairs (alpha, beta)
// where alpha(x) = sigma(x) XOR c is an isometry of Q_n (coordinate
// permutation sigma plus translation word c) and beta is a permutation of the
// 2^m output values.  It acts by f |-> beta . f . alpha^{-1}.  Two functions
// (equivalently, two cell-labelled partitions) are equivalent when some group
// element maps one to the other.  The canonical form of f is the
// lexicographically least value table in its orbit; orbit minimization is a
// depth-first branch-and-bound over (base point, coordinate images) with the
// value relabelling forced greedily.
//
// search_s4(n) classifies the S4(n)-partitions for n in {3, 6, 9} by a
// vertex-order DFS over cell labellings with per-vertex neighbour-count
// propagation, origin-in-cell-0 normalization (new cells are introduced in
// increasing order), prefix balance checks, and canonical-augmentation style
// rejection: when a subcube [0, 2^j) has just been filled, the prefix is
// compared against its images under the stabilizer of the subcube
// (translations by u < 2^j, permutations of the low j coordinates, value
// relabellings) and the branch is abandoned if any image is lexicographically
// smaller.  The orbit-least labelling survives every such test, so each
// equivalence class is still reached; duplicates are removed online through
// invariant fingerprints plus explicit transporter searches.
//
// search_multifold(7, t) classifies the t-fold 1-perfect binary codes of
// length 7 up to coordinate permutation + translation with the same scheme
// on membership indicators (no value relabelling).

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rescube/algebra.hpp"
#include "rescube/core.hpp"
#include "rescube/perfect.hpp"
#include "rescube/resilient.hpp"

namespace rescube {

// One equivalence-group element: x |-> perm(x) ^ shift on inputs, beta on
// the 4 output values (m = 2 throughout the classification machinery).
struct Equivalence {
  CoordPerm perm;
  Vertex shift = 0;
  std::array<std::uint8_t, 4> beta{0, 1, 2, 3};

  static Equivalence identity(int n);
  // The element "g after this": apply(this->then(g), f) = apply(g, apply(this, f)).
  Equivalence then(const Equivalence& g) const;
  Equivalence inverse() const;
};

// f |-> beta . f . alpha^{-1}.  Requires m = 2.
VbFunction apply(const Equivalence& e, const VbFunction& f);

// Lexicographically least value table in the orbit of f.  Requires m = 2.
VbFunction canonical_form(const VbFunction& f);

// Number of group elements (alpha, beta) with beta.f.alpha^{-1} = f.
std::uint64_t automorphism_count(const VbFunction& f);

// Explicit transporter: an e with apply(e, f) = g, if one exists.
std::optional<Equivalence> find_equivalence(const VbFunction& f,
                                            const VbFunction& g);

// Equivalence test: invariant fast-reject, then canonical forms compared.
bool are_equivalent(const VbFunction& f, const VbFunction& g);

// Cheap equivalence invariants (rank class, cell dual weight enumerators,
// cell distance distributions), serialized for bucketing.  Equal for
// equivalent functions; used as a fast reject before full canonicalization.
std::string invariant_key(const VbFunction& f);

// |group| = 2^n * n! * 4! for m = 2.
std::uint64_t equivalence_group_order(int n);

struct ClassReport {
  VbFunction representative;  // canonical form
  std::uint64_t aut_order = 0;
  std::uint64_t orbit_size = 0;  // group order / aut_order
  RankReport rank;               // of the function graph
  bool semilinear = false;       // rank class != FullRank
  bool reducible = false;        // latin::detect_reducible on the partition
};

struct SearchOptions {
  int jobs = 1;                // worker threads for the DFS frontier
  double budget_seconds = 0;   // 0 = unlimited; else abort with partial result
  int lex_levels = -1;         // subcube-boundary rejection depth; -1 = auto
};

struct SearchResult {
  std::vector<ClassReport> classes;
  bool complete = true;   // false when the time budget expired first
  std::uint64_t nodes = 0;
};

// Complete classification of S4(n)-partitions, n in {3, 6, 9}.
SearchResult search_s4(int n, const SearchOptions& opts = {});

// All t-fold 1-perfect codes of length m = 7 (t in 1..4) up to coordinate
// permutation + translation, sorted by canonical indicator.
std::vector<MultifoldCode> search_multifold(int m, int t);

// The semilinear route to the n = 9 classes: 4-fold codes of length 7 ->
// parity extension -> 3-cell partitions of Q_8 -> S2(12) both signs ->
// contraction over every weight-3 kernel word of the first cell -> S4(9).
// Returns the deduplicated classes (the linear one plus the strictly
// semilinear ones).  Requires n = 9.
SearchResult semilinear_classes(int n);

}  // namespace rescube
