// Vectorial Boolean functions Q_n -> Q_m, balancedness, correlation
// immunity and resilience.  The value table is indexed by vertex; values are
// m-bit words using the same "coordinate 1 = highest bit" convention.
#pragma once

#include <cstdint>
#include <vector>

#include "rescube/core.hpp"

namespace rescube {

struct VbFunction {
  int n = 0;
  int m = 0;
  std::vector<std::uint8_t> table;  // 2^n entries, each < 2^m

  VbFunction() = default;
  VbFunction(int n_, int m_, std::vector<std::uint8_t> table_);
  unsigned value(Vertex x) const { return table[x]; }
  bool operator==(const VbFunction&) const = default;
};

// Preimage f^{-1}(y) as a vertex set.
VertexSet indicator(const VbFunction& f, unsigned y);

// All preimages have size 2^(n-m); requires m <= n.
bool is_balanced(const VbFunction& f);

enum class CiMethod { Auto, Direct, Spectral };

// Largest t such that f is correlation immune of order t (0..n; every
// function has order >= 0, constants have order n).
//
// Direct: per level t, checks every subcube fixing exactly t coordinates
// against |f^{-1}(y)| / 2^t for every y.  Spectral: Walsh coefficients of
// every indicator vanish on all weights 1..t.  Auto uses Direct for n <= 10
// and Spectral above.
int ci_order(const VbFunction& f, CiMethod method = CiMethod::Auto);

// Balanced and correlation immune of order >= t.
bool is_resilient(const VbFunction& f, int t, CiMethod method = CiMethod::Auto);

// Largest integer t with (n - t - 1) / n >= (2^(m-1) - 1) / (2^m - 1);
// for m = 2 and 3 | n this equals 2n/3 - 1.
int max_resilience_bound(int n, int m);

// The canonical (2n/3-1)-resilient linear (n,2)-function for 3 | n: component
// forms with supports on coordinates 1..2n/3 and (1..n/3) + (2n/3+1..n), so
// every nonzero combination of the components has weight 2n/3.
VbFunction linear_function(int n);

// Partition of Q_n into the 2^m preimage cells, in value order.  Cells of
// unattained values are empty (such partitions are rejected by
// quotient_matrix but still round-trip through function_of).
CubePartition partition_of(const VbFunction& f);

// Inverse of partition_of; requires p.cells() == 2^m.
VbFunction function_of(const CubePartition& p, int m);

}  // namespace rescube
