#include "rescube/resilient.hpp"

#include <algorithm>
#include <numeric>

namespace rescube {

VbFunction::VbFunction(int n_, int m_, std::vector<std::uint8_t> table_)
    : n(n_), m(m_), table(std::move(table_)) {
  check_dim(n);
  if (m < 1 || m > 8) throw Error("output dimension m out of range [1, 8]");
  if (table.size() != (std::size_t{1} << n)) throw Error("table must have 2^n entries");
  for (std::uint8_t v : table) {
    if (v >= (1u << m)) throw Error("table value out of range [0, 2^m)");
  }
}

VertexSet indicator(const VbFunction& f, unsigned y) {
  if (y >= (1u << f.m)) throw Error("value out of range [0, 2^m)");
  VertexSet s(f.n);
  for (std::size_t x = 0; x < f.table.size(); ++x) {
    if (f.table[x] == y) s.insert(static_cast<Vertex>(x));
  }
  return s;
}

bool is_balanced(const VbFunction& f) {
  if (f.m > f.n) throw Error("is_balanced requires m <= n");
  std::vector<std::uint64_t> cnt(std::size_t{1} << f.m, 0);
  for (std::uint8_t v : f.table) ++cnt[v];
  const std::uint64_t want = std::uint64_t{1} << (f.n - f.m);
  return std::all_of(cnt.begin(), cnt.end(),
                     [&](std::uint64_t c) { return c == want; });
}

namespace {

// Largest t such that, for every y, every subcube fixing exactly t
// coordinates meets f^{-1}(y) in |f^{-1}(y)| / 2^t vertices.  Levels are
// checked in increasing order; level t-1 follows from level t by summing
// the two halves of each smaller subcube, so checking the exact level at
// each step is enough.
int ci_order_direct(const VbFunction& f) {
  const int n = f.n;
  const std::size_t size = std::size_t{1} << n;
  const unsigned values = 1u << f.m;
  std::vector<std::uint64_t> pre(values, 0);
  for (std::uint8_t v : f.table) ++pre[v];

  std::vector<int> coords(n);  // current t-subset of bit positions
  std::vector<std::uint64_t> bucket;
  for (int t = 1; t <= n; ++t) {
    bool level_ok = true;
    bool divisible = true;
    for (unsigned y = 0; y < values; ++y) {
      if (pre[y] % (std::uint64_t{1} << t)) divisible = false;
    }
    if (!divisible) return t - 1;
    // Iterate over all t-subsets of bit positions.
    std::iota(coords.begin(), coords.begin() + t, 0);
    while (level_ok) {
      Vertex mask = 0;
      for (int i = 0; i < t; ++i) mask |= Vertex{1} << coords[i];
      // Count table values per (assignment on mask, y).
      bucket.assign((std::size_t{1} << t) * values, 0);
      for (std::size_t x = 0; x < size; ++x) {
        // Compress the bits of x on mask into a dense index.
        std::uint32_t idx = 0;
        for (int i = 0; i < t; ++i) idx |= ((x >> coords[i]) & 1u) << i;
        ++bucket[idx * values + f.table[x]];
      }
      for (unsigned y = 0; y < values && level_ok; ++y) {
        const std::uint64_t want = pre[y] >> t;
        for (std::size_t a = 0; a < (std::size_t{1} << t); ++a) {
          if (bucket[a * values + y] != want) {
            level_ok = false;
            break;
          }
        }
      }
      // Next t-subset in lexicographic order.
      int i = t - 1;
      while (i >= 0 && coords[i] == n - t + i) --i;
      if (i < 0) break;
      ++coords[i];
      for (int j = i + 1; j < t; ++j) coords[j] = coords[j - 1] + 1;
    }
    if (!level_ok) return t - 1;
  }
  return n;
}

int ci_order_spectral(const VbFunction& f) {
  const int n = f.n;
  const std::size_t size = std::size_t{1} << n;
  const unsigned values = 1u << f.m;
  int order = n;
  std::vector<std::int64_t> g(size);
  for (unsigned y = 0; y < values; ++y) {
    for (std::size_t x = 0; x < size; ++x) g[x] = (f.table[x] == y) ? 1 : 0;
    walsh_transform_inplace(g);
    for (std::size_t w = 1; w < size; ++w) {
      if (g[w] != 0) {
        order = std::min(order, weight(static_cast<Vertex>(w)) - 1);
      }
    }
    if (order == 0) return 0;
  }
  return order;
}

}  // namespace

int ci_order(const VbFunction& f, CiMethod method) {
  if (method == CiMethod::Auto) {
    method = (f.n <= 10) ? CiMethod::Direct : CiMethod::Spectral;
  }
  return method == CiMethod::Direct ? ci_order_direct(f) : ci_order_spectral(f);
}

bool is_resilient(const VbFunction& f, int t, CiMethod method) {
  if (t < 0 || t > f.n) throw Error("resilience order out of range [0, n]");
  return is_balanced(f) && ci_order(f, method) >= t;
}

int max_resilience_bound(int n, int m) {
  check_dim(n);
  if (n < 1) throw Error("n must be positive");
  if (m < 1 || m > 8) throw Error("m out of range [1, 8]");
  // (n - t - 1)(2^m - 1) >= n (2^(m-1) - 1), maximised over integer t.
  const std::int64_t q = (std::int64_t{1} << m) - 1;
  const std::int64_t p = (std::int64_t{1} << (m - 1)) - 1;
  const std::int64_t ceil_np_q = (static_cast<std::int64_t>(n) * p + q - 1) / q;
  return static_cast<int>(n - 1 - ceil_np_q);
}

VbFunction linear_function(int n) {
  check_dim(n);
  if (n < 3 || n % 3 != 0) throw Error("n must be a positive multiple of 3");
  const int r = n / 3;
  const Vertex a = ((Vertex{1} << (2 * r)) - 1) << r;
  const Vertex b = (((Vertex{1} << r) - 1) << (2 * r)) | ((Vertex{1} << r) - 1);
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    const unsigned fa = weight(a & static_cast<Vertex>(x)) & 1u;
    const unsigned fb = weight(b & static_cast<Vertex>(x)) & 1u;
    table[x] = static_cast<std::uint8_t>((fa << 1) | fb);
  }
  return VbFunction(n, 2, std::move(table));
}

CubePartition partition_of(const VbFunction& f) {
  return CubePartition(f.n, 1 << f.m, f.table);
}

VbFunction function_of(const CubePartition& p, int m) {
  if (m < 1 || m > 8) throw Error("m out of range [1, 8]");
  if (p.cells() != (1 << m)) throw Error("partition must have exactly 2^m cells");
  return VbFunction(p.dim(), m, p.labels());
}

}  // namespace rescube
