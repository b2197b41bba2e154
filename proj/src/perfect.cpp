#include "rescube/perfect.hpp"

#include <algorithm>

namespace rescube {

namespace {

void require_matrix(const CubePartition& p, StandardKind kind,
                    const std::string& what) {
  EquitableResult q = quotient_matrix(p);
  if (!q.ok()) {
    throw WrongMatrixError(what + ": input is not equitable (" +
                           q.failure->describe() + ")");
  }
  if (*q.matrix != standard_matrix(kind, p.dim())) {
    throw WrongMatrixError(what + ": input quotient matrix " +
                           q.matrix->to_string() + " is not " +
                           to_string(kind) + "(" + std::to_string(p.dim()) + ")");
  }
}

void verify_output(const CubePartition& p, StandardKind kind,
                   const std::string& what) {
  EquitableResult q = quotient_matrix(p);
  if (!q.ok() || *q.matrix != standard_matrix(kind, p.dim())) {
    throw Error(what + ": constructed output failed its " + to_string(kind) +
                " verification");
  }
}

}  // namespace

MultifoldCode::MultifoldCode(int length_, int fold_, VertexSet words_)
    : length(length_), fold(fold_), words(std::move(words_)) {
  check_dim(length);
  if (words.dim() != length) throw Error("code words dimension mismatch");
  if (fold < 1 || fold > length + 1) throw Error("fold out of range [1, m+1]");
  const auto fold_u = static_cast<std::uint64_t>(fold);
  const std::uint64_t want =
      (fold_u << length) / static_cast<std::uint64_t>(length + 1);
  if (want * static_cast<std::uint64_t>(length + 1) != (fold_u << length) ||
      words.count() != want) {
    throw Error("code size must be t 2^m / (m+1)");
  }
}

bool is_multifold_perfect(const VertexSet& c, int t) {
  const int m = c.dim();
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t v = 0; v < total; ++v) {
    int hit = c.contains(static_cast<Vertex>(v)) ? 1 : 0;
    for (int b = 0; b < m; ++b) {
      hit += c.contains(static_cast<Vertex>(v) ^ (Vertex{1} << b));
    }
    if (hit != t) return false;
  }
  return true;
}

MultifoldCode hamming_code(int mp) {
  if (mp < 2) throw Error("hamming_code needs mp >= 2");
  const long long length = (1LL << mp) - 1;
  if (length > kMaxDim) throw Error("hamming_code: length cap exceeded");
  const int m = static_cast<int>(length);
  VertexSet words(m);
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t v = 0; v < total; ++v) {
    unsigned syndrome = 0;
    std::uint64_t x = v;
    while (x) {
      int b = __builtin_ctzll(x);
      syndrome ^= static_cast<unsigned>(m - b);  // coordinate j at position m-j
      x &= x - 1;
    }
    if (syndrome == 0) words.insert(static_cast<Vertex>(v));
  }
  MultifoldCode code(m, 1, std::move(words));
  if (!is_multifold_perfect(code.words, 1)) {
    throw Error("hamming_code: self-check failed");
  }
  return code;
}

MultifoldCode multifold_union(const MultifoldCode& base,
                              const std::vector<Vertex>& translates) {
  if (translates.empty()) throw Error("multifold_union needs at least one translate");
  for (std::size_t i = 0; i < translates.size(); ++i) {
    if (weight(translates[i]) != 1) {
      throw Error("multifold_union: translates must have weight 1");
    }
    for (std::size_t j = i + 1; j < translates.size(); ++j) {
      if (translates[i] == translates[j]) {
        throw Error("multifold_union: translates must be distinct");
      }
    }
  }
  VertexSet acc(base.length);
  for (Vertex w : translates) {
    VertexSet t = base.words.translated(w);
    if (!acc.disjoint_with(t)) {
      throw Error("multifold_union: translates are not pairwise disjoint");
    }
    acc = acc | t;
  }
  const int fold = base.fold * static_cast<int>(translates.size());
  MultifoldCode code(base.length, fold, std::move(acc));
  if (!is_multifold_perfect(code.words, fold)) {
    throw Error("multifold_union: result failed the ball check");
  }
  return code;
}

VertexSet extend_parity(const MultifoldCode& c) {
  const int m = c.length;
  if (m + 1 > kMaxDim) throw Error("extend_parity: dimension cap exceeded");
  VertexSet out(m + 1);
  c.words.for_each([&](Vertex v) {
    out.insert((v << 1) | static_cast<Vertex>(weight(v) & 1));
  });
  return out;
}

CubePartition eperf_partition(const VertexSet& d) {
  const int n = d.dim();
  if (n <= 0 || n % 2 != 0) throw Error("eperf_partition needs an even dimension");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> labels(size);
  for (std::size_t v = 0; v < size; ++v) {
    if (weight(static_cast<Vertex>(v)) & 1) {
      labels[v] = 2;
    } else {
      labels[v] = d.contains(static_cast<Vertex>(v)) ? 0 : 1;
    }
  }
  d.for_each([&](Vertex v) {
    if (weight(v) & 1) throw Error("eperf_partition: D contains an odd-weight word");
  });
  return CubePartition(n, 3, std::move(labels));
}

namespace {

// Shared layout for the code/partition correspondence over Q_(3r) = Q_(2r) x Q_r:
// vertex = (x << r) | y.  Cell 2 of dp must be the odd-weight half.
void require_eperf_odd(const CubePartition& dp, const std::string& what) {
  require_matrix(dp, StandardKind::Eperf, what);
  const std::size_t size = std::size_t{1} << dp.dim();
  for (std::size_t v = 0; v < size; ++v) {
    const bool odd = weight(static_cast<Vertex>(v)) & 1;
    if ((dp.label(static_cast<Vertex>(v)) == 2) != odd) {
      throw Error(what + ": cell 2 is not the odd-weight set");
    }
  }
}

}  // namespace

CubePartition semi_to_s2(const CubePartition& dp, int sign) {
  if (sign != 0 && sign != 1) throw Error("sign must be 0 or 1");
  require_eperf_odd(dp, "semi_to_s2");
  const int two_r = dp.dim();
  const int r = two_r / 2;
  const int n = 3 * r;
  if (n > kMaxDim) throw Error("semi_to_s2: output dimension exceeds cap");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> labels(size, 1);
  const Vertex xr = size >> (2 * r);  // 2^r
  for (Vertex x = 0; x < (Vertex{1} << two_r); ++x) {
    const unsigned dl = dp.label(x);
    if (dl == 2) continue;
    for (Vertex y = 0; y < xr; ++y) {
      // D pairs with even suffixes, D' with odd ones.
      if ((weight(y) & 1) == static_cast<int>(dl)) {
        labels[(static_cast<std::size_t>(x) << r) | y] = 0;
      }
    }
  }
  CubePartition out(n, 2, std::move(labels));
  if (sign == 1) out = out.translated(Vertex{1} << r);
  verify_output(out, StandardKind::S2, "semi_to_s2");
  return out;
}

std::pair<CubePartition, int> s2_to_semi(const CubePartition& p) {
  require_matrix(p, StandardKind::S2, "s2_to_semi");
  const int n = p.dim();
  const int r = n / 3;
  const Vertex v_word = static_cast<Vertex>(((std::uint64_t{1} << (2 * r)) - 1) << r);
  // <c, v> must be constant over cell 0; its value is the sign.
  int sign = -1;
  {
    const VertexSet c = p.cell(0);
    bool constant = true;
    c.for_each([&](Vertex c0) {
      const int ip = weight(c0 & v_word) & 1;
      if (sign < 0) {
        sign = ip;
      } else if (sign != ip) {
        constant = false;
      }
    });
    if (!constant) {
      throw Error("s2_to_semi: dual word 1^(2r)0^r absent from the first cell");
    }
  }
  const CubePartition normalized =
      sign == 1 ? p.translated(Vertex{1} << r) : p;
  // Slice the first cell at suffix values to recover D (even y) and D' (odd).
  const int two_r = 2 * r;
  const std::size_t dsize = std::size_t{1} << two_r;
  std::vector<std::uint8_t> labels(dsize);
  for (std::size_t x = 0; x < dsize; ++x) {
    if (weight(static_cast<Vertex>(x)) & 1) {
      labels[x] = 2;
      continue;
    }
    // Suffix 0 is even, so x in D iff (x||0) is in cell 0.
    labels[x] = normalized.label(static_cast<Vertex>(x) << r) == 0 ? 0 : 1;
  }
  CubePartition dp(two_r, 3, std::move(labels));
  require_eperf_odd(dp, "s2_to_semi (output)");
  return {std::move(dp), sign};
}

CubePartition semilinear_complete_to_s4(const CubePartition& p) {
  const int n = p.dim();
  const int r = n / 3;
  auto [dp, sign] = s2_to_semi(p);  // also validates the matrix + dual word
  const CubePartition normalized =
      sign == 1 ? p.translated(Vertex{1} << r) : p;
  const std::size_t size = std::size_t{1} << n;
  const Vertex ymask = (Vertex{1} << r) - 1;
  std::vector<std::uint8_t> labels(size);
  for (std::size_t v = 0; v < size; ++v) {
    const Vertex x = static_cast<Vertex>(v >> r);
    const Vertex y = static_cast<Vertex>(v) & ymask;
    const unsigned dl = dp.label(x);
    if (dl != 2) {
      // Cell 0 is C itself, cell 1 the companion C'.
      labels[v] = (normalized.label(static_cast<Vertex>(v)) == 0) ? 0 : 1;
    } else {
      // Split D'' x Q_r by the parity of wt(x_1..x_r) + wt(y).
      const int sel = (weight(x >> r) + weight(y)) & 1;
      labels[v] = static_cast<std::uint8_t>(2 + sel);
    }
  }
  CubePartition out(n, 4, std::move(labels));
  if (sign == 1) out = out.translated(Vertex{1} << r);
  verify_output(out, StandardKind::S4, "semilinear_complete_to_s4");
  // Cell 0 must be preserved exactly.
  if (out.cell(0) != p.cell(0)) {
    throw Error("semilinear_complete_to_s4: cell 0 was not preserved");
  }
  return out;
}

}  // namespace rescube
