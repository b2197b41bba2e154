#include "rescube/latin.hpp"

#include <algorithm>
#include <map>

namespace rescube {

namespace {

std::uint64_t pow4(int r) { return std::uint64_t{1} << (2 * r); }

void check_hamming_dim(int r) {
  if (r < 1 || 3 * r > kMaxDim) {
    throw Error("Hamming length out of range [1, " + std::to_string(kMaxDim / 3) + "]");
  }
}

}  // namespace

HammingPartition::HammingPartition(int r, int k, std::vector<std::uint8_t> labels)
    : r_(r), k_(k), labels_(std::move(labels)) {
  check_hamming_dim(r);
  if (k < 1 || k > 256) throw Error("cell count out of range [1, 256]");
  if (labels_.size() != pow4(r)) throw Error("label table must have 4^r entries");
  for (std::uint8_t l : labels_) {
    if (l >= k_) throw Error("label out of range [0, k)");
  }
}

std::uint64_t HammingPartition::cell_size(int i) const {
  if (i < 0 || i >= k_) throw Error("cell index out of range");
  std::uint64_t c = 0;
  for (std::uint8_t l : labels_) c += (l == i);
  return c;
}

HammingPartition HammingPartition::coord_permuted(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<std::size_t>(r_)) throw Error("permutation size mismatch");
  std::vector<bool> hit(r_, false);
  for (int t : perm) {
    if (t < 0 || t >= r_ || hit[t]) throw Error("not a permutation");
    hit[t] = true;
  }
  std::vector<std::uint8_t> out(labels_.size());
  for (std::uint64_t v = 0; v < labels_.size(); ++v) {
    // Digit at position d moves to position perm[d].
    std::uint64_t img = 0;
    for (int d = 0; d < r_; ++d) {
      img |= ((v >> (2 * d)) & 3u) << (2 * perm[d]);
    }
    out[img] = labels_[v];
  }
  return HammingPartition(r_, k_, std::move(out));
}

HammingPartition HammingPartition::symbol_permuted(
    const std::vector<std::array<std::uint8_t, 4>>& symbol_perms) const {
  if (symbol_perms.size() != static_cast<std::size_t>(r_)) {
    throw Error("need one symbol permutation per coordinate");
  }
  std::vector<std::uint8_t> out(labels_.size());
  for (std::uint64_t v = 0; v < labels_.size(); ++v) {
    std::uint64_t img = 0;
    for (int d = 0; d < r_; ++d) {
      img |= std::uint64_t{symbol_perms[d][(v >> (2 * d)) & 3u]} << (2 * d);
    }
    out[img] = labels_[v];
  }
  return HammingPartition(r_, k_, std::move(out));
}

HammingPartition HammingPartition::relabeled(const std::vector<std::uint8_t>& beta) const {
  if (beta.size() != static_cast<std::size_t>(k_)) throw Error("relabeling size mismatch");
  std::vector<std::uint8_t> out(labels_.size());
  for (std::uint64_t v = 0; v < labels_.size(); ++v) out[v] = beta[labels_[v]];
  return HammingPartition(r_, k_, std::move(out));
}

EquitableResult quotient_matrix_h4(const HammingPartition& p) {
  const int r = p.coords();
  const int k = p.cells();
  std::vector<std::vector<int>> rep_row(k);
  std::vector<int> row(k);
  for (std::uint64_t v = 0; v < p.universe_size(); ++v) {
    std::fill(row.begin(), row.end(), 0);
    for (int d = 0; d < r; ++d) {
      const std::uint64_t digit = (v >> (2 * d)) & 3u;
      const std::uint64_t base = v & ~(std::uint64_t{3} << (2 * d));
      for (std::uint64_t s = 0; s < 4; ++s) {
        if (s != digit) ++row[p.label(static_cast<std::uint32_t>(base | (s << (2 * d))))];
      }
    }
    const int c = p.label(static_cast<std::uint32_t>(v));
    if (rep_row[c].empty()) {
      rep_row[c] = row;
    } else if (rep_row[c] != row) {
      EquitableResult res;
      res.failure = NotEquitable{static_cast<Vertex>(v), c, row, rep_row[c]};
      return res;
    }
  }
  for (int i = 0; i < k; ++i) {
    if (rep_row[i].empty()) throw Error("partition has an empty cell");
  }
  QuotientMatrix m(k, std::vector<int>(static_cast<std::size_t>(k) * k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m.at(i, j) = rep_row[i][j];
  }
  EquitableResult res;
  res.matrix = std::move(m);
  return res;
}

namespace {

void require_h4_matrix(const HammingPartition& p, StandardKind kind,
                       const std::string& what) {
  EquitableResult q = quotient_matrix_h4(p);
  if (!q.ok()) {
    throw WrongMatrixError(what + ": input is not equitable (" +
                           q.failure->describe() + ")");
  }
  if (*q.matrix != standard_matrix(kind, 3 * p.coords())) {
    throw WrongMatrixError(what + ": input quotient matrix " +
                           q.matrix->to_string() + " is not the " +
                           to_string(kind) + " analogue on H(" +
                           std::to_string(p.coords()) + ",4)");
  }
}

StandardKind kind_for_cells(int k) {
  switch (k) {
    case 2: return StandardKind::S2;
    case 3: return StandardKind::S3;
    case 4: return StandardKind::S4;
    default: throw Error("no standard matrix for k = " + std::to_string(k));
  }
}

}  // namespace

HammingPartition latin_from_mds(const HammingPartition& mds2) {
  if (mds2.cells() != 2) throw Error("latin_from_mds: input must have 2 cells");
  require_h4_matrix(mds2, StandardKind::S2, "latin_from_mds");
  const int r = mds2.coords() - 1;
  check_hamming_dim(r);
  std::vector<std::uint8_t> labels(pow4(r));
  for (std::uint64_t v = 0; v < labels.size(); ++v) {
    int found = -1;
    for (std::uint32_t i = 0; i < 4; ++i) {
      if (mds2.label(static_cast<std::uint32_t>((v << 2) | i)) == 0) {
        if (found >= 0) throw Error("latin_from_mds: code has distance < 2");
        found = static_cast<int>(i);
      }
    }
    if (found < 0) throw Error("latin_from_mds: code misses a prefix");
    labels[v] = static_cast<std::uint8_t>(found);
  }
  HammingPartition out(r, 4, std::move(labels));
  require_h4_matrix(out, StandardKind::S4, "latin_from_mds (output)");
  return out;
}

HammingPartition mds_from_latin(const HammingPartition& latin) {
  if (latin.cells() != 4) throw Error("mds_from_latin: input must have 4 cells");
  require_h4_matrix(latin, StandardKind::S4, "mds_from_latin");
  const int r = latin.coords() + 1;
  check_hamming_dim(r);
  std::vector<std::uint8_t> labels(pow4(r), 1);
  for (std::uint64_t v = 0; v < latin.universe_size(); ++v) {
    labels[(v << 2) | latin.label(static_cast<std::uint32_t>(v))] = 0;
  }
  HammingPartition out(r, 2, std::move(labels));
  require_h4_matrix(out, StandardKind::S2, "mds_from_latin (output)");
  return out;
}

HammingPartition linear_latin(int r) {
  check_hamming_dim(r);
  std::vector<std::uint8_t> labels(pow4(r));
  for (std::uint64_t v = 0; v < labels.size(); ++v) {
    unsigned x = 0;
    for (int d = 0; d < r; ++d) x ^= (v >> (2 * d)) & 3u;
    labels[v] = static_cast<std::uint8_t>(x);
  }
  return HammingPartition(r, 4, std::move(labels));
}

std::vector<HammingPartition> enumerate_latin_squares() {
  std::vector<HammingPartition> out;
  std::vector<std::uint8_t> grid(16, 0);  // grid[4*row + col]
  // Backtracking in row-major order with ascending symbols yields the
  // squares in lexicographic label order.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == 16) {
      // Vertex (row, col) has index 4*row + col: row is coordinate 1.
      out.emplace_back(2, 4, grid);
      return;
    }
    const int row = pos / 4;
    const int col = pos % 4;
    for (std::uint8_t s = 0; s < 4; ++s) {
      bool ok = true;
      for (int i = 0; i < col && ok; ++i) ok = grid[4 * row + i] != s;
      for (int i = 0; i < row && ok; ++i) ok = grid[4 * i + col] != s;
      if (!ok) continue;
      grid[pos] = s;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

// T-index of a 3-bit block: which antipodal pair {2v, 2v XOR 7} it is in.
constexpr std::uint8_t kBlockToSymbol[8] = {0, 3, 1, 2, 2, 1, 3, 0};

}  // namespace

CubePartition lift_cell_partition() {
  std::vector<std::uint8_t> labels(kBlockToSymbol, kBlockToSymbol + 8);
  return CubePartition(3, 4, std::move(labels));
}

CubePartition lift(const HammingPartition& p) {
  const int r = p.coords();
  const int n = 3 * r;
  EquitableResult in_q = quotient_matrix_h4(p);
  if (!in_q.ok()) {
    throw WrongMatrixError("lift: input is not equitable (" +
                           in_q.failure->describe() + ")");
  }
  std::vector<std::uint8_t> labels(std::size_t{1} << n);
  for (std::size_t u = 0; u < labels.size(); ++u) {
    std::uint64_t h = 0;
    for (int d = 0; d < r; ++d) {
      h |= std::uint64_t{kBlockToSymbol[(u >> (3 * d)) & 7u]} << (2 * d);
    }
    labels[u] = p.label(static_cast<std::uint32_t>(h));
  }
  CubePartition out(n, p.cells(), std::move(labels));
  EquitableResult out_q = quotient_matrix(out);
  if (!out_q.ok() || *out_q.matrix != *in_q.matrix) {
    throw Error("lift: output quotient matrix does not match the input's");
  }
  return out;
}

CubePartition concat(const HammingPartition& p,
                     const std::vector<CubePartition>& inners) {
  const int r = p.coords();
  if (inners.size() != static_cast<std::size_t>(r)) {
    throw Error("concat: need one inner partition per Hamming coordinate");
  }
  const StandardKind kind = kind_for_cells(p.cells());
  require_h4_matrix(p, kind, "concat");
  int n = 0;
  for (std::size_t j = 0; j < inners.size(); ++j) {
    EquitableResult q = quotient_matrix(inners[j]);
    if (!q.ok() || inners[j].cells() != 4 ||
        *q.matrix != standard_matrix(StandardKind::S4, inners[j].dim())) {
      throw WrongMatrixError("concat: inner partition " + std::to_string(j + 1) +
                             " does not verify an S4 matrix");
    }
    n += inners[j].dim();
  }
  check_dim(n);
  // Inner j = 1..r occupies the j-th coordinate block; block r is lowest.
  std::vector<std::uint8_t> labels(std::size_t{1} << n);
  std::vector<int> shift(inners.size());
  {
    int off = 0;
    for (int j = r - 1; j >= 0; --j) {
      shift[j] = off;
      off += inners[j].dim();
    }
  }
  for (std::size_t u = 0; u < labels.size(); ++u) {
    std::uint64_t h = 0;
    for (int j = 0; j < r; ++j) {
      const std::uint64_t block =
          (u >> shift[j]) & ((std::uint64_t{1} << inners[j].dim()) - 1);
      // Hamming coordinate j+1 is digit position r-1-j.
      h |= std::uint64_t{inners[j].label(static_cast<Vertex>(block))}
           << (2 * (r - 1 - j));
    }
    labels[u] = p.label(static_cast<std::uint32_t>(h));
  }
  CubePartition out(n, p.cells(), std::move(labels));
  EquitableResult q = quotient_matrix(out);
  if (!q.ok() || *q.matrix != standard_matrix(kind, n)) {
    throw Error("concat: output failed its " + to_string(kind) + " verification");
  }
  return out;
}

bool clique_balance_check(const HammingPartition& p, int cell) {
  const int r = p.coords();
  if (cell < 0 || cell >= p.cells()) throw Error("cell index out of range");
  const std::uint64_t csize = p.cell_size(cell);
  const std::uint64_t lines_per_dir = pow4(r) / 4;
  // Want hits * 4^(r-1) == |cell| on every line.
  for (int d = 0; d < r; ++d) {
    const std::uint64_t step = std::uint64_t{1} << (2 * d);
    for (std::uint64_t v = 0; v < pow4(r); ++v) {
      if ((v >> (2 * d)) & 3u) continue;  // digit d must be 0: line base
      std::uint64_t hits = 0;
      for (std::uint64_t s = 0; s < 4; ++s) {
        hits += p.label(static_cast<std::uint32_t>(v + s * step)) == cell;
      }
      if (hits * lines_per_dir != csize) return false;
    }
  }
  return true;
}

ReducibilityReport detect_reducible(const CubePartition& p, StandardKind kind) {
  if (kind != StandardKind::S2 && kind != StandardKind::S4) {
    throw Error("detect_reducible supports kinds S2 and S4");
  }
  const int k_want = kind == StandardKind::S2 ? 2 : 4;
  if (p.cells() != k_want) {
    throw Error("detect_reducible: partition has " + std::to_string(p.cells()) +
                " cells, expected " + std::to_string(k_want));
  }
  const int n = p.dim();
  {
    EquitableResult q = quotient_matrix(p);
    if (!q.ok() || *q.matrix != standard_matrix(kind, n)) {
      throw WrongMatrixError("detect_reducible: input does not verify " +
                             to_string(kind) + "(" + std::to_string(n) + ")");
    }
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> idx_a(size), idx_b(size);
  // Enumerate unordered bipartitions once: B never contains bit 0.
  for (Vertex bmask = 0; bmask < (Vertex{1} << n); ++bmask) {
    if (bmask & 1u) continue;
    const int na = weight(bmask);
    const int nb = n - na;
    if (na < 3 || nb < 3 || na % 3 || nb % 3) continue;
    // Compressed indices keep the relative coordinate order of each side.
    for (std::size_t v = 0; v < size; ++v) {
      std::uint32_t a = 0, b = 0;
      int ai = 0, bi = 0;
      for (int bit = 0; bit < n; ++bit) {
        if ((bmask >> bit) & 1u) {
          a |= ((v >> bit) & 1u) << ai++;
        } else {
          b |= ((v >> bit) & 1u) << bi++;
        }
      }
      idx_a[v] = a;
      idx_b[v] = b;
    }
    const std::size_t asize = std::size_t{1} << na;
    const std::size_t bsize = std::size_t{1} << nb;
    // Label grid: grid[a][b].
    std::vector<std::uint8_t> grid(asize * bsize);
    for (std::size_t v = 0; v < size; ++v) {
      grid[idx_a[v] * bsize + idx_b[v]] = p.label(static_cast<Vertex>(v));
    }
    // Collapse column patterns (functions of b for fixed a) to classes.
    auto collapse = [](const std::vector<std::uint8_t>& g, std::size_t rows,
                       std::size_t cols, bool by_row,
                       std::vector<std::uint8_t>& cls) -> int {
      std::map<std::vector<std::uint8_t>, int> seen;
      const std::size_t outer = by_row ? rows : cols;
      const std::size_t inner = by_row ? cols : rows;
      cls.assign(outer, 0);
      std::vector<std::uint8_t> pat(inner);
      for (std::size_t i = 0; i < outer; ++i) {
        for (std::size_t j = 0; j < inner; ++j) {
          pat[j] = by_row ? g[i * cols + j] : g[j * cols + i];
        }
        auto [it, fresh] = seen.emplace(pat, static_cast<int>(seen.size()));
        cls[i] = static_cast<std::uint8_t>(it->second);
        if (seen.size() > 4) return -1;
      }
      return static_cast<int>(seen.size());
    };
    std::vector<std::uint8_t> cls_a, cls_b;
    if (collapse(grid, asize, bsize, true, cls_a) != 4) continue;
    if (collapse(grid, asize, bsize, false, cls_b) != 4) continue;
    CubePartition inner1(na, 4, cls_a);
    CubePartition inner2(nb, 4, cls_b);
    {
      EquitableResult q1 = quotient_matrix(inner1);
      if (!q1.ok() || *q1.matrix != standard_matrix(StandardKind::S4, na)) continue;
      EquitableResult q2 = quotient_matrix(inner2);
      if (!q2.ok() || *q2.matrix != standard_matrix(StandardKind::S4, nb)) continue;
    }
    // Induced outer labelling on H(2,4) from class representatives.
    std::vector<std::uint32_t> rep_a(4), rep_b(4);
    for (std::size_t a = asize; a-- > 0;) rep_a[cls_a[a]] = static_cast<std::uint32_t>(a);
    for (std::size_t b = bsize; b-- > 0;) rep_b[cls_b[b]] = static_cast<std::uint32_t>(b);
    std::vector<std::uint8_t> outer_labels(16);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        outer_labels[4 * i + j] = grid[rep_a[i] * bsize + rep_b[j]];
      }
    }
    HammingPartition outer(2, k_want, std::move(outer_labels));
    {
      EquitableResult q = quotient_matrix_h4(outer);
      if (!q.ok() || *q.matrix != standard_matrix(kind, 6)) continue;
    }
    ReducibilityWitness w{{}, std::move(inner1), std::move(inner2), std::move(outer)};
    for (int bit = n - 1; bit >= 0; --bit) {
      if ((bmask >> bit) & 1u) w.block_coords.push_back(n - bit);
    }
    ReducibilityReport rep;
    rep.reducible = true;
    rep.witness = std::move(w);
    return rep;
  }
  return {};
}

}  // namespace rescube
