#include "rescube/core.hpp"

#include <algorithm>
#include <sstream>

namespace rescube {

void check_dim(int n) {
  if (n < 0 || n > kMaxDim) {
    throw Error("dimension " + std::to_string(n) + " out of range [0, " +
                std::to_string(kMaxDim) + "]");
  }
}

// ---------------------------------------------------------------- CoordPerm

CoordPerm CoordPerm::identity(int n) {
  check_dim(n);
  CoordPerm p;
  p.map.resize(n);
  for (int b = 0; b < n; ++b) p.map[b] = static_cast<std::uint8_t>(b);
  return p;
}

Vertex CoordPerm::apply(Vertex v) const {
  Vertex out = 0;
  Vertex x = v;
  while (x) {
    int b = __builtin_ctz(x);
    out |= Vertex{1} << map[b];
    x &= x - 1;
  }
  return out;
}

CoordPerm CoordPerm::inverse() const {
  CoordPerm p;
  p.map.resize(map.size());
  for (std::size_t b = 0; b < map.size(); ++b) p.map[map[b]] = static_cast<std::uint8_t>(b);
  return p;
}

CoordPerm CoordPerm::then(const CoordPerm& next) const {
  if (next.map.size() != map.size()) throw Error("permutation size mismatch");
  CoordPerm p;
  p.map.resize(map.size());
  for (std::size_t b = 0; b < map.size(); ++b) p.map[b] = next.map[map[b]];
  return p;
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int n) : n_(n) {
  check_dim(n);
  w_.assign((universe_size() + 63) >> 6, 0);
}

VertexSet VertexSet::full(int n) {
  VertexSet s(n);
  std::uint64_t total = s.universe_size();
  for (std::size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = ~std::uint64_t{0};
  if (total < 64) s.w_[0] = (std::uint64_t{1} << total) - 1;
  return s;
}

VertexSet VertexSet::of(int n, std::initializer_list<Vertex> vs) {
  VertexSet s(n);
  for (Vertex v : vs) {
    if (v >= s.universe_size()) throw Error("vertex index out of range");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::of(int n, const std::vector<Vertex>& vs) {
  VertexSet s(n);
  for (Vertex v : vs) {
    if (v >= s.universe_size()) throw Error("vertex index out of range");
    s.insert(v);
  }
  return s;
}

std::uint64_t VertexSet::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t b : w_) c += static_cast<std::uint64_t>(__builtin_popcountll(b));
  return c;
}

Vertex VertexSet::min_element() const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i]) return static_cast<Vertex>((i << 6) + __builtin_ctzll(w_[i]));
  }
  throw Error("min_element of empty set");
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::translated(Vertex w) const {
  if (w >= universe_size()) throw Error("translation word out of range");
  VertexSet s(n_);
  for_each([&](Vertex v) { s.insert(v ^ w); });
  return s;
}

VertexSet VertexSet::permuted(const CoordPerm& p) const {
  if (p.dim() != n_) throw Error("permutation size mismatch");
  VertexSet s(n_);
  for_each([&](Vertex v) { s.insert(p.apply(v)); });
  return s;
}

VertexSet VertexSet::complement() const {
  VertexSet s(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
  std::uint64_t total = universe_size();
  if (total < 64) s.w_[0] &= (std::uint64_t{1} << total) - 1;
  return s;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  if (o.n_ != n_) throw Error("dimension mismatch");
  VertexSet s(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = w_[i] & o.w_[i];
  return s;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  if (o.n_ != n_) throw Error("dimension mismatch");
  VertexSet s(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = w_[i] | o.w_[i];
  return s;
}

VertexSet VertexSet::operator^(const VertexSet& o) const {
  if (o.n_ != n_) throw Error("dimension mismatch");
  VertexSet s(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = w_[i] ^ o.w_[i];
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  if (o.n_ != n_) throw Error("dimension mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] & ~o.w_[i]) return false;
  }
  return true;
}

bool VertexSet::disjoint_with(const VertexSet& o) const {
  if (o.n_ != n_) throw Error("dimension mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] & o.w_[i]) return false;
  }
  return true;
}

// ----------------------------------------------------------- QuotientMatrix

QuotientMatrix::QuotientMatrix(int kk, std::vector<int> entries)
    : k(kk), a(std::move(entries)) {
  if (k < 1 || a.size() != static_cast<std::size_t>(k) * k) {
    throw Error("quotient matrix must be k x k with k >= 1");
  }
}

int QuotientMatrix::row_sum(int i) const {
  int s = 0;
  for (int j = 0; j < k; ++j) s += at(i, j);
  return s;
}

std::string QuotientMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < k; ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < k; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

StandardKind standard_kind_from_string(const std::string& s) {
  if (s == "S2") return StandardKind::S2;
  if (s == "S3") return StandardKind::S3;
  if (s == "S4") return StandardKind::S4;
  if (s == "EPERF") return StandardKind::Eperf;
  throw Error("unknown matrix kind '" + s + "' (expected S2, S3, S4 or EPERF)");
}

std::string to_string(StandardKind k) {
  switch (k) {
    case StandardKind::S2: return "S2";
    case StandardKind::S3: return "S3";
    case StandardKind::S4: return "S4";
    case StandardKind::Eperf: return "EPERF";
  }
  return "?";
}

QuotientMatrix standard_matrix(StandardKind kind, int n) {
  check_dim(n);
  if (kind == StandardKind::Eperf) {
    if (n <= 0 || n % 2 != 0) {
      throw Error("EPERF matrix needs an even dimension, got " + std::to_string(n));
    }
    int r = n / 2;
    return QuotientMatrix(3, {0, 0, 2 * r, 0, 0, 2 * r, r, r, 0});
  }
  if (n <= 0 || n % 3 != 0) {
    throw Error("dimension not divisible by 3: " + std::to_string(n));
  }
  int r = n / 3;
  switch (kind) {
    case StandardKind::S2:
      return QuotientMatrix(2, {0, 3 * r, r, 2 * r});
    case StandardKind::S3:
      return QuotientMatrix(3, {0, r, 2 * r, r, 0, 2 * r, r, r, r});
    case StandardKind::S4:
      return QuotientMatrix(4, {0, r, r, r, r, 0, r, r, r, r, 0, r, r, r, r, 0});
    default:
      break;
  }
  throw Error("unreachable standard matrix kind");
}

// ------------------------------------------------------------ CubePartition

CubePartition::CubePartition(int n, int k, std::vector<std::uint8_t> labels)
    : n_(n), k_(k), labels_(std::move(labels)) {
  check_dim(n);
  if (k < 1 || k > 256) throw Error("cell count out of range [1, 256]");
  if (labels_.size() != (std::size_t{1} << n)) {
    throw Error("label table must have 2^n entries");
  }
  for (std::uint8_t l : labels_) {
    if (l >= k_) throw Error("label out of range [0, k)");
  }
}

CubePartition CubePartition::from_cells(int n, const std::vector<VertexSet>& cells) {
  check_dim(n);
  if (cells.empty() || cells.size() > 256) throw Error("cell count out of range [1, 256]");
  std::vector<std::uint8_t> labels(std::size_t{1} << n, 0);
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].dim() != n) throw Error("cell dimension mismatch");
    cells[i].for_each([&](Vertex v) {
      if (seen[v]) throw Error("cells overlap at vertex " + std::to_string(v));
      seen[v] = true;
      labels[v] = static_cast<std::uint8_t>(i);
    });
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw Error("cells do not cover vertex " + std::to_string(v));
  }
  return CubePartition(n, static_cast<int>(cells.size()), std::move(labels));
}

VertexSet CubePartition::cell(int i) const {
  if (i < 0 || i >= k_) throw Error("cell index out of range");
  VertexSet s(n_);
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == i) s.insert(static_cast<Vertex>(v));
  }
  return s;
}

std::uint64_t CubePartition::cell_size(int i) const {
  if (i < 0 || i >= k_) throw Error("cell index out of range");
  std::uint64_t c = 0;
  for (std::uint8_t l : labels_) c += (l == i);
  return c;
}

bool CubePartition::has_empty_cell() const {
  std::vector<bool> used(k_, false);
  for (std::uint8_t l : labels_) used[l] = true;
  for (bool u : used) {
    if (!u) return true;
  }
  return false;
}

CubePartition CubePartition::translated(Vertex w) const {
  if (w >= (Vertex{1} << n_)) throw Error("translation word out of range");
  std::vector<std::uint8_t> out(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v) out[v ^ w] = labels_[v];
  return CubePartition(n_, k_, std::move(out));
}

CubePartition CubePartition::permuted(const CoordPerm& p) const {
  if (p.dim() != n_) throw Error("permutation size mismatch");
  std::vector<std::uint8_t> out(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    out[p.apply(static_cast<Vertex>(v))] = labels_[v];
  }
  return CubePartition(n_, k_, std::move(out));
}

CubePartition CubePartition::relabeled(const std::vector<std::uint8_t>& beta) const {
  if (beta.size() != static_cast<std::size_t>(k_)) throw Error("relabeling size mismatch");
  std::vector<bool> hit(k_, false);
  for (std::uint8_t b : beta) {
    if (b >= k_ || hit[b]) throw Error("relabeling is not a permutation");
    hit[b] = true;
  }
  std::vector<std::uint8_t> out(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v) out[v] = beta[labels_[v]];
  return CubePartition(n_, k_, std::move(out));
}

// --------------------------------------------------------- quotient_matrix

std::string NotEquitable::describe() const {
  std::ostringstream os;
  os << "not equitable: vertex " << vertex << " (cell " << cell << ") observed [";
  for (std::size_t j = 0; j < observed.size(); ++j) os << (j ? "," : "") << observed[j];
  os << "] expected [";
  for (std::size_t j = 0; j < expected.size(); ++j) os << (j ? "," : "") << expected[j];
  os << "]";
  return os.str();
}

EquitableResult quotient_matrix(const CubePartition& p) {
  if (p.has_empty_cell()) throw Error("partition has an empty cell");
  const int n = p.dim();
  const int k = p.cells();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::vector<int>> rep_row(k);  // row of the first vertex per cell
  std::vector<int> row(k);
  for (std::uint64_t v = 0; v < total; ++v) {
    std::fill(row.begin(), row.end(), 0);
    for (int b = 0; b < n; ++b) ++row[p.label(static_cast<Vertex>(v) ^ (Vertex{1} << b))];
    int c = p.label(static_cast<Vertex>(v));
    if (rep_row[c].empty()) {
      rep_row[c] = row;
    } else if (rep_row[c] != row) {
      EquitableResult r;
      r.failure = NotEquitable{static_cast<Vertex>(v), c, row, rep_row[c]};
      return r;
    }
  }
  QuotientMatrix m(k, std::vector<int>(static_cast<std::size_t>(k) * k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m.at(i, j) = rep_row[i][j];
  }
  EquitableResult r;
  r.matrix = std::move(m);
  return r;
}

// ------------------------------------------------------------------ subcube

VertexSet subcube(int n, const std::vector<int>& fixed_coords, Vertex fixed_values) {
  check_dim(n);
  Vertex mask = 0;
  for (int j : fixed_coords) {
    if (j < 1 || j > n) throw Error("coordinate out of range [1, n]");
    Vertex bit = Vertex{1} << (n - j);
    if (mask & bit) throw Error("repeated fixed coordinate");
    mask |= bit;
  }
  if (fixed_values & ~mask) throw Error("value bits outside fixed coordinates");
  VertexSet s(n);
  Vertex free_mask = static_cast<Vertex>(((std::uint64_t{1} << n) - 1) & ~mask);
  // Enumerate submasks of the free positions.
  Vertex sub = 0;
  while (true) {
    s.insert(sub | fixed_values);
    if (sub == free_mask) break;
    sub = (sub - free_mask) & free_mask;
  }
  return s;
}

// ----------------------------------------------------------- Walsh transform

void walsh_transform_inplace(std::vector<std::int64_t>& g) {
  const std::size_t size = g.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw Error("table length must be a power of two");
  }
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        std::int64_t x = g[j];
        std::int64_t y = g[j + h];
        g[j] = x + y;
        g[j + h] = x - y;
      }
    }
  }
}

std::vector<std::int64_t> walsh_transform(const std::vector<std::int64_t>& g) {
  std::vector<std::int64_t> out = g;
  walsh_transform_inplace(out);
  return out;
}

}  // namespace rescube
