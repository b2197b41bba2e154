#include "rescube/bridge.hpp"

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

bool is_translation_invariant(const VertexSet& c, Vertex w) {
  if (w >= c.universe_size()) throw Error("translation word out of range");
  bool ok = true;
  c.for_each([&](Vertex v) { ok = ok && c.contains(v ^ w); });
  return ok;
}

CubePartition split_s2_to_s3(const CubePartition& p) {
  require_matrix(p, StandardKind::S2, "split_s2_to_s3");
  const int n = p.dim();
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> labels(size, 2);
  for (std::size_t v = 0; v < size; ++v) {
    if (p.label(static_cast<Vertex>(v)) == 0) {
      labels[v] = 0;
      labels[v ^ 1u] = 1;  // e_n translate; disjoint since C is independent
    }
  }
  CubePartition out(n, 3, std::move(labels));
  verify_output(out, StandardKind::S3, "split_s2_to_s3");
  return out;
}

CubePartition expand_s4_to_s2(const CubePartition& p4) {
  require_matrix(p4, StandardKind::S4, "expand_s4_to_s2");
  const int n = p4.dim();
  if (n + 3 > kMaxDim) throw Error("expand_s4_to_s2: output dimension exceeds cap");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> labels(size << 3, 1);
  for (std::size_t x = 0; x < size; ++x) {
    const unsigned i = p4.label(static_cast<Vertex>(x));
    labels[(x << 3) | i] = 0;
    labels[(x << 3) | (i ^ 7u)] = 0;
  }
  CubePartition out(n + 3, 2, std::move(labels));
  verify_output(out, StandardKind::S2, "expand_s4_to_s2");
  return out;
}

CubePartition contract_s2_to_s4(const CubePartition& p2) {
  require_matrix(p2, StandardKind::S2, "contract_s2_to_s4");
  const int n3 = p2.dim();
  if (n3 < 6) throw Error("contract_s2_to_s4: dimension too small");
  const int n = n3 - 3;
  if (!is_translation_invariant(p2.cell(0), 7)) {
    throw NotInvariantError(
        "contract_s2_to_s4: first cell is not invariant under XOR with 0...0111");
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> labels(size);
  std::vector<bool> seen(size, false);
  for (std::size_t x = 0; x < size; ++x) {
    for (unsigned i = 0; i < 4; ++i) {
      if (p2.label(static_cast<Vertex>((x << 3) | i)) == 0) {
        if (seen[x]) {
          throw Error("contract_s2_to_s4: slices overlap at vertex " +
                      std::to_string(x));
        }
        seen[x] = true;
        labels[x] = static_cast<std::uint8_t>(i);
      }
    }
    if (!seen[x]) {
      throw Error("contract_s2_to_s4: slices do not cover vertex " +
                  std::to_string(x));
    }
  }
  CubePartition out(n, 4, std::move(labels));
  verify_output(out, StandardKind::S4, "contract_s2_to_s4");
  return out;
}

}  // namespace rescube
