#include "rescube/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace rescube {

namespace {

std::vector<long long> tokenize(std::istream& in) {
  std::vector<long long> toks;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) {
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(t, &pos);
      } catch (const std::exception&) {
        throw FormatError("not an integer token: '" + t + "'");
      }
      if (pos != t.size()) throw FormatError("not an integer token: '" + t + "'");
      toks.push_back(v);
    }
  }
  return toks;
}

class TokenReader {
 public:
  explicit TokenReader(std::vector<long long> toks) : toks_(std::move(toks)) {}

  long long next(const std::string& what, long long lo, long long hi) {
    if (i_ >= toks_.size()) throw FormatError("missing " + what);
    const long long v = toks_[i_++];
    if (v < lo || v > hi) {
      throw FormatError(what + " " + std::to_string(v) + " out of range [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return v;
  }

  void done() const {
    if (i_ != toks_.size()) {
      throw FormatError("trailing tokens (" +
                        std::to_string(toks_.size() - i_) + " extra)");
    }
  }

 private:
  std::vector<long long> toks_;
  std::size_t i_ = 0;
};

std::uint64_t universe(int q, int n) {
  std::uint64_t u = 1;
  for (int i = 0; i < n; ++i) u *= static_cast<unsigned>(q);
  return u;
}

void write_body(std::ostream& out, const std::vector<std::string>& comments,
                const std::string& header,
                const std::vector<std::uint64_t>& body) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << header << '\n';
  for (std::size_t i = 0; i < body.size(); ++i) {
    out << body[i];
    out << ((i % 64 == 63 || i + 1 == body.size()) ? '\n' : ' ');
  }
}

}  // namespace

CubePartition PartitionFile::cube() const {
  if (q != 2) throw Error("partition file is not binary (q = " + std::to_string(q) + ")");
  return CubePartition(n, k, labels);
}

HammingPartition PartitionFile::hamming() const {
  if (q != 4) throw Error("partition file is not quaternary (q = " + std::to_string(q) + ")");
  return HammingPartition(n, k, labels);
}

PartitionFile PartitionFile::of(const CubePartition& p) {
  return PartitionFile{2, p.dim(), p.cells(), p.labels()};
}

PartitionFile PartitionFile::of(const HammingPartition& p) {
  return PartitionFile{4, p.coords(), p.cells(), p.labels()};
}

VbFunction FunctionFile::function() const { return VbFunction(n, m, values); }

FunctionFile FunctionFile::of(const VbFunction& f) {
  return FunctionFile{f.n, f.m, f.table};
}

VertexSet SetFile::set() const {
  if (q != 2) throw Error("set file is not binary (q = " + std::to_string(q) + ")");
  return VertexSet::of(n, elements);
}

SetFile SetFile::of(const VertexSet& s) {
  return SetFile{2, s.dim(), s.to_vector()};
}

PartitionFile read_partition(std::istream& in) {
  TokenReader r(tokenize(in));
  PartitionFile f;
  f.q = static_cast<int>(r.next("alphabet size q", 2, 4));
  if (f.q == 3) throw FormatError("alphabet size q must be 2 or 4");
  f.n = static_cast<int>(r.next("dimension n", 1, f.q == 2 ? kMaxDim : kMaxDim / 2));
  if (universe(f.q, f.n) > (std::uint64_t{1} << kMaxDim)) {
    throw FormatError("universe size exceeds the 2^28 cap");
  }
  f.k = static_cast<int>(r.next("cell count k", 1, 256));
  const std::uint64_t u = universe(f.q, f.n);
  f.labels.reserve(u);
  for (std::uint64_t i = 0; i < u; ++i) {
    f.labels.push_back(static_cast<std::uint8_t>(r.next("label", 0, f.k - 1)));
  }
  r.done();
  return f;
}

FunctionFile read_function(std::istream& in) {
  TokenReader r(tokenize(in));
  FunctionFile f;
  f.n = static_cast<int>(r.next("dimension n", 1, kMaxDim));
  f.m = static_cast<int>(r.next("output bits m", 1, 8));
  const std::uint64_t u = std::uint64_t{1} << f.n;
  f.values.reserve(u);
  for (std::uint64_t i = 0; i < u; ++i) {
    f.values.push_back(
        static_cast<std::uint8_t>(r.next("value", 0, (1 << f.m) - 1)));
  }
  r.done();
  return f;
}

SetFile read_set(std::istream& in) {
  TokenReader r(tokenize(in));
  SetFile f;
  f.q = static_cast<int>(r.next("alphabet size q", 2, 4));
  if (f.q == 3) throw FormatError("alphabet size q must be 2 or 4");
  f.n = static_cast<int>(r.next("dimension n", 1, f.q == 2 ? kMaxDim : kMaxDim / 2));
  const std::uint64_t u = universe(f.q, f.n);
  const long long count = r.next("element count", 0, static_cast<long long>(u));
  std::vector<bool> seen(u, false);
  for (long long i = 0; i < count; ++i) {
    const auto v = static_cast<Vertex>(
        r.next("element", 0, static_cast<long long>(u) - 1));
    if (seen[v]) throw FormatError("duplicate element " + std::to_string(v));
    seen[v] = true;
    f.elements.push_back(v);
  }
  r.done();
  return f;
}

namespace {

template <typename T>
T read_file_as(const std::string& path, T (*reader)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open file: " + path);
  return reader(in);
}

}  // namespace

PartitionFile read_partition_file(const std::string& path) {
  return read_file_as<PartitionFile>(path, &read_partition);
}

FunctionFile read_function_file(const std::string& path) {
  return read_file_as<FunctionFile>(path, &read_function);
}

SetFile read_set_file(const std::string& path) {
  return read_file_as<SetFile>(path, &read_set);
}

void write_partition(std::ostream& out, const PartitionFile& f,
                     const std::vector<std::string>& comments) {
  std::vector<std::uint64_t> body(f.labels.begin(), f.labels.end());
  write_body(out, comments,
             std::to_string(f.q) + " " + std::to_string(f.n) + " " +
                 std::to_string(f.k),
             body);
}

void write_function(std::ostream& out, const FunctionFile& f,
                    const std::vector<std::string>& comments) {
  std::vector<std::uint64_t> body(f.values.begin(), f.values.end());
  write_body(out, comments,
             std::to_string(f.n) + " " + std::to_string(f.m), body);
}

void write_set(std::ostream& out, const SetFile& f,
               const std::vector<std::string>& comments) {
  std::vector<std::uint64_t> body;
  body.push_back(f.elements.size());
  body.insert(body.end(), f.elements.begin(), f.elements.end());
  write_body(out, comments,
             std::to_string(f.q) + " " + std::to_string(f.n), body);
}

bool looks_like_partition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open file: " + path);
  const std::vector<long long> toks = tokenize(in);
  if (toks.size() < 3) return false;
  const long long q = toks[0];
  if (q != 2 && q != 4) return false;
  const long long n = toks[1];
  if (n < 1 || n > kMaxDim) return false;
  std::uint64_t u = 1;
  for (long long i = 0; i < n && u <= (std::uint64_t{1} << kMaxDim); ++i) {
    u *= static_cast<unsigned>(q);
  }
  return toks.size() == 3 + u;
}

}  // namespace rescube
