// Text instance formats.  All files are whitespace-separated integer tokens;
// lines whose first non-blank character is '#' are comments.
//
//   PartitionFile: header "q n k" (q = 2 for Q_n, q = 4 for H(n,4)), then
//                  q^n cell labels in [0, k), in vertex index order.
//   FunctionFile:  header "n m", then 2^n values in [0, 2^m).
//   SetFile:       header "q n", then a count and that many distinct vertex
//                  indices < q^n.
//
// Malformed input raises FormatError (exit code 2 at the CLI); semantically
// invalid but well-formed content raises the usual Error types (exit code 1).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rescube/core.hpp"
#include "rescube/latin.hpp"
#include "rescube/resilient.hpp"

namespace rescube {

class FormatError : public Error {
 public:
  using Error::Error;
};

struct PartitionFile {
  int q = 2;
  int n = 0;
  int k = 0;
  std::vector<std::uint8_t> labels;

  CubePartition cube() const;       // requires q == 2
  HammingPartition hamming() const; // requires q == 4

  static PartitionFile of(const CubePartition& p);
  static PartitionFile of(const HammingPartition& p);
};

struct FunctionFile {
  int n = 0;
  int m = 0;
  std::vector<std::uint8_t> values;

  VbFunction function() const;
  static FunctionFile of(const VbFunction& f);
};

struct SetFile {
  int q = 2;
  int n = 0;
  std::vector<Vertex> elements;

  VertexSet set() const;  // requires q == 2
  static SetFile of(const VertexSet& s);
};

PartitionFile read_partition(std::istream& in);
FunctionFile read_function(std::istream& in);
SetFile read_set(std::istream& in);

PartitionFile read_partition_file(const std::string& path);
FunctionFile read_function_file(const std::string& path);
SetFile read_set_file(const std::string& path);

// Writers emit the comments (without the leading '#'), the header, then the
// body with 64 tokens per line.  Output is byte-deterministic.
void write_partition(std::ostream& out, const PartitionFile& f,
                     const std::vector<std::string>& comments = {});
void write_function(std::ostream& out, const FunctionFile& f,
                    const std::vector<std::string>& comments = {});
void write_set(std::ostream& out, const SetFile& f,
               const std::vector<std::string>& comments = {});

// Distinguishes PartitionFile (3-integer header) from FunctionFile
// (2-integer header) by token counting; used by `rank`.
bool looks_like_partition(const std::string& path);

}  // namespace rescube
