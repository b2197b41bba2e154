// Python bindings.  Partitions travel as flat label lists, functions as flat
// value tables, vertex sets as index lists; the C++ layer does all checking.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rescube/algebra.hpp"
#include "rescube/bridge.hpp"
#include "rescube/classify.hpp"
#include "rescube/core.hpp"
#include "rescube/latin.hpp"
#include "rescube/perfect.hpp"
#include "rescube/resilient.hpp"

namespace py = pybind11;
using namespace rescube;

namespace {

using Labels = std::vector<std::uint8_t>;

CubePartition cube(int n, const Labels& labels) {
  int k = 0;
  for (std::uint8_t l : labels) k = std::max(k, static_cast<int>(l) + 1);
  return CubePartition(n, k, labels);
}

std::vector<std::vector<int>> rows(const QuotientMatrix& m) {
  std::vector<std::vector<int>> out(m.k, std::vector<int>(m.k));
  for (int i = 0; i < m.k; ++i) {
    for (int j = 0; j < m.k; ++j) out[i][j] = m.at(i, j);
  }
  return out;
}

CiMethod method_of(const std::string& s) {
  if (s == "auto") return CiMethod::Auto;
  if (s == "direct") return CiMethod::Direct;
  if (s == "spectral") return CiMethod::Spectral;
  throw Error("method must be auto, direct or spectral");
}

py::dict report_dict(const ClassReport& c) {
  py::dict d;
  d["table"] = c.representative.table;
  d["n"] = c.representative.n;
  d["rank"] = c.rank.rank;
  d["rank_class"] = to_string(c.rank.cls);
  d["aut_order"] = c.aut_order;
  d["orbit_size"] = c.orbit_size;
  d["semilinear"] = c.semilinear;
  d["reducible"] = c.reducible;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "resilient (n,2)-functions and equitable partitions of Q_n / H(r,4)";

  py::register_exception<Error>(m, "RescubeError", PyExc_ValueError);

  m.def("standard_matrix",
        [](const std::string& kind, int n) {
          return rows(standard_matrix(standard_kind_from_string(kind), n));
        },
        py::arg("kind"), py::arg("n"),
        "Standard quotient matrix (kind in {'S2','S3','S4','EPERF'}).");

  m.def("quotient_matrix",
        [](int n, const Labels& labels)
            -> std::optional<std::vector<std::vector<int>>> {
          const EquitableResult r = quotient_matrix(cube(n, labels));
          if (!r.ok()) return std::nullopt;
          return rows(*r.matrix);
        },
        py::arg("n"), py::arg("labels"),
        "Quotient matrix of a cube partition, or None if not equitable.");

  m.def("verify",
        [](int n, const Labels& labels, const std::string& kind) {
          const EquitableResult r = quotient_matrix(cube(n, labels));
          return r.ok() && *r.matrix ==
                               standard_matrix(standard_kind_from_string(kind), n);
        },
        py::arg("n"), py::arg("labels"), py::arg("kind"),
        "Does the partition have the standard quotient matrix of this kind?");

  m.def("quotient_matrix_h4",
        [](int r, const Labels& labels)
            -> std::optional<std::vector<std::vector<int>>> {
          int k = 0;
          for (std::uint8_t l : labels) k = std::max(k, static_cast<int>(l) + 1);
          const EquitableResult res =
              quotient_matrix_h4(HammingPartition(r, k, labels));
          if (!res.ok()) return std::nullopt;
          return rows(*res.matrix);
        },
        py::arg("r"), py::arg("labels"),
        "Quotient matrix over H(r,4), or None if not equitable.");

  m.def("ci_order",
        [](int n, int mm, const Labels& table, const std::string& method) {
          return ci_order(VbFunction(n, mm, table), method_of(method));
        },
        py::arg("n"), py::arg("m"), py::arg("table"),
        py::arg("method") = "auto");

  m.def("is_resilient",
        [](int n, int mm, const Labels& table, int t) {
          return is_resilient(VbFunction(n, mm, table), t);
        },
        py::arg("n"), py::arg("m"), py::arg("table"), py::arg("t"));

  m.def("max_resilience_bound", &max_resilience_bound, py::arg("n"),
        py::arg("m"));

  m.def("linear_function",
        [](int n) { return linear_function(n).table; }, py::arg("n"),
        "Value table of the canonical (2n/3-1)-resilient linear function.");

  m.def("expand",
        [](int n, const Labels& labels) {
          return expand_s4_to_s2(CubePartition(n, 4, labels)).labels();
        },
        py::arg("n"), py::arg("labels"),
        "4-cell partition of Q_n -> 2-cell partition of Q_(n+3).");

  m.def("contract",
        [](int n, const Labels& labels) {
          return contract_s2_to_s4(CubePartition(n, 2, labels)).labels();
        },
        py::arg("n"), py::arg("labels"),
        "Inverse of expand; n is the dimension of the 2-cell input.");

  m.def("split",
        [](int n, const Labels& labels) {
          return split_s2_to_s3(CubePartition(n, 2, labels)).labels();
        },
        py::arg("n"), py::arg("labels"),
        "2-cell partition -> 3-cell partition against the e_n-translate.");

  m.def("lift",
        [](int r, const Labels& labels) {
          return lift(HammingPartition(r, 4, labels)).labels();
        },
        py::arg("r"), py::arg("labels"),
        "Lift a 4-cell H(r,4) partition to Q_(3r).");

  m.def("latin_squares",
        []() {
          std::vector<Labels> out;
          for (const HammingPartition& p : enumerate_latin_squares()) {
            out.push_back(p.labels());
          }
          return out;
        },
        "Label tables of all 576 Latin squares of order 4, lexicographic.");

  m.def("hamming_code",
        [](int mp) { return hamming_code(mp).words.to_vector(); },
        py::arg("mp"), "Hamming code of length 2^mp - 1 as sorted indices.");

  m.def("affine_rank",
        [](int n, const std::vector<Vertex>& elems) {
          return affine_rank(VertexSet::of(n, elems));
        },
        py::arg("n"), py::arg("elements"));

  m.def("affine_dual",
        [](int n, const std::vector<Vertex>& elems) {
          return affine_dual(VertexSet::of(n, elems)).to_vector();
        },
        py::arg("n"), py::arg("elements"));

  m.def("rank_class",
        [](int n, const Labels& labels) {
          int k = 0;
          for (std::uint8_t l : labels) k = std::max(k, static_cast<int>(l) + 1);
          const RankReport r = k == 2 ? rank_class_s2(CubePartition(n, 2, labels))
                                      : rank_class_s4(CubePartition(n, 4, labels));
          return py::make_tuple(to_string(r.cls), r.rank);
        },
        py::arg("n"), py::arg("labels"),
        "(class name, affine rank) of a 2- or 4-cell standard partition.");

  m.def("canonical_form",
        [](int n, const Labels& table) {
          return canonical_form(VbFunction(n, 2, table)).table;
        },
        py::arg("n"), py::arg("table"));

  m.def("are_equivalent",
        [](int n, const Labels& f, const Labels& g) {
          return are_equivalent(VbFunction(n, 2, f), VbFunction(n, 2, g));
        },
        py::arg("n"), py::arg("f"), py::arg("g"));

  m.def("classify",
        [](int n, int jobs, double budget) {
          SearchOptions opts;
          opts.jobs = jobs;
          opts.budget_seconds = budget;
          const SearchResult res = search_s4(n, opts);
          py::list classes;
          for (const ClassReport& c : res.classes) classes.append(report_dict(c));
          py::dict d;
          d["classes"] = classes;
          d["complete"] = res.complete;
          return d;
        },
        py::arg("n"), py::arg("jobs") = 1, py::arg("budget") = 0.0,
        "Classify 4-cell standard partitions of Q_n up to equivalence.");

  m.def("detect_reducible",
        [](int n, const Labels& labels) {
          const CubePartition p = cube(n, labels);
          const StandardKind kind = p.cells() == 2   ? StandardKind::S2
                                    : p.cells() == 3 ? StandardKind::S3
                                                     : StandardKind::S4;
          return detect_reducible(p, kind).reducible;
        },
        py::arg("n"), py::arg("labels"));
}
