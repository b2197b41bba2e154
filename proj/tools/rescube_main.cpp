// rescube command-line front end.  All instance I/O goes through the text
// formats of rescube/io.hpp; every subcommand writes deterministic output to
// stdout.  Exit codes: 0 = success / property holds, 1 = verified false
// (not equitable, not resilient, not equivalent, ...), 2 = usage or file
// format error.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rescube/algebra.hpp"
#include "rescube/bridge.hpp"
#include "rescube/classify.hpp"
#include "rescube/core.hpp"
#include "rescube/io.hpp"
#include "rescube/latin.hpp"
#include "rescube/perfect.hpp"
#include "rescube/resilient.hpp"

namespace {

using namespace rescube;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_matrix(std::ostream& out, const QuotientMatrix& m) {
  std::size_t width = 1;
  for (int v : m.a) width = std::max(width, std::to_string(v).size());
  out << "quotient:\n";
  for (int i = 0; i < m.k; ++i) {
    out << " ";
    for (int j = 0; j < m.k; ++j) {
      out << ' ' << std::setw(static_cast<int>(width)) << m.at(i, j);
    }
    out << '\n';
  }
  out << "quotient-line: " << m.to_string() << '\n';
}

int cmd_verify(const std::string& path, const std::string& expect) {
  const PartitionFile pf = read_partition_file(path);
  EquitableResult res;
  int n_std = 0;  // dimension used for the standard matrix comparison
  if (pf.q == 2) {
    const CubePartition p = pf.cube();
    std::cout << "graph: Q_" << p.dim() << '\n';
    res = quotient_matrix(p);
    n_std = p.dim();
  } else {
    const HammingPartition p = pf.hamming();
    std::cout << "graph: H(" << p.coords() << ",4)\n";
    res = quotient_matrix_h4(p);
    n_std = 3 * p.coords();
  }
  std::cout << "cells: " << pf.k << '\n';
  if (!res.ok()) {
    std::cout << "equitable: no\n";
    std::cout << "witness: " << res.failure->describe() << '\n';
    return 1;
  }
  std::cout << "equitable: yes\n";
  print_matrix(std::cout, *res.matrix);
  if (!expect.empty()) {
    const QuotientMatrix want =
        standard_matrix(standard_kind_from_string(expect), n_std);
    if (*res.matrix == want) {
      std::cout << "expect: " << expect << " ok\n";
    } else {
      std::cout << "expect: " << expect << " mismatch (standard "
                << want.to_string() << ")\n";
      return 1;
    }
  }
  return 0;
}

int cmd_resilience(const std::string& path, int t_want, bool t_given,
                   const std::string& method_name) {
  const VbFunction f = read_function_file(path).function();
  CiMethod method = CiMethod::Auto;
  if (method_name == "direct") method = CiMethod::Direct;
  if (method_name == "spectral") method = CiMethod::Spectral;
  const bool bal = is_balanced(f);
  std::cout << "balanced: " << yesno(bal) << '\n';
  if (!bal) return 1;
  const int order = ci_order(f, method);
  std::cout << "order: " << order << '\n';
  if (t_given) {
    const bool ok = order >= t_want;
    std::cout << "resilient: " << yesno(ok) << '\n';
    return ok ? 0 : 1;
  }
  return 0;
}

void require_standard(const CubePartition& p, StandardKind kind) {
  const EquitableResult res = quotient_matrix(p);
  if (!res.ok() || *res.matrix != standard_matrix(kind, p.dim())) {
    throw Error("constructed partition failed its self-check");
  }
}

void emit_partition(const CubePartition& p, const std::string& comment) {
  write_partition(std::cout, PartitionFile::of(p), {comment});
}

void emit_partition(const HammingPartition& p, const std::string& comment) {
  write_partition(std::cout, PartitionFile::of(p), {comment});
}

int cmd_construct_linear(int n, bool four_cells) {
  const VbFunction f = linear_function(n);
  if (four_cells) {
    const CubePartition p = partition_of(f);
    require_standard(p, StandardKind::S4);
    emit_partition(p, "construct linear-s4 --n " + std::to_string(n));
  } else {
    std::vector<std::uint8_t> labels(f.table.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
      labels[x] = f.table[x] == 0 ? 0 : 1;
    }
    const CubePartition p(n, 2, std::move(labels));
    require_standard(p, StandardKind::S2);
    emit_partition(p, "construct linear-s2 --n " + std::to_string(n));
  }
  return 0;
}

int hamming_exponent(int m) {
  for (int mp = 2; (1 << mp) - 1 <= kMaxDim; ++mp) {
    if ((1 << mp) - 1 == m) return mp;
  }
  throw UsageError("--m must be a Hamming length 2^s - 1 (3, 7, or 15)");
}

int cmd_construct_hamming(int m) {
  const MultifoldCode c = hamming_code(hamming_exponent(m));
  write_set(std::cout, SetFile::of(c.words),
            {"construct hamming --m " + std::to_string(m), "fold 1"});
  return 0;
}

int cmd_construct_multifold(int m, int t) {
  const int mp = hamming_exponent(m);
  if (t < 1 || t > m) throw UsageError("--t must be in [1, m]");
  std::vector<Vertex> translates;
  for (int j = 1; j <= t; ++j) translates.push_back(Vertex{1} << (m - j));
  const MultifoldCode c = multifold_union(hamming_code(mp), translates);
  write_set(std::cout, SetFile::of(c.words),
            {"construct multifold --m " + std::to_string(m) + " --t " +
                 std::to_string(t),
             "fold " + std::to_string(c.fold)});
  return 0;
}

int cmd_construct_lift(const std::string& path) {
  const HammingPartition h = read_partition_file(path).hamming();
  emit_partition(lift(h), "construct lift (r = " + std::to_string(h.coords()) +
                              ")");
  return 0;
}

int cmd_construct_concat(const std::vector<std::string>& paths) {
  const HammingPartition outer = read_partition_file(paths[0]).hamming();
  std::vector<CubePartition> inners;
  for (std::size_t i = 1; i < paths.size(); ++i) {
    inners.push_back(read_partition_file(paths[i]).cube());
  }
  emit_partition(concat(outer, inners), "construct concat");
  return 0;
}

int cmd_construct_semi_complete(const std::string& path) {
  const CubePartition p = read_partition_file(path).cube();
  const MovedDual moved = move_dual_to_suffix(p);
  std::ostringstream pm;
  pm << "coordinate bit map (bit -> bit):";
  for (int b = 0; b < moved.perm.dim(); ++b) {
    pm << ' ' << b << "->" << static_cast<int>(moved.perm.map[b]);
  }
  const CubePartition s4 = semilinear_complete_to_s4(moved.partition);
  write_partition(std::cout, PartitionFile::of(s4),
                  {"construct semi-complete", pm.str()});
  return 0;
}

int cmd_expand(const std::string& path) {
  emit_partition(expand_s4_to_s2(read_partition_file(path).cube()), "expand");
  return 0;
}

int cmd_contract(const std::string& path) {
  emit_partition(contract_s2_to_s4(read_partition_file(path).cube()),
                 "contract");
  return 0;
}

int cmd_split(const std::string& path) {
  emit_partition(split_s2_to_s3(read_partition_file(path).cube()), "split");
  return 0;
}

int cmd_rank(const std::string& path) {
  RankReport rep{};
  if (looks_like_partition(path)) {
    const PartitionFile pf = read_partition_file(path);
    if (pf.q != 2) throw Error("rank is defined for binary partitions");
    const CubePartition p = pf.cube();
    if (p.cells() == 2) {
      rep = rank_class_s2(p);
    } else if (p.cells() == 4) {
      rep = rank_class_s4(p);
    } else {
      throw Error("rank needs a 2-cell (S2) or 4-cell (S4) partition");
    }
  } else {
    const VbFunction f = read_function_file(path).function();
    const int r = affine_rank(graph_of(f));
    rep.rank = r;
    rep.cls = r <= f.n              ? RankClass::Linear
              : r == f.n + 1        ? RankClass::StrictlySemilinear
                                    : RankClass::FullRank;
  }
  std::cout << "rank: " << rep.rank << '\n';
  std::cout << "class: " << to_string(rep.cls) << '\n';
  std::cout << "semilinear: " << yesno(rep.cls != RankClass::FullRank) << '\n';
  return 0;
}

int cmd_dual(const std::string& path) {
  const VertexSet s = read_set_file(path).set();
  write_set(std::cout, SetFile::of(affine_dual(s)), {"affine dual"});
  return 0;
}

int cmd_canon(const std::string& path) {
  const VbFunction f = read_function_file(path).function();
  write_function(std::cout, FunctionFile::of(canonical_form(f)),
                 {"canonical form"});
  return 0;
}

int cmd_equiv(const std::string& path_f, const std::string& path_g) {
  const VbFunction f = read_function_file(path_f).function();
  const VbFunction g = read_function_file(path_g).function();
  const bool eq = f.n == g.n && f.m == g.m && are_equivalent(f, g);
  std::cout << "equivalent: " << yesno(eq) << '\n';
  return eq ? 0 : 1;
}

int cmd_classify(int n, int jobs, double budget, const std::string& out_dir) {
  if (n != 3 && n != 6 && n != 9) throw UsageError("--n must be 3, 6 or 9");
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
  SearchOptions opts;
  opts.jobs = jobs;
  opts.budget_seconds = budget;
  const SearchResult res = search_s4(n, opts);
  std::cout << "n: " << n << '\n';
  std::cout << "classes: " << res.classes.size() << '\n';
  std::cout << "complete: " << yesno(res.complete);
  if (!res.complete) std::cout << " (budget exhausted; counts are lower bounds)";
  std::cout << '\n';
  for (std::size_t i = 0; i < res.classes.size(); ++i) {
    const ClassReport& c = res.classes[i];
    std::cout << "class " << i << ": rank " << c.rank.rank << ' '
              << to_string(c.rank.cls) << " aut " << c.aut_order << " orbit "
              << c.orbit_size << " semilinear " << yesno(c.semilinear)
              << " reducible " << yesno(c.reducible) << '\n';
  }
  for (std::size_t i = 0; i < res.classes.size(); ++i) {
    const FunctionFile ff = FunctionFile::of(res.classes[i].representative);
    const std::string comment = "classify --n " + std::to_string(n) +
                                " class " + std::to_string(i) +
                                " representative";
    if (out_dir.empty()) {
      std::cout << "representative " << i << ":\n";
      write_function(std::cout, ff, {comment});
    } else {
      std::filesystem::create_directories(out_dir);
      const std::string path =
          out_dir + "/class_" + std::to_string(i) + ".func";
      std::ofstream out(path);
      if (!out) throw Error("cannot write " + path);
      write_function(out, ff, {comment});
      std::cout << "wrote: " << path << '\n';
    }
  }
  return res.complete ? 0 : 1;
}

StandardKind kind_for_cells(int k) {
  switch (k) {
    case 2: return StandardKind::S2;
    case 3: return StandardKind::S3;
    case 4: return StandardKind::S4;
    default: throw Error("no standard kind with " + std::to_string(k) + " cells");
  }
}

int cmd_detect_reducible(const std::string& path) {
  const CubePartition p = read_partition_file(path).cube();
  const ReducibilityReport rep = detect_reducible(p, kind_for_cells(p.cells()));
  std::cout << "reducible: " << yesno(rep.reducible) << '\n';
  if (rep.reducible) {
    std::cout << "block:";
    for (int c : rep.witness->block_coords) std::cout << ' ' << c;
    std::cout << '\n';
    std::cout << "inner-dims: " << rep.witness->inner1.dim() << ' '
              << rep.witness->inner2.dim() << '\n';
  }
  return rep.reducible ? 0 : 1;
}

int cmd_detect_semilinear(const std::string& path) {
  const CubePartition p = read_partition_file(path).cube();
  RankReport rep{};
  if (p.cells() == 2) {
    rep = rank_class_s2(p);
  } else if (p.cells() == 4) {
    rep = rank_class_s4(p);
  } else {
    throw Error("semilinearity needs a 2-cell (S2) or 4-cell (S4) partition");
  }
  const bool semi = rep.cls != RankClass::FullRank;
  std::cout << "rank: " << rep.rank << '\n';
  std::cout << "class: " << to_string(rep.cls) << '\n';
  std::cout << "semilinear: " << yesno(semi) << '\n';
  return semi ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rescube: resilient vectorial Boolean functions and equitable "
               "partitions of Q_n and H(r,4)"};
  app.require_subcommand(1);
  int rc = 0;

  // verify
  std::string verify_path, verify_expect;
  auto* verify = app.add_subcommand(
      "verify", "Compute the quotient matrix of a partition file");
  verify->add_option("file", verify_path, "partition file")->required();
  verify->add_option("--expect", verify_expect,
                     "compare against a standard matrix")
      ->check(CLI::IsMember({"S2", "S3", "S4", "EPERF"}));
  verify->callback([&] { rc = cmd_verify(verify_path, verify_expect); });

  // resilience
  std::string res_path, res_method = "auto";
  int res_t = 0;
  auto* resil = app.add_subcommand(
      "resilience", "Report the resilience order of a function file");
  resil->add_option("file", res_path, "function file")->required();
  auto* res_t_opt =
      resil->add_option("--t", res_t, "check resilience of this order");
  resil->add_option("--method", res_method, "correlation-immunity algorithm")
      ->check(CLI::IsMember({"auto", "direct", "spectral"}));
  resil->callback([&] {
    rc = cmd_resilience(res_path, res_t, res_t_opt->count() > 0, res_method);
  });

  // construct
  auto* construct =
      app.add_subcommand("construct", "Build instances of the known families");
  construct->require_subcommand(1);
  int con_n = 0, con_m = 0, con_t = 0;
  std::string con_path;
  std::vector<std::string> con_paths;

  auto* lin2 = construct->add_subcommand(
      "linear-s2", "2-cell partition from the linear (n,2)-function");
  lin2->add_option("--n", con_n, "dimension (multiple of 3)")->required();
  lin2->callback([&] { rc = cmd_construct_linear(con_n, false); });

  auto* lin4 = construct->add_subcommand(
      "linear-s4", "4-cell partition from the linear (n,2)-function");
  lin4->add_option("--n", con_n, "dimension (multiple of 3)")->required();
  lin4->callback([&] { rc = cmd_construct_linear(con_n, true); });

  auto* ham = construct->add_subcommand("hamming", "binary Hamming code");
  ham->add_option("--m", con_m, "code length (2^s - 1)")->required();
  ham->callback([&] { rc = cmd_construct_hamming(con_m); });

  auto* multi = construct->add_subcommand(
      "multifold", "union of t weight-1 translates of the Hamming code");
  multi->add_option("--m", con_m, "code length (2^s - 1)")->required();
  multi->add_option("--t", con_t, "number of translates")->required();
  multi->callback([&] { rc = cmd_construct_multifold(con_m, con_t); });

  auto* lift_cmd = construct->add_subcommand(
      "lift", "lift an H(r,4) partition to Q_3r");
  lift_cmd->add_option("file", con_path, "quaternary partition file")
      ->required();
  lift_cmd->callback([&] { rc = cmd_construct_lift(con_path); });

  auto* concat_cmd = construct->add_subcommand(
      "concat", "concatenate inner 4-cell partitions along an H(r,4) outer");
  concat_cmd
      ->add_option("files", con_paths,
                   "outer quaternary partition, then r inner partition files")
      ->required()
      ->expected(-2);
  concat_cmd->callback([&] { rc = cmd_construct_concat(con_paths); });

  auto* semi = construct->add_subcommand(
      "semi-complete", "complete a semilinear 2-cell partition to 4 cells");
  semi->add_option("file", con_path, "binary 2-cell partition file")
      ->required();
  semi->callback([&] { rc = cmd_construct_semi_complete(con_path); });

  // expand / contract / split
  std::string xform_path;
  auto* expand = app.add_subcommand(
      "expand", "4-cell partition of Q_n -> 2-cell partition of Q_(n+3)");
  expand->add_option("file", xform_path, "partition file")->required();
  expand->callback([&] { rc = cmd_expand(xform_path); });

  auto* contract = app.add_subcommand(
      "contract", "2-cell partition of Q_(n+3) -> 4-cell partition of Q_n");
  contract->add_option("file", xform_path, "partition file")->required();
  contract->callback([&] { rc = cmd_contract(xform_path); });

  auto* split = app.add_subcommand(
      "split", "2-cell partition -> 3-cell partition (first cell vs its "
               "e_n-translate)");
  split->add_option("file", xform_path, "partition file")->required();
  split->callback([&] { rc = cmd_split(xform_path); });

  // rank / dual / canon / equiv
  std::string rank_path;
  auto* rank = app.add_subcommand(
      "rank", "affine rank classification of a partition or function file");
  rank->add_option("file", rank_path, "partition or function file")
      ->required();
  rank->callback([&] { rc = cmd_rank(rank_path); });

  std::string dual_path;
  auto* dual = app.add_subcommand("dual", "affine dual of a vertex set");
  dual->add_option("file", dual_path, "set file")->required();
  dual->callback([&] { rc = cmd_dual(dual_path); });

  std::string canon_path;
  auto* canon = app.add_subcommand(
      "canon", "canonical form of a function under equivalence");
  canon->add_option("file", canon_path, "function file")->required();
  canon->callback([&] { rc = cmd_canon(canon_path); });

  std::string equiv_f, equiv_g;
  auto* equiv =
      app.add_subcommand("equiv", "decide equivalence of two functions");
  equiv->add_option("file1", equiv_f, "function file")->required();
  equiv->add_option("file2", equiv_g, "function file")->required();
  equiv->callback([&] { rc = cmd_equiv(equiv_f, equiv_g); });

  // classify
  int cls_n = 0, cls_jobs = 1;
  double cls_budget = 0.0;
  std::string cls_out;
  auto* classify = app.add_subcommand(
      "classify", "classify 4-cell standard partitions of Q_n up to "
                  "equivalence");
  classify->add_option("--n", cls_n, "dimension (3, 6 or 9)")->required();
  classify->add_option("--jobs", cls_jobs, "worker threads");
  classify->add_option("--budget", cls_budget,
                       "wall-clock limit in seconds (0 = none)");
  classify->add_option("--out", cls_out,
                       "directory for representative function files");
  classify->callback(
      [&] { rc = cmd_classify(cls_n, cls_jobs, cls_budget, cls_out); });

  // detect
  auto* detect = app.add_subcommand("detect", "structural predicates");
  detect->require_subcommand(1);
  std::string det_path;
  auto* det_red = detect->add_subcommand(
      "reducible", "is the partition a concatenation?");
  det_red->add_option("file", det_path, "binary partition file")->required();
  det_red->callback([&] { rc = cmd_detect_reducible(det_path); });
  auto* det_semi = detect->add_subcommand(
      "semilinear", "is the partition's rank class below full?");
  det_semi->add_option("file", det_path, "binary partition file")->required();
  det_semi->callback([&] { rc = cmd_detect_semilinear(det_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
