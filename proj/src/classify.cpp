#include "rescube/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "rescube/bridge.hpp"
#include "rescube/latin.hpp"

namespace rescube {

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

struct SearchAborted {};

}  // namespace

// ---------------------------------------------------------------------------
// Group elements.
// ---------------------------------------------------------------------------

Equivalence Equivalence::identity(int n) {
  check_dim(n);
  Equivalence e;
  e.perm = CoordPerm::identity(n);
  return e;
}

Equivalence Equivalence::then(const Equivalence& g) const {
  if (perm.dim() != g.perm.dim()) throw Error("equivalence dimension mismatch");
  Equivalence r;
  r.perm = perm.then(g.perm);
  r.shift = g.perm.apply(shift) ^ g.shift;
  for (int i = 0; i < 4; ++i) r.beta[i] = g.beta[beta[i]];
  return r;
}

Equivalence Equivalence::inverse() const {
  Equivalence r;
  r.perm = perm.inverse();
  r.shift = r.perm.apply(shift);
  for (int i = 0; i < 4; ++i) r.beta[beta[i]] = static_cast<std::uint8_t>(i);
  return r;
}

VbFunction apply(const Equivalence& e, const VbFunction& f) {
  if (f.m != 2) throw Error("equivalence action requires m = 2");
  if (e.perm.dim() != f.n) throw Error("equivalence dimension mismatch");
  std::vector<std::uint8_t> out(f.table.size());
  for (Vertex x = 0; x < out.size(); ++x) {
    out[e.perm.apply(x) ^ e.shift] = e.beta[f.table[x]];
  }
  return VbFunction(f.n, 2, std::move(out));
}

std::uint64_t equivalence_group_order(int n) {
  return (std::uint64_t{1} << n) * factorial(n) * 24;
}

// ---------------------------------------------------------------------------
// Orbit engine: every group element can be written so that the transformed
// table reads T(y) = beta(f(tau(y) ^ e)) with tau a coordinate permutation
// and e a base vertex.  The engine does a DFS over e and the bit images
// tau(2^j), evaluating T block by block (block j = indices [2^j, 2^(j+1)),
// each entry one XOR away from an already-known one) and keeping the value
// relabelling beta as a greedily-extended partial map.
// ---------------------------------------------------------------------------

namespace {

class OrbitEngine {
 public:
  enum class Mode { Minimize, Count, Find };

  OrbitEngine(const VbFunction& f, Mode mode)
      : n_(f.n),
        size_(std::size_t{1} << f.n),
        f_(f.table.data()),
        mode_(mode),
        ximg_(size_),
        timg_(size_) {
    if (f.m != 2) throw Error("classification machinery requires m = 2");
  }

  // Lexicographically least table in the orbit, plus one element achieving it.
  std::pair<std::vector<std::uint8_t>, Equivalence> minimize() {
    best_.assign(f_, f_ + size_);
    greedy_relabel(best_);
    best_elem_ = greedy_identity_element();
    for (Vertex e = 0; e < size_; ++e) run_base(e);
    return {best_, best_elem_};
  }

  // Number of elements with T == target (multiplied by the free choices of
  // beta on values the function never attains).
  std::uint64_t count_onto(const std::vector<std::uint8_t>& target) {
    target_ = target.data();
    for (Vertex e = 0; e < size_; ++e) run_base(e);
    return count_;
  }

  // First element with T == target, if any.  node_cap == 0 means unlimited.
  std::optional<Equivalence> find_onto(const std::vector<std::uint8_t>& target,
                                       std::uint64_t node_cap, bool* aborted) {
    target_ = target.data();
    node_cap_ = node_cap;
    for (Vertex e = 0; e < size_ && !stop_; ++e) run_base(e);
    if (aborted) *aborted = aborted_;
    if (!found_) return std::nullopt;
    return found_elem_;
  }

 private:
  void greedy_relabel(std::vector<std::uint8_t>& t) const {
    std::array<int, 4> map{-1, -1, -1, -1};
    int seen = 0;
    for (auto& v : t) {
      if (map[v] < 0) map[v] = seen++;
      v = static_cast<std::uint8_t>(map[v]);
    }
  }

  Equivalence greedy_identity_element() const {
    Equivalence e = Equivalence::identity(n_);
    std::array<int, 4> map{-1, -1, -1, -1};
    int seen = 0;
    for (std::size_t y = 0; y < size_; ++y) {
      if (map[f_[y]] < 0) map[f_[y]] = seen++;
    }
    for (int v = 0; v < 4; ++v) {
      if (map[v] < 0) map[v] = seen++;
    }
    for (int v = 0; v < 4; ++v) e.beta[v] = static_cast<std::uint8_t>(map[v]);
    return e;
  }

  // value -> symbol bookkeeping, with an undo trail per DFS level.
  bool assign_symbol(std::uint8_t v, std::size_t y, std::uint8_t& s) {
    if (bmap_[v] >= 0) {
      s = static_cast<std::uint8_t>(bmap_[v]);
      if (mode_ != Mode::Minimize && s != target_[y]) return false;
      return true;
    }
    if (mode_ == Mode::Minimize) {
      s = static_cast<std::uint8_t>(seen_);
    } else {
      s = target_[y];
      if (sym_used_ & (1u << s)) return false;
    }
    bmap_[v] = s;
    sym_used_ |= 1u << s;
    ++seen_;
    undo_[undo_top_++] = v;
    return true;
  }

  void undo_to(int mark) {
    while (undo_top_ > mark) {
      std::uint8_t v = undo_[--undo_top_];
      sym_used_ &= ~(1u << bmap_[v]);
      bmap_[v] = -1;
      --seen_;
    }
  }

  void run_base(Vertex e) {
    bmap_.fill(-1);
    sym_used_ = 0;
    seen_ = 0;
    undo_top_ = 0;
    ximg_[0] = e;
    std::uint8_t s;
    if (!assign_symbol(f_[e], 0, s)) return;
    timg_[0] = s;
    bool less = false;
    if (mode_ == Mode::Minimize) {
      if (s > best_[0]) return;
      less = s < best_[0];
    }
    base_ = e;
    used_pos_ = 0;
    dfs(0, less);
    undo_to(0);
  }

  void dfs(int j, bool less) {
    if (stop_) return;
    if (j == n_) {
      leaf(less);
      return;
    }
    const std::size_t lo = std::size_t{1} << j;
    for (int p = 0; p < n_; ++p) {
      if (used_pos_ & (1u << p)) continue;
      if (node_cap_ && ++nodes_ > node_cap_) {
        aborted_ = true;
        stop_ = true;
        return;
      }
      const int mark = undo_top_;
      const Vertex bit = Vertex{1} << p;
      bool ok = true;
      bool l2 = less;
      for (std::size_t y = lo; y < 2 * lo; ++y) {
        const Vertex x = ximg_[y - lo] ^ bit;
        ximg_[y] = x;
        std::uint8_t s;
        if (!assign_symbol(f_[x], y, s)) {
          ok = false;
          break;
        }
        timg_[y] = s;
        if (mode_ == Mode::Minimize && !l2) {
          if (s > best_[y]) {
            ok = false;
            break;
          }
          if (s < best_[y]) l2 = true;
        }
      }
      if (ok) {
        choice_[j] = static_cast<std::uint8_t>(p);
        used_pos_ |= 1u << p;
        dfs(j + 1, l2);
        used_pos_ &= ~(1u << p);
        if (stop_) {
          undo_to(mark);
          return;
        }
      }
      undo_to(mark);
    }
  }

  void leaf(bool less) {
    switch (mode_) {
      case Mode::Minimize:
        if (less) {
          best_.assign(timg_.begin(), timg_.end());
          best_elem_ = reconstruct();
        }
        break;
      case Mode::Count:
        count_ += factorial(4 - seen_);
        break;
      case Mode::Find:
        // Reconstruct here: the beta map is undone as the DFS unwinds.
        found_elem_ = reconstruct();
        found_ = true;
        stop_ = true;
        break;
    }
  }

  // Build the Equivalence for the current (base_, choice_, bmap_).
  Equivalence reconstruct() const {
    CoordPerm tau;
    tau.map.resize(n_);
    for (int j = 0; j < n_; ++j) tau.map[j] = choice_[j];
    Equivalence e;
    e.perm = tau.inverse();
    e.shift = e.perm.apply(base_);
    unsigned free_syms = ~sym_used_ & 0xFu;
    for (int v = 0; v < 4; ++v) {
      if (bmap_[v] >= 0) {
        e.beta[v] = static_cast<std::uint8_t>(bmap_[v]);
      } else {
        const int s = __builtin_ctz(free_syms);
        free_syms &= free_syms - 1;
        e.beta[v] = static_cast<std::uint8_t>(s);
      }
    }
    return e;
  }

  const int n_;
  const std::size_t size_;
  const std::uint8_t* f_;
  const Mode mode_;

  std::vector<Vertex> ximg_;
  std::vector<std::uint8_t> timg_;
  std::vector<std::uint8_t> best_;
  Equivalence best_elem_;
  const std::uint8_t* target_ = nullptr;

  std::array<int, 4> bmap_{-1, -1, -1, -1};
  unsigned sym_used_ = 0;
  int seen_ = 0;
  std::array<std::uint8_t, 8> undo_{};
  int undo_top_ = 0;

  unsigned used_pos_ = 0;
  std::array<std::uint8_t, kMaxDim> choice_{};
  Vertex base_ = 0;

  std::uint64_t count_ = 0;
  bool found_ = false;
  Equivalence found_elem_;
  bool stop_ = false;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t node_cap_ = 0;
};

constexpr std::uint64_t kTransporterNodeCap = 20'000'000;

}  // namespace

VbFunction canonical_form(const VbFunction& f) {
  OrbitEngine eng(f, OrbitEngine::Mode::Minimize);
  return VbFunction(f.n, 2, eng.minimize().first);
}

std::uint64_t automorphism_count(const VbFunction& f) {
  OrbitEngine eng(f, OrbitEngine::Mode::Count);
  return eng.count_onto(f.table);
}

std::optional<Equivalence> find_equivalence(const VbFunction& f,
                                            const VbFunction& g) {
  if (f.n != g.n || f.m != 2 || g.m != 2) {
    throw Error("find_equivalence requires matching dimensions and m = 2");
  }
  bool aborted = false;
  {
    OrbitEngine eng(f, OrbitEngine::Mode::Find);
    auto e = eng.find_onto(g.table, kTransporterNodeCap, &aborted);
    if (e || !aborted) return e;
  }
  // Node cap hit: decide via canonical forms, composing the two minimizing
  // elements into an explicit transporter when they agree.
  OrbitEngine ef(f, OrbitEngine::Mode::Minimize);
  auto [cf, elem_f] = ef.minimize();
  OrbitEngine eg(g, OrbitEngine::Mode::Minimize);
  auto [cg, elem_g] = eg.minimize();
  if (cf != cg) return std::nullopt;
  return elem_f.then(elem_g.inverse());
}

std::string invariant_key(const VbFunction& f) {
  if (f.m != 2) throw Error("invariant_key requires m = 2");
  std::ostringstream os;
  os << "g" << affine_rank(graph_of(f));
  std::vector<std::string> cells;
  for (unsigned y = 0; y < 4; ++y) {
    VertexSet c = indicator(f, y);
    std::ostringstream cs;
    cs << "s" << c.count();
    if (!c.empty()) {
      std::vector<std::uint64_t> dw(static_cast<std::size_t>(f.n) + 1, 0);
      affine_dual(c).for_each([&](Vertex v) { ++dw[weight(v)]; });
      std::vector<std::uint64_t> dd(static_cast<std::size_t>(f.n) + 1, 0);
      const std::vector<Vertex> vs = c.to_vector();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          ++dd[weight(vs[i] ^ vs[j])];
        }
      }
      cs << "|w";
      for (auto x : dw) cs << ' ' << x;
      cs << "|d";
      for (auto x : dd) cs << ' ' << x;
    }
    cells.push_back(cs.str());
  }
  std::sort(cells.begin(), cells.end());
  for (const auto& c : cells) os << '[' << c << ']';
  return os.str();
}

bool are_equivalent(const VbFunction& f, const VbFunction& g) {
  if (f.n != g.n || f.m != g.m) {
    throw Error("are_equivalent requires matching dimensions");
  }
  if (invariant_key(f) != invariant_key(g)) return false;
  return canonical_form(f) == canonical_form(g);
}

// ---------------------------------------------------------------------------
// Online class table: invariant bucketing + transporter confirmation.
// ---------------------------------------------------------------------------

namespace {

struct Deduper {
  std::map<std::string, std::vector<std::size_t>> buckets;
  std::vector<VbFunction> reps;

  bool insert(const VbFunction& f, const std::string& key) {
    auto& ids = buckets[key];
    for (std::size_t id : ids) {
      if (find_equivalence(f, reps[id])) return false;
    }
    ids.push_back(reps.size());
    reps.push_back(f);
    return true;
  }
};

std::vector<ClassReport> finalize_reports(const std::vector<VbFunction>& reps) {
  std::vector<ClassReport> out;
  out.reserve(reps.size());
  for (const VbFunction& f : reps) {
    ClassReport r;
    r.representative = canonical_form(f);
    r.aut_order = automorphism_count(r.representative);
    r.orbit_size = equivalence_group_order(f.n) / r.aut_order;
    CubePartition p = partition_of(r.representative);
    r.rank = rank_class_s4(p);
    r.semilinear = r.rank.cls != RankClass::FullRank;
    r.reducible = detect_reducible(p, StandardKind::S4).reducible;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const ClassReport& a, const ClassReport& b) {
    const int ra = static_cast<int>(a.rank.cls);
    const int rb = static_cast<int>(b.rank.cls);
    if (ra != rb) return ra < rb;
    return a.representative.table < b.representative.table;
  });
  return out;
}

// ---------------------------------------------------------------------------
// S4(n) classifier.
// ---------------------------------------------------------------------------

struct S4Context {
  int n = 0;
  int size = 0;
  int r = 0;            // off-diagonal quotient entry n/3
  int min_bal_j = 0;    // first subcube level with forced value balance
  int full_lex_max = 0;
  int trans_lex_max = 0;
  int stop_depth = -1;  // frontier collection depth (-1 = run to leaves)

  std::vector<std::uint8_t> label;               // 255 = unassigned
  std::vector<std::array<std::uint8_t, 4>> cnt;  // assigned neighbours per cell
  std::vector<std::uint8_t> present;             // cells with cnt >= 1
  std::vector<std::uint8_t> sat;                 // cells with cnt == r
  std::vector<std::uint8_t> cap_at;              // balance cap before vertex v
  std::array<int, 4> prefix_count{};
  int used_cells = 0;

  std::uint64_t nodes = 0;
  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;
  std::atomic<bool>* expired = nullptr;

  std::function<void(const std::vector<std::uint8_t>&)> on_leaf;

  explicit S4Context(int n_, int lex_levels) {
    n = n_;
    size = 1 << n;
    r = n / 3;
    min_bal_j = n / 3 + 1;
    const int max_boundary = n - 1;
    if (lex_levels < 0) lex_levels = max_boundary;
    trans_lex_max = std::min(lex_levels, max_boundary);
    full_lex_max = std::min(4, trans_lex_max);
    label.assign(size, 255);
    cnt.assign(size, {0, 0, 0, 0});
    present.assign(size, 0);
    sat.assign(size, 0);
    cap_at.assign(size, 0);
    for (int v = 0; v < size; ++v) {
      int j = min_bal_j;
      while ((1 << j) < v + 1) ++j;
      cap_at[v] = static_cast<std::uint8_t>((1 << j) / 4);
    }
  }

  void assign(Vertex v, int c) {
    label[v] = static_cast<std::uint8_t>(c);
    ++prefix_count[c];
    if (c == used_cells) ++used_cells;
    for (int b = 0; b < n; ++b) {
      const Vertex u = v ^ (Vertex{1} << b);
      auto& k = cnt[u][c];
      ++k;
      if (k == 1) present[u] |= static_cast<std::uint8_t>(1u << c);
      if (k == r) sat[u] |= static_cast<std::uint8_t>(1u << c);
    }
  }

  void unassign(Vertex v) {
    const int c = label[v];
    label[v] = 255;
    --prefix_count[c];
    if (c == used_cells - 1 && prefix_count[c] == 0) --used_cells;
    for (int b = 0; b < n; ++b) {
      const Vertex u = v ^ (Vertex{1} << b);
      auto& k = cnt[u][c];
      if (k == r) sat[u] &= static_cast<std::uint8_t>(~(1u << c));
      --k;
      if (k == 0) present[u] &= static_cast<std::uint8_t>(~(1u << c));
    }
  }

  // True when the prefix [0, 2^j) has a strictly smaller image under some
  // stabilizer element of the subcube (low-coordinate permutation for
  // j <= full_lex_max, any translation inside the subcube, greedy value
  // relabelling).  The orbit-least complete labelling is never rejected.
  bool lex_rejected(int j) {
    const int plen = 1 << j;
    std::array<int, 8> pp{};
    const bool with_perms = j <= full_lex_max;
    for (int i = 0; i < j; ++i) pp[i] = i;
    do {
      bool id_perm = true;
      for (int i = 0; i < j; ++i) {
        if (pp[i] != i) {
          id_perm = false;
          break;
        }
      }
      for (int e = 0; e < plen; ++e) {
        if (id_perm && e == 0) continue;
        std::array<int, 4> bmap{-1, -1, -1, -1};
        int seen = 0;
        for (int y = 0; y < plen; ++y) {
          int x;
          if (id_perm) {
            x = y ^ e;
          } else {
            x = 0;
            for (int b = 0; b < j; ++b) {
              if ((y >> b) & 1) x |= 1 << pp[b];
            }
            x ^= e;
          }
          const std::uint8_t v = label[x];
          int s = bmap[v];
          if (s < 0) s = bmap[v] = seen++;
          if (s != label[y]) {
            if (s < label[y]) return true;
            break;
          }
        }
      }
      if (!with_perms) break;
    } while (std::next_permutation(pp.begin(), pp.begin() + j));
    return false;
  }

  void dfs(Vertex v) {
    if ((++nodes & 0xFFFF) == 0) {
      if (expired && expired->load(std::memory_order_relaxed)) throw SearchAborted{};
      if (has_deadline && std::chrono::steady_clock::now() > deadline) {
        if (expired) expired->store(true, std::memory_order_relaxed);
        throw SearchAborted{};
      }
    }
    if (static_cast<int>(v) == stop_depth) {
      on_leaf(label);
      return;
    }
    if (static_cast<int>(v) == size) {
      on_leaf(label);
      return;
    }
    if (v >= 8 && (v & (v - 1)) == 0) {
      const int j = __builtin_ctz(v);
      if (j <= trans_lex_max && lex_rejected(j)) return;
    }
    unsigned mask = present[v];
    for (int b = 0; b < n; ++b) mask |= sat[v ^ (Vertex{1} << b)];
    const int cap = cap_at[v];
    for (int c = 0; c < 4; ++c) {
      if (prefix_count[c] >= cap) mask |= 1u << c;
    }
    const unsigned allowed =
        ~mask & ((1u << std::min(used_cells + 1, 4)) - 1u);
    for (int c = 0; c < 4; ++c) {
      if (!(allowed & (1u << c))) continue;
      assign(v, c);
      dfs(v + 1);
      unassign(v);
    }
  }
};

}  // namespace

SearchResult search_s4(int n, const SearchOptions& opts) {
  if (n != 3 && n != 6 && n != 9) {
    throw Error("search_s4 supports n in {3, 6, 9}");
  }
  const auto start = std::chrono::steady_clock::now();
  std::atomic<bool> expired{false};

  Deduper dedupe;
  std::mutex mu;
  std::uint64_t total_nodes = 0;
  bool complete = true;

  auto leaf_handler = [&](const std::vector<std::uint8_t>& labels) {
    VbFunction f(n, 2, labels);
    const std::string key = invariant_key(f);
    std::lock_guard<std::mutex> lock(mu);
    dedupe.insert(f, key);
  };

  auto make_ctx = [&]() {
    auto ctx = std::make_unique<S4Context>(n, opts.lex_levels);
    if (opts.budget_seconds > 0) {
      ctx->has_deadline = true;
      ctx->deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(opts.budget_seconds));
    }
    ctx->expired = &expired;
    return ctx;
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || (1 << n) <= 32) {
    auto ctx = make_ctx();
    ctx->on_leaf = leaf_handler;
    try {
      ctx->dfs(0);
    } catch (const SearchAborted&) {
      complete = false;
    }
    total_nodes = ctx->nodes;
  } else {
    // Collect a frontier of prefixes, then distribute the subtrees.
    const int depth = std::min(16, 1 << (n - 2));
    std::vector<std::vector<std::uint8_t>> frontier;
    {
      auto ctx = make_ctx();
      ctx->stop_depth = depth;
      ctx->on_leaf = [&](const std::vector<std::uint8_t>& labels) {
        frontier.emplace_back(labels.begin(), labels.begin() + depth);
      };
      try {
        ctx->dfs(0);
      } catch (const SearchAborted&) {
        complete = false;
      }
      total_nodes = ctx->nodes;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::uint64_t> worker_nodes(jobs, 0);
    std::atomic<bool> any_aborted{false};
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w]() {
        auto ctx = make_ctx();
        ctx->on_leaf = leaf_handler;
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= frontier.size()) break;
          for (int v = 0; v < depth; ++v) ctx->assign(v, frontier[i][v]);
          try {
            ctx->dfs(depth);
          } catch (const SearchAborted&) {
            any_aborted.store(true);
          }
          for (int v = depth; v-- > 0;) ctx->unassign(v);
          if (any_aborted.load()) break;
        }
        worker_nodes[w] = ctx->nodes;
      });
    }
    for (auto& t : workers) t.join();
    for (auto x : worker_nodes) total_nodes += x;
    if (any_aborted.load()) complete = false;
  }

  SearchResult res;
  res.classes = finalize_reports(dedupe.reps);
  res.complete = complete;
  res.nodes = total_nodes;
  return res;
}

// ---------------------------------------------------------------------------
// Multifold 1-perfect codes of length 7.
// ---------------------------------------------------------------------------

namespace {

// Orbit machinery over membership indicators: T(y) = ind(tau(y) ^ e), no
// value relabelling.  Minimize and Find only.
class CodeEngine {
 public:
  CodeEngine(int n, const std::vector<std::uint8_t>& ind)
      : n_(n), size_(std::size_t{1} << n), f_(ind.data()), ximg_(size_) {}

  std::vector<std::uint8_t> minimize() {
    minimize_ = true;
    best_.assign(f_, f_ + size_);
    for (Vertex e = 0; e < size_; ++e) run_base(e);
    return best_;
  }

  bool matches(const std::vector<std::uint8_t>& target) {
    minimize_ = false;
    target_ = target.data();
    for (Vertex e = 0; e < size_ && !found_; ++e) run_base(e);
    return found_;
  }

 private:
  void run_base(Vertex e) {
    ximg_[0] = e;
    const std::uint8_t s = f_[e];
    bool less = false;
    if (minimize_) {
      if (s > best_[0]) return;
      less = s < best_[0];
    } else if (s != target_[0]) {
      return;
    }
    used_pos_ = 0;
    dfs(0, less);
  }

  void dfs(int j, bool less) {
    if (found_) return;
    if (j == n_) {
      if (minimize_) {
        if (less) update_best();
      } else {
        found_ = true;
      }
      return;
    }
    const std::size_t lo = std::size_t{1} << j;
    for (int p = 0; p < n_; ++p) {
      if (used_pos_ & (1u << p)) continue;
      const Vertex bit = Vertex{1} << p;
      bool ok = true;
      bool l2 = less;
      for (std::size_t y = lo; y < 2 * lo; ++y) {
        const Vertex x = ximg_[y - lo] ^ bit;
        ximg_[y] = x;
        const std::uint8_t s = f_[x];
        if (minimize_) {
          if (!l2) {
            if (s > best_[y]) {
              ok = false;
              break;
            }
            if (s < best_[y]) l2 = true;
          }
        } else if (s != target_[y]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used_pos_ |= 1u << p;
        dfs(j + 1, l2);
        used_pos_ &= ~(1u << p);
        if (found_) return;
      }
    }
  }

  void update_best() {
    for (std::size_t y = 0; y < size_; ++y) best_[y] = f_[ximg_[y]];
  }

  const int n_;
  const std::size_t size_;
  const std::uint8_t* f_;
  const std::uint8_t* target_ = nullptr;
  bool minimize_ = false;
  std::vector<Vertex> ximg_;
  std::vector<std::uint8_t> best_;
  unsigned used_pos_ = 0;
  bool found_ = false;
};

std::string code_invariant(const std::vector<std::uint8_t>& ind, int n) {
  std::vector<Vertex> words;
  for (Vertex v = 0; v < ind.size(); ++v) {
    if (ind[v]) words.push_back(v);
  }
  std::vector<std::uint64_t> dd(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      ++dd[weight(words[i] ^ words[j])];
    }
  }
  std::ostringstream os;
  for (auto x : dd) os << x << ' ';
  return os.str();
}

struct MfContext {
  static constexpr int kM = 7;
  static constexpr int kSize = 128;
  int t;
  std::array<std::int8_t, kSize> memb;
  std::array<std::uint8_t, kSize> cnt;
  std::array<std::uint8_t, kSize> rem;
  std::function<void(const std::array<std::int8_t, kSize>&)> on_leaf;

  explicit MfContext(int t_) : t(t_) {
    memb.fill(-1);
    cnt.fill(0);
    rem.fill(kM + 1);
  }

  bool lex_rejected(int j) {
    const int plen = 1 << j;
    std::array<int, 8> pp{};
    const bool with_perms = j <= 4;
    for (int i = 0; i < j; ++i) pp[i] = i;
    do {
      bool id_perm = true;
      for (int i = 0; i < j; ++i) {
        if (pp[i] != i) {
          id_perm = false;
          break;
        }
      }
      for (int e = 0; e < plen; ++e) {
        if (id_perm && e == 0) continue;
        for (int y = 0; y < plen; ++y) {
          int x;
          if (id_perm) {
            x = y ^ e;
          } else {
            x = 0;
            for (int b = 0; b < j; ++b) {
              if ((y >> b) & 1) x |= 1 << pp[b];
            }
            x ^= e;
          }
          if (memb[x] != memb[y]) {
            if (memb[x] < memb[y]) return true;
            break;
          }
        }
      }
      if (!with_perms) break;
    } while (std::next_permutation(pp.begin(), pp.begin() + j));
    return false;
  }

  bool update(Vertex x, int val) {
    for (int b = -1; b < kM; ++b) {
      const Vertex v = b < 0 ? x : x ^ (Vertex{1} << b);
      --rem[v];
      if (val) ++cnt[v];
      if (cnt[v] > t || cnt[v] + rem[v] < t) {
        // roll back the centers updated so far, including this one
        for (int bb = b; bb >= -1; --bb) {
          const Vertex u = bb < 0 ? x : x ^ (Vertex{1} << bb);
          ++rem[u];
          if (val) --cnt[u];
        }
        return false;
      }
    }
    return true;
  }

  void downdate(Vertex x, int val) {
    for (int b = -1; b < kM; ++b) {
      const Vertex v = b < 0 ? x : x ^ (Vertex{1} << b);
      ++rem[v];
      if (val) --cnt[v];
    }
  }

  void dfs(Vertex x) {
    if (static_cast<int>(x) == kSize) {
      on_leaf(memb);
      return;
    }
    if (x >= 8 && (x & (x - 1)) == 0) {
      if (lex_rejected(__builtin_ctz(x))) return;
    }
    for (int val = 0; val < 2; ++val) {
      if (!update(x, val)) continue;
      memb[x] = static_cast<std::int8_t>(val);
      dfs(x + 1);
      memb[x] = -1;
      downdate(x, val);
    }
  }
};

}  // namespace

std::vector<MultifoldCode> search_multifold(int m, int t) {
  if (m != 7 || t < 1 || t > 4) {
    throw Error("search_multifold supports m = 7 and t in 1..4");
  }
  std::map<std::string, std::vector<std::vector<std::uint8_t>>> buckets;
  MfContext ctx(t);
  ctx.on_leaf = [&](const std::array<std::int8_t, MfContext::kSize>& memb) {
    std::vector<std::uint8_t> ind(MfContext::kSize);
    for (int v = 0; v < MfContext::kSize; ++v) ind[v] = memb[v] == 1;
    const std::string key = code_invariant(ind, MfContext::kM);
    auto& reps = buckets[key];
    for (const auto& rep : reps) {
      CodeEngine eng(MfContext::kM, ind);
      if (eng.matches(rep)) return;
    }
    reps.push_back(ind);
  };
  ctx.dfs(0);

  std::vector<std::vector<std::uint8_t>> canon;
  for (auto& [key, reps] : buckets) {
    for (auto& rep : reps) {
      CodeEngine eng(MfContext::kM, rep);
      canon.push_back(eng.minimize());
    }
  }
  std::sort(canon.begin(), canon.end());
  std::vector<MultifoldCode> out;
  for (const auto& ind : canon) {
    VertexSet words(MfContext::kM);
    for (Vertex v = 0; v < ind.size(); ++v) {
      if (ind[v]) words.insert(v);
    }
    out.emplace_back(MfContext::kM, t, std::move(words));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The semilinear route to the n = 9 classes.
// ---------------------------------------------------------------------------

SearchResult semilinear_classes(int n) {
  if (n != 9) throw Error("semilinear_classes supports n = 9 only");
  Deduper dedupe;
  const std::vector<MultifoldCode> codes = search_multifold(7, 4);
  for (const MultifoldCode& code : codes) {
    const VertexSet ext = extend_parity(code);
    const CubePartition dp = eperf_partition(ext);
    for (int sign = 0; sign < 2; ++sign) {
      const CubePartition p2 = semi_to_s2(dp, sign);
      const VertexSet c0 = p2.cell(0);
      const int n2 = p2.dim();
      for (Vertex w = 1; w < (Vertex{1} << n2); ++w) {
        if (weight(w) != 3) continue;
        if (!(c0.translated(w) == c0)) continue;
        // Move the support of w onto the three lowest positions, keeping the
        // relative order of the remaining coordinates.
        CoordPerm perm;
        perm.map.resize(n2);
        int next_low = 0, next_high = 3;
        for (int b = 0; b < n2; ++b) {
          if ((w >> b) & 1) {
            perm.map[b] = static_cast<std::uint8_t>(next_low++);
          } else {
            perm.map[b] = static_cast<std::uint8_t>(next_high++);
          }
        }
        const CubePartition p4 = contract_s2_to_s4(p2.permuted(perm));
        const VbFunction f = function_of(p4, 2);
        dedupe.insert(f, invariant_key(f));
      }
    }
  }
  SearchResult res;
  res.classes = finalize_reports(dedupe.reps);
  return res;
}

}  // namespace rescube
