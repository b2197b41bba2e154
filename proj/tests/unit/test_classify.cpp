#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "rescube/classify.hpp"
#include "rescube/resilient.hpp"

using namespace rescube;

namespace {

const VbFunction kAntipodalFn(3, 2, {0, 1, 2, 3, 3, 2, 1, 0});

Equivalence random_equivalence(int n, std::mt19937& rng) {
  Equivalence e = Equivalence::identity(n);
  for (int i = n - 1; i > 0; --i) {
    std::swap(e.perm.map[i], e.perm.map[rng() % (i + 1)]);
  }
  e.shift = static_cast<Vertex>(rng() & ((Vertex{1} << n) - 1));
  for (int i = 3; i > 0; --i) {
    std::swap(e.beta[i], e.beta[rng() % (i + 1)]);
  }
  return e;
}

}  // namespace

TEST_CASE("equivalence group action axioms") {
  std::mt19937 rng(31337);
  const VbFunction f = linear_function(6);
  const Equivalence id = Equivalence::identity(6);
  CHECK(apply(id, f) == f);
  for (int trial = 0; trial < 40; ++trial) {
    const Equivalence e1 = random_equivalence(6, rng);
    const Equivalence e2 = random_equivalence(6, rng);
    CHECK(apply(e1.then(e2), f) == apply(e2, apply(e1, f)));
    CHECK(apply(e1.inverse(), apply(e1, f)) == f);
    const Equivalence round = e1.then(e1.inverse());
    CHECK(apply(round, f) == f);
  }
}

TEST_CASE("canonical_form is a class invariant and idempotent") {
  std::mt19937 rng(777);
  CHECK(canonical_form(kAntipodalFn) == kAntipodalFn);
  const VbFunction c6 = canonical_form(linear_function(6));
  CHECK(canonical_form(c6) == c6);
  for (int trial = 0; trial < 15; ++trial) {
    const Equivalence e = random_equivalence(6, rng);
    CHECK(canonical_form(apply(e, linear_function(6))) == c6);
  }
}

TEST_CASE("automorphisms of the antipodal function") {
  CHECK(equivalence_group_order(3) == 1152);
  CHECK(equivalence_group_order(9) == 4459069440ull);
  // Every cube isometry permutes antipodal pairs, and each admits exactly
  // one output relabeling: |Aut| = 2^3 * 3! = 48.
  CHECK(automorphism_count(kAntipodalFn) == 48);
}

TEST_CASE("find_equivalence returns explicit transporters") {
  std::mt19937 rng(4242);
  const VbFunction f = linear_function(6);
  for (int trial = 0; trial < 10; ++trial) {
    const VbFunction g = apply(random_equivalence(6, rng), f);
    const auto e = find_equivalence(f, g);
    REQUIRE(e.has_value());
    CHECK(apply(*e, f) == g);
    CHECK(are_equivalent(f, g));
    CHECK(invariant_key(f) == invariant_key(g));
  }
}

TEST_CASE("search_s4 n=3: the single class") {
  const SearchResult res = search_s4(3);
  CHECK(res.complete);
  REQUIRE(res.classes.size() == 1);
  const ClassReport& c = res.classes[0];
  CHECK(c.representative == kAntipodalFn);
  CHECK(c.aut_order == 48);
  CHECK(c.orbit_size == 24);
  CHECK(c.rank.cls == RankClass::Linear);
  CHECK(c.rank.rank == 3);
  CHECK(c.semilinear);
  CHECK(!c.reducible);
}

TEST_CASE("search_s4 n=6: two classes, deterministic across jobs") {
  const SearchResult res = search_s4(6);
  CHECK(res.complete);
  REQUIRE(res.classes.size() == 2);
  CHECK(res.classes[0].rank.cls == RankClass::Linear);
  CHECK(res.classes[1].rank.cls == RankClass::StrictlySemilinear);
  CHECK(res.classes[0].aut_order == 3072);
  CHECK(res.classes[0].orbit_size == 360);
  CHECK(res.classes[1].aut_order == 512);
  CHECK(res.classes[1].orbit_size == 2160);
  for (const ClassReport& c : res.classes) {
    CHECK(c.aut_order * c.orbit_size == equivalence_group_order(6));
    CHECK(c.reducible);
    CHECK(canonical_form(c.representative) == c.representative);
    CHECK(is_resilient(c.representative, 3));
  }
  CHECK(!are_equivalent(res.classes[0].representative,
                        res.classes[1].representative));

  SearchOptions two;
  two.jobs = 2;
  const SearchResult res2 = search_s4(6, two);
  REQUIRE(res2.classes.size() == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(res2.classes[i].representative == res.classes[i].representative);
    CHECK(res2.classes[i].aut_order == res.classes[i].aut_order);
  }
}

TEST_CASE("search_multifold: classes of t-fold codes of length 7") {
  const auto t1 = search_multifold(7, 1);
  REQUIRE(t1.size() == 1);  // the Hamming code is unique up to equivalence
  CHECK(t1[0].fold == 1);
  CHECK(is_multifold_perfect(t1[0].words, 1));

  // Class counts pinned by this enumeration (regression values).
  const auto t2 = search_multifold(7, 2);
  const auto t3 = search_multifold(7, 3);
  const auto t4 = search_multifold(7, 4);
  CHECK(t2.size() == 3);
  CHECK(t3.size() == 9);
  CHECK(t4.size() == 21);
  for (const auto& c : t4) CHECK(is_multifold_perfect(c.words, 4));
  CHECK_THROWS_AS(search_multifold(7, 5), Error);
  CHECK_THROWS_AS(search_multifold(15, 1), Error);
}

TEST_CASE("semilinear_classes(9) reproduces the nine semilinear classes") {
  const SearchResult res = semilinear_classes(9);
  CHECK(res.complete);
  REQUIRE(res.classes.size() == 9);
  int linear = 0, semi = 0;
  std::set<std::vector<std::uint8_t>> tables;
  for (const ClassReport& c : res.classes) {
    if (c.rank.cls == RankClass::Linear) ++linear;
    if (c.rank.cls == RankClass::StrictlySemilinear) ++semi;
    CHECK(c.semilinear);
    CHECK(is_resilient(c.representative, 5));
    tables.insert(c.representative.table);
  }
  CHECK(linear == 1);
  CHECK(semi == 8);
  CHECK(tables.size() == 9);  // canonical forms are pairwise distinct
}

TEST_CASE("search budget yields a partial lower bound") {
  SearchOptions opts;
  opts.budget_seconds = 0.05;
  const SearchResult res = search_s4(9, opts);
  CHECK(!res.complete);
  CHECK(res.classes.size() <= 10);
}
