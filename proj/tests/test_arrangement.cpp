#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qcb/arrangement.hpp"

using namespace qcb;

namespace {

QuiverDatum make(int n, std::vector<std::pair<int, int>> edges, std::vector<int> v,
                 std::vector<int> w) {
  QuiverDatum d;
  d.quiver.vertex_count = n;
  d.quiver.edges = std::move(edges);
  d.v = std::move(v);
  d.w = std::move(w);
  d.validate();
  return d;
}

ExactPoint zeros(const QuiverDatum& d) { return ExactPoint(d.slot_count(), Rat(0)); }

}  // namespace

TEST_CASE("generalized_roots on knowns") {
  // one edge, one framing line: a difference root and a framing root
  auto r1 = generalized_roots(make(2, {{0, 1}}, {1, 1}, {1, 0}));
  CHECK(r1.size() == 2);

  // one vertex of dimension two: both gauge roots
  auto r2 = generalized_roots(make(1, {}, {2}, {0}));
  CHECK(r2.size() == 2);
  for (const auto& r : r2) CHECK(r.kind == RootKind::GaugeRoot);

  // empty gauge group
  CHECK(generalized_roots(make(2, {{0, 1}}, {0, 0}, {2, 2})).empty());

  // loop weights coincide with gauge roots and are deduplicated
  auto jordan = generalized_roots(make(1, {{0, 0}}, {2}, {1}));
  CHECK(jordan.size() == 4);  // two gauge roots + two framing weights
}

TEST_CASE("codim_at on knowns") {
  // framed single slot at the origin
  CHECK(codim_at(make(1, {}, {1}, {3}), zeros(make(1, {}, {1}, {3}))) == 1);
  // unframed GL(2) at the origin
  CHECK(codim_at(make(1, {}, {2}, {0}), {Rat(0), Rat(0)}) == 1);
  // fully generic point
  CHECK(codim_at(make(2, {{0, 1}}, {2, 1}, {1, 1}), {Rat(1), Rat(2), Rat(3)}) == 0);
  CHECK_THROWS(codim_at(make(1, {}, {2}, {0}), ExactPoint{Rat(1)}));
}

TEST_CASE("union-find codim equals matrix rank on random points") {
  std::mt19937 rng(201);
  for (int i = 0; i < 200; ++i) {
    QuiverDatum d = oracles::random_datum(rng, 4, 8, 2, true);
    for (int p = 0; p < 3; ++p) {
      ExactPoint point = oracles::random_point(rng, d);
      CHECK(codim_at(d, point) == oracles::rank_of_vanishing_roots(d, point));
    }
  }
}

TEST_CASE("codim at the origin follows the connected classification formula") {
  for (const auto& d : oracles::connected_simple_data(6, 1)) {
    bool framed = false;
    for (int x : d.w) framed = framed || x > 0;
    CHECK(codim_at(d, zeros(d)) == d.total_v() - (framed ? 0 : 1));
  }
}

TEST_CASE("stratum codim matches the point codim through realization") {
  std::mt19937 rng(202);
  for (int i = 0; i < 150; ++i) {
    QuiverDatum d = oracles::random_datum(rng, 4, 7, 2, true);
    ExactPoint point = oracles::random_point(rng, d);
    StratumType st = stratum_of(d, point);
    CHECK(codim_at(d, st) == codim_at(d, point));
    CHECK(codim_at(d, st) == codim_at(d, oracles::realizing_point(d, st)));
  }
}

TEST_CASE("coarsening never decreases codimension") {
  std::mt19937 rng(203);
  for (int i = 0; i < 150; ++i) {
    QuiverDatum d = oracles::random_datum(rng, 4, 7, 2, true);
    StratumType st = stratum_of(d, oracles::random_point(rng, d));
    int base = codim_at(d, st);
    int nb = (int)st.blocks.size();
    for (int a = 0; a < nb; ++a) {
      if (!st.has_zero) {
        StratumType designated = canonical_stratum(d, st.blocks, a);
        CHECK(codim_at(d, designated) >= base);
      }
      for (int b = a + 1; b < nb; ++b) {
        auto blocks = st.blocks;
        for (int t = 0; t < d.vertex_count(); ++t) blocks[a][t] += blocks[b][t];
        blocks.erase(blocks.begin() + b);
        StratumType merged = canonical_stratum(d, blocks, st.has_zero ? 0 : -1);
        CHECK(codim_at(d, merged) >= base);
      }
    }
  }
}

TEST_CASE("enumerate_strata on knowns") {
  // one edge, no framing, bound 1: the generic type and the diagonal type;
  // zero designations carry no framing root and canonicalize away
  QuiverDatum d = make(2, {{0, 1}}, {1, 1}, {0, 0});
  auto strata = enumerate_strata(d, 1);
  CHECK(strata.size() == 2);
  for (const auto& st : strata) CHECK_FALSE(st.has_zero);

  // framed single slot at bound 0: only the nonzero singleton
  QuiverDatum f = make(1, {}, {1}, {1});
  auto fs = enumerate_strata(f, 0);
  CHECK(fs.size() == 1);
  CHECK_FALSE(fs[0].has_zero);

  // trivial datum: the empty pattern
  QuiverDatum z = make(1, {}, {0}, {0});
  auto zs = enumerate_strata(z, 0);
  CHECK(zs.size() == 1);
  CHECK(zs[0].blocks.empty());
}

TEST_CASE("enumerate_strata matches brute-force partition enumeration") {
  std::mt19937 rng(204);
  std::vector<QuiverDatum> data;
  for (int i = 0; i < 25; ++i) data.push_back(oracles::random_datum(rng, 3, 5, 2, true));
  data.push_back(make(3, {{0, 1}, {1, 2}}, {1, 1, 1}, {0, 0, 0}));
  data.push_back(make(3, {{0, 1}, {1, 2}}, {1, 1, 1}, {1, 0, 0}));
  data.push_back(make(1, {}, {5}, {1}));
  data.push_back(make(1, {{0, 0}}, {2}, {1}));                   // loop
  data.push_back(make(2, {{0, 1}, {1, 0}}, {2, 1}, {0, 2}));     // parallel pair
  data.push_back(make(4, {{0, 1}, {0, 2}, {0, 3}}, {2, 1, 1, 1}, {0, 1, 0, 0}));
  data.push_back(make(3, {}, {1, 2, 1}, {1, 0, 1}));             // no edges at all
  for (const auto& d : data) {
    int full = d.slot_count();
    for (int bound = 0; bound <= full; ++bound) {
      auto got = enumerate_strata(d, bound);
      std::set<std::string> got_keys;
      for (const auto& st : got) {
        CHECK(codim_at(d, st) <= bound);
        CHECK(got_keys.insert(st.encode()).second);  // duplicate-free
      }
      CHECK(got_keys == oracles::enumerate_strata_bruteforce(d, bound));
    }
  }
}

TEST_CASE("every point pattern below the bound appears in the enumeration") {
  std::mt19937 rng(205);
  for (int i = 0; i < 100; ++i) {
    QuiverDatum d = oracles::random_datum(rng, 4, 6, 2, true);
    auto strata = enumerate_strata(d, 2);
    std::set<std::string> keys;
    for (const auto& st : strata) keys.insert(st.encode());
    for (int p = 0; p < 5; ++p) {
      ExactPoint point = oracles::random_point(rng, d);
      if (codim_at(d, point) <= 2) CHECK(keys.count(stratum_of(d, point).encode()) == 1);
    }
  }
}

TEST_CASE("deep strata exist up to the deepest codimension on the classified families") {
  // instances of the classified families: every f^(k) with k <= codim at the
  // origin is cut out by some stratum of that exact codimension
  std::vector<QuiverDatum> data = {
      make(1, {}, {1}, {1}),
      make(1, {}, {3}, {1}),
      make(1, {}, {4}, {0}),
      make(2, {{0, 1}}, {2, 2}, {0, 0}),
      make(2, {{0, 1}}, {2, 1}, {1, 1}),
      make(3, {{0, 1}, {1, 2}, {2, 0}}, {2, 1, 1}, {0, 0, 0}),
      make(3, {{0, 1}, {1, 2}, {2, 0}}, {1, 1, 1}, {1, 1, 1}),
      make(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1}, {0, 0, 0, 0}),
  };
  for (const auto& d : data) {
    int deepest = codim_at(d, zeros(d));
    for (int k = 0; k <= deepest && k <= 3; ++k) {
      auto level = enumerate_strata(d, k);
      bool has_exact = false;
      for (const auto& st : level) has_exact = has_exact || codim_at(d, st) == k;
      CHECK(has_exact);
    }
  }
}

TEST_CASE("stratum realization round-trips through stratum_of") {
  std::mt19937 rng(206);
  for (int i = 0; i < 100; ++i) {
    QuiverDatum d = oracles::random_datum(rng, 4, 6, 2, true);
    StratumType st = stratum_of(d, oracles::random_point(rng, d));
    CHECK(stratum_of(d, oracles::realizing_point(d, st)) == st);
  }
}

TEST_CASE("canonicalization is invariant under slot permutations within a vertex") {
  std::mt19937 rng(207);
  for (int i = 0; i < 100; ++i) {
    QuiverDatum d = oracles::random_datum(rng, 3, 6, 2, true);
    ExactPoint point = oracles::random_point(rng, d);
    ExactPoint shuffled = point;
    for (int vtx = 0; vtx < d.vertex_count(); ++vtx) {
      int off = d.slot_offset(vtx);
      std::shuffle(shuffled.begin() + off, shuffled.begin() + off + d.v[vtx], rng);
    }
    CHECK(stratum_of(d, point) == stratum_of(d, shuffled));
  }
}
