#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qcb/certify.hpp"

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

QuiverDatum a3_datum() { return make(3, {{0, 1}, {2, 1}}, {3, 1, 2}, {4, 0, 1}); }

}  // namespace

TEST_CASE("certify the three-vertex example") {
  Certificate cert = certify(a3_datum(), Mode::SymplecticSingularities);
  CHECK(cert.conclusion == Conclusion::Certified);
  CHECK(cert.has_witness);
  CHECK(validate_witness(cert));
  CHECK(cert.obstructions.empty());
  for (const auto& fv : cert.verdicts) CHECK(fv.verdict.certified);
  // census covers exactly codim <= 3
  for (const auto& entry : cert.census) CHECK(entry.codim <= 3);
}

TEST_CASE("certify the one-loop quiver reports the looped-2 case in both modes") {
  QuiverDatum jordan = make(1, {{0, 0}}, {2}, {1});
  for (Mode mode : {Mode::SymplecticSingularities, Mode::NormalSymplectic}) {
    Certificate cert = certify(jordan, mode);
    CHECK(cert.conclusion == Conclusion::Inconclusive);
    REQUIRE(cert.obstructions.size() >= 1);
    CHECK(std::count(cert.obstructions.begin(), cert.obstructions.end(),
                     "looped-2-framed") == 1);
  }
}

TEST_CASE("certify an empty gauge datum vacuously") {
  QuiverDatum empty = make(2, {{0, 1}}, {0, 0}, {3, 0});
  Certificate cert = certify(empty, Mode::SymplecticSingularities);
  CHECK(cert.conclusion == Conclusion::Certified);
  CHECK(cert.input_trimmed);  // the framing was dropped with a note
  CHECK(cert.lattice.rank() == 0);
  CHECK(cert.hyperplanes.empty());
  CHECK(cert.verdicts.empty());
  CHECK(validate_witness(cert));
}

TEST_CASE("normal-symplectic censuses stay on the short list") {
  // positive-codimension factors must be framed n -> 1, a bare 2, or 1 -- 1
  for (const auto& d : oracles::connected_simple_data(5, 2)) {
    Certificate cert = certify(d, Mode::NormalSymplectic);
    CHECK(cert.conclusion == Conclusion::Certified);
    for (const auto& entry : cert.census) {
      CHECK(entry.codim <= 1);
      for (const auto& f : entry.decomposition.factors) {
        if (codim_zero(f.datum) == 0) continue;
        std::vector<int> support = f.datum.support();
        bool framed = false;
        for (int x : f.datum.w) framed = framed || x > 0;
        bool n_to_1 = support.size() == 1 && f.datum.total_v() == 1 && framed;
        bool bare_2 = support.size() == 1 && f.datum.total_v() == 2 && !framed;
        bool one_one = support.size() == 2 && f.datum.total_v() == 2 && !framed;
        CHECK((n_to_1 || bare_2 || one_one));
      }
    }
  }
}

TEST_CASE("certification is deterministic") {
  Certificate a = certify(a3_datum(), Mode::SymplecticSingularities);
  Certificate b = certify(a3_datum(), Mode::SymplecticSingularities);
  CHECK(a == b);
  // parallel runs merge back into the same certificate
  Certificate c = certify(a3_datum(), Mode::SymplecticSingularities, 4);
  CHECK(a == c);
}

TEST_CASE("exhaustive small certification in the main mode") {
  for (const auto& d : oracles::connected_simple_data(4, 2)) {
    Certificate cert = certify(d, Mode::SymplecticSingularities);
    CHECK(cert.conclusion == Conclusion::Certified);
    CHECK(validate_witness(cert));
    // driver-level accounting: factor codims add to the stratum codim
    for (const auto& entry : cert.census) {
      int total = 0;
      for (const auto& f : entry.decomposition.factors) total += codim_zero(f.datum);
      CHECK(total == entry.codim);
    }
  }
}

TEST_CASE("census completeness against sampled points") {
  std::mt19937 rng(601);
  for (int i = 0; i < 100; ++i) {
    QuiverDatum d = oracles::random_datum(rng, 3, 5, 2, false);
    Certificate cert = certify(d, Mode::SymplecticSingularities);
    std::set<std::string> census_keys;
    for (const auto& entry : cert.census) census_keys.insert(entry.stratum.encode());
    QuiverDatum trimmed = trim(d);
    for (int p = 0; p < 5; ++p) {
      ExactPoint point = oracles::random_point(rng, trimmed);
      if (codim_at(trimmed, point) <= 3)
        CHECK(census_keys.count(stratum_of(trimmed, point).encode()) == 1);
    }
  }
}

TEST_CASE("make_witness examples") {
  // two difference functionals on a rank-3 lattice
  std::vector<std::vector<long long>> hs = {{1, -1, 0}, {0, 1, -1}};
  auto witness = make_witness(3, hs);
  REQUIRE(witness.size() == 3);
  for (const auto& h : hs) {
    BigInt value = 0;
    for (int j = 0; j < 3; ++j) value += h[j] * witness[j];
    CHECK(value != 0);
  }

  // the empty arrangement admits the zero coweight
  auto zero = make_witness(2, {});
  CHECK(zero == std::vector<BigInt>{0, 0});

  // a single scaled functional
  auto one = make_witness(1, {{2}});
  REQUIRE(one.size() == 1);
  CHECK(one[0] != 0);

  CHECK_THROWS(make_witness(2, {{0, 0}}));  // zero functional
}

TEST_CASE("validate_witness is an independent exact check") {
  QuiverDatum d = make(1, {}, {1}, {3});  // rank-3 flavour lattice
  Certificate cert;
  cert.datum = d;
  cert.lattice = build_flavour(d);
  cert.hyperplanes = {{1, -1, 0}, {0, 1, -1}};
  cert.has_witness = true;

  cert.witness = {BigInt(1), BigInt(2), BigInt(4)};
  CHECK(validate_witness(cert));

  cert.witness = {BigInt(0), BigInt(0), BigInt(0)};
  CHECK_FALSE(validate_witness(cert));  // the origin lies on every hyperplane

  cert.witness = {BigInt(1), BigInt(1), BigInt(4)};
  CHECK_FALSE(validate_witness(cert));
}

TEST_CASE("extension families at small size are reported by name") {
  struct Case {
    QuiverDatum datum;
    std::string id;
  };
  std::vector<Case> cases = {
      {make(1, {{0, 0}}, {2}, {2}), "looped-2-framed"},
      {make(1, {{0, 0}, {0, 0}}, {3}, {1}), "looped-3-framed"},
      {make(1, {{0, 0}}, {4}, {0}), "looped-4"},
      {make(2, {{0, 1}, {0, 1}, {0, 0}}, {2, 1}, {1, 1}), "looped-2-multi-edge-1-framed"},
      {make(2, {{0, 1}, {0, 1}, {0, 0}, {1, 1}}, {2, 2}, {0, 0}),
       "looped-2-multi-edge-looped-2"},
  };
  for (const auto& c : cases) {
    Certificate cert = certify(c.datum, Mode::SymplecticSingularities);
    CHECK(cert.conclusion == Conclusion::Inconclusive);
    CHECK(std::count(cert.obstructions.begin(), cert.obstructions.end(), c.id) == 1);
  }
}
