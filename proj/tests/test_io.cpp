#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "qcb/io.hpp"

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

}  // namespace

TEST_CASE("parse_rat") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-4/6") == Rat(-2, 3));
  CHECK(parse_rat("2/4") == Rat(1, 2));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
  CHECK_THROWS(parse_rat("1.5"));
}

TEST_CASE("parsing a well-formed quiver file") {
  std::string text = R"({
    "vertices": 3,
    "edges": [[0, 1], [2, 1]],
    "v": [3, 1, 2],
    "w": [4, 0, 1],
    "kappa": [0, 0, 1, 2, 3, 4, 5]
  })";
  QuiverInput input = parse_quiver_text(text, "a3.quiver");
  CHECK(input.datum == make(3, {{0, 1}, {2, 1}}, {3, 1, 2}, {4, 0, 1}));
  REQUIRE(input.kappa.has_value());
  CHECK(input.kappa->size() == 7);
}

TEST_CASE("malformed quiver files raise positioned diagnostics") {
  auto message_of = [](const std::string& text) {
    try {
      parse_quiver_text(text, "bad.quiver");
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
    return std::string();
  };

  // length mismatch names the field
  std::string m1 = message_of(R"({"vertices": 3, "edges": [], "v": [1, 1], "w": [0, 0, 0]})");
  CHECK(m1.find("\"v\"") != std::string::npos);
  CHECK(m1.find("3") != std::string::npos);

  // negative framing entry
  std::string m2 = message_of(R"({"vertices": 1, "edges": [], "v": [1], "w": [-2]})");
  CHECK(m2.find("\"w\"") != std::string::npos);
  CHECK(m2.find("negative") != std::string::npos);

  // out-of-range edge endpoint
  std::string m3 = message_of(R"({"vertices": 2, "edges": [[0, 5]], "v": [1, 1], "w": [0, 0]})");
  CHECK(m3.find("edges") != std::string::npos);
  CHECK(m3.find("range") != std::string::npos);

  // missing field
  std::string m4 = message_of(R"({"vertices": 1, "v": [1]})");
  CHECK(m4.find("\"w\"") != std::string::npos);

  // unknown field
  std::string m5 = message_of(R"({"vertices": 1, "v": [1], "w": [0], "framing": [1]})");
  CHECK(m5.find("framing") != std::string::npos);

  // syntax errors carry the byte offset
  std::string m6 = message_of("{\"vertices\": 1,");
  CHECK(m6.find("byte") != std::string::npos);

  // embedded kappa must match the flavour rank
  std::string m7 =
      message_of(R"({"vertices": 1, "edges": [], "v": [1], "w": [2], "kappa": [1]})");
  CHECK(m7.find("kappa") != std::string::npos);
  CHECK(m7.find("2") != std::string::npos);
}

TEST_CASE("file round trip through the filesystem") {
  std::string path = "qcb_io_test.quiver";
  {
    std::ofstream out(path);
    out << R"({"vertices": 2, "edges": [[0, 1]], "v": [1, 1], "w": [1, 0]})";
  }
  QuiverInput input = parse_quiver_file(path);
  CHECK(input.datum == make(2, {{0, 1}}, {1, 1}, {1, 0}));
  CHECK_FALSE(input.kappa.has_value());
  std::remove(path.c_str());
  CHECK_THROWS(parse_quiver_file(path));
}

TEST_CASE("decomposition JSON round trip") {
  std::mt19937 rng(701);
  for (int i = 0; i < 100; ++i) {
    QuiverDatum d = oracles::random_datum(rng, 4, 6, 2, true);
    Decomposition dec = decompose_at(d, oracles::random_point(rng, d));
    Json j = decomposition_to_json(dec);
    Decomposition back = decomposition_from_json(j);
    CHECK(dec == back);
    CHECK(decomposition_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("certificate JSON round trip") {
  std::mt19937 rng(702);
  std::vector<QuiverDatum> data = {
      make(3, {{0, 1}, {2, 1}}, {3, 1, 2}, {4, 0, 1}),
      make(1, {{0, 0}}, {2}, {1}),
      make(2, {{0, 1}}, {0, 0}, {3, 0}),
  };
  for (int i = 0; i < 10; ++i) data.push_back(oracles::random_datum(rng, 3, 5, 2, true));
  for (const auto& d : data) {
    for (Mode mode : {Mode::SymplecticSingularities, Mode::NormalSymplectic}) {
      Certificate cert = certify(d, mode);
      Json j = certificate_to_json(cert);
      Certificate back = certificate_from_json(j);
      CHECK(cert == back);
      CHECK(certificate_to_json(back).dump() == j.dump());
    }
  }
}

TEST_CASE("certificates serialize byte-identically across runs") {
  QuiverDatum d = make(3, {{0, 1}, {2, 1}}, {3, 1, 2}, {4, 0, 1});
  std::string a = certificate_to_json(certify(d, Mode::SymplecticSingularities)).dump(2);
  std::string b = certificate_to_json(certify(d, Mode::SymplecticSingularities)).dump(2);
  CHECK(a == b);
}
