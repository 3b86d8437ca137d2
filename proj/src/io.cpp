#include "qcb/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qcb {

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw std::runtime_error(origin + ": " + what);
}

long long require_int(const Json& j, const std::string& origin, const std::string& where) {
  if (!j.is_number_integer()) fail(origin, where + ": expected an integer");
  return j.get<long long>();
}

std::vector<int> require_int_list(const Json& j, const std::string& origin,
                                  const std::string& field, int expected) {
  if (!j.is_array()) fail(origin, "field \"" + field + "\": expected a list");
  if ((int)j.size() != expected)
    fail(origin, "field \"" + field + "\": expected " + std::to_string(expected) +
                     " entries (vertices), got " + std::to_string(j.size()));
  std::vector<int> out;
  for (size_t k = 0; k < j.size(); ++k) {
    long long x = require_int(j[k], origin, "field \"" + field + "\", entry " + std::to_string(k));
    if (x < 0)
      fail(origin, "field \"" + field + "\", entry " + std::to_string(k) + ": negative");
    out.push_back((int)x);
  }
  return out;
}

}  // namespace

QuiverInput parse_quiver_text(const std::string& text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(origin, std::string("parse error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) fail(origin, "expected a JSON object");
  for (auto& [key, _] : j.items())
    if (key != "vertices" && key != "edges" && key != "v" && key != "w" && key != "kappa")
      fail(origin, "unknown field \"" + key + "\"");
  if (!j.contains("vertices")) fail(origin, "missing field \"vertices\"");
  if (!j.contains("v")) fail(origin, "missing field \"v\"");
  if (!j.contains("w")) fail(origin, "missing field \"w\"");

  QuiverInput input;
  long long n = require_int(j["vertices"], origin, "field \"vertices\"");
  if (n < 0) fail(origin, "field \"vertices\": negative");
  input.datum.quiver.vertex_count = (int)n;

  if (j.contains("edges")) {
    const Json& edges = j["edges"];
    if (!edges.is_array()) fail(origin, "field \"edges\": expected a list");
    for (size_t k = 0; k < edges.size(); ++k) {
      const Json& e = edges[k];
      if (!e.is_array() || e.size() != 2)
        fail(origin, "field \"edges\", entry " + std::to_string(k) +
                         ": expected a [source, target] pair");
      long long s = require_int(e[0], origin, "edge " + std::to_string(k));
      long long t = require_int(e[1], origin, "edge " + std::to_string(k));
      if (s < 0 || s >= n || t < 0 || t >= n)
        fail(origin, "field \"edges\", entry " + std::to_string(k) +
                         ": endpoint out of range (vertices are 0-indexed)");
      input.datum.quiver.edges.push_back({(int)s, (int)t});
    }
  }
  input.datum.v = require_int_list(j["v"], origin, "v", (int)n);
  input.datum.w = require_int_list(j["w"], origin, "w", (int)n);
  input.datum.validate();

  if (j.contains("kappa")) {
    const Json& kj = j["kappa"];
    if (!kj.is_array()) fail(origin, "field \"kappa\": expected a list");
    FlavourLattice lattice = build_flavour(trim(input.datum));
    if ((int)kj.size() != lattice.rank())
      fail(origin, "field \"kappa\": expected " + std::to_string(lattice.rank()) +
                       " entries (flavour rank of the trimmed datum), got " +
                       std::to_string(kj.size()));
    Coweight kappa;
    for (size_t k = 0; k < kj.size(); ++k)
      kappa.push_back(require_int(kj[k], origin, "field \"kappa\", entry " + std::to_string(k)));
    input.kappa = kappa;
  }
  return input;
}

QuiverInput parse_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_quiver_text(buffer.str(), path);
}

Json datum_to_json(const QuiverDatum& datum) {
  Json j;
  j["vertices"] = datum.quiver.vertex_count;
  Json edges = Json::array();
  for (auto [s, t] : datum.quiver.edges) edges.push_back(Json::array({s, t}));
  j["edges"] = edges;
  j["v"] = datum.v;
  j["w"] = datum.w;
  return j;
}

QuiverDatum datum_from_json(const Json& j) {
  QuiverDatum d;
  d.quiver.vertex_count = j.at("vertices").get<int>();
  for (const auto& e : j.at("edges"))
    d.quiver.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  d.v = j.at("v").get<std::vector<int>>();
  d.w = j.at("w").get<std::vector<int>>();
  d.validate();
  return d;
}

Json stratum_to_json(const StratumType& st) {
  Json j;
  j["zero_block"] = st.has_zero;
  j["blocks"] = st.blocks;
  return j;
}

StratumType stratum_from_json(const Json& j) {
  StratumType st;
  st.has_zero = j.at("zero_block").get<bool>();
  st.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  return st;
}

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["parent"] = datum_to_json(d.parent);
  j["stratum"] = stratum_to_json(d.stratum);
  j["codim"] = codim_at(d.parent, d.stratum);
  Json factors = Json::array();
  for (const auto& f : d.factors) {
    Json fj;
    fj["v"] = f.datum.v;
    fj["w"] = f.datum.w;
    fj["eigenvalue"] = f.zero_tag ? "zero" : "nonzero";
    fj["block"] = f.block_index;
    fj["slots"] = f.slot_embedding;
    fj["codim_zero"] = codim_zero(f.datum);
    factors.push_back(fj);
  }
  j["factors"] = factors;
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.parent = datum_from_json(j.at("parent"));
  d.stratum = stratum_from_json(j.at("stratum"));
  for (const auto& fj : j.at("factors")) {
    Factor f;
    f.datum.quiver = d.parent.quiver;
    f.datum.v = fj.at("v").get<std::vector<int>>();
    f.datum.w = fj.at("w").get<std::vector<int>>();
    f.zero_tag = fj.at("eigenvalue").get<std::string>() == "zero";
    f.block_index = fj.at("block").get<int>();
    f.slot_embedding = fj.at("slots").get<std::vector<int>>();
    d.factors.push_back(std::move(f));
  }
  return d;
}

namespace {

Json verdict_to_json(const FactorVerdict& fv) {
  Json j;
  j["v"] = fv.v;
  j["w"] = fv.w;
  j["certified"] = fv.verdict.certified;
  if (fv.verdict.certified) {
    j["generic"] = fv.verdict.generic_flag;
    j["hyperplanes"] = fv.verdict.hyperplanes;
    j["citation"] = fv.verdict.citation;
  } else {
    j["reason"] = fv.verdict.reason;
    j["obstruction"] = fv.verdict.obstruction;
  }
  return j;
}

FactorVerdict verdict_from_json(const Json& j) {
  FactorVerdict fv;
  fv.v = j.at("v").get<std::vector<int>>();
  fv.w = j.at("w").get<std::vector<int>>();
  fv.verdict.certified = j.at("certified").get<bool>();
  if (fv.verdict.certified) {
    fv.verdict.generic_flag = j.at("generic").get<bool>();
    fv.verdict.hyperplanes = j.at("hyperplanes").get<std::vector<std::vector<long long>>>();
    fv.verdict.citation = j.at("citation").get<std::string>();
  } else {
    fv.verdict.reason = j.at("reason").get<std::string>();
    fv.verdict.obstruction = j.at("obstruction").get<std::string>();
  }
  return fv;
}

std::string hex64(std::uint64_t x) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[x & 0xf];
    x >>= 4;
  }
  return out;
}

}  // namespace

Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["format"] = "qcb-certificate";
  j["kb_revision"] = hex64(cert.kb_revision);
  j["mode"] = mode_name(cert.mode);
  j["input"] = datum_to_json(cert.datum);
  j["input_trimmed"] = cert.input_trimmed;
  j["conclusion"] = cert.conclusion == Conclusion::Certified ? "certified" : "inconclusive";

  Json flavour = Json::array();
  for (const auto& label : cert.lattice.labels) flavour.push_back(label.str());
  j["flavour"] = flavour;

  Json census = Json::array();
  for (const auto& entry : cert.census) {
    Json ej;
    ej["stratum"] = stratum_to_json(entry.stratum);
    ej["codim"] = entry.codim;
    ej["decomposition"] = decomposition_to_json(entry.decomposition);
    census.push_back(ej);
  }
  j["census"] = census;

  Json verdicts = Json::array();
  for (const auto& fv : cert.verdicts) verdicts.push_back(verdict_to_json(fv));
  j["verdicts"] = verdicts;

  j["hyperplanes"] = cert.hyperplanes;
  if (cert.has_witness) {
    Json witness = Json::array();
    for (const auto& x : cert.witness) witness.push_back(x.str());
    j["witness"] = witness;
  } else {
    j["witness"] = nullptr;
  }
  j["citations"] = cert.citations;
  j["obstructions"] = cert.obstructions;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  if (j.at("format").get<std::string>() != "qcb-certificate")
    throw std::runtime_error("not a qcb certificate document");
  cert.kb_revision = std::stoull(j.at("kb_revision").get<std::string>(), nullptr, 16);
  cert.mode = j.at("mode").get<std::string>() == "symplectic-singularities"
                  ? Mode::SymplecticSingularities
                  : Mode::NormalSymplectic;
  cert.datum = datum_from_json(j.at("input"));
  cert.input_trimmed = j.at("input_trimmed").get<bool>();
  cert.conclusion = j.at("conclusion").get<std::string>() == "certified"
                        ? Conclusion::Certified
                        : Conclusion::Inconclusive;
  cert.lattice = build_flavour(cert.datum);
  for (const auto& ej : j.at("census")) {
    CensusEntry entry;
    entry.stratum = stratum_from_json(ej.at("stratum"));
    entry.codim = ej.at("codim").get<int>();
    entry.decomposition = decomposition_from_json(ej.at("decomposition"));
    cert.census.push_back(std::move(entry));
  }
  for (const auto& vj : j.at("verdicts")) cert.verdicts.push_back(verdict_from_json(vj));
  cert.hyperplanes = j.at("hyperplanes").get<std::vector<std::vector<long long>>>();
  if (j.at("witness").is_null()) {
    cert.has_witness = false;
  } else {
    cert.has_witness = true;
    for (const auto& x : j.at("witness")) cert.witness.push_back(BigInt(x.get<std::string>()));
  }
  cert.citations = j.at("citations").get<std::vector<std::string>>();
  cert.obstructions = j.at("obstructions").get<std::vector<std::string>>();
  return cert;
}

}  // namespace qcb
