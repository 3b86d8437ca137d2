#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcb/arrangement.hpp"
#include "qcb/certify.hpp"
#include "qcb/classify.hpp"
#include "qcb/decompose.hpp"
#include "qcb/flavour.hpp"
#include "qcb/io.hpp"
#include "qcb/quiver.hpp"

namespace {

using namespace qcb;

constexpr const char* kVersion = "1.0.0";

std::string slot_name(const QuiverDatum& datum, int slot) {
  int vertex = datum.slot_vertex(slot);
  return std::to_string(vertex) + "." + std::to_string(slot - datum.slot_offset(vertex));
}

std::string root_str(const QuiverDatum& datum, const GeneralizedRoot& root) {
  std::string kind = root.kind == RootKind::GaugeRoot     ? "gauge  "
                     : root.kind == RootKind::EdgeWeight  ? "edge   "
                                                          : "framing";
  std::string out = kind + "  e[" + slot_name(datum, root.plus) + "]";
  if (root.is_difference()) out += " - e[" + slot_name(datum, root.minus) + "]";
  return out;
}

std::string stratum_str(const QuiverDatum& datum, const StratumType& st) {
  std::vector<int> assignment = realize_slot_blocks(datum, st);
  std::string out;
  for (size_t k = 0; k < st.blocks.size(); ++k) {
    if (!out.empty()) out += ' ';
    if (st.has_zero && k == 0) out += "0:";
    out += '{';
    bool first = true;
    for (int s = 0; s < datum.slot_count(); ++s)
      if (assignment[s] == (int)k) {
        if (!first) out += ' ';
        out += slot_name(datum, s);
        first = false;
      }
    out += '}';
  }
  if (out.empty()) out = "{}";
  return out;
}

std::string vec_str(const std::vector<int>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

template <typename T>
std::string list_str(const std::vector<T>& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

std::string family_str(const Family& f) {
  static const char* framing_letters = "nmp";
  std::string out;
  for (int i = 0; i < f.vertex_count; ++i) {
    if (i) out += "  ";
    if (f.framed[i]) {
      out += '[';
      if (i < 3) out += framing_letters[i];
      else out += "n" + std::to_string(i);
      out += "]-";
    }
    out += "(" + std::to_string(f.v[i]) + ")";
    if (f.loops[i]) out += "{loops}";
  }
  if (!f.edges.empty()) {
    out += "   ";
    for (size_t e = 0; e < f.edges.size(); ++e) {
      if (e) out += ' ';
      out += std::to_string(f.edges[e].first);
      out += f.multi[e] ? "==" : "--";
      out += std::to_string(f.edges[e].second);
    }
  }
  return out;
}

Json family_to_json(const Family& f) {
  Json j;
  j["vertices"] = f.vertex_count;
  Json edges = Json::array();
  for (size_t e = 0; e < f.edges.size(); ++e)
    edges.push_back(Json::array({f.edges[e].first, f.edges[e].second}));
  j["edges"] = edges;
  j["v"] = f.v;
  j["framed"] = f.framed;
  j["loops"] = f.loops;
  j["multi_edges"] = f.multi;
  if (!f.id.empty()) j["id"] = f.id;
  return j;
}

ExactPoint parse_point(const QuiverDatum& datum, const std::string& text) {
  ExactPoint point;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) point.push_back(parse_rat(item));
  if ((int)point.size() != datum.slot_count())
    throw std::runtime_error("--point: expected " + std::to_string(datum.slot_count()) +
                             " coordinates, got " + std::to_string(point.size()));
  return point;
}

Coweight parse_kappa_flag(const std::string& text) {
  Coweight out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    out.push_back(std::stoll(item, &pos));
    if (pos != item.size()) throw std::runtime_error("--kappa: bad integer \"" + item + "\"");
  }
  return out;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
  out << text << "\n";
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

void print_decomposition_human(const Decomposition& d) {
  const QuiverDatum& parent = d.parent;
  std::cout << "stratum: " << stratum_str(parent, d.stratum)
            << "   codim " << codim_at(parent, d.stratum) << "\n";
  int total = 0;
  for (size_t k = 0; k < d.factors.size(); ++k) {
    const Factor& f = d.factors[k];
    int c = codim_zero(f.datum);
    total += c;
    std::cout << "factor " << k + 1 << ": eigenvalue "
              << (f.zero_tag ? "zero" : "nonzero") << ", v=" << vec_str(f.datum.v)
              << ", w=" << vec_str(f.datum.w) << ", slots [";
    for (size_t s = 0; s < f.slot_embedding.size(); ++s) {
      if (s) std::cout << ' ';
      std::cout << slot_name(parent, f.slot_embedding[s]);
    }
    std::cout << "], codim " << c << "\n";
  }
  std::cout << "factor codim total: " << total << "\n";
}

void print_certificate_human(const Certificate& cert) {
  std::cout << "certificate (mode " << mode_name(cert.mode) << ", kb "
            << hex64(cert.kb_revision) << ")\n";
  std::cout << "input: vertices " << cert.datum.vertex_count() << ", edges";
  if (cert.datum.quiver.edges.empty()) std::cout << " none";
  for (auto [s, t] : cert.datum.quiver.edges) std::cout << " " << s << "->" << t;
  std::cout << ", v=" << vec_str(cert.datum.v) << ", w=" << vec_str(cert.datum.w);
  if (cert.input_trimmed) std::cout << "  (framing trimmed off empty vertices)";
  std::cout << "\n";
  std::cout << "census: " << cert.census.size() << " strata of codimension <= "
            << census_bound(cert.mode) << "\n";
  std::cout << "local theories: " << cert.verdicts.size() << " distinct\n";
  for (const auto& fv : cert.verdicts) {
    std::cout << "  v=" << vec_str(fv.v) << " w=" << vec_str(fv.w) << "  ";
    if (fv.verdict.certified) {
      std::cout << "certified smooth [" << fv.verdict.citation << "]";
      if (fv.verdict.generic_flag) std::cout << " (generic parameter, cited)";
      if (!fv.verdict.hyperplanes.empty())
        std::cout << " (" << fv.verdict.hyperplanes.size() << " hyperplanes)";
    } else {
      std::cout << "unknown: " << fv.verdict.reason;
      if (!fv.verdict.obstruction.empty())
        std::cout << " [case " << fv.verdict.obstruction << "]";
    }
    std::cout << "\n";
  }
  std::cout << "hyperplanes recorded on the flavour lattice: " << cert.hyperplanes.size()
            << "\n";
  if (cert.has_witness) {
    std::cout << "witness kappa = " << list_str(cert.witness);
    std::cout << (validate_witness(cert) ? "  (validated)" : "  (INVALID)") << "\n";
  }
  if (!cert.citations.empty()) {
    std::cout << "citations:";
    for (const auto& c : cert.citations) std::cout << " " << c;
    std::cout << "\n";
  }
  if (!cert.obstructions.empty()) {
    std::cout << "obstructions:";
    for (const auto& c : cert.obstructions) std::cout << " " << c;
    std::cout << "\n";
  }
  std::cout << "conclusion: "
            << (cert.conclusion == Conclusion::Certified ? "CERTIFIED" : "INCONCLUSIVE")
            << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"qcb - exact certification for quiver gauge theory Coulomb branches"};
  app.set_version_flag("--version",
                       std::string("qcb ") + kVersion + " (knowledge base " +
                           hex64(knowledge_base_revision()) + ")");
  app.require_subcommand(1);

  std::string file, point_text, kappa_text, out_path;
  bool json_out = false;

  auto* roots_cmd = app.add_subcommand("roots", "list the generalized roots of a datum");
  roots_cmd->add_option("file", file)->required();

  auto* codim_cmd = app.add_subcommand("codim", "codimension of a Cartan point");
  codim_cmd->add_option("file", file)->required();
  std::string codim_point;
  codim_cmd->add_option("--point", codim_point, "comma-separated rationals p/q")->required();

  auto* strata_cmd = app.add_subcommand("strata", "canonical stratum types up to a bound");
  strata_cmd->add_option("file", file)->required();
  int bound = 3;
  strata_cmd->add_option("--bound", bound, "codimension bound")->required();
  strata_cmd->add_flag("--json", json_out);

  auto* dec_cmd = app.add_subcommand("decompose", "split the local theory at a point");
  dec_cmd->add_option("file", file)->required();
  dec_cmd->add_option("--point", point_text)->required();
  dec_cmd->add_flag("--json", json_out);
  dec_cmd->add_option("-o,--output", out_path);

  auto* norm_cmd = app.add_subcommand("normalize-kappa", "normalize a flavour coweight");
  norm_cmd->add_option("file", file)->required();
  norm_cmd->add_option("--kappa", kappa_text, "comma-separated integers");

  auto* enum_cmd = app.add_subcommand("enumerate", "connected families below a codim bound");
  int codim_bound = 3;
  bool simple_only = false;
  enum_cmd->add_option("--codim-bound", codim_bound)->required();
  enum_cmd->add_flag("--simple-only", simple_only);
  enum_cmd->add_flag("--json", json_out);

  auto* cert_cmd = app.add_subcommand("certify", "run the certification pipeline");
  cert_cmd->add_option("file", file)->required();
  std::string mode_text = "ss";
  cert_cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"ss", "normal"}));
  cert_cmd->add_flag("--json", json_out);
  cert_cmd->add_option("-o,--output", out_path);
  int threads = 1;
  cert_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*roots_cmd) {
      QuiverDatum datum = parse_quiver_file(file).datum;
      for (const auto& root : generalized_roots(datum))
        std::cout << root_str(datum, root) << "\n";
      return 0;
    }
    if (*codim_cmd) {
      QuiverDatum datum = parse_quiver_file(file).datum;
      std::cout << codim_at(datum, parse_point(datum, codim_point)) << "\n";
      return 0;
    }
    if (*strata_cmd) {
      QuiverDatum datum = parse_quiver_file(file).datum;
      auto strata = enumerate_strata(datum, bound);
      if (json_out) {
        Json j = Json::array();
        for (const auto& st : strata) {
          Json sj = stratum_to_json(st);
          sj["codim"] = codim_at(datum, st);
          j.push_back(sj);
        }
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& st : strata) std::cout << stratum_str(datum, st) << "\n";
      }
      return 0;
    }
    if (*dec_cmd) {
      QuiverDatum datum = parse_quiver_file(file).datum;
      Decomposition d = decompose_at(datum, parse_point(datum, point_text));
      if (json_out)
        write_output(decomposition_to_json(d).dump(2), out_path);
      else
        print_decomposition_human(d);
      return 0;
    }
    if (*norm_cmd) {
      QuiverInput input = parse_quiver_file(file);
      QuiverDatum datum = trim(input.datum);
      FlavourLattice lattice = build_flavour(datum);
      Coweight kappa;
      if (!kappa_text.empty()) {
        kappa = parse_kappa_flag(kappa_text);
        if (input.kappa)
          std::cerr << "warning: --kappa overrides the kappa embedded in " << file << "\n";
      } else if (input.kappa) {
        kappa = *input.kappa;
      } else {
        throw std::runtime_error("no kappa: embed a \"kappa\" field or pass --kappa");
      }
      if ((int)kappa.size() != lattice.rank())
        throw std::runtime_error("kappa: expected " + std::to_string(lattice.rank()) +
                                 " coordinates, got " + std::to_string(kappa.size()));
      NormalizedKappa norm = normalize_kappa(datum, kappa);
      std::cout << "lattice:";
      for (const auto& label : lattice.labels) std::cout << " " << label.str();
      std::cout << "\nkappa      = " << list_str(kappa) << "\n";
      std::cout << "normalized = " << list_str(norm.kappa) << "\n";
      std::cout << "rho        = " << list_str(norm.rho) << "\n";
      return 0;
    }
    if (*enum_cmd) {
      auto families = enumerate_connected_data(codim_bound, simple_only);
      if (json_out) {
        Json j = Json::array();
        for (const auto& f : families) j.push_back(family_to_json(f));
        std::cout << j.dump(2) << "\n";
      } else {
        for (size_t k = 0; k < families.size(); ++k)
          std::cout << (k + 1 < 10 ? " " : "") << k + 1 << ". "
                    << family_str(families[k]) << "\n";
        std::cout << families.size() << " families with codim_zero <= " << codim_bound
                  << (simple_only ? " (simple)" : "") << "\n";
      }
      return 0;
    }
    if (*cert_cmd) {
      QuiverDatum datum = parse_quiver_file(file).datum;
      Mode mode = mode_text == "ss" ? Mode::SymplecticSingularities : Mode::NormalSymplectic;
      Certificate cert = certify(datum, mode, threads);
      if (json_out)
        write_output(certificate_to_json(cert).dump(2), out_path);
      else
        print_certificate_human(cert);
      return cert.conclusion == Conclusion::Certified ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
