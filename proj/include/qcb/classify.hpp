#ifndef QCB_CLASSIFY_HPP
#define QCB_CLASSIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qcb/intmat.hpp"
#include "qcb/quiver.hpp"

namespace qcb {

// A classified family of connected data: a support skeleton with gauge
// dimensions, symbolic framing flags (dimension n >= 0 at flagged vertices),
// and optional symbolic decorations (loop bundles, parallel-edge bundles).
// Canonical up to graph isomorphism; edges are stored unordered.
struct Family {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // unordered pairs, a <= b
  std::vector<int> v;
  std::vector<bool> framed;
  std::vector<bool> loops;       // symbolic loop bundle at vertex
  std::vector<bool> multi;       // per-edge symbolic multiplicity
  std::string id;                // stable name for the extension cases

  std::string encode() const;
  friend bool operator==(const Family& a, const Family& b) {
    return a.encode() == b.encode();
  }
};

Family canonical_family(Family f);

// Codimension of the deepest stratum of a connected datum: sum of gauge
// dimensions, minus one when the framing is empty.
int codim_zero(const QuiverDatum& datum);

// All connected families with codim_zero <= bound, up to isomorphism and
// orientation. Framed families carry symbolic framing everywhere, so
// unframed data below the bound are members of framed families; unframed
// families appear exactly at total dimension bound + 1. With simple_only
// off, every family additionally carries symbolic loop and parallel-edge
// markers wherever they can sit.
std::vector<Family> enumerate_connected_data(int bound, bool simple_only);

// Every square minor lies in {-1, 0, +1}. Ghouila-Houri signing test on the
// smaller dimension.
bool is_totally_unimodular(const IntMat& m);

// Verdict for a connected trimmed local theory.
struct SmoothnessVerdict {
  bool certified = false;
  bool generic_flag = false;  // smooth for generic kappa, no explicit arrangement
  std::vector<std::vector<long long>> hyperplanes;  // on the factor's flavour lattice
  std::string citation;     // knowledge-base key backing a certified verdict
  std::string reason;       // set when not certified
  std::string obstruction;  // matching extension-case id, when one exists
};

SmoothnessVerdict verdict(const QuiverDatum& factor);

// The five local theories, beyond the toric ones, whose smoothness would
// extend certification to arbitrary quivers.
std::vector<Family> extending_cases();

// Hash of the classification tables, for certificate provenance.
std::uint64_t knowledge_base_revision();

}  // namespace qcb

#endif
