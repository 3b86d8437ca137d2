#ifndef QCB_FLAVOUR_HPP
#define QCB_FLAVOUR_HPP

#include <optional>
#include <string>
#include <vector>

#include "qcb/decompose.hpp"
#include "qcb/intmat.hpp"
#include "qcb/quiver.hpp"

namespace qcb {

// Coordinate of the flavour cocharacter lattice: one dilating coordinate per
// edge whose endpoints both carry gauge dimension, then one coordinate per
// framing line at framed support vertices.
struct FlavourLabel {
  bool is_edge;
  int edge = -1;    // edge index when is_edge
  int vertex = -1;  // framing vertex otherwise
  int line = -1;    // framing line index

  friend bool operator==(const FlavourLabel& a, const FlavourLabel& b) {
    return a.is_edge == b.is_edge && a.edge == b.edge && a.vertex == b.vertex &&
           a.line == b.line;
  }
  std::string str() const;
};

struct FlavourLattice {
  std::vector<FlavourLabel> labels;

  int rank() const { return (int)labels.size(); }
  int index_of_edge(int edge) const;
  int index_of_framing(int vertex, int line) const;

  friend bool operator==(const FlavourLattice& a, const FlavourLattice& b) {
    return a.labels == b.labels;
  }
};

using Coweight = std::vector<long long>;

// Requires a trimmed datum; otherwise the coordinate set is ambiguous.
FlavourLattice build_flavour(const QuiverDatum& datum);

// Central cocharacters mapping into the flavour lattice: column i carries
// +1 at Edge(e) when t(e) = i, -1 when s(e) = i (summed, so loops cancel),
// and -1 at every Framing(i, r).
IntMat phi_matrix(const QuiverDatum& datum, const FlavourLattice& lattice);

// Some integer rho with kappa - kappa2 = phi(rho), or nullopt.
std::optional<std::vector<long long>> are_equivalent(const QuiverDatum& datum,
                                                     const Coweight& kappa,
                                                     const Coweight& kappa2);

struct NormalizedKappa {
  Coweight kappa;
  std::vector<long long> rho;  // the shift used: result = input - phi(rho)
};

// Unique equivalent coweight that vanishes on a deterministic spanning
// forest of the support graph (lexicographically smallest edge set) and on
// the first framing coordinate of each framed support component. Idempotent
// and constant on equivalence classes.
NormalizedKappa normalize_kappa(const QuiverDatum& datum, const Coweight& kappa);

// Edges of the deterministic spanning forest used by normalize_kappa.
std::vector<int> normalization_forest(const QuiverDatum& datum);

// Matrix of the (linear) normalization map on the lattice.
IntMat normalize_matrix(const QuiverDatum& datum, const FlavourLattice& lattice);

// For each factor label, the parent label index it restricts from.
std::vector<int> restriction_label_map(const QuiverDatum& parent, const Factor& factor);

// Projection of a parent coweight onto the factor's flavour lattice.
Coweight restrict_kappa(const QuiverDatum& parent, const Factor& factor,
                        const Coweight& kappa);

}  // namespace qcb

#endif
