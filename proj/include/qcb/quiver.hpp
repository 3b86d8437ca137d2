#ifndef QCB_QUIVER_HPP
#define QCB_QUIVER_HPP

#include <string>
#include <utility>
#include <vector>

#include "qcb/intmat.hpp"

namespace qcb {

// Directed multigraph. Edges are identities, not a set: order is preserved
// and loops / parallel edges are representable.
struct Quiver {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // (source, target)

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertex_count == b.vertex_count && a.edges == b.edges;
  }
};

// A quiver together with gauge dimensions v and framing dimensions w.
// Cartan slots are pairs (i, a) with 0 <= a < v[i], flattened vertex-major.
struct QuiverDatum {
  Quiver quiver;
  std::vector<int> v;
  std::vector<int> w;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  int vertex_count() const { return quiver.vertex_count; }
  int slot_count() const;
  int slot_offset(int vertex) const;
  int slot_vertex(int slot) const;
  int total_v() const;
  bool in_support(int vertex) const { return v[vertex] > 0; }
  std::vector<int> support() const;

  friend bool operator==(const QuiverDatum& a, const QuiverDatum& b) {
    return a.quiver == b.quiver && a.v == b.v && a.w == b.w;
  }
};

enum class Shape { FiniteA, AffineA, Other };

std::string shape_name(Shape s);

// No loops and no unordered vertex pair carrying two or more edges.
bool is_simple(const QuiverDatum& datum);

// Same predicate restricted to edges with both endpoints in the support.
bool is_support_simple(const QuiverDatum& datum);

// Support is connected and nonempty, and w_i != 0 implies v_i != 0.
bool is_connected(const QuiverDatum& datum);

// Clears framing on vertices outside the support. Idempotent.
QuiverDatum trim(const QuiverDatum& datum);

bool is_trimmed(const QuiverDatum& datum);

// Shape of the support multigraph; requires is_connected.
Shape shape_classify(const QuiverDatum& datum);

// Torus weights of the matter representation, one row per slot, one column
// per matter line. Edge columns first (edge order, source slot major), then
// framing columns (vertex order, then line, then slot). Zero columns from
// loop diagonals are kept.
IntMat weight_matrix(const QuiverDatum& datum);

// Connected components of a vertex subset, using edges internal to it.
// Each component is sorted; components ordered by smallest vertex.
std::vector<std::vector<int>> vertex_components(const Quiver& quiver,
                                                const std::vector<bool>& keep);

}  // namespace qcb

#endif
