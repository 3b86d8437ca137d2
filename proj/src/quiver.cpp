#include "qcb/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qcb {

void QuiverDatum::validate() const {
  if (quiver.vertex_count < 0) throw std::invalid_argument("vertices: negative count");
  for (size_t k = 0; k < quiver.edges.size(); ++k) {
    auto [s, t] = quiver.edges[k];
    if (s < 0 || s >= quiver.vertex_count || t < 0 || t >= quiver.vertex_count)
      throw std::invalid_argument("edges[" + std::to_string(k) + "]: endpoint out of range");
  }
  if ((int)v.size() != quiver.vertex_count)
    throw std::invalid_argument("v: expected " + std::to_string(quiver.vertex_count) +
                                " entries, got " + std::to_string(v.size()));
  if ((int)w.size() != quiver.vertex_count)
    throw std::invalid_argument("w: expected " + std::to_string(quiver.vertex_count) +
                                " entries, got " + std::to_string(w.size()));
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0) throw std::invalid_argument("v[" + std::to_string(i) + "]: negative");
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] < 0) throw std::invalid_argument("w[" + std::to_string(i) + "]: negative");
}

int QuiverDatum::slot_count() const { return total_v(); }

int QuiverDatum::total_v() const { return std::accumulate(v.begin(), v.end(), 0); }

int QuiverDatum::slot_offset(int vertex) const {
  int off = 0;
  for (int i = 0; i < vertex; ++i) off += v[i];
  return off;
}

int QuiverDatum::slot_vertex(int slot) const {
  int off = 0;
  for (int i = 0; i < vertex_count(); ++i) {
    off += v[i];
    if (slot < off) return i;
  }
  throw std::invalid_argument("slot index out of range");
}

std::vector<int> QuiverDatum::support() const {
  std::vector<int> out;
  for (int i = 0; i < vertex_count(); ++i)
    if (v[i] > 0) out.push_back(i);
  return out;
}

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::FiniteA: return "finite-A";
    case Shape::AffineA: return "affine-A";
    default: return "other";
  }
}

bool is_simple(const QuiverDatum& datum) {
  std::map<std::pair<int, int>, int> seen;
  for (auto [s, t] : datum.quiver.edges) {
    if (s == t) return false;
    auto key = std::minmax(s, t);
    if (++seen[{key.first, key.second}] > 1) return false;
  }
  return true;
}

bool is_support_simple(const QuiverDatum& datum) {
  std::map<std::pair<int, int>, int> seen;
  for (auto [s, t] : datum.quiver.edges) {
    if (!datum.in_support(s) || !datum.in_support(t)) continue;
    if (s == t) return false;
    auto key = std::minmax(s, t);
    if (++seen[{key.first, key.second}] > 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> vertex_components(const Quiver& quiver,
                                                const std::vector<bool>& keep) {
  int n = quiver.vertex_count;
  std::vector<std::vector<int>> adj(n);
  for (auto [s, t] : quiver.edges)
    if (keep[s] && keep[t] && s != t) {
      adj[s].push_back(t);
      adj[t].push_back(s);
    }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < n; ++i) {
    if (!keep[i] || seen[i]) continue;
    std::vector<int> comp, stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int x : adj[u])
        if (!seen[x]) {
          seen[x] = true;
          stack.push_back(x);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const QuiverDatum& datum) {
  for (int i = 0; i < datum.vertex_count(); ++i)
    if (datum.w[i] != 0 && datum.v[i] == 0) return false;
  std::vector<bool> keep(datum.vertex_count());
  int supp = 0;
  for (int i = 0; i < datum.vertex_count(); ++i) {
    keep[i] = datum.v[i] > 0;
    supp += keep[i];
  }
  if (supp == 0) return false;
  return vertex_components(datum.quiver, keep).size() == 1;
}

QuiverDatum trim(const QuiverDatum& datum) {
  QuiverDatum out = datum;
  for (int i = 0; i < out.vertex_count(); ++i)
    if (out.v[i] == 0) out.w[i] = 0;
  return out;
}

bool is_trimmed(const QuiverDatum& datum) {
  for (int i = 0; i < datum.vertex_count(); ++i)
    if (datum.v[i] == 0 && datum.w[i] != 0) return false;
  return true;
}

Shape shape_classify(const QuiverDatum& datum) {
  if (!is_connected(datum)) throw std::invalid_argument("shape_classify: datum not connected");
  int n = 0;
  for (int i = 0; i < datum.vertex_count(); ++i) n += datum.in_support(i);

  std::map<std::pair<int, int>, int> mult;
  std::vector<int> degree(datum.vertex_count(), 0);
  int edge_count = 0;
  for (auto [s, t] : datum.quiver.edges) {
    if (!datum.in_support(s) || !datum.in_support(t)) continue;
    if (s == t) return Shape::Other;  // loop on support
    auto key = std::minmax(s, t);
    if (++mult[{key.first, key.second}] > 1) return Shape::Other;
    ++degree[s];
    ++degree[t];
    ++edge_count;
  }
  int max_degree = 0;
  for (int i = 0; i < datum.vertex_count(); ++i)
    if (datum.in_support(i)) max_degree = std::max(max_degree, degree[i]);

  if (edge_count == n - 1 && max_degree <= 2) return Shape::FiniteA;
  if (n >= 3 && edge_count == n && max_degree == 2) return Shape::AffineA;
  return Shape::Other;
}

IntMat weight_matrix(const QuiverDatum& datum) {
  int slots = datum.slot_count();
  int cols = 0;
  for (auto [s, t] : datum.quiver.edges) cols += datum.v[s] * datum.v[t];
  for (int i = 0; i < datum.vertex_count(); ++i) cols += datum.w[i] * datum.v[i];

  IntMat m(slots, cols);
  int c = 0;
  for (auto [s, t] : datum.quiver.edges)
    for (int a = 0; a < datum.v[s]; ++a)
      for (int b = 0; b < datum.v[t]; ++b) {
        m.at(datum.slot_offset(t) + b, c) += 1;
        m.at(datum.slot_offset(s) + a, c) -= 1;
        ++c;
      }
  for (int i = 0; i < datum.vertex_count(); ++i)
    for (int r = 0; r < datum.w[i]; ++r)
      for (int a = 0; a < datum.v[i]; ++a) {
        m.at(datum.slot_offset(i) + a, c) += 1;
        ++c;
      }
  return m;
}

}  // namespace qcb
