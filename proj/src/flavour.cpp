#include "qcb/flavour.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcb {

std::string FlavourLabel::str() const {
  if (is_edge) return "edge(" + std::to_string(edge) + ")";
  return "framing(" + std::to_string(vertex) + "," + std::to_string(line) + ")";
}

int FlavourLattice::index_of_edge(int edge) const {
  for (size_t k = 0; k < labels.size(); ++k)
    if (labels[k].is_edge && labels[k].edge == edge) return (int)k;
  return -1;
}

int FlavourLattice::index_of_framing(int vertex, int line) const {
  for (size_t k = 0; k < labels.size(); ++k)
    if (!labels[k].is_edge && labels[k].vertex == vertex && labels[k].line == line)
      return (int)k;
  return -1;
}

FlavourLattice build_flavour(const QuiverDatum& datum) {
  datum.validate();
  if (!is_trimmed(datum))
    throw std::invalid_argument("build_flavour: datum not trimmed (framing on empty vertex)");
  FlavourLattice lattice;
  for (size_t e = 0; e < datum.quiver.edges.size(); ++e) {
    auto [s, t] = datum.quiver.edges[e];
    if (datum.v[s] > 0 && datum.v[t] > 0)
      lattice.labels.push_back({true, (int)e, -1, -1});
  }
  for (int i = 0; i < datum.vertex_count(); ++i) {
    if (datum.w[i] == 0 || datum.v[i] == 0) continue;
    for (int r = 0; r < datum.w[i]; ++r) lattice.labels.push_back({false, -1, i, r});
  }
  return lattice;
}

IntMat phi_matrix(const QuiverDatum& datum, const FlavourLattice& lattice) {
  IntMat phi(lattice.rank(), datum.vertex_count());
  for (int k = 0; k < lattice.rank(); ++k) {
    const FlavourLabel& label = lattice.labels[k];
    if (label.is_edge) {
      auto [s, t] = datum.quiver.edges[label.edge];
      phi.at(k, t) += 1;
      phi.at(k, s) -= 1;
    } else {
      phi.at(k, label.vertex) -= 1;
    }
  }
  return phi;
}

std::optional<std::vector<long long>> are_equivalent(const QuiverDatum& datum,
                                                     const Coweight& kappa,
                                                     const Coweight& kappa2) {
  FlavourLattice lattice = build_flavour(datum);
  if ((int)kappa.size() != lattice.rank() || (int)kappa2.size() != lattice.rank())
    throw std::invalid_argument("coweight: expected " + std::to_string(lattice.rank()) +
                                " coordinates");
  std::vector<long long> diff(lattice.rank());
  for (int k = 0; k < lattice.rank(); ++k) diff[k] = kappa[k] - kappa2[k];
  return solve_integer(phi_matrix(datum, lattice), diff);
}

std::vector<int> normalization_forest(const QuiverDatum& datum) {
  struct Uf {
    std::vector<int> p;
    explicit Uf(int n) : p(n) {
      for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
      a = find(a);
      b = find(b);
      if (a == b) return false;
      p[a] = b;
      return true;
    }
  } uf(datum.vertex_count());

  std::vector<int> forest;
  for (size_t e = 0; e < datum.quiver.edges.size(); ++e) {
    auto [s, t] = datum.quiver.edges[e];
    if (s == t || datum.v[s] == 0 || datum.v[t] == 0) continue;
    if (uf.unite(s, t)) forest.push_back((int)e);
  }
  return forest;
}

NormalizedKappa normalize_kappa(const QuiverDatum& datum, const Coweight& kappa) {
  FlavourLattice lattice = build_flavour(datum);
  if ((int)kappa.size() != lattice.rank())
    throw std::invalid_argument("coweight: expected " + std::to_string(lattice.rank()) +
                                " coordinates");
  int n = datum.vertex_count();
  std::vector<int> forest = normalization_forest(datum);

  std::vector<std::vector<std::pair<int, int>>> tree(n);  // vertex -> (edge, other end)
  for (int e : forest) {
    auto [s, t] = datum.quiver.edges[e];
    tree[s].push_back({e, t});
    tree[t].push_back({e, s});
  }

  std::vector<long long> rho(n, 0);
  std::vector<int> component(n, -1);
  int comp_count = 0;
  for (int root = 0; root < n; ++root) {
    if (datum.v[root] == 0 || component[root] >= 0) continue;
    int c = comp_count++;
    std::vector<int> stack{root};
    component[root] = c;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [e, x] : tree[u]) {
        if (component[x] >= 0) continue;
        component[x] = c;
        // zero the tree edge: kappa_e - rho_t + rho_s = 0
        auto [s, t] = datum.quiver.edges[e];
        long long ke = kappa[lattice.index_of_edge(e)];
        rho[x] = (x == t) ? ke + rho[s] : rho[t] - ke;
        stack.push_back(x);
      }
    }
  }

  // Pin the residual per-component shift: first framing coordinate of each
  // framed component goes to zero.
  std::vector<bool> pinned(comp_count, false);
  for (int k = 0; k < lattice.rank(); ++k) {
    const FlavourLabel& label = lattice.labels[k];
    if (label.is_edge) continue;
    int c = component[label.vertex];
    if (pinned[c]) continue;
    pinned[c] = true;
    long long shift = kappa[k] + rho[label.vertex];
    for (int i = 0; i < n; ++i)
      if (component[i] == c) rho[i] -= shift;
  }

  NormalizedKappa out;
  out.rho = rho;
  out.kappa = kappa;
  std::vector<long long> image = mat_vec(phi_matrix(datum, lattice), rho);
  for (int k = 0; k < lattice.rank(); ++k) out.kappa[k] -= image[k];
  return out;
}

IntMat normalize_matrix(const QuiverDatum& datum, const FlavourLattice& lattice) {
  IntMat m(lattice.rank(), lattice.rank());
  Coweight basis(lattice.rank(), 0);
  for (int j = 0; j < lattice.rank(); ++j) {
    basis[j] = 1;
    Coweight col = normalize_kappa(datum, basis).kappa;
    for (int i = 0; i < lattice.rank(); ++i) m.at(i, j) = col[i];
    basis[j] = 0;
  }
  return m;
}

std::vector<int> restriction_label_map(const QuiverDatum& parent, const Factor& factor) {
  FlavourLattice parent_lattice = build_flavour(parent);
  FlavourLattice factor_lattice = build_flavour(factor.datum);
  for (int i = 0; i < parent.vertex_count(); ++i) {
    if (factor.datum.v[i] > parent.v[i] ||
        (factor.datum.w[i] != 0 && factor.datum.w[i] != parent.w[i]))
      throw std::invalid_argument("factor not compatible with parent");
  }
  std::vector<int> map(factor_lattice.rank());
  for (int k = 0; k < factor_lattice.rank(); ++k) {
    const FlavourLabel& label = factor_lattice.labels[k];
    int p = label.is_edge ? parent_lattice.index_of_edge(label.edge)
                          : parent_lattice.index_of_framing(label.vertex, label.line);
    if (p < 0) throw std::invalid_argument("factor not compatible with parent");
    map[k] = p;
  }
  return map;
}

Coweight restrict_kappa(const QuiverDatum& parent, const Factor& factor,
                        const Coweight& kappa) {
  FlavourLattice parent_lattice = build_flavour(parent);
  if ((int)kappa.size() != parent_lattice.rank())
    throw std::invalid_argument("coweight: expected " +
                                std::to_string(parent_lattice.rank()) + " coordinates");
  std::vector<int> map = restriction_label_map(parent, factor);
  Coweight out(map.size());
  for (size_t k = 0; k < map.size(); ++k) out[k] = kappa[map[k]];
  return out;
}

}  // namespace qcb
