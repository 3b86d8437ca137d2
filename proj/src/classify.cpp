#include "qcb/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qcb/flavour.hpp"

namespace qcb {

std::string Family::encode() const {
  std::string out = std::to_string(vertex_count) + ";";
  for (size_t i = 0; i < v.size(); ++i) {
    out += std::to_string(v[i]);
    out += framed[i] ? 'f' : '.';
    out += loops[i] ? 'l' : '.';
    out += ' ';
  }
  out += ';';
  for (size_t e = 0; e < edges.size(); ++e) {
    out += std::to_string(edges[e].first) + "-" + std::to_string(edges[e].second);
    out += multi[e] ? 'm' : '.';
    out += ' ';
  }
  return out;
}

Family canonical_family(Family f) {
  if (f.v.empty()) f.v.assign(f.vertex_count, 0);
  if (f.framed.empty()) f.framed.assign(f.vertex_count, false);
  if (f.loops.empty()) f.loops.assign(f.vertex_count, false);
  if (f.multi.empty()) f.multi.assign(f.edges.size(), false);

  std::vector<int> perm(f.vertex_count);
  std::iota(perm.begin(), perm.end(), 0);
  Family best;
  std::string best_key;
  do {
    Family g = f;
    for (int i = 0; i < f.vertex_count; ++i) {
      g.v[perm[i]] = f.v[i];
      g.framed[perm[i]] = f.framed[i];
      g.loops[perm[i]] = f.loops[i];
    }
    std::vector<std::pair<std::pair<int, int>, bool>> edges;
    for (size_t e = 0; e < f.edges.size(); ++e) {
      int a = perm[f.edges[e].first], b = perm[f.edges[e].second];
      edges.push_back({{std::min(a, b), std::max(a, b)}, f.multi[e]});
    }
    std::sort(edges.begin(), edges.end());
    g.edges.clear();
    g.multi.clear();
    for (auto& [pair, m] : edges) {
      g.edges.push_back(pair);
      g.multi.push_back(m);
    }
    std::string key = g.encode();
    if (best_key.empty() || key < best_key) {
      best_key = key;
      best = g;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.id = f.id;
  return best;
}

int codim_zero(const QuiverDatum& datum) {
  if (!is_connected(datum)) throw std::invalid_argument("codim_zero: datum not connected");
  int total = datum.total_v();
  bool framed = false;
  for (int x : datum.w) framed = framed || x > 0;
  return framed ? total : total - 1;
}

namespace {

// Connected simple graphs on n labelled vertices, as edge masks.
std::vector<std::vector<std::pair<int, int>>> connected_simple_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.push_back({a, b});
  std::vector<std::vector<std::pair<int, int>>> out;
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1) edges.push_back(slots[k]);
    Quiver q{n, edges};
    std::vector<bool> keep(n, true);
    if ((int)vertex_components(q, keep).size() == 1 || n == 1)
      out.push_back(std::move(edges));
  }
  return out;
}

// v assignments with every entry >= 1 and the prescribed total.
void compositions(int total, int parts, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (total >= 1) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

void emit_families(int total_v, bool framed, bool simple_only,
                   std::set<std::string>& seen, std::vector<Family>& out) {
  for (int n = 1; n <= total_v; ++n) {
    auto graphs = connected_simple_graphs(n);
    std::vector<std::vector<int>> vs;
    std::vector<int> cur;
    compositions(total_v, n, cur, vs);
    for (const auto& edges : graphs)
      for (const auto& v : vs) {
        Family f;
        f.vertex_count = n;
        f.edges = edges;
        f.v = v;
        f.framed.assign(n, framed);
        f.loops.assign(n, !simple_only);
        f.multi.assign(edges.size(), !simple_only);
        f = canonical_family(std::move(f));
        if (seen.insert(f.encode()).second) out.push_back(f);
      }
  }
}

}  // namespace

std::vector<Family> enumerate_connected_data(int bound, bool simple_only) {
  if (bound < 0) throw std::invalid_argument("enumerate_connected_data: negative bound");
  std::vector<Family> out;
  std::set<std::string> seen;
  for (int total = 1; total <= bound; ++total)
    emit_families(total, true, simple_only, seen, out);
  emit_families(bound + 1, false, simple_only, seen, out);
  return out;
}

bool is_totally_unimodular(const IntMat& m) {
  for (long long x : m.a)
    if (x < -1 || x > 1) return false;
  // Ghouila-Houri: every row subset admits a +-1 signing with column sums in
  // {-1,0,1}. Run on the smaller side.
  const IntMat mat = m.rows <= m.cols ? m : m.transposed();
  int r = mat.rows, c = mat.cols;
  if (r == 0 || c == 0) return true;
  if (r > 30) throw std::invalid_argument("is_totally_unimodular: matrix too large");
  std::vector<int> rows;
  for (unsigned long subset = 1; subset < (1ul << r); ++subset) {
    rows.clear();
    for (int i = 0; i < r; ++i)
      if (subset >> i & 1) rows.push_back(i);
    int k = (int)rows.size();
    bool ok = false;
    for (unsigned long signs = 0; signs < (1ul << (k - 1)) && !ok; ++signs) {
      // first row fixed positive; a signing and its negation are equivalent
      ok = true;
      for (int j = 0; j < c && ok; ++j) {
        long long sum = mat.at(rows[0], j);
        for (int i = 1; i < k; ++i)
          sum += (signs >> (i - 1) & 1) ? -mat.at(rows[i], j) : mat.at(rows[i], j);
        if (sum < -1 || sum > 1) ok = false;
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<Family> extending_cases() {
  std::vector<Family> out;
  auto add = [&](Family f) { out.push_back(canonical_family(std::move(f))); };
  add({1, {}, {2}, {true}, {true}, {}, "looped-2-framed"});
  add({1, {}, {3}, {true}, {true}, {}, "looped-3-framed"});
  add({1, {}, {4}, {false}, {true}, {}, "looped-4"});
  add({2, {{0, 1}}, {2, 1}, {true, true}, {true, false}, {true},
       "looped-2-multi-edge-1-framed"});
  add({2, {{0, 1}}, {2, 2}, {false, false}, {true, true}, {true},
       "looped-2-multi-edge-looped-2"});
  return out;
}

namespace {

// Match a connected non-simple local theory against the extension cases.
std::string match_extension_case(const QuiverDatum& datum) {
  std::vector<int> support = datum.support();
  std::vector<int> loops(datum.vertex_count(), 0);
  std::map<std::pair<int, int>, int> mult;
  for (auto [s, t] : datum.quiver.edges) {
    if (!datum.in_support(s) || !datum.in_support(t)) continue;
    if (s == t)
      ++loops[s];
    else
      ++mult[{std::min(s, t), std::max(s, t)}];
  }
  bool framed = false;
  for (int i : support) framed = framed || datum.w[i] > 0;

  if (support.size() == 1) {
    int dim = datum.v[support[0]];
    if (dim == 2) return "looped-2-framed";
    if (dim == 3) return "looped-3-framed";
    if (dim == 4 && !framed) return "looped-4";
    return "";
  }
  if (support.size() == 2) {
    int a = support[0], b = support[1];
    int hi = std::max(datum.v[a], datum.v[b]), lo = std::min(datum.v[a], datum.v[b]);
    if (hi == 2 && lo == 1) {
      int one_vertex = datum.v[a] == 1 ? a : b;
      if (loops[one_vertex] == 0) return "looped-2-multi-edge-1-framed";
      return "";
    }
    if (hi == 2 && lo == 2 && !framed) return "looped-2-multi-edge-looped-2";
    return "";
  }
  return "";
}

}  // namespace

SmoothnessVerdict verdict(const QuiverDatum& factor) {
  if (!is_connected(factor)) throw std::invalid_argument("verdict: factor not connected");
  if (!is_trimmed(factor)) throw std::invalid_argument("verdict: factor not trimmed");

  SmoothnessVerdict out;
  Shape shape = shape_classify(factor);

  if (shape == Shape::FiniteA) {
    // Smooth once the normalized framing coordinates are pairwise distinct,
    // jointly across all vertices. The constraints are pulled back through
    // the (linear) normalization map.
    out.certified = true;
    out.citation = "finite-type-A-minuscule";
    FlavourLattice lattice = build_flavour(factor);
    IntMat norm = normalize_matrix(factor, lattice);
    std::vector<int> framing;
    for (int k = 0; k < lattice.rank(); ++k)
      if (!lattice.labels[k].is_edge) framing.push_back(k);
    for (size_t a = 0; a < framing.size(); ++a)
      for (size_t b = a + 1; b < framing.size(); ++b) {
        std::vector<long long> h(lattice.rank());
        bool nonzero = false;
        for (int j = 0; j < lattice.rank(); ++j) {
          h[j] = norm.at(framing[a], j) - norm.at(framing[b], j);
          nonzero = nonzero || h[j] != 0;
        }
        if (!nonzero)
          throw std::logic_error("degenerate framing hyperplane");
        out.hyperplanes.push_back(std::move(h));
      }
    return out;
  }
  if (shape == Shape::AffineA) {
    out.certified = true;
    out.generic_flag = true;
    out.citation = "affine-type-A-generic";
    return out;
  }
  bool toric = true;
  for (int i = 0; i < factor.vertex_count(); ++i)
    if (factor.v[i] > 1) toric = false;
  if (toric) {
    if (is_totally_unimodular(weight_matrix(factor))) {
      out.certified = true;
      out.generic_flag = true;
      out.citation = "toric-unimodular";
    } else {
      out.reason = "toric weight matrix not totally unimodular";
    }
    return out;
  }
  if (!is_support_simple(factor)) {
    out.reason = "non-simple local theory";
    out.obstruction = match_extension_case(factor);
    return out;
  }
  out.reason = "outside the certified families";
  return out;
}

std::uint64_t knowledge_base_revision() {
  static const std::uint64_t cached = [] {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
      }
    };
    for (const auto& f : enumerate_connected_data(3, true)) mix(f.encode());
    for (const auto& f : extending_cases()) mix(f.id + ":" + f.encode());
    return h;
  }();
  return cached;
}

}  // namespace qcb
