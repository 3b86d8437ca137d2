#include "qcb/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace qcb {

std::vector<GeneralizedRoot> generalized_roots(const QuiverDatum& datum) {
  datum.validate();
  std::vector<GeneralizedRoot> roots;
  std::set<std::pair<int, int>> seen;
  auto add = [&](RootKind kind, int plus, int minus) {
    if (plus == minus) return;  // zero weight, not a root
    if (!seen.insert({plus, minus}).second) return;
    roots.push_back({kind, plus, minus});
  };

  for (int i = 0; i < datum.vertex_count(); ++i) {
    int off = datum.slot_offset(i);
    for (int a = 0; a < datum.v[i]; ++a)
      for (int b = 0; b < datum.v[i]; ++b)
        if (a != b) add(RootKind::GaugeRoot, off + a, off + b);
  }
  for (auto [s, t] : datum.quiver.edges) {
    int soff = datum.slot_offset(s), toff = datum.slot_offset(t);
    for (int a = 0; a < datum.v[s]; ++a)
      for (int b = 0; b < datum.v[t]; ++b)
        add(RootKind::EdgeWeight, toff + b, soff + a);
  }
  for (int i = 0; i < datum.vertex_count(); ++i) {
    if (datum.w[i] == 0) continue;
    int off = datum.slot_offset(i);
    for (int a = 0; a < datum.v[i]; ++a) add(RootKind::FramingWeight, off + a, -1);
  }
  return roots;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

bool block_touches_framing(const QuiverDatum& datum, const std::vector<int>& mult) {
  for (int i = 0; i < datum.vertex_count(); ++i)
    if (mult[i] > 0 && datum.w[i] > 0) return true;
  return false;
}

int block_total(const std::vector<int>& mult) {
  int s = 0;
  for (int m : mult) s += m;
  return s;
}

// Allocation-free component walks over vertex bitmasks, for data with at
// most 64 vertices.
struct SupportMasks {
  int n;
  std::vector<std::uint64_t> adj;
  std::uint64_t framed = 0;

  explicit SupportMasks(const QuiverDatum& datum)
      : n(datum.vertex_count()), adj(n, 0) {
    for (auto [s, t] : datum.quiver.edges)
      if (s != t) {
        adj[s] |= 1ull << t;
        adj[t] |= 1ull << s;
      }
    for (int i = 0; i < n; ++i)
      if (datum.w[i] > 0) framed |= 1ull << i;
  }

  int codim(const StratumType& st) const {
    int total = 0;
    for (size_t k = 0; k < st.blocks.size(); ++k) {
      const auto& mult = st.blocks[k];
      std::uint64_t mask = 0;
      int size = 0;
      for (int i = 0; i < n; ++i)
        if (mult[i] > 0) {
          mask |= 1ull << i;
          size += mult[i];
        }
      bool zero = st.has_zero && k == 0;
      int comps = 0;
      std::uint64_t remaining = mask;
      while (remaining) {
        ++comps;
        std::uint64_t comp = remaining & (~remaining + 1);
        while (true) {
          std::uint64_t grown = comp;
          for (std::uint64_t scan = comp; scan; scan &= scan - 1)
            grown |= adj[std::countr_zero(scan)] & mask;
          if (grown == comp) break;
          comp = grown;
        }
        remaining &= ~comp;
        if (zero && (comp & framed)) ++total;
      }
      total += size - comps;
    }
    return total;
  }
};

}  // namespace

std::string StratumType::encode() const {
  std::string out = has_zero ? "z" : "-";
  for (const auto& b : blocks) {
    out += '|';
    for (int m : b) {
      out += std::to_string(m);
      out += ',';
    }
  }
  return out;
}

StratumType canonical_stratum(const QuiverDatum& datum,
                              std::vector<std::vector<int>> blocks, int zero_index) {
  // Drop empty blocks, tracking the zero block.
  std::vector<std::vector<int>> kept;
  int zero_kept = -1;
  for (size_t k = 0; k < blocks.size(); ++k) {
    if (block_total(blocks[k]) == 0) continue;
    if ((int)k == zero_index) zero_kept = (int)kept.size();
    kept.push_back(std::move(blocks[k]));
  }
  // A zero designation away from every framed vertex is inert.
  if (zero_kept >= 0 && !block_touches_framing(datum, kept[zero_kept])) zero_kept = -1;

  StratumType st;
  st.has_zero = zero_kept >= 0;
  if (st.has_zero) {
    st.blocks.push_back(kept[zero_kept]);
    kept.erase(kept.begin() + zero_kept);
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  for (auto& b : kept) st.blocks.push_back(std::move(b));
  return st;
}

StratumType stratum_of(const QuiverDatum& datum, const ExactPoint& point) {
  if ((int)point.size() != datum.slot_count())
    throw std::invalid_argument("point: expected " + std::to_string(datum.slot_count()) +
                                " coordinates, got " + std::to_string(point.size()));
  std::map<std::pair<long long, long long>, int> block_of_value;
  std::vector<std::vector<int>> blocks;
  int zero_index = -1;
  for (int s = 0; s < datum.slot_count(); ++s) {
    const Rat& r = point[s];
    auto key = std::make_pair(r.num, r.den);
    auto it = block_of_value.find(key);
    int idx;
    if (it == block_of_value.end()) {
      idx = (int)blocks.size();
      block_of_value[key] = idx;
      blocks.emplace_back(datum.vertex_count(), 0);
      if (r.is_zero()) zero_index = idx;
    } else {
      idx = it->second;
    }
    blocks[idx][datum.slot_vertex(s)] += 1;
  }
  return canonical_stratum(datum, std::move(blocks), zero_index);
}

std::vector<int> realize_slot_blocks(const QuiverDatum& datum, const StratumType& st) {
  std::vector<int> assignment(datum.slot_count(), -1);
  std::vector<int> next(datum.vertex_count());
  for (int i = 0; i < datum.vertex_count(); ++i) next[i] = datum.slot_offset(i);
  for (size_t k = 0; k < st.blocks.size(); ++k)
    for (int i = 0; i < datum.vertex_count(); ++i)
      for (int c = 0; c < st.blocks[k][i]; ++c) assignment[next[i]++] = (int)k;
  for (int i = 0; i < datum.vertex_count(); ++i)
    if (next[i] != datum.slot_offset(i) + datum.v[i])
      throw std::invalid_argument("stratum type does not match datum dimensions");
  return assignment;
}

int codim_at(const QuiverDatum& datum, const ExactPoint& point) {
  if ((int)point.size() != datum.slot_count())
    throw std::invalid_argument("point: expected " + std::to_string(datum.slot_count()) +
                                " coordinates, got " + std::to_string(point.size()));
  int n = datum.slot_count();
  Dsu dsu(n);
  std::vector<bool> anchored(n, false);
  for (const auto& root : generalized_roots(datum)) {
    if (root.is_difference()) {
      if (point[root.plus] == point[root.minus]) dsu.unite(root.plus, root.minus);
    } else if (point[root.plus].is_zero()) {
      anchored[root.plus] = true;
    }
  }
  std::set<int> components;
  std::set<int> marked;
  for (int s = 0; s < n; ++s) {
    int r = dsu.find(s);
    components.insert(r);
    if (anchored[s]) marked.insert(r);
  }
  return (n - (int)components.size()) + (int)marked.size();
}

int codim_at(const QuiverDatum& datum, const StratumType& st) {
  // Block-level form of the union-find rank: slots of a block clump by
  // vertex, and clumps merge along quiver edges, so each block contributes
  // (size - number of support components); the zero block further
  // contributes one per component touching a framed vertex.
  if (datum.vertex_count() <= 64) return SupportMasks(datum).codim(st);
  int total = 0;
  for (size_t k = 0; k < st.blocks.size(); ++k) {
    const auto& mult = st.blocks[k];
    std::vector<bool> keep(datum.vertex_count());
    for (int i = 0; i < datum.vertex_count(); ++i) keep[i] = mult[i] > 0;
    auto comps = vertex_components(datum.quiver, keep);
    total += block_total(mult) - (int)comps.size();
    if (st.has_zero && k == 0)
      for (const auto& comp : comps)
        for (int i : comp)
          if (datum.w[i] > 0) {
            ++total;
            break;
          }
  }
  return total;
}

std::vector<StratumType> enumerate_strata(const QuiverDatum& datum, int bound) {
  if (bound < 0) throw std::invalid_argument("enumerate_strata: negative bound");
  datum.validate();

  // Breadth-first closure under single coarsening moves (merge two blocks,
  // or designate a block as zero). Coarsening never decreases the
  // codimension, so pruning above the bound keeps the search complete.
  std::vector<std::vector<int>> singles;
  for (int i = 0; i < datum.vertex_count(); ++i)
    for (int a = 0; a < datum.v[i]; ++a) {
      std::vector<int> b(datum.vertex_count(), 0);
      b[i] = 1;
      singles.push_back(std::move(b));
    }
  StratumType generic = canonical_stratum(datum, singles, -1);

  const bool masks_fit = datum.vertex_count() <= 64;
  const SupportMasks masks(datum);
  auto codim_of = [&](const StratumType& st) {
    return masks_fit ? masks.codim(st) : codim_at(datum, st);
  };

  std::vector<std::pair<StratumType, int>> out;
  std::unordered_set<std::string> seen;
  std::deque<StratumType> queue;
  if (int codim = codim_of(generic); codim <= bound) {
    seen.insert(generic.encode());
    queue.push_back(generic);
    out.push_back({generic, codim});
  }
  while (!queue.empty()) {
    StratumType cur = queue.front();
    queue.pop_front();
    int nb = (int)cur.blocks.size();
    auto visit = [&](StratumType&& next) {
      int codim = codim_of(next);
      if (codim > bound) return;
      if (!seen.insert(next.encode()).second) return;
      out.push_back({next, codim});
      queue.push_back(std::move(next));
    };
    for (int i = 0; i < nb; ++i)
      for (int j = i + 1; j < nb; ++j) {
        auto blocks = cur.blocks;
        for (int t = 0; t < datum.vertex_count(); ++t) blocks[i][t] += blocks[j][t];
        blocks.erase(blocks.begin() + j);
        // a merge involving the zero block (index 0) keeps the designation
        visit(canonical_stratum(datum, std::move(blocks), cur.has_zero ? 0 : -1));
      }
    if (!cur.has_zero)
      for (int i = 0; i < nb; ++i) visit(canonical_stratum(datum, cur.blocks, i));
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    if (a.first.blocks.size() != b.first.blocks.size())
      return a.first.blocks.size() > b.first.blocks.size();
    if (a.first.has_zero != b.first.has_zero) return !a.first.has_zero;
    return a.first.blocks < b.first.blocks;
  });
  std::vector<StratumType> strata;
  strata.reserve(out.size());
  for (auto& [st, codim] : out) strata.push_back(std::move(st));
  return strata;
}

}  // namespace qcb
