#include "qcb/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace qcb {

Decomposition decompose_at(const QuiverDatum& datum, const StratumType& st) {
  datum.validate();
  int n = datum.vertex_count();

  Decomposition out;
  out.parent = datum;
  out.stratum = st;

  // Hand out parent slots vertex by vertex, blocks in canonical order, so
  // that embeddings partition the slot set deterministically.
  std::vector<int> next(n);
  for (int i = 0; i < n; ++i) next[i] = datum.slot_offset(i);

  for (size_t k = 0; k < st.blocks.size(); ++k) {
    const auto& mult = st.blocks[k];
    bool zero = st.has_zero && k == 0;
    std::vector<bool> keep(n);
    for (int i = 0; i < n; ++i) keep[i] = mult[i] > 0;
    for (const auto& comp : vertex_components(datum.quiver, keep)) {
      Factor f;
      f.zero_tag = zero;
      f.block_index = (int)k;
      f.datum.quiver = datum.quiver;
      f.datum.v.assign(n, 0);
      f.datum.w.assign(n, 0);
      for (int i : comp) {
        f.datum.v[i] = mult[i];
        if (zero) f.datum.w[i] = datum.w[i];
      }
      // framing away from a zero block cannot occur
      assert(zero || f.datum.w == std::vector<int>(n, 0));
      // factor slots are vertex-major, so visiting comp in ascending order
      // lines the embedding up with the factor's own slot numbering
      for (int i : comp)
        for (int c = 0; c < mult[i]; ++c) f.slot_embedding.push_back(next[i]++);
      out.factors.push_back(std::move(f));
    }
  }
  for (int i = 0; i < n; ++i)
    if (next[i] != datum.slot_offset(i) + datum.v[i])
      throw std::invalid_argument("stratum type does not match datum dimensions");

  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const Factor& a, const Factor& b) {
                     if (a.zero_tag != b.zero_tag) return a.zero_tag;
                     int ma = a.slot_embedding.empty() ? -1 : a.slot_embedding.front();
                     int mb = b.slot_embedding.empty() ? -1 : b.slot_embedding.front();
                     return ma < mb;
                   });
  return out;
}

Decomposition decompose_at(const QuiverDatum& datum, const ExactPoint& point) {
  return decompose_at(datum, stratum_of(datum, point));
}

bool operator==(const Factor& a, const Factor& b) {
  return a.datum == b.datum && a.zero_tag == b.zero_tag &&
         a.block_index == b.block_index && a.slot_embedding == b.slot_embedding;
}

bool operator==(const Decomposition& a, const Decomposition& b) {
  return a.parent == b.parent && a.stratum == b.stratum && a.factors == b.factors;
}

}  // namespace qcb
