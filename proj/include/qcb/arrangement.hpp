#ifndef QCB_ARRANGEMENT_HPP
#define QCB_ARRANGEMENT_HPP

#include <string>
#include <vector>

#include "qcb/quiver.hpp"
#include "qcb/rational.hpp"

namespace qcb {

enum class RootKind { GaugeRoot, EdgeWeight, FramingWeight };

// Integer covector on slots: either e[plus] - e[minus], or e[plus] alone
// when minus < 0 (framing weights).
struct GeneralizedRoot {
  RootKind kind;
  int plus;
  int minus;

  bool is_difference() const { return minus >= 0; }
  friend bool operator==(const GeneralizedRoot& a, const GeneralizedRoot& b) {
    return a.plus == b.plus && a.minus == b.minus;
  }
};

// Distinct generalized roots: gauge roots within each vertex, matter weights
// across each edge, framing weights at framed vertices. Deduplicated as
// covectors (a loop weight coincides with a gauge root and is kept once).
std::vector<GeneralizedRoot> generalized_roots(const QuiverDatum& datum);

using ExactPoint = std::vector<Rat>;

// Weyl-canonical equality/zero pattern of a Cartan point. A block is stored
// as its per-vertex slot multiplicities; slot identities inside a vertex are
// quotiented out by the per-vertex symmetric group. When has_zero is set,
// blocks[0] is the zero block. A zero designation that touches no framed
// vertex is dropped by canonicalization, since no framing weight can vanish
// there and the pattern cuts the same stratum.
struct StratumType {
  std::vector<std::vector<int>> blocks;
  bool has_zero = false;

  friend bool operator==(const StratumType& a, const StratumType& b) {
    return a.has_zero == b.has_zero && a.blocks == b.blocks;
  }
  std::string encode() const;  // deterministic key for dedup / ordering
};

// Canonicalize an arbitrary block list; zero_index < 0 means no zero block.
StratumType canonical_stratum(const QuiverDatum& datum,
                              std::vector<std::vector<int>> blocks, int zero_index);

StratumType stratum_of(const QuiverDatum& datum, const ExactPoint& point);

// A concrete slot assignment realizing the canonical pattern: slot -> block
// index. Within each vertex, slots are handed to blocks in canonical order.
std::vector<int> realize_slot_blocks(const QuiverDatum& datum, const StratumType& st);

// Rank of the generalized roots vanishing at the point, by anchored
// union-find: slots joined by a vanishing difference root are merged, and a
// component is anchored when a framing weight vanishes on it.
int codim_at(const QuiverDatum& datum, const ExactPoint& point);
int codim_at(const QuiverDatum& datum, const StratumType& st);

// All canonical stratum types of codimension <= bound. Complete: the pattern
// of every exact point with codim <= bound appears. Deterministic order.
std::vector<StratumType> enumerate_strata(const QuiverDatum& datum, int bound);

}  // namespace qcb

#endif
