#ifndef QCB_DECOMPOSE_HPP
#define QCB_DECOMPOSE_HPP

#include <vector>

#include "qcb/arrangement.hpp"
#include "qcb/quiver.hpp"

namespace qcb {

// One connected factor of the local theory at a stratum: the parent quiver
// with restricted dimension vectors, trimmed. Framing is only ever carried
// by factors of the zero eigenvalue block.
struct Factor {
  QuiverDatum datum;
  bool zero_tag = false;
  int block_index = 0;                // block of the generating stratum type
  std::vector<int> slot_embedding;    // factor slot -> parent slot, vertex-preserving
};

struct Decomposition {
  QuiverDatum parent;
  StratumType stratum;
  std::vector<Factor> factors;  // zero-tag factors first, then by smallest embedded slot
};

Decomposition decompose_at(const QuiverDatum& datum, const StratumType& st);
Decomposition decompose_at(const QuiverDatum& datum, const ExactPoint& point);

bool operator==(const Factor& a, const Factor& b);
bool operator==(const Decomposition& a, const Decomposition& b);

}  // namespace qcb

#endif
