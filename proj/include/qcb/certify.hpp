#ifndef QCB_CERTIFY_HPP
#define QCB_CERTIFY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "qcb/classify.hpp"
#include "qcb/decompose.hpp"
#include "qcb/flavour.hpp"

namespace qcb {

using BigInt = boost::multiprecision::cpp_int;

enum class Mode { SymplecticSingularities, NormalSymplectic };
enum class Conclusion { Certified, Inconclusive };

int census_bound(Mode mode);  // 3, resp. 1
std::string mode_name(Mode mode);

struct CensusEntry {
  StratumType stratum;
  int codim = 0;
  Decomposition decomposition;
};

struct FactorVerdict {
  std::vector<int> v;
  std::vector<int> w;
  SmoothnessVerdict verdict;
};

struct Certificate {
  QuiverDatum datum;  // trimmed input
  Mode mode = Mode::SymplecticSingularities;
  bool input_trimmed = false;  // true when trim() changed the input
  std::vector<CensusEntry> census;
  std::vector<FactorVerdict> verdicts;  // deduplicated, sorted by (v, w)
  FlavourLattice lattice;
  std::vector<std::vector<long long>> hyperplanes;  // on the parent lattice
  bool has_witness = false;
  std::vector<BigInt> witness;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::vector<std::string> citations;
  std::vector<std::string> obstructions;
  std::uint64_t kb_revision = 0;
};

// Runs the full pipeline: stratum census at the mode's bound, local
// decompositions, per-factor verdicts, hyperplane pullback, witness.
// Never fails on a valid datum.
Certificate certify(const QuiverDatum& datum, Mode mode, int threads = 1);

// Integer coweight avoiding every functional: coordinate j gets B^j for a
// base B exceeding the largest absolute coefficient sum.
std::vector<BigInt> make_witness(int rank,
                                 const std::vector<std::vector<long long>>& hyperplanes);

// Exact re-evaluation of every recorded functional at the witness.
bool validate_witness(const Certificate& cert);

bool operator==(const Certificate& a, const Certificate& b);

}  // namespace qcb

#endif
