#include "qcb/certify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace qcb {

int census_bound(Mode mode) {
  return mode == Mode::SymplecticSingularities ? 3 : 1;
}

std::string mode_name(Mode mode) {
  return mode == Mode::SymplecticSingularities ? "symplectic-singularities"
                                               : "normal-symplectic";
}

std::vector<BigInt> make_witness(int rank,
                                 const std::vector<std::vector<long long>>& hyperplanes) {
  std::vector<BigInt> witness(rank, 0);
  if (hyperplanes.empty()) return witness;
  long long base = 0;
  for (const auto& h : hyperplanes) {
    if ((int)h.size() != rank)
      throw std::invalid_argument("hyperplane arity does not match the lattice");
    long long sum = 0;
    bool nonzero = false;
    for (long long c : h) {
      sum += c < 0 ? -c : c;
      nonzero = nonzero || c != 0;
    }
    if (!nonzero) throw std::invalid_argument("zero functional has no witness");
    base = std::max(base, sum);
  }
  base += 1;
  BigInt power = 1;
  for (int j = 0; j < rank; ++j) {
    witness[j] = power;
    power *= base;
  }
  for (const auto& h : hyperplanes) {
    BigInt value = 0;
    for (int j = 0; j < rank; ++j) value += h[j] * witness[j];
    if (value == 0) throw std::logic_error("witness construction failed");
  }
  return witness;
}

bool validate_witness(const Certificate& cert) {
  if (!cert.has_witness) return false;
  if ((int)cert.witness.size() != cert.lattice.rank()) return false;
  for (const auto& h : cert.hyperplanes) {
    BigInt value = 0;
    for (int j = 0; j < cert.lattice.rank(); ++j) value += h[j] * cert.witness[j];
    if (value == 0) return false;
  }
  return true;
}

namespace {

std::vector<long long> sign_normalized(std::vector<long long> h) {
  for (long long c : h) {
    if (c > 0) return h;
    if (c < 0) {
      for (auto& x : h) x = -x;
      return h;
    }
  }
  return h;
}

template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  threads = std::min(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&]() {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

Certificate certify(const QuiverDatum& input, Mode mode, int threads) {
  input.validate();

  Certificate cert;
  cert.mode = mode;
  cert.datum = trim(input);
  cert.input_trimmed = !(cert.datum == input);
  cert.lattice = build_flavour(cert.datum);
  cert.kb_revision = knowledge_base_revision();

  const QuiverDatum& datum = cert.datum;
  std::vector<StratumType> strata = enumerate_strata(datum, census_bound(mode));

  cert.census.resize(strata.size());
  parallel_for((int)strata.size(), threads, [&](int idx) {
    CensusEntry entry;
    entry.stratum = strata[idx];
    entry.codim = codim_at(datum, strata[idx]);
    entry.decomposition = decompose_at(datum, strata[idx]);
    cert.census[idx] = std::move(entry);
  });

  // Deduplicate factors across strata; only finitely many local theories
  // arise and repeated ones get a single verdict.
  std::map<std::pair<std::vector<int>, std::vector<int>>, const Factor*> distinct;
  for (const auto& entry : cert.census)
    for (const auto& factor : entry.decomposition.factors)
      distinct.try_emplace({factor.datum.v, factor.datum.w}, &factor);

  bool all_certified = true;
  std::set<std::string> citations, obstructions;
  std::set<std::vector<long long>> seen_hyperplanes;
  for (const auto& [key, factor] : distinct) {
    FactorVerdict fv;
    fv.v = key.first;
    fv.w = key.second;
    fv.verdict = verdict(factor->datum);
    if (fv.verdict.certified) {
      citations.insert(fv.verdict.citation);
      std::vector<int> label_map = restriction_label_map(datum, *factor);
      for (const auto& h : fv.verdict.hyperplanes) {
        std::vector<long long> pulled(cert.lattice.rank(), 0);
        for (size_t k = 0; k < label_map.size(); ++k) pulled[label_map[k]] = h[k];
        pulled = sign_normalized(std::move(pulled));
        if (seen_hyperplanes.insert(pulled).second)
          cert.hyperplanes.push_back(pulled);
      }
    } else {
      all_certified = false;
      if (!fv.verdict.obstruction.empty()) obstructions.insert(fv.verdict.obstruction);
    }
    cert.verdicts.push_back(std::move(fv));
  }

  cert.witness = make_witness(cert.lattice.rank(), cert.hyperplanes);
  cert.has_witness = true;
  cert.citations.assign(citations.begin(), citations.end());
  cert.obstructions.assign(obstructions.begin(), obstructions.end());
  cert.conclusion = all_certified && validate_witness(cert) ? Conclusion::Certified
                                                            : Conclusion::Inconclusive;
  return cert;
}

namespace {

bool verdicts_equal(const SmoothnessVerdict& a, const SmoothnessVerdict& b) {
  return a.certified == b.certified && a.generic_flag == b.generic_flag &&
         a.hyperplanes == b.hyperplanes && a.citation == b.citation &&
         a.reason == b.reason && a.obstruction == b.obstruction;
}

}  // namespace

bool operator==(const Certificate& a, const Certificate& b) {
  if (!(a.datum == b.datum) || a.mode != b.mode || a.input_trimmed != b.input_trimmed ||
      a.conclusion != b.conclusion || a.kb_revision != b.kb_revision)
    return false;
  if (a.census.size() != b.census.size() || a.verdicts.size() != b.verdicts.size())
    return false;
  for (size_t i = 0; i < a.census.size(); ++i) {
    if (!(a.census[i].stratum == b.census[i].stratum) ||
        a.census[i].codim != b.census[i].codim ||
        !(a.census[i].decomposition == b.census[i].decomposition))
      return false;
  }
  for (size_t i = 0; i < a.verdicts.size(); ++i) {
    if (a.verdicts[i].v != b.verdicts[i].v || a.verdicts[i].w != b.verdicts[i].w ||
        !verdicts_equal(a.verdicts[i].verdict, b.verdicts[i].verdict))
      return false;
  }
  return a.lattice == b.lattice && a.hyperplanes == b.hyperplanes &&
         a.has_witness == b.has_witness && a.witness == b.witness &&
         a.citations == b.citations && a.obstructions == b.obstructions;
}

}  // namespace qcb
