#ifndef QCB_IO_HPP
#define QCB_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "qcb/certify.hpp"
#include "qcb/decompose.hpp"
#include "qcb/flavour.hpp"

namespace qcb {

using Json = nlohmann::ordered_json;

struct QuiverInput {
  QuiverDatum datum;
  std::optional<Coweight> kappa;
};

// Reads a quiver file: fields `vertices`, `edges` (0-indexed [source,
// target] pairs), `v`, `w`, optional `kappa`. Throws std::runtime_error
// with a positioned message on malformed input.
QuiverInput parse_quiver_file(const std::string& path);
QuiverInput parse_quiver_text(const std::string& text, const std::string& origin);

Json datum_to_json(const QuiverDatum& datum);
QuiverDatum datum_from_json(const Json& j);

Json stratum_to_json(const StratumType& st);
StratumType stratum_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

}  // namespace qcb

#endif
