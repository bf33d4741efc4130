#ifndef FROBSTRAT_SERIALIZE_HPP
#define FROBSTRAT_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "frobstrat/local_frobenius.hpp"
#include "frobstrat/polygons.hpp"
#include "frobstrat/strata.hpp"

// JSON shapes shared by the CLI and the Python module. Objects use
// nlohmann's default std::map storage, so keys come out sorted.

namespace frobstrat {

/* [[rank, degree], ...] in rank order. */
nlohmann::json to_json(const LatticePolygon& pg);

/* {"E1": c1, "E2": c2, ...}, keyed by filtration level. */
nlohmann::json colengths_json(const ColengthProfile& profile);

/* {"closure", "counts": {"q=<q>", "closed_form"}, "fiber_dim", "moduli_dim",
 *  "polygon_id", "quot_dim", "vertices"}; absent dimensions are null. */
nlohmann::json to_json(const StratumReport& row);

nlohmann::json to_json(const FiberCensus& census);

/* "0,0;1,1;3,0" */
std::string vertices_tsv(const LatticePolygon& pg);

std::string to_string(const Rational& q);

}  // namespace frobstrat

#endif
