#pragma once

#include <json.hpp>

#include "braidforge/monomial.hpp"
#include "braidforge/report.hpp"
#include "braidforge/reps.hpp"

namespace braidforge {

using Json = nlohmann::ordered_json;

/// {"rows":R,"cols":C,"entries":[[re,im],...]} row-major.
Json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const Json& j);

/// {"dim":d,"target":[...],"phase":[[re,im],...]} with 1-based targets.
Json monomial_to_json(const MonomialOperator& m);
MonomialOperator monomial_from_json(const Json& j);

/// {"dim":d,"amplitudes":[[re,im],...]}.
Json state_to_json(const StateVector& v);
StateVector state_from_json(const Json& j);

/// {"class":2,"m":4,"N":3,"k":2} or {"class":1,"m":3,"k":2,"q":[[re,im],...]}
/// where q lists the per-label phases J, ..., -J.
Json spec_to_json(const RepSpec& spec);
RepSpec spec_from_json(const Json& j);

/// Report with its checks; elapsed_ms only when timing is set.
Json report_to_json(const VerificationReport& r, bool timing = false);

}  // namespace braidforge
