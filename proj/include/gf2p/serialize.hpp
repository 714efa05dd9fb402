#pragma once

#include <json.hpp>

#include "gf2p/divisors.hpp"
#include "gf2p/factor.hpp"
#include "gf2p/mersenne.hpp"
#include "gf2p/verify.hpp"

namespace gf2p {

/// [{"prime": "<expr>", "mult": k}, ...] in canonical factor order.
nlohmann::json to_json(const Factorization& f);
/// {subject, mode, verdict, witness: {prime, m1, m2}}; witness omitted when perfect.
nlohmann::json to_json(const PerfectionReport& r);
/// {a, b, degree, poly}
nlohmann::json to_json(const MersennePrime& m);
/// {claim_id, params, verdict, witness}
nlohmann::json to_json(const TheoremReport& r);

/// Prime factors with their Mersenne classification, as used in report witnesses.
nlohmann::json classified_factors(const Factorization& f);

}  // namespace gf2p
