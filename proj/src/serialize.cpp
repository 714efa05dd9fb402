#include "gf2p/serialize.hpp"

namespace gf2p {

using nlohmann::json;

json to_json(const Factorization& f) {
    json out = json::array();
    for (const auto& [prime, mult] : f.factors) out.push_back({{"prime", format(prime)}, {"mult", mult}});
    return out;
}

json to_json(const PerfectionReport& r) {
    json out{{"subject", format(r.subject)}, {"mode", to_string(r.mode)}, {"verdict", r.verdict}};
    if (r.witness) {
        out["witness"] = {{"prime", format(r.witness->prime)}, {"m1", r.witness->m1}, {"m2", r.witness->m2}};
    }
    return out;
}

json to_json(const MersennePrime& m) {
    return {{"a", m.a}, {"b", m.b}, {"degree", m.degree()}, {"poly", format(m.poly)}};
}

json to_json(const TheoremReport& r) {
    return {{"claim_id", r.claim_id}, {"params", r.params}, {"verdict", to_string(r.verdict)}, {"witness", r.witness}};
}

json classified_factors(const Factorization& f) {
    json out = json::array();
    for (const auto& [prime, mult] : f.factors) {
        json entry{{"prime", format(prime)}, {"mult", mult}, {"degree", prime.deg()}};
        if (auto ab = is_mersenne_prime(prime)) {
            entry["mersenne"] = true;
            entry["a"] = ab->first;
            entry["b"] = ab->second;
        } else {
            entry["mersenne"] = false;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace gf2p
