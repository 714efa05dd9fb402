#include "gf2p/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "gf2p/mersenne.hpp"

namespace gf2p {

std::string_view to_string(Family f) noexcept { return f == Family::all ? "all" : "mersenne"; }

Family family_from_string(std::string_view s) {
    if (s == "mersenne" || s == "mersenne_restricted") return Family::mersenne_restricted;
    if (s == "all") return Family::all;
    throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

namespace {

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) body(i);
    };
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
    worker();
}

// Prime 0 is x, prime 1 is x+1, the rest are odd Mersenne primes.
struct Part {
    unsigned exp = 0;
    std::vector<std::pair<std::size_t, unsigned>> contrib;
};

struct Universe {
    std::vector<Poly> primes;
    std::vector<std::size_t> degree;
    std::vector<std::vector<Part>> parts;  // by prime, increasing exponent
    std::vector<std::size_t> order;        // DFS order
};

Universe build_universe(const SearchConfig& cfg) {
    const unsigned d = cfg.max_degree;
    Universe u;
    u.primes = {Poly::x(), Poly::x_plus_one()};
    for (const auto& m : enumerate_mersenne_primes(d)) u.primes.push_back(m.poly);
    const std::size_t n = u.primes.size();
    for (const Poly& p : u.primes) u.degree.push_back(p.deg());

    std::unordered_map<Poly, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(u.primes[i], i);

    // Candidate parts: factor every sigma(P^e) once, drop those with a foreign prime.
    std::vector<std::vector<Part>> candidates(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (unsigned e = 1; e * u.degree[i] <= d; ++e) {
            const Poly s = cfg.mode == Mode::perfect ? sigma_prime_power(u.primes[i], e)
                                                     : pow(u.primes[i], e) + Poly::one();
            Part part{e, {}};
            bool ok = true;
            for (const auto& pp : factorize(s, cfg.seed).factors) {
                auto it = index.find(pp.prime);
                if (it == index.end()) {
                    ok = false;
                    break;
                }
                part.contrib.emplace_back(it->second, pp.mult);
            }
            if (ok) candidates[i].push_back(std::move(part));
        }
    }

    // An odd prime is usable only if a usable part of some other prime produces it.
    std::vector<bool> usable(n, true);
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<bool> produced(n, false);
        produced[0] = produced[1] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!usable[i]) continue;
            for (const Part& part : candidates[i]) {
                const bool ok = std::all_of(part.contrib.begin(), part.contrib.end(),
                                            [&](const auto& c) { return usable[c.first]; });
                if (!ok) continue;
                for (const auto& c : part.contrib) produced[c.first] = true;
            }
        }
        for (std::size_t i = 2; i < n; ++i) {
            if (usable[i] && !produced[i]) {
                usable[i] = false;
                changed = true;
            }
        }
    }

    u.parts.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!usable[i]) continue;
        for (Part& part : candidates[i]) {
            const bool ok = std::all_of(part.contrib.begin(), part.contrib.end(),
                                        [&](const auto& c) { return usable[c.first]; });
            if (ok) u.parts[i].push_back(std::move(part));
        }
    }
    for (std::size_t i = 2; i < n; ++i) {
        if (usable[i]) u.order.push_back(i);
    }
    std::stable_sort(u.order.begin(), u.order.end(),
                     [&](std::size_t a, std::size_t b) { return u.degree[a] > u.degree[b]; });
    u.order.push_back(1);
    u.order.push_back(0);
    return u;
}

class Searcher {
public:
    Searcher(const Universe& u, unsigned max_degree)
        : u_(u), max_degree_(max_degree), need_(u.primes.size(), 0), exp_(u.primes.size(), 0),
          decided_(u.primes.size(), false) {}

    // Exponent choices for the first prime in DFS order, used to split work.
    std::vector<unsigned> first_choices() const {
        std::vector<unsigned> out{0};
        for (const Part& p : u_.parts[u_.order[0]]) out.push_back(p.exp);
        return out;
    }

    void run_from(unsigned first_exp, std::vector<std::vector<unsigned>>& hits) {
        hits_ = &hits;
        const std::size_t q = u_.order[0];
        if (first_exp == 0) {
            decided_[q] = true;
            dfs(1, 0);
            decided_[q] = false;
            return;
        }
        for (const Part& p : u_.parts[q]) {
            if (p.exp == first_exp) try_part(0, q, p, 0);
        }
    }

private:
    std::size_t pending_degree(std::size_t from) const {
        std::size_t s = 0;
        for (std::size_t k = from; k < u_.order.size(); ++k) s += need_[u_.order[k]] * u_.degree[u_.order[k]];
        return s;
    }

    void try_part(std::size_t pos, std::size_t q, const Part& p, std::size_t used) {
        const std::size_t deg = used + p.exp * u_.degree[q];
        if (deg > max_degree_) return;
        bool ok = true;
        for (const auto& [i, m] : p.contrib) {
            need_[i] += m;
            if (decided_[i] && need_[i] > exp_[i]) ok = false;
        }
        exp_[q] = p.exp;
        decided_[q] = true;
        if (ok && deg + pending_degree(pos + 1) <= max_degree_) dfs(pos + 1, deg);
        decided_[q] = false;
        exp_[q] = 0;
        for (const auto& [i, m] : p.contrib) need_[i] -= m;
    }

    void dfs(std::size_t pos, std::size_t used) {
        if (pos == u_.order.size()) {
            if (need_ == exp_ && std::any_of(exp_.begin(), exp_.end(), [](unsigned e) { return e > 0; })) {
                hits_->push_back(exp_);
            }
            return;
        }
        const std::size_t q = u_.order[pos];
        if (need_[q] == 0) {
            decided_[q] = true;
            dfs(pos + 1, used);
            decided_[q] = false;
        }
        for (const Part& p : u_.parts[q]) {
            if (p.exp >= need_[q]) try_part(pos, q, p, used);
        }
    }

    const Universe& u_;
    std::size_t max_degree_;
    std::vector<unsigned> need_, exp_;
    std::vector<bool> decided_;
    std::vector<std::vector<unsigned>>* hits_ = nullptr;
};

}  // namespace

std::vector<SearchResult> search_structured(const SearchConfig& cfg) {
    if (cfg.family != Family::mersenne_restricted) {
        throw std::invalid_argument("structured search covers the Mersenne family only");
    }
    if (cfg.max_degree < 2) throw std::invalid_argument("max_degree must be at least 2");

    const Universe u = build_universe(cfg);
    const std::vector<unsigned> choices = Searcher(u, cfg.max_degree).first_choices();
    std::vector<std::vector<std::vector<unsigned>>> found(choices.size());
    parallel_for(choices.size(), cfg.jobs, [&](std::size_t i) {
        Searcher s(u, cfg.max_degree);
        s.run_from(choices[i], found[i]);
    });

    std::set<Poly> polys;
    for (const auto& batch : found) {
        for (const auto& exps : batch) {
            Poly a = Poly::one();
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i]) a = mul(a, pow(u.primes[i], exps[i]));
            }
            polys.insert(cfg.mode == Mode::unitary && !cfg.all_powers ? canonical_class_rep(a) : a);
        }
    }

    std::vector<SearchResult> out;
    for (const Poly& a : polys) {
        PerfectionReport report = check_perfection(a, cfg.mode, cfg.seed);
        if (!report.verdict) throw std::logic_error("structured search produced a non-hit " + format(a));
        out.push_back({a, std::move(report)});
    }
    return out;
}

std::vector<Poly> search_bruteforce(const SearchConfig& cfg) {
    if (cfg.family != Family::all) throw std::invalid_argument("brute-force search runs with family = all");
    if (cfg.max_degree > cfg.guard) {
        throw BudgetError("brute-force search is limited to degree " + std::to_string(cfg.guard));
    }
    const Poly::Word end = Poly::Word{1} << (cfg.max_degree + 1);
    constexpr Poly::Word kChunk = 1 << 12;
    const std::size_t chunks = static_cast<std::size_t>((end + kChunk - 1) / kChunk);
    std::vector<std::vector<Poly>> found(chunks);
    parallel_for(chunks, cfg.jobs, [&](std::size_t c) {
        const Poly::Word lo = std::max<Poly::Word>(2, c * kChunk);
        const Poly::Word hi = std::min<Poly::Word>(end, (c + 1) * kChunk);
        for (Poly::Word mask = lo; mask < hi; ++mask) {
            const Poly a = Poly::from_mask(mask);
            if (divisor_sum(a, cfg.mode, cfg.seed) == a) found[c].push_back(a);
        }
    });
    std::vector<Poly> out;
    for (auto& batch : found) out.insert(out.end(), batch.begin(), batch.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool is_trivial_perfect(const Poly& a) {
    const Poly base = Poly::x() * Poly::x_plus_one();
    Poly p = base;
    for (unsigned n = 1; p.deg() <= a.deg(); ++n) {
        if (p == a) return true;
        p = pow(base, (std::uint64_t{1} << (n + 1)) - 1);
    }
    return false;
}

}  // namespace

HitReport classify_hits(const std::vector<Poly>& hits, Mode mode, std::uint64_t seed) {
    const Catalog& cat = catalog();
    std::map<Poly, std::string> known;
    if (mode == Mode::perfect) {
        for (int i = 1; i <= 9; ++i) known.emplace(cat.at("T" + std::to_string(i)), "T" + std::to_string(i));
    } else {
        for (int i = 1; i <= 9; ++i) {
            known.emplace(canonical_class_rep(cat.at("B" + std::to_string(i))), "B" + std::to_string(i));
        }
    }

    std::map<Poly, std::vector<Poly>> groups;
    for (const Poly& h : hits) {
        groups[mode == Mode::unitary ? canonical_class_rep(h) : h].push_back(h);
    }

    HitReport report{mode, {}, {}, {}};
    for (auto& [rep, members] : groups) {
        HitClass c;
        c.rep = rep;
        std::sort(members.begin(), members.end());
        c.members = members;
        c.factors = factorize(rep, seed);
        if (auto it = known.find(rep); it != known.end()) c.catalog_name = it->second;
        c.trivial = mode == Mode::perfect ? is_trivial_perfect(rep) : rep == Poly::x() * Poly::x_plus_one();
        for (const auto& pp : c.factors.factors) {
            if (pp.prime.deg() > 1 && !is_mersenne_prime(pp.prime)) c.mersenne_only = false;
        }
        c.indecomposable = c.factors.omega() > kMaxIndecomposableOmega || is_indecomposable(rep, mode);
        if (!c.mersenne_only) {
            report.outside_scope.push_back(rep);
        } else if (!c.trivial && !c.catalog_name) {
            report.outside_catalog.push_back(rep);
        }
        report.classes.push_back(std::move(c));
    }
    return report;
}

}  // namespace gf2p
