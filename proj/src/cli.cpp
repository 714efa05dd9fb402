#include "gf2p/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gf2p/divisors.hpp"
#include "gf2p/factor.hpp"
#include "gf2p/mersenne.hpp"
#include "gf2p/search.hpp"
#include "gf2p/serialize.hpp"
#include "gf2p/verify.hpp"

namespace gf2p {

using nlohmann::json;

namespace {

struct Globals {
    std::string format = "text";
    std::uint64_t seed = kDefaultSeed;
    std::string out_file;

    bool json() const { return format == "json"; }
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::uint64_t default_seed() {
    const char* env = std::getenv("GF2P_SEED");
    if (!env || !*env) return kDefaultSeed;
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(env, &used, 0);
        if (env[used] != '\0') throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("GF2P_SEED is not an integer: ") + env);
    }
}

std::string witness_text(const PerfectionReport& r) {
    if (!r.witness) return "";
    return " witness=(" + format(r.witness->prime) + ", " + std::to_string(r.witness->m1) + ", " +
           std::to_string(r.witness->m2) + ")";
}

int cmd_factor(const Globals& g, const std::string& input, std::ostream& out) {
    const Poly p = parse_poly(input);
    if (p.is_zero()) throw UsageError("cannot factor the zero polynomial");
    const Factorization f = factorize(p, g.seed);
    if (g.json()) {
        out << json{{"input", format(p)}, {"factors", classified_factors(f)}}.dump() << '\n';
    } else {
        out << format_factorization(f) << '\n';
    }
    return kExitOk;
}

int cmd_sigma(const Globals& g, const std::string& input, bool unitary, std::ostream& out) {
    const Poly p = parse_poly(input);
    if (p.is_zero()) throw UsageError("divisor sum of the zero polynomial");
    const Mode mode = unitary ? Mode::unitary : Mode::perfect;
    const Poly s = divisor_sum(p, mode, g.seed);
    if (g.json()) {
        out << json{{"input", format(p)}, {"mode", to_string(mode)}, {"sum", format(s)},
                    {"factors", to_json(factorize(s, g.seed))}}
                   .dump()
            << '\n';
    } else {
        out << format(s) << '\n';
    }
    return kExitOk;
}

int cmd_check(const Globals& g, const std::string& input, const std::string& mode_name, std::ostream& out) {
    const Mode mode = mode_from_string(mode_name);
    const Poly p = parse_poly(input);
    if (p.is_zero()) throw UsageError("perfection test of the zero polynomial");
    const PerfectionReport r = check_perfection(p, mode, g.seed);
    if (g.json()) {
        out << to_json(r).dump() << '\n';
    } else {
        out << (r.verdict ? "true" : "false") << witness_text(r) << '\n';
    }
    return r.verdict ? kExitOk : kExitVerdictFail;
}

int cmd_mersenne(const Globals& g, unsigned max_degree, std::ostream& out) {
    for (const MersennePrime& m : enumerate_mersenne_primes(max_degree)) {
        if (g.json()) {
            out << to_json(m).dump() << '\n';
        } else {
            out << m.a << ' ' << m.b << ' ' << m.degree() << ' ' << format(m.poly) << '\n';
        }
    }
    return kExitOk;
}

int cmd_verify(const Globals& g, unsigned max_degree, unsigned max_h, const std::string& claim_id,
               std::size_t budget, unsigned jobs, std::ostream& out) {
    VerifyOptions opts;
    opts.seed = g.seed;
    opts.jobs = jobs;
    opts.max_degree = budget;
    if (!claim_id.empty()) {
        const auto& ids = known_claims();
        if (std::find(ids.begin(), ids.end(), claim_id) == ids.end()) throw UsageError("unknown claim '" + claim_id + "'");
        opts.claim = claim_id;
    }
    bool failed = false;
    for (const TheoremReport& r : run_all(max_degree, max_h, opts)) {
        failed = failed || r.verdict == Verdict::fail;
        if (g.json()) {
            out << to_json(r).dump() << '\n';
        } else {
            out << r.claim_id << ' ' << r.params.dump() << ' ' << to_string(r.verdict) << '\n';
        }
    }
    return failed ? kExitVerdictFail : kExitOk;
}

int cmd_search(const Globals& g, SearchConfig cfg, std::ostream& out) {
    cfg.seed = g.seed;
    std::vector<Poly> hits;
    if (cfg.family == Family::all) {
        hits = search_bruteforce(cfg);
    } else {
        for (auto& r : search_structured(cfg)) hits.push_back(std::move(r.poly));
    }
    const HitReport report = classify_hits(hits, cfg.mode, cfg.seed);
    for (const HitClass& c : report.classes) {
        for (const Poly& h : c.members) {
            if (g.json()) {
                json j{{"poly", format(h)},
                       {"factors", format_factorization(factorize(h, cfg.seed))},
                       {"class_rep", format(c.rep)},
                       {"catalog", c.catalog_name ? json(*c.catalog_name) : json(nullptr)},
                       {"trivial", c.trivial},
                       {"indecomposable", c.indecomposable},
                       {"mersenne_only", c.mersenne_only}};
                out << j.dump() << '\n';
            } else {
                std::string tag = c.catalog_name ? *c.catalog_name : c.trivial ? "trivial" : "uncatalogued";
                if (!c.mersenne_only) tag = "outside-scope";
                out << tag << ' ' << format_factorization(factorize(h, cfg.seed)) << '\n';
            }
        }
    }
    return report.outside_catalog.empty() ? kExitOk : kExitVerdictFail;
}

int cmd_explore_p7(const Globals& g, const std::string& input, std::ostream& out) {
    const Poly p = parse_poly(input);
    if (p.is_zero()) throw UsageError("explore-p7 needs a Mersenne prime");
    const auto m = as_mersenne_prime(p);
    if (!m) throw UsageError(format(p) + " is not a Mersenne prime");
    const AlphaProfile profile = explore_p7(*m);
    std::string bits;
    for (bool b : profile.alpha) bits.push_back(b ? '1' : '0');
    if (g.json()) {
        out << json{{"M", format(m->poly)},
                    {"U6", format_factorization(factorize(profile.u6, g.seed))},
                    {"alpha", bits}}
                   .dump()
            << '\n';
    } else {
        out << format_factorization(factorize(profile.u6, g.seed)) << '\n' << bits << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polynomial divisor sums over GF(2)", "gf2p"};
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    try {
        g.seed = default_seed();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Factorization seed (default: $GF2P_SEED or built-in)");
    app.add_option("--out", g.out_file, "Write output to FILE instead of stdout");

    std::string input;
    std::string mode = "perfect";
    std::string family = "mersenne";
    std::string claim_id;
    unsigned max_degree = 0, max_h = 1, jobs = 1;
    std::size_t budget = VerifyOptions{}.max_degree;
    bool unitary = false, all_powers = false;

    auto* factor = app.add_subcommand("factor", "Factor a polynomial into irreducibles");
    factor->add_option("poly", input, "Expression, hex mask or catalog name")->required();

    auto* sigma_cmd = app.add_subcommand("sigma", "Divisor sum sigma (or sigma* with --unitary)");
    sigma_cmd->add_option("poly", input)->required();
    sigma_cmd->add_flag("--unitary", unitary, "Unitary divisor sum");

    auto* check = app.add_subcommand("check", "Is the polynomial (unitary) perfect?");
    check->add_option("poly", input)->required();
    check->add_option("--mode", mode)->check(CLI::IsMember({"perfect", "unitary"}));

    auto* mersenne = app.add_subcommand("mersenne", "List Mersenne primes up to a degree");
    mersenne->add_option("--max-degree", max_degree)->required();

    auto* verify = app.add_subcommand("verify", "Run the claim checkers");
    verify->add_option("--max-degree", max_degree, "Largest Mersenne prime degree")->required();
    verify->add_option("--max-h", max_h, "Largest h in sigma(M^(2h))")->required();
    verify->add_option("--claim", claim_id, "Only this claim id");
    verify->add_option("--budget", budget, "Largest deg(M^(2h)) to expand");
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* search = app.add_subcommand("search", "Search for (unitary) perfect polynomials");
    search->add_option("--mode", mode)->check(CLI::IsMember({"perfect", "unitary"}));
    search->add_option("--family", family)->check(CLI::IsMember({"mersenne", "all"}));
    search->add_option("--max-degree", max_degree)->required();
    search->add_flag("--all-powers", all_powers, "Unitary mode: list every 2-power");
    search->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* explore = app.add_subcommand("explore-p7", "alpha profile of sigma(sigma(M^6))");
    explore->add_option("poly", input)->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        if (app.got_subcommand(factor)) code = cmd_factor(g, input, buffer);
        else if (app.got_subcommand(sigma_cmd)) code = cmd_sigma(g, input, unitary, buffer);
        else if (app.got_subcommand(check)) code = cmd_check(g, input, mode, buffer);
        else if (app.got_subcommand(mersenne)) code = cmd_mersenne(g, max_degree, buffer);
        else if (app.got_subcommand(verify)) code = cmd_verify(g, max_degree, max_h, claim_id, budget, jobs, buffer);
        else if (app.got_subcommand(search)) {
            SearchConfig cfg;
            cfg.max_degree = max_degree;
            cfg.mode = mode_from_string(mode);
            cfg.family = family_from_string(family);
            cfg.all_powers = all_powers;
            cfg.jobs = jobs;
            code = cmd_search(g, cfg, buffer);
        } else if (app.got_subcommand(explore)) code = cmd_explore_p7(g, input, buffer);
    } catch (const std::logic_error& e) {
        // invalid_argument, domain_error and out_of_range all signal bad input;
        // a bare logic_error is a broken internal invariant.
        const bool input_error = dynamic_cast<const std::invalid_argument*>(&e) ||
                                 dynamic_cast<const std::domain_error*>(&e) ||
                                 dynamic_cast<const std::out_of_range*>(&e);
        err << "error: " << e.what() << '\n';
        return input_error ? kExitUsage : kExitInternal;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }

    if (g.out_file.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(g.out_file, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << g.out_file << '\n';
            return kExitUsage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace gf2p
