#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "checks.hpp"
#include "gf2p/divisors.hpp"
#include "gf2p/factor.hpp"
#include "gf2p/intmath.hpp"
#include "gf2p/mersenne.hpp"
#include "gf2p/search.hpp"
#include "gf2p/serialize.hpp"
#include "gf2p/verify.hpp"
#include "helpers.hpp"

using namespace gf2p;

namespace {

constexpr std::uint64_t kSeed = 20240611;

void expect(const checks::Outcome& o) {
    if (o) FAIL(*o);
}

std::set<Poly> to_set(const std::vector<Poly>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("poly") {
    TEST_CASE("ring axioms up to degree 512") {
        std::mt19937_64 rng(kSeed);
        expect(checks::ring_axioms(rng, 2000, 512));
    }
    TEST_CASE("carry-less kernel equals schoolbook on 10^4 pairs") {
        std::mt19937_64 rng(kSeed + 1);
        expect(checks::clmul_matches_schoolbook(rng, 10000, 700));
    }
    TEST_CASE("division reconstruction") {
        std::mt19937_64 rng(kSeed + 2);
        expect(checks::division_reconstruction(rng, 3000, 400));
    }
    TEST_CASE("Frobenius is a bit spread up to degree 256") {
        std::mt19937_64 rng(kSeed + 3);
        expect(checks::frobenius(rng, 256));
    }
    TEST_CASE("bar is a ring involution") {
        std::mt19937_64 rng(kSeed + 4);
        expect(checks::bar_homomorphism(rng, 2000, 300));
    }
    TEST_CASE("alpha matches the formatted exponents") {
        std::mt19937_64 rng(kSeed + 5);
        for (int i = 0; i < 300; ++i) {
            const Poly p = gf2p::testing::random_up_to(rng, 90);
            const std::string text = format(p);
            const std::size_t d = p.deg();
            for (std::size_t l = 0; l <= d; ++l) {
                const std::size_t e = d - l;
                const std::string term = e == 0 ? "1" : e == 1 ? "x" : "x^" + std::to_string(e);
                bool present = false;
                std::size_t start = 0;
                while (start <= text.size()) {
                    const std::size_t stop = std::min(text.find('+', start), text.size());
                    present = present || text.substr(start, stop - start) == term;
                    start = stop + 1;
                }
                CHECK(alpha(p, l) == present);
            }
        }
    }
}

TEST_SUITE("factor") {
    TEST_CASE("factorization reconstruction on 10^4 random inputs") {
        std::mt19937_64 rng(kSeed + 6);
        expect(checks::factorization_reconstruction(rng, 10000, 128, false));
        expect(checks::factorization_reconstruction(rng, 500, 200, true));
    }
    TEST_CASE("counting identity sum d N2(d) = 2^m") {
        for (std::uint64_t m = 1; m <= 63; ++m) {
            unsigned __int128 total = 0;
            for (std::uint64_t d : intmath::divisors(m)) total += static_cast<unsigned __int128>(d) * count_irreducibles(d);
            CHECK(total == static_cast<unsigned __int128>(1) << m);
        }
    }
    TEST_CASE("phi(m) < N2(m) for 4 <= m <= 24") {
        for (unsigned m = 4; m <= 24; ++m) CHECK(euler_phi(m) < count_irreducibles(m));
    }
    TEST_CASE("irreducibles of Mersenne-exponent degree are primitive") {
        for (unsigned r : {2u, 3u, 5u, 7u}) {
            const Poly::Word top = Poly::Word{1} << r;
            for (Poly::Word low = 0; low < top; ++low) {
                const Poly p = Poly::from_mask(top | low);
                if (is_irreducible(p)) CHECK(is_primitive(p));
            }
        }
        std::mt19937_64 rng(kSeed + 7);
        for (int i = 0; i < 50; ++i) CHECK(is_primitive(checks::random_irreducible(rng, 13)));
    }
}

TEST_SUITE("divisors") {
    TEST_CASE("oracle agreement exhaustive to degree 12") { expect(checks::oracle_agreement_exhaustive(12)); }
    TEST_CASE("oracle agreement on random inputs within the guard") {
        std::mt19937_64 rng(kSeed + 8);
        expect(checks::oracle_agreement_random(rng, 1000, kOracleMaxDegree));
    }
    TEST_CASE("multiplicativity on coprime pairs") {
        std::mt19937_64 rng(kSeed + 9);
        expect(checks::multiplicativity(rng, 500, 64));
    }
    TEST_CASE("sigma and sigma* tables for n <= 4") { expect(checks::divisor_sum_tables(4)); }
    TEST_CASE("sigma* of prime powers on 200 triples") {
        std::mt19937_64 rng(kSeed + 10);
        expect(checks::unitary_prime_power_identity(rng, 200));
    }
    TEST_CASE("witness exists iff the verdict is false") {
        std::mt19937_64 rng(kSeed + 11);
        for (int i = 0; i < 300; ++i) {
            const Poly a = gf2p::testing::random_up_to(rng, 40);
            for (Mode mode : {Mode::perfect, Mode::unitary}) {
                const PerfectionReport r = check_perfection(a, mode);
                CHECK(r.verdict == !r.witness.has_value());
                if (!r.witness) continue;
                const Poly s = divisor_sum(a, mode);
                CHECK(r.witness->m1 == exact_power(r.witness->prime, a));
                CHECK(r.witness->m2 == exact_power(r.witness->prime, s));
                CHECK(r.witness->m1 != r.witness->m2);
            }
        }
    }
}

TEST_SUITE("mersenne") {
    TEST_CASE("enumeration invariants up to degree 24") {
        std::map<std::size_t, unsigned> per_degree;
        for (const auto& m : enumerate_mersenne_primes(24)) {
            ++per_degree[m.degree()];
            CHECK(std::gcd(m.a, m.b) == 1);
            CHECK(as_mersenne_prime(m.poly) == m);
            CHECK(as_mersenne_prime(bar(m.poly))->a == m.b);
        }
        for (unsigned m = 4; m <= 24; ++m) {
            CHECK(per_degree[m] <= euler_phi(m));
            CHECK(count_irreducibles(m) - per_degree[m] >= 1);
        }
        CHECK(per_degree[8] == 0);
        CHECK(per_degree[16] == 0);
        CHECK(per_degree[24] == 0);
    }
}

TEST_SUITE("verify") {
    TEST_CASE("no in-scope failure up to degree 12, h <= 30") {
        VerifyOptions opts;
        opts.jobs = 2;
        for (const auto& r : run_all(12, 30, opts)) {
            CAPTURE(to_json(r).dump());
            CHECK(r.verdict != Verdict::fail);
        }
    }
    TEST_CASE("report streams are deterministic and independent of --jobs") {
        VerifyOptions one, many;
        many.jobs = 4;
        const auto a = run_all(6, 12, one), b = run_all(6, 12, many);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
    }
}

TEST_SUITE("search") {
    TEST_CASE("bar closure and unitary closure of hits") {
        SearchConfig cfg;
        cfg.max_degree = 40;
        cfg.all_powers = true;
        for (Mode mode : {Mode::perfect, Mode::unitary}) {
            cfg.mode = mode;
            std::vector<Poly> hits;
            for (const auto& r : search_structured(cfg)) hits.push_back(r.poly);
            const auto set = to_set(hits);
            for (const Poly& h : hits) CHECK(set.count(bar(h)) == 1);
            if (mode == Mode::unitary) expect(checks::unitary_closure(hits));
        }
    }
    TEST_CASE("monotone budgets") {
        SearchConfig small, large;
        small.max_degree = 20;
        large.max_degree = 44;
        for (Mode mode : {Mode::perfect, Mode::unitary}) {
            small.mode = large.mode = mode;
            std::set<Poly> a, b;
            for (const auto& r : search_structured(small)) a.insert(r.poly);
            for (const auto& r : search_structured(large)) b.insert(r.poly);
            CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
        }
    }
    TEST_CASE("oracle containment at degree 16") {
        SearchConfig brute;
        brute.family = Family::all;
        brute.max_degree = 16;
        SearchConfig structured;
        structured.max_degree = 16;
        structured.all_powers = true;
        for (Mode mode : {Mode::perfect, Mode::unitary}) {
            brute.mode = structured.mode = mode;
            std::set<Poly> expected;
            for (const auto& r : search_structured(structured)) expected.insert(r.poly);
            std::set<Poly> found;
            for (const auto& c : classify_hits(search_bruteforce(brute), mode).classes) {
                if (c.mersenne_only) found.insert(c.members.begin(), c.members.end());
            }
            CHECK(found == expected);
        }
    }
    TEST_CASE("non-hits near the boundary carry a valid witness") {
        for (const Poly& t : catalog().perfect()) {
            for (const Poly& near : {t * Poly::x(), t + Poly::one(), square(t)}) {
                const PerfectionReport r = is_perfect(near);
                CHECK_FALSE(r.verdict);
                REQUIRE(r.witness);
                CHECK(exact_power(r.witness->prime, near) == r.witness->m1);
            }
        }
    }
}
