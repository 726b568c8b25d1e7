#include "repcat/errors.hpp"
#include "repcat/oracle.hpp"
#include "repcat/solver.hpp"

#include <doctest.h>

#include <bitset>
#include <random>

using namespace repcat;

namespace {

bool matches_oracle(const SolutionSet& s, const CongruenceProblem& problem, u64 kmax) {
    const auto hits = brute_force_solve(problem, kmax);
    std::size_t i = 0;
    for (u64 k = 1; k <= kmax; ++k) {
        const bool expected = i < hits.size() && hits[i] == k;
        if (expected)
            ++i;
        if (contains(s, k) != expected)
            return false;
    }
    return true;
}

u64 ipow(u64 p, unsigned e) {
    u64 r = 1;
    while (e--)
        r *= p;
    return r;
}

} // namespace

TEST_CASE("worked example: 18(k)_3 == 2 (mod 2^4)") {
    const auto [s, trace] = solve_prime_power(18, 3, 2, 2, 4);
    CHECK(s.as_progression() == Progression{1, 4, 1});

    std::vector<Step> path;
    for (const auto& st : trace.steps())
        path.push_back(st.step);
    CHECK(path == std::vector<Step>{Step::I, Step::II, Step::III, Step::VII, Step::VIII, Step::X, Step::XI, Step::IX});

    CHECK(trace.value(Step::I, "d") == 2);
    CHECK(trace.value(Step::II, "L") == 3);
    CHECK(trace.value(Step::II, "alpha1") == 3);
    CHECK(trace.value(Step::II, "beta") == 1);
    CHECK(trace.value(Step::II, "alpha2") == 4);
    CHECK(trace.value(Step::II, "a1") == 1);
    CHECK(trace.value(Step::II, "a2") == 11);
    CHECK(trace.value(Step::II, "a2_signed") == -5);
    CHECK(trace.value(Step::VII, "mu1") == 1);
    CHECK(trace.value(Step::VII, "mu2") == 1);
    CHECK(trace.value(Step::VII, "nu1") == 3);
    CHECK(trace.value(Step::VII, "nu2") == 1);
    CHECK(trace.value(Step::VIII, "f") == 1);
}

TEST_CASE("worked example: 18(k)_3 == 2 (mod 13)") {
    const auto [s, trace] = solve_prime_power(18, 3, 2, 13, 1);
    CHECK(s.as_progression() == Progression{3, 13, 3});
    CHECK(trace.value(Step::II, "beta") == 1);
    CHECK(trace.value(Step::II, "alpha2") == 2);
    CHECK(trace.value(Step::II, "a1") == 3);
    CHECK(trace.value(Step::II, "a2") == 79);
    CHECK(trace.visited(Step::XII));
    CHECK(trace.value(Step::XIII, "g") == 2);
    CHECK(trace.value(Step::XIII, "ind_b") == 124);
    CHECK(trace.value(Step::XIII, "ind_a2") == 24);
    CHECK(trace.value(Step::XIII, "f") == 12);
    CHECK(trace.value(Step::XIV, "residue") == 3);
    CHECK(trace.value(Step::XIV, "modulus") == 13);
}

TEST_CASE("worked example: full modulus 208") {
    const auto [s, trace] = solve({18, 3, 2, 208});
    CHECK(s.as_progression() == Progression{29, 52, 29});
    CHECK(trace.steps().back().step == Step::CRT);
    CHECK(trace.value(Step::CRT, "residue") == 29);
    CHECK(trace.value(Step::CRT, "modulus") == 52);
}

TEST_CASE("small named cases") {
    SUBCASE("d does not divide a") {
        const auto [s, trace] = solve_prime_power(18, 3, 5, 2, 1);
        CHECK(s.is_empty());
        CHECK(trace.steps().size() == 1);
        CHECK(brute_force_solve({18, 3, 5, 2}, 100).empty());
    }
    SUBCASE("p^alpha divides n and a") {
        const auto [s, trace] = solve_prime_power(8, 10, 16, 2, 3);
        CHECK(s.is_naturals());
        CHECK(trace.value(Step::II, "alpha2") == 0);
    }
    SUBCASE("every decimal concatenation of 18 ends in 18") {
        CHECK(solve({18, 10, 18, 100}).solution.is_naturals());
        CHECK(brute_force_solve({18, 10, 18, 100}, 400).size() == 400);
    }
    SUBCASE("modulus 1") {
        CHECK(solve({18, 3, 2, 1}).solution.is_naturals());
        CHECK(solve({5, 7, -3, 1}).solution.is_naturals());
    }
    SUBCASE("single solution from the p | b branch") {
        // 2^k - 1 == 7 (mod 16) only for k = 3
        const auto [s, trace] = solve({1, 2, 7, 16});
        CHECK(s == SolutionSet::finite({3}));
        CHECK(trace.visited(Step::VI));
    }
    SUBCASE("threshold from the p | b branch") {
        // 10^k - 1 over 9 times 9: 99..9 == -1 (mod 8) for k >= 3
        const auto [s, trace] = solve({9, 10, -1, 8});
        CHECK(trace.visited(Step::IV));
        CHECK(matches_oracle(s, {9, 10, -1, 8}, 200));
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(solve_prime_power(18, 3, 2, 4, 2), DomainError);
    CHECK_THROWS_AS(solve_prime_power(18, 3, 2, 2, 0), DomainError);
    CHECK_THROWS_AS(solve_prime_power(0, 3, 2, 2, 1), DomainError);
    CHECK_THROWS_AS(solve_prime_power(18, 1, 2, 2, 1), DomainError);
    CHECK_THROWS_AS(solve_prime_power(18, 3, 2, 2, 63), CapacityError);
    CHECK_THROWS_AS(solve({18, 3, 2, 0}), DomainError);
    // 2^62 itself is fine for p^alpha, but beta pushes alpha2 past capacity
    CHECK_THROWS_AS(solve_prime_power(1, 3, 1, 2, 62), CapacityError);
}

TEST_CASE("prime-power answers match brute force and reach every step") {
    std::mt19937_64 rng(2024);
    std::bitset<kPrimePowerStepCount> seen;
    const u64 primes[] = {2, 3, 5, 7, 13};
    int checked = 0;
    for (int i = 0; i < 4000; ++i) {
        const u64 p = primes[rng() % std::size(primes)];
        unsigned alpha = static_cast<unsigned>(rng() % 9 + 1);
        while (ipow(p, alpha) > 50'000)
            --alpha;
        const u64 m = ipow(p, alpha);
        const u64 b = (rng() % 3 == 0) ? p * (rng() % 4 + 1) : rng() % 15 + 2;
        const u64 n = (rng() % 2) ? rng() % 30 + 1 : (rng() % 3000 + 1) * ((rng() % 2) ? p : 1);
        const i64 a = static_cast<i64>(rng() % (2 * m)) - static_cast<i64>(m);
        const auto [s, trace] = solve_prime_power(n, b, a, p, alpha);
        for (const auto& st : trace.steps())
            seen.set(static_cast<std::size_t>(st.step));
        REQUIRE_MESSAGE(matches_oracle(s, {n, b, a, m}, 600), "n=" << n << " b=" << b << " a=" << a << " m=" << m);
        ++checked;
    }
    CHECK(checked == 4000);
    for (std::size_t step = 0; step < kPrimePowerStepCount; ++step)
        CHECK_MESSAGE(seen.test(step), "step " << step_label(static_cast<Step>(step)) << " never reached");
}

TEST_CASE("step VI check agrees with the valuation-stripped form") {
    // b^(eps/delta) == a2 (mod p^alpha2)  <=>  b1^(eps/delta) == a3 (mod p^(alpha2-eps))
    std::mt19937_64 rng(77);
    int reached = 0;
    for (int i = 0; i < 20000 && reached < 300; ++i) {
        const u64 p = (rng() % 2) ? 2 : 3;
        const unsigned alpha = static_cast<unsigned>(rng() % 8 + 2);
        const u64 b = p * (rng() % 6 + 1);
        const u64 n = rng() % 5 + 1;
        const i64 a = static_cast<i64>(rng() % ipow(p, alpha));
        const auto [s, trace] = solve_prime_power(n, b, a, p, alpha);
        if (!trace.visited(Step::VI))
            continue;
        ++reached;
        const u64 alpha2 = static_cast<u64>(*trace.value(Step::II, "alpha2"));
        const u64 a2 = static_cast<u64>(*trace.value(Step::II, "a2"));
        const unsigned delta = static_cast<unsigned>(*trace.value(Step::IV, "delta"));
        const unsigned eps = static_cast<unsigned>(*trace.value(Step::V, "epsilon"));
        const u64 b1 = b / ipow(p, delta);
        const u64 a3 = a2 / ipow(p, eps);
        const u64 reduced = ipow(p, static_cast<unsigned>(alpha2) - eps);
        const bool stripped = pow_mod(b1, eps / delta, reduced) == a3 % reduced;
        CHECK(stripped == s.is_finite());
    }
    CHECK(reached >= 50);
}

TEST_CASE("solve: invariance and canonical form") {
    const auto problems = random_problems(300, 99);
    for (const auto& pr : problems) {
        const auto s = solve(pr).solution;
        auto shifted = pr;
        shifted.a += static_cast<i64>(pr.m);
        REQUIRE(solve(shifted).solution == s);
        if (s.is_progression()) {
            const auto& p = s.as_progression();
            REQUIRE(p.min >= 1);
            REQUIRE(p.residue == p.min % p.modulus);
            REQUIRE((p.min <= p.modulus || !contains(s, p.min - p.modulus)));
        }
        REQUIRE(matches_oracle(s, pr, default_kmax(s)));
    }
}

TEST_CASE("step labels round-trip") {
    for (std::size_t i = 0; i <= kPrimePowerStepCount; ++i) {
        const auto s = static_cast<Step>(i);
        CHECK(step_from_label(step_label(s)) == s);
    }
    CHECK_FALSE(step_from_label("XV").has_value());
}
