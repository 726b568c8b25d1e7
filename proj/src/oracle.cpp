#include "repcat/oracle.hpp"

#include "repcat/errors.hpp"

#include <algorithm>
#include <random>

namespace repcat {

std::vector<u64> brute_force_solve(const CongruenceProblem& problem, u64 kmax) {
    problem.validate();
    const u64 m = problem.m;
    const u64 b = problem.base;
    std::vector<u64> digits;
    for (u64 x = problem.n; x > 0; x /= b)
        digits.push_back(x % b);
    std::reverse(digits.begin(), digits.end());

    const u64 target = normalize(problem.a, m);
    std::vector<u64> hits;
    u64 r = 0;
    for (u64 k = 1; k <= kmax; ++k) {
        for (u64 digit : digits)
            r = add_mod(mul_mod(r, b % m, m), digit % m, m);
        if (r == target)
            hits.push_back(k);
    }
    return hits;
}

CrossCheckReport cross_check(const CongruenceProblem& problem, u64 kmax) {
    auto [solution, trace] = solve(problem);
    const auto hits = brute_force_solve(problem, kmax);
    CrossCheckReport report{problem, kmax, std::move(solution), {}, std::move(trace)};
    auto it = hits.begin();
    for (u64 k = 1; k <= kmax; ++k) {
        const bool by_oracle = it != hits.end() && *it == k;
        if (by_oracle)
            ++it;
        const bool by_solver = contains(report.solution, k);
        if (by_oracle != by_solver)
            report.mismatches.push_back({k, by_oracle, by_solver});
    }
    return report;
}

u64 default_kmax(const SolutionSet& s) {
    u64 kmax = 2000;
    if (s.is_progression())
        kmax = std::max<u64>(kmax, 4 * s.as_progression().modulus);
    return kmax;
}

std::vector<CongruenceProblem> random_problems(std::size_t count, u64 seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](u64 lo, u64 hi) { return std::uniform_int_distribution<u64>(lo, hi)(rng); };
    constexpr u64 kMaxN = 1'000'000;
    constexpr u64 kMaxM = 100'000;
    constexpr u64 kSmallPrimes[] = {2, 3, 5, 7, 11, 13};

    std::vector<CongruenceProblem> out;
    out.reserve(count);
    while (out.size() < count) {
        CongruenceProblem pr;
        pr.base = uniform(2, 16);
        switch (uniform(0, 3)) {
        case 0: pr.n = uniform(1, kMaxN); break;
        case 1: pr.n = uniform(1, 40); break;
        case 2: pr.n = uniform(1, 3); break;
        default: pr.n = uniform(1, 1000) * (uniform(0, 1) ? pr.base : 1); break;
        }
        pr.n = std::min(pr.n, kMaxN);
        switch (uniform(0, 2)) {
        case 0: pr.m = uniform(1, kMaxM); break;
        case 1: {
            // prime power
            const u64 p = kSmallPrimes[uniform(0, std::size(kSmallPrimes) - 1)];
            u64 m = p;
            const u64 e = uniform(1, 16);
            for (u64 i = 1; i < e && m * p <= kMaxM; ++i)
                m *= p;
            pr.m = m;
            break;
        }
        default: {
            u64 m = 1;
            while (m * 16 <= kMaxM && uniform(0, 3) != 0)
                m *= uniform(2, 16);
            pr.m = m;
            break;
        }
        }
        const i64 span = static_cast<i64>(pr.m);
        switch (uniform(0, 2)) {
        case 0: pr.a = std::uniform_int_distribution<i64>(-span, span)(rng); break;
        // a value actually reached by some n(k)_b, so nonempty answers are common
        case 1: {
            u64 r = 0, shift = 1;
            for (u64 x = pr.n; x > 0; x /= pr.base)
                shift = mul_mod(shift, pr.base, pr.m);
            for (u64 k = uniform(1, 40); k > 0; --k)
                r = add_mod(mul_mod(r, shift, pr.m), pr.n % pr.m, pr.m);
            pr.a = static_cast<i64>(r) - (uniform(0, 1) ? span : 0);
            break;
        }
        default: pr.a = uniform(0, 1) ? 0 : static_cast<i64>(pr.m / uniform(1, 8)); break;
        }
        out.push_back(pr);
    }
    return out;
}

} // namespace repcat
