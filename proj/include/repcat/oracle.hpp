#pragma once

// Brute-force ground truth for the solver.
//
// The oracle appends n's base-b digits one at a time, k copies over, and
// reduces modulo m after every digit. It never forms b^L or calls the
// solver, so a disagreement always points at one side.

#include "repcat/solver.hpp"

#include <vector>

namespace repcat {

/// All k in [1, kmax] with n(k)_b == a (mod m).
std::vector<u64> brute_force_solve(const CongruenceProblem& problem, u64 kmax);

struct Mismatch {
    u64 k;
    bool oracle;
    bool solver;
    bool operator==(const Mismatch&) const = default;
};

struct CrossCheckReport {
    CongruenceProblem problem;
    u64 kmax = 0;
    SolutionSet solution;
    std::vector<Mismatch> mismatches;
    TraceLog trace;

    bool passed() const { return mismatches.empty(); }
};

CrossCheckReport cross_check(const CongruenceProblem& problem, u64 kmax);

/// max(2000, 4 * modulus of the solution's progression).
u64 default_kmax(const SolutionSet& s);

/// Seeded problems with n <= 10^6, b in [2, 16], m <= 10^5, |a| <= m. The mix
/// leans on small n, prime powers and shared factors with n and b so every
/// branch of the prime-power procedure gets traffic.
std::vector<CongruenceProblem> random_problems(std::size_t count, u64 seed);

} // namespace repcat
