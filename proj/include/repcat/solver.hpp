#pragma once

/**
 * @file solver.hpp
 * @brief Which repetition counts k put n(k)_b in the class a + mZ.
 *
 * solve_prime_power handles m = p^alpha by reducing the congruence to
 * b^(Lk) == a2 (mod p^alpha2) and then splitting on whether a primitive
 * root exists. solve factors m and intersects the per-prime-power answers.
 *
 * Every run records the labelled steps it passed through (I..XIV for the
 * prime-power procedure, CRT for the composition) together with the
 * intermediate quantities bound at each step.
 */

#include "repcat/modmath.hpp"
#include "repcat/solution_set.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace repcat {

struct CongruenceProblem {
    u64 n = 1;
    u64 base = 10;
    i64 a = 0;
    u64 m = 1;

    /// Throws DomainError unless n >= 1, base >= 2, m >= 1.
    void validate() const;
    bool operator==(const CongruenceProblem&) const = default;
};

enum class Step { I, II, III, IV, V, VI, VII, VIII, IX, X, XI, XII, XIII, XIV, CRT };

inline constexpr std::size_t kPrimePowerStepCount = 14;

std::string_view step_label(Step s);
std::optional<Step> step_from_label(std::string_view label);

struct Binding {
    std::string name;
    i64 value;
    bool operator==(const Binding&) const = default;
};

struct TraceStep {
    Step step;
    std::vector<Binding> bindings;

    std::optional<i64> get(std::string_view name) const;
};

class TraceLog {
public:
    void enter(Step s) { steps_.push_back({s, {}}); }
    /// Binds a value on the most recent step.
    void bind(std::string name, i64 value);
    void append(const TraceLog& other);

    const std::vector<TraceStep>& steps() const { return steps_; }
    bool visited(Step s) const;
    /// Value bound to `name` at the first visit of `s`.
    std::optional<i64> value(Step s, std::string_view name) const;

private:
    std::vector<TraceStep> steps_;
};

struct SolveResult {
    SolutionSet solution;
    TraceLog trace;
};

/// {k >= 1 : n(k)_b == a (mod p^alpha)}. p^alpha and every derived
/// prime-power modulus must stay within 2^62.
SolveResult solve_prime_power(u64 n, u64 b, i64 a, u64 p, unsigned alpha);

/// {k >= 1 : n(k)_b == a (mod m)} for any m >= 1.
SolveResult solve(const CongruenceProblem& problem);

} // namespace repcat
