#pragma once

/**
 * @file solution_set.hpp
 * @brief Subsets of {1, 2, ...} closed under the solver's outputs and
 *        intersection.
 *
 * A set is one of
 *  - Empty
 *  - Finite: a nonempty sorted list of positive integers
 *  - Progression: {k >= min : k == residue (mod modulus)}
 *
 * Progressions are canonical: min is the least member and
 * residue == min % modulus. All of N is Progression(0, 1, 1).
 */

#include "repcat/modmath.hpp"

#include <set>
#include <variant>
#include <vector>

namespace repcat {

struct EmptySet {
    bool operator==(const EmptySet&) const = default;
};

struct FiniteSet {
    std::vector<u64> elements;
    bool operator==(const FiniteSet&) const = default;
};

struct Progression {
    u64 residue;
    u64 modulus;
    u64 min;
    bool operator==(const Progression&) const = default;
};

class SolutionSet {
public:
    using Variant = std::variant<EmptySet, FiniteSet, Progression>;

    SolutionSet() : value_(EmptySet{}) {}

    static SolutionSet empty() { return SolutionSet(); }
    static SolutionSet naturals() { return progression(0, 1, 1); }
    static SolutionSet finite(std::set<u64> elements);
    /// k == residue (mod modulus), k >= lower_bound. The residue is reduced
    /// and the bound raised to the first member.
    static SolutionSet progression(u64 residue, u64 modulus, u64 lower_bound = 1);

    const Variant& value() const { return value_; }

    bool is_empty() const { return std::holds_alternative<EmptySet>(value_); }
    bool is_finite() const { return std::holds_alternative<FiniteSet>(value_); }
    bool is_progression() const { return std::holds_alternative<Progression>(value_); }
    bool is_naturals() const;

    const FiniteSet& as_finite() const { return std::get<FiniteSet>(value_); }
    const Progression& as_progression() const { return std::get<Progression>(value_); }

    bool operator==(const SolutionSet&) const = default;

private:
    explicit SolutionSet(Variant v) : value_(std::move(v)) {}
    Variant value_;
};

bool contains(const SolutionSet& s, u64 k);

/// The `count` smallest members, increasing.
std::vector<u64> enumerate(const SolutionSet& s, std::size_t count);

/// Exact intersection; progression pairs are combined by the generalized CRT.
SolutionSet intersect(const SolutionSet& lhs, const SolutionSet& rhs);

} // namespace repcat
