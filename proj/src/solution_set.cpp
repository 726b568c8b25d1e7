#include "repcat/solution_set.hpp"

#include "repcat/errors.hpp"

#include <algorithm>

namespace repcat {

namespace {

// Least x >= bound with x == residue (mod modulus).
u64 first_member_at_or_above(u64 residue, u64 modulus, u64 bound) {
    const u64 offset = sub_mod(residue, bound % modulus, modulus);
    const u128 first = u128{bound} + offset;
    if (first > kMaxModulus)
        throw CapacityError("progression start exceeds 2^62");
    return static_cast<u64>(first);
}

} // namespace

SolutionSet SolutionSet::finite(std::set<u64> elements) {
    if (elements.empty())
        return empty();
    if (*elements.begin() == 0)
        throw DomainError("solution sets contain positive integers only");
    return SolutionSet(FiniteSet{{elements.begin(), elements.end()}});
}

SolutionSet SolutionSet::progression(u64 residue, u64 modulus, u64 lower_bound) {
    if (modulus == 0)
        throw DomainError("progression modulus must be positive");
    if (modulus > kMaxModulus)
        throw CapacityError("progression modulus exceeds 2^62");
    residue %= modulus;
    const u64 min = first_member_at_or_above(residue, modulus, std::max<u64>(lower_bound, 1));
    return SolutionSet(Progression{residue, modulus, min});
}

bool SolutionSet::is_naturals() const {
    return is_progression() && as_progression() == Progression{0, 1, 1};
}

bool contains(const SolutionSet& s, u64 k) {
    if (k == 0)
        return false;
    return std::visit(
        [k](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EmptySet>)
                return false;
            else if constexpr (std::is_same_v<T, FiniteSet>)
                return std::binary_search(v.elements.begin(), v.elements.end(), k);
            else
                return k >= v.min && k % v.modulus == v.residue;
        },
        s.value());
}

std::vector<u64> enumerate(const SolutionSet& s, std::size_t count) {
    std::vector<u64> out;
    if (s.is_finite()) {
        const auto& e = s.as_finite().elements;
        out.assign(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(std::min(count, e.size())));
    } else if (s.is_progression()) {
        const auto& p = s.as_progression();
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(p.min + i * p.modulus);
    }
    return out;
}

SolutionSet intersect(const SolutionSet& lhs, const SolutionSet& rhs) {
    if (lhs.is_empty() || rhs.is_empty())
        return SolutionSet::empty();
    if (lhs.is_finite() || rhs.is_finite()) {
        const auto& finite = lhs.is_finite() ? lhs : rhs;
        const auto& other = lhs.is_finite() ? rhs : lhs;
        std::set<u64> kept;
        for (u64 k : finite.as_finite().elements) {
            if (contains(other, k))
                kept.insert(k);
        }
        return SolutionSet::finite(std::move(kept));
    }
    const auto& a = lhs.as_progression();
    const auto& b = rhs.as_progression();
    // x == a.residue (mod a.modulus), x == b.residue (mod b.modulus)
    const u64 g = gcd(a.modulus, b.modulus);
    const u64 diff = sub_mod(b.residue, a.residue % b.modulus, b.modulus);
    if (diff % g != 0)
        return SolutionSet::empty();
    const u128 lcm = u128{a.modulus / g} * b.modulus;
    if (lcm > kMaxModulus)
        throw CapacityError("combined progression modulus exceeds 2^62");
    const u64 reduced = b.modulus / g;
    const u64 t = mul_mod(diff / g, mod_inverse(static_cast<i64>((a.modulus / g) % reduced), reduced), reduced);
    const u64 modulus = static_cast<u64>(lcm);
    const u64 residue = static_cast<u64>((u128{a.modulus} * t + a.residue) % modulus);
    return SolutionSet::progression(residue, modulus, std::max(a.min, b.min));
}

} // namespace repcat
