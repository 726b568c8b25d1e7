#include "repcat/errors.hpp"
#include "repcat/solution_set.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace repcat;

namespace {

constexpr u64 kWindow = 400;

std::set<u64> members(const SolutionSet& s) {
    std::set<u64> out;
    for (u64 k = 1; k <= kWindow; ++k) {
        if (contains(s, k))
            out.insert(k);
    }
    return out;
}

SolutionSet random_set(std::mt19937_64& rng) {
    switch (rng() % 4) {
    case 0: return SolutionSet::empty();
    case 1: {
        std::set<u64> e;
        for (u64 i = rng() % 4 + 1; i > 0; --i)
            e.insert(rng() % 60 + 1);
        return SolutionSet::finite(e);
    }
    default: {
        const u64 m = rng() % 12 + 1;
        return SolutionSet::progression(rng() % m, m, rng() % 30 + 1);
    }
    }
}

} // namespace

TEST_CASE("canonical construction") {
    CHECK(SolutionSet::naturals().as_progression() == Progression{0, 1, 1});
    CHECK(SolutionSet::progression(3, 13).as_progression() == Progression{3, 13, 3});
    CHECK(SolutionSet::progression(0, 4).as_progression() == Progression{0, 4, 4});
    CHECK(SolutionSet::progression(1, 2, 4).as_progression() == Progression{1, 2, 5});
    CHECK(SolutionSet::progression(17, 4).as_progression() == Progression{1, 4, 1});
    CHECK(SolutionSet::progression(0, 1, 3).as_progression() == Progression{0, 1, 3});
    CHECK(SolutionSet::finite({}).is_empty());
    CHECK_THROWS_AS(SolutionSet::finite({0, 1}), DomainError);
    CHECK_THROWS_AS(SolutionSet::progression(0, 0), DomainError);
}

TEST_CASE("contains and enumerate") {
    const auto s = SolutionSet::progression(29, 52);
    CHECK(contains(s, 29));
    CHECK_FALSE(contains(s, 30));
    CHECK_FALSE(contains(SolutionSet::empty(), 1));
    CHECK(enumerate(s, 3) == std::vector<u64>{29, 81, 133});
    CHECK(enumerate(SolutionSet::empty(), 5).empty());
    CHECK(enumerate(SolutionSet::finite({7}), 5) == std::vector<u64>{7});
    CHECK(enumerate(SolutionSet::progression(0, 1, 3), 2) == std::vector<u64>{3, 4});
}

TEST_CASE("intersect examples") {
    const auto k1 = SolutionSet::progression(1, 4);
    const auto k2 = SolutionSet::progression(3, 13);
    CHECK(intersect(k1, k2).as_progression() == Progression{29, 52, 29});
    CHECK(intersect(k1, SolutionSet::naturals()) == k1);
    CHECK(intersect(SolutionSet::progression(0, 2), SolutionSet::progression(1, 2)).is_empty());
    // non-coprime moduli
    CHECK(intersect(SolutionSet::progression(2, 6), SolutionSet::progression(2, 4)).as_progression() ==
          Progression{2, 12, 2});
    CHECK(intersect(SolutionSet::progression(1, 6), SolutionSet::progression(2, 4)).is_empty());
    // lower bounds
    CHECK(intersect(SolutionSet::progression(0, 1, 5), SolutionSet::progression(1, 3)).as_progression() ==
          Progression{1, 3, 7});
    CHECK(intersect(SolutionSet::finite({3, 5, 9}), SolutionSet::progression(1, 4)) == SolutionSet::finite({5, 9}));
}

TEST_CASE("intersect algebra on small sets") {
    std::mt19937_64 rng(8);
    const auto N = SolutionSet::naturals();
    for (int i = 0; i < 3000; ++i) {
        const auto a = random_set(rng), b = random_set(rng), c = random_set(rng);
        const auto ab = intersect(a, b);
        REQUIRE(ab == intersect(b, a));
        REQUIRE(intersect(ab, c) == intersect(a, intersect(b, c)));
        REQUIRE(intersect(a, a) == a);
        REQUIRE(intersect(a, N) == a);
        REQUIRE(intersect(a, SolutionSet::empty()).is_empty());

        std::set<u64> expected;
        const auto ma = members(a), mb = members(b);
        std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(), std::inserter(expected, expected.end()));
        REQUIRE(members(ab) == expected);
        if (ab.is_progression()) {
            const auto& p = ab.as_progression();
            REQUIRE(p.residue == p.min % p.modulus);
            REQUIRE(contains(ab, p.min));
            REQUIRE((p.min <= p.modulus || !contains(ab, p.min - p.modulus)));
        }
    }
}
