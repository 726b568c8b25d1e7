#include "repcat/oracle.hpp"

#include <doctest.h>

using namespace repcat;

TEST_CASE("brute_force_solve") {
    CHECK(brute_force_solve({18, 3, 2, 208}, 200) == std::vector<u64>{29, 81, 133, 185});
    CHECK(brute_force_solve({18, 10, 18, 1}, 5) == std::vector<u64>{1, 2, 3, 4, 5});
    CHECK(brute_force_solve({18, 3, 5, 2}, 100).empty());
    CHECK(brute_force_solve({18, 3, 2 - 208, 208}, 100) == std::vector<u64>{29, 81});
}

TEST_CASE("cross_check") {
    const auto golden = cross_check({18, 3, 2, 208}, 500);
    CHECK(golden.passed());
    CHECK(golden.kmax == 500);
    CHECK(cross_check({1, 2, 0, 1}, 50).passed());
    CHECK(cross_check({7, 5, 3, 1}, 50).passed());
}

TEST_CASE("default_kmax") {
    CHECK(default_kmax(SolutionSet::empty()) == 2000);
    CHECK(default_kmax(SolutionSet::progression(1, 4)) == 2000);
    CHECK(default_kmax(SolutionSet::progression(1, 1000)) == 4000);
}

TEST_CASE("random_problems is seeded and within bounds") {
    const auto a = random_problems(200, 7), b = random_problems(200, 7);
    CHECK(a == b);
    CHECK(a != random_problems(200, 8));
    for (const auto& p : a) {
        CHECK(p.n >= 1);
        CHECK(p.n <= 1'000'000);
        CHECK(p.base >= 2);
        CHECK(p.base <= 16);
        CHECK(p.m >= 1);
        CHECK(p.m <= 100'000);
        CHECK(static_cast<u64>(p.a < 0 ? -p.a : p.a) <= p.m);
    }
}
