#include <doctest.h>

#include <random>

#include "lfmd/simplex.hpp"

using namespace lfmd;

TEST_CASE("covering LP basics") {
    SUBCASE("empty constraint set") {
        CoveringLp lp{3, {}};
        LpSolution s = solve_covering_lp(lp);
        CHECK(s.status == LpStatus::Empty);
        CHECK(s.value == 0);
        CHECK(verify_certificate(lp, s));
    }
    SUBCASE("single pair constraint") {
        CoveringLp lp{2, {{0, 1}}};
        LpSolution s = solve_covering_lp(lp);
        CHECK(s.value == 1);
        CHECK(verify_certificate(lp, s));
    }
    SUBCASE("K_4 style: every pair of four variables") {
        CoveringLp lp{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
        LpSolution s = solve_covering_lp(lp);
        CHECK(s.value == 2);
        CHECK(verify_certificate(lp, s));
    }
    SUBCASE("fractional optimum: odd cycle of pairs") {
        CoveringLp lp{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}};
        LpSolution s = solve_covering_lp(lp);
        CHECK(s.value == Rational(5, 2));
        CHECK(verify_certificate(lp, s));
    }
    SUBCASE("upper bounds bind: one variable cannot cover two rows alone") {
        // x0 <= 1 forces weight on the second row's other variables.
        CoveringLp lp{3, {{0}, {0, 1, 2}}};
        LpSolution s = solve_covering_lp(lp);
        CHECK(s.value == 1);
        CHECK(s.primal[0] == 1);
        CHECK(verify_certificate(lp, s));
    }
    SUBCASE("full-row constraints cost 1/n each") {
        CoveringLp lp{4, {{0, 1, 2, 3}}};
        LpSolution s = solve_covering_lp(lp);
        CHECK(s.value == 1);
        CHECK(verify_certificate(lp, s));
    }
}

TEST_CASE("certificate rejects wrong answers") {
    CoveringLp lp{2, {{0, 1}}};
    LpSolution s = solve_covering_lp(lp);
    SUBCASE("perturbed primal") {
        LpSolution bad = s;
        bad.primal[0] += Rational(1, 7);
        CHECK_FALSE(verify_certificate(lp, bad));
    }
    SUBCASE("perturbed value") {
        LpSolution bad = s;
        bad.value += 1;
        CHECK_FALSE(verify_certificate(lp, bad));
    }
    SUBCASE("negative dual") {
        LpSolution bad = s;
        bad.dual[0] = -1;
        CHECK_FALSE(verify_certificate(lp, bad));
    }
}

TEST_CASE("randomized covering LPs are certified and monotone") {
    std::mt19937 rng(271828u);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        int m = 1 + static_cast<int>(rng() % 12);
        m = std::min(m, (1 << n) - 1);  // distinct nonempty rows available
        std::set<std::vector<int>> rows;
        while (static_cast<int>(rows.size()) < m) {
            int len = 1 + static_cast<int>(rng() % n);
            std::set<int> row;
            while (static_cast<int>(row.size()) < len) row.insert(static_cast<int>(rng() % n));
            rows.insert(std::vector<int>(row.begin(), row.end()));
        }
        CoveringLp lp{n, {rows.begin(), rows.end()}};
        LpSolution s = solve_covering_lp(lp);
        REQUIRE(verify_certificate(lp, s));

        // Determinism: an identical re-solve returns identical rationals.
        LpSolution again = solve_covering_lp(lp);
        CHECK(again.value == s.value);
        CHECK(again.primal == s.primal);

        // Monotonicity: adding a constraint never decreases the optimum.
        CoveringLp sub{n, std::vector<std::vector<int>>(lp.rows.begin(), lp.rows.end() - 1)};
        LpSolution ssub = solve_covering_lp(sub);
        CHECK(verify_certificate(sub, ssub));
        CHECK(ssub.value <= s.value);
    }
}
