#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrook/dyck_path.hpp"
#include "qrook/rook.hpp"
#include "qrook/text_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace qrook;

namespace {

// Subset oracle for placements: choose k cells directly and filter on the
// attack condition.
std::set<std::vector<std::pair<int, int>>> placements_oracle(const Partition& lam, int k) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= lam.length(); ++r)
        for (int c = 1; c <= lam.part(r); ++c) cells.emplace_back(r, c);
    std::set<std::vector<std::pair<int, int>>> out;
    const int m = static_cast<int>(cells.size());
    REQUIRE(m <= 20);
    for (unsigned s = 0; s < (1u << m); ++s) {
        if (std::popcount(s) != k) continue;
        std::set<int> rows, cols;
        std::vector<std::pair<int, int>> chosen;
        bool ok = true;
        for (int i = 0; ok && i < m; ++i)
            if (s >> i & 1) {
                ok = rows.insert(cells[i].first).second && cols.insert(cells[i].second).second;
                chosen.push_back(cells[i]);
            }
        if (ok) out.insert(chosen);
    }
    return out;
}

std::vector<std::pair<int, int>> as_pairs(const RookPlacement& C) {
    std::vector<std::pair<int, int>> out;
    for (Box b : C.rooks()) out.emplace_back(b.row, b.col);
    return out;
}

// Independent cancellation count: mark cells rook by rook on a grid.
int inv_oracle(const RookPlacement& C, const Partition& lam) {
    std::set<std::pair<int, int>> gone;
    for (Box rook : C.rooks()) {
        gone.insert({rook.row, rook.col});
        for (int r = 1; r < rook.row; ++r) gone.insert({r, rook.col});
        for (int c = 1; c < rook.col; ++c) gone.insert({rook.row, c});
    }
    int alive = 0;
    for (int r = 1; r <= lam.length(); ++r)
        for (int c = 1; c <= lam.part(r); ++c)
            if (!gone.count({r, c})) ++alive;
    return alive;
}

// Classical Stirling numbers for the q = 1 checks.
long stirling2_classic(int n, int k) {
    if (n == 0) return k == 0;
    if (k <= 0 || k > n) return 0;
    return k * stirling2_classic(n - 1, k) + stirling2_classic(n - 1, k - 1);
}

long stirling1_classic(int n, int k) {
    if (n == 0) return k == 0;
    if (k <= 0 || k > n) return 0;
    return stirling1_classic(n - 1, k - 1) + (n - 1) * stirling1_classic(n - 1, k);
}

std::vector<Partition> shapes_under_staircase(int n) {
    std::vector<Partition> out;
    for (const DyckPath& pi : all_dyck_paths(n)) out.push_back(pi.shape());
    return out;
}

} // namespace

TEST_CASE("placement validation") {
    Partition lam{2, 2};
    CHECK_NOTHROW(RookPlacement({{1, 1}, {2, 2}}, lam));
    CHECK_THROWS_AS(RookPlacement({{1, 1}, {2, 1}}, lam), std::invalid_argument);
    CHECK_THROWS_AS(RookPlacement({{1, 1}, {1, 2}}, lam), std::invalid_argument);
    CHECK_THROWS_AS(RookPlacement({{3, 1}}, lam), std::invalid_argument);
    CHECK_THROWS_AS(placements(lam, -1), std::invalid_argument);
}

TEST_CASE("placements against subset oracle") {
    CHECK(placements(Partition{1}, 1).size() == 1);
    CHECK(placements(Partition{2, 2}, 1).size() == 4);
    std::vector<RookPlacement> two = placements(Partition{2, 1}, 2);
    REQUIRE(two.size() == 1);
    CHECK(as_pairs(two[0]) == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});

    std::vector<Partition> boards = {Partition{3, 2, 1}, Partition{2, 2, 2}, Partition{4, 1},
                                     Partition{3, 3, 2}, Partition{}};
    for (const Partition& lam : boards)
        for (int k = 0; k <= 4; ++k) {
            std::set<std::vector<std::pair<int, int>>> expect = placements_oracle(lam, k);
            std::set<std::vector<std::pair<int, int>>> got;
            for (const RookPlacement& C : placements(lam, k)) got.insert(as_pairs(C));
            CHECK(got == expect);
            CHECK(got.size() == placements(lam, k).size());
        }
}

TEST_CASE("inv statistic") {
    Partition big{6, 4, 4, 2, 1};
    RookPlacement C({{2, 2}, {4, 1}, {3, 4}}, big);
    CHECK(inv_statistic(C, big) == 6);

    CHECK(inv_statistic(RookPlacement({}, big), big) == big.size());
    CHECK(inv_statistic(RookPlacement({{1, 1}}, Partition{1}), Partition{1}) == 0);

    for (const Partition& lam : {Partition{3, 2, 1}, Partition{4, 4}, Partition{2, 2, 1, 1}})
        for (int k = 0; k <= 3; ++k)
            for (const RookPlacement& P : placements(lam, k))
                CHECK(inv_statistic(P, lam) == inv_oracle(P, lam));
}

TEST_CASE("brute force rook polynomials") {
    CHECK(rk_bruteforce(Partition{4, 3, 3}, 3) ==
          parse_laurent("q^4 + 3*q^3 + 4*q^2 + 3*q + 1"));
    CHECK(rk_bruteforce(Partition{4, 3, 3}, 3) == q_number(3) * q_number(2) * q_number(2));
    CHECK(rk_bruteforce(Partition{2, 2}, 1) == parse_laurent("q^3 + 2*q^2 + q"));
    CHECK(rk_bruteforce(Partition{5, 3, 2}, 0) == LaurentPoly::monomial(1, 10));
    CHECK(rk_bruteforce(Partition{}, 0) == LaurentPoly(1));
    CHECK(rk_bruteforce(Partition{}, 1) == LaurentPoly());
    CHECK_THROWS_AS(rk_bruteforce(Partition{31}, 1), std::invalid_argument);
    for (int k = 0; k <= 3; ++k) {
        LaurentPoly r = rk_bruteforce(Partition{3, 2, 1}, k);
        CHECK(r.is_polynomial());
        CHECK(r.has_nonnegative_coeffs());
    }
}

TEST_CASE("recursion matches brute force under the staircase") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lam : shapes_under_staircase(n))
            for (int k = 0; k <= n; ++k)
                CHECK(rk_recursion(lam, k) == rk_bruteforce(lam, k));
}

TEST_CASE("recursion basics") {
    CHECK(rk_recursion(Partition{4, 3, 3}, 3) == q_number(3) * q_number(2) * q_number(2));
    CHECK(rk_recursion(Partition{2, 2}, 1) == parse_laurent("q^3 + 2*q^2 + q"));
    CHECK(rk_recursion(Partition{7}, 2) == LaurentPoly());
    CHECK(rk_recursion(Partition{7}, 1) == q_number(7));
    CHECK(rk_recursion(Partition{3, 3}, -1) == LaurentPoly());
}

TEST_CASE("rook numbers are conjugation invariant") {
    for (int size = 0; size <= 12; ++size)
        for (const Partition& lam : partitions_of(size))
            for (int k = 0; k <= std::min(lam.part(1), lam.length()); ++k)
                CHECK(rk_recursion(lam, k) == rk_recursion(conjugate(lam), k));
}

TEST_CASE("rook numbers vanish beyond the board") {
    for (const Partition& lam : {Partition{3, 1}, Partition{2, 2, 2}, Partition{5}}) {
        int bound = std::min(lam.part(1), lam.length());
        for (int k = bound + 1; k <= bound + 3; ++k) {
            CHECK(rk_recursion(lam, k) == LaurentPoly());
            CHECK(rk_bruteforce(lam, k) == LaurentPoly());
        }
    }
}

TEST_CASE("rectangle closed form") {
    CHECK(rk_rectangle(2, 2, 1) == parse_laurent("q^3 + 2*q^2 + q"));
    CHECK(rk_rectangle(3, 5, 0) == LaurentPoly::monomial(1, 15));
    CHECK(rk_rectangle(1, 1, 1) == LaurentPoly(1));
    CHECK(rk_rectangle(2, 3, 3) == LaurentPoly());
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            std::vector<int> rows(a, b);
            Partition rect(rows);
            for (int i = 0; i <= std::min(a, b); ++i)
                CHECK(rk_rectangle(a, b, i) == rk_bruteforce(rect, i));
        }
}

TEST_CASE("full-board rook number as a product") {
    CHECK(rk_last(Partition{2, 1}) == LaurentPoly(1));
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> rows(n, n);
        CHECK(rk_last(Partition(rows)) == q_factorial(n));
        CHECK(rk_last(Partition::staircase(n + 1)) == LaurentPoly(1));
    }
    CHECK_THROWS_AS(rk_last(Partition{1, 1, 1}), std::domain_error);

    int compared = 0;
    for (int size = 0; size <= 12; ++size)
        for (const Partition& lam : partitions_of(size)) {
            const int len = lam.length();
            bool applies = true;
            for (int i = 1; i <= len; ++i)
                if (lam.part(len - i + 1) - i + 1 < 0) applies = false;
            if (!applies) continue;
            CHECK(rk_last(lam) == rk_recursion(lam, len));
            ++compared;
        }
    CHECK(compared > 50);
}

TEST_CASE("q-Stirling numbers of the second kind") {
    CHECK(q_stirling2(0, 0) == LaurentPoly(1));
    CHECK(q_stirling2(2, 1) == LaurentPoly(1));
    CHECK(q_stirling2(3, 2) == parse_laurent("q^2 + 2*q"));
    CHECK(q_stirling2(4, 0) == LaurentPoly());
    CHECK(q_stirling2(3, 5) == LaurentPoly());
    CHECK(q_stirling2(3, -1) == LaurentPoly());
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(q_stirling2(n, k).evaluate(1) == stirling2_classic(n, k));
    for (int n = 1; n <= 8; ++n) {
        CHECK(q_stirling2(n, n) == LaurentPoly::monomial(1, n * (n - 1) / 2));
        for (int k = 0; k <= n; ++k)
            CHECK(q_stirling2(n, k) == rk_recursion(Partition::staircase(n), n - k));
    }
}

TEST_CASE("q-Stirling numbers of the first kind") {
    CHECK(q_stirling1(3, 2) == parse_laurent("q + 2"));
    CHECK(q_stirling1(0, 0) == LaurentPoly(1));
    for (int n = 1; n <= 6; ++n) {
        CHECK(q_stirling1(n, n) == LaurentPoly(1));
        CHECK(q_stirling1(n, 0) == LaurentPoly());
    }
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(q_stirling1(n, k).evaluate(1) == stirling1_classic(n, k));
    // Deletion recurrence for elementary symmetric functions.
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(q_stirling1(n, k) ==
                  q_stirling1(n - 1, k - 1) + q_number(n - 1) * q_stirling1(n - 1, k));
}

TEST_CASE("hit number preconditions") {
    CHECK_THROWS_AS(q_hit(Partition{1}, 2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(q_hit(Partition{4}, 3, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(q_hit(Partition{1, 1, 1}, 3, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(q_hit(Partition{1}, 3, 3, -1), std::invalid_argument);
}

TEST_CASE("hit numbers of extreme boards") {
    // Empty board: every full placement misses it.
    CHECK(q_hit(Partition{}, 3, 2, 0) ==
          RationalFn(q_factorial(3)) / RationalFn(q_factorial(1)));
    CHECK(q_hit(Partition{}, 3, 2, 1) == RationalFn());
    CHECK(q_hit(Partition{}, 3, 2, 5) == RationalFn());
    // Full rectangle: every full placement hits n times.
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= m; ++n) {
            std::vector<int> rows(n, m);
            Partition rect(rows);
            for (int k = 0; k < n; ++k) CHECK(q_hit(rect, m, n, k) == RationalFn());
            CHECK(q_hit(rect, m, n, n) ==
                  RationalFn(q_factorial(m)) / RationalFn(q_factorial(m - n)));
        }
}

TEST_CASE("hit number sum and inversion round trip") {
    struct Range {
        int m, n;
    };
    for (Range r : {Range{3, 3}, Range{4, 3}}) {
        for (const Partition& lam : partitions_in_box(r.m, r.n)) {
            std::vector<RationalFn> hits;
            RationalFn total;
            for (int k = 0; k <= r.n; ++k) {
                hits.push_back(q_hit(lam, r.m, r.n, k));
                CHECK(hits.back().is_laurent());
                CHECK(hits.back().to_laurent().has_nonnegative_coeffs());
                total = total + hits.back();
            }
            CHECK(total == RationalFn(q_factorial(r.m)) / RationalFn(q_factorial(r.m - r.n)));

            for (int k = 0; k <= r.n; ++k) {
                RationalFn sum;
                for (int j = k; j <= r.n; ++j)
                    sum = sum + hits[j] * RationalFn(q_binomial(j, k).shifted(-k * (j - k)));
                RationalFn rk = RationalFn(LaurentPoly::monomial(1, lam.size() - r.m * k)) *
                                (RationalFn(q_factorial(r.m - r.n)) /
                                 RationalFn(q_factorial(r.m - k))) *
                                sum;
                CHECK(rk == RationalFn(rk_recursion(lam, k)));
            }
        }
    }
}
