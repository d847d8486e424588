#include "dedekind/frequency.hpp"

#include "dedekind/core_sums.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using dedekind::Int;

TEST_CASE("1-D counts: pins and partition property") {
    CHECK(dedekind::freq1d_direct(12, 4).counts == std::vector<long long>{3, 3, 3, 3});
    CHECK(dedekind::freq1d_direct(13, 5).counts == std::vector<long long>{3, 3, 2, 3, 2});
    CHECK(dedekind::freq1d_direct(10, 4).counts == std::vector<long long>{3, 2, 3, 2});
    for (Int a = 1; a <= 50; ++a)
        for (Int b = 1; b <= 50; ++b) {
            const auto t = dedekind::freq1d_direct(a, b);
            const long long total =
                std::accumulate(t.counts.begin(), t.counts.end(), 0LL);
            CHECK(Int(total) == a);
        }
}

TEST_CASE("1-D reconstruction equals direct counting") {
    for (Int a = 1; a <= 80; ++a)
        for (Int b = 1; b <= a; ++b)
            CHECK(dedekind::freq1d_appendix(a, b).counts ==
                  dedekind::freq1d_direct(a, b).counts);
    // The boundary-shift pass matters: (10, 4) has an interior integer
    // boundary at 5 = 2*10/4, whose point belongs to box 2, not box 1.
    CHECK(dedekind::freq1d_appendix(10, 4).counts == std::vector<long long>{3, 2, 3, 2});
    CHECK_THROWS_AS(dedekind::freq1d_appendix(4, 9), std::domain_error);
}

TEST_CASE("2-D table: the 50/13/7 matrix") {
    const auto t = dedekind::freq2d_direct(50, 13, 7);
    const long long expect[13][7] = {
        {4, 0, 0, 0, 0, 0, 0}, {4, 0, 0, 0, 0, 0, 0}, {0, 4, 0, 0, 0, 0, 0},
        {0, 3, 1, 0, 0, 0, 0}, {0, 0, 4, 0, 0, 0, 0}, {0, 0, 2, 2, 0, 0, 0},
        {0, 0, 0, 3, 0, 0, 0}, {0, 0, 0, 2, 2, 0, 0}, {0, 0, 0, 0, 4, 0, 0},
        {0, 0, 0, 0, 1, 3, 0}, {0, 0, 0, 0, 0, 4, 0}, {0, 0, 0, 0, 0, 0, 4},
        {0, 0, 0, 0, 0, 0, 3},
    };
    REQUIRE(t.cells.size() == 13);
    for (std::size_t j = 0; j < 13; ++j) {
        REQUIRE(t.cells[j].size() == 7);
        for (std::size_t k = 0; k < 7; ++k) CHECK(t.cells[j][k] == expect[j][k]);
    }
    CHECK(t.row_marginals() ==
          std::vector<long long>{4, 4, 4, 4, 4, 4, 3, 4, 4, 4, 4, 4, 3});
    CHECK(t.col_marginals() == std::vector<long long>{8, 7, 7, 7, 7, 7, 7});
}

TEST_CASE("2-D marginals are the 1-D tables") {
    for (Int a = 1; a <= 40; ++a)
        for (Int b = 1; b <= 10; ++b)
            for (Int c = 1; c <= 10; ++c) {
                const auto t = dedekind::freq2d_direct(a, b, c);
                CHECK(t.row_marginals() == dedekind::freq1d_direct(a, b).counts);
                CHECK(t.col_marginals() == dedekind::freq1d_direct(a, c).counts);
            }
}

TEST_CASE("2-D reconstruction from marginals equals direct counting") {
    for (Int a = 1; a <= 60; ++a)
        for (Int b = 1; b <= a && b <= 12; ++b)
            for (Int c = 1; c <= a && c <= 12; ++c)
                CHECK(dedekind::freq2d_appendix(a, b, c).cells ==
                      dedekind::freq2d_direct(a, b, c).cells);
    CHECK_THROWS_AS(dedekind::freq2d_appendix(5, 7, 3), std::domain_error);
}

TEST_CASE("weighted cell sums recover the generalized sum") {
    // sum_{j,k} j k f(j,k) = a * S_2(a; b, c)
    for (Int a = 1; a <= 40; ++a)
        for (Int b = 1; b <= 12; ++b)
            for (Int c = 1; c <= 12; ++c) {
                const auto t = dedekind::freq2d_direct(a, b, c);
                Int acc = 0;
                for (std::size_t j = 0; j < t.cells.size(); ++j)
                    for (std::size_t k = 0; k < t.cells[j].size(); ++k)
                        acc += Int(j) * Int(k) * t.cells[j][k];
                CHECK(acc == dedekind::generalized_sum_scaled({a, {b, c}}));
            }
}

TEST_CASE("indicator vector: excess bits and reduction to the residue pair") {
    const auto iv = dedekind::indicator(39, 7);
    long long ones = 0;
    for (int bit : iv.bits) {
        CHECK((bit == 0 || bit == 1));
        ones += bit;
    }
    CHECK(Int(ones) == Int(39) % 7);

    for (Int a = 2; a <= 60; ++a)
        for (Int b = 2; b <= a; ++b) {
            const auto bits = dedekind::indicator(a, b).bits;
            const Int l = a % b;
            if (l == 0) {
                for (int bit : bits) CHECK(bit == 0);
            } else {
                const auto reduced = dedekind::freq1d_direct(l, b).counts;
                REQUIRE(bits.size() == reduced.size());
                for (std::size_t j = 0; j < bits.size(); ++j)
                    CHECK(Int(bits[j]) == Int(reduced[j]));
            }
        }
    CHECK_THROWS_AS(dedekind::indicator(5, 9), std::domain_error);
}

TEST_CASE("CSV layouts") {
    CHECK(dedekind::to_csv(dedekind::freq1d_direct(12, 4)) ==
          "j,0,1,2,3,total\nf,3,3,3,3,12\n");
    // The a=6, b=5, c=7 square: six diagonal points, one per occupied box.
    CHECK(dedekind::to_csv(dedekind::freq2d_direct(6, 5, 7)) ==
          "j,0,1,2,3,4,5,6,f\n"
          "0,1,1,0,0,0,0,0,2\n"
          "1,0,0,1,0,0,0,0,1\n"
          "2,0,0,0,1,0,0,0,1\n"
          "3,0,0,0,0,1,0,0,1\n"
          "4,0,0,0,0,0,1,0,1\n"
          "f,1,1,1,1,1,1,0,6\n");
}
