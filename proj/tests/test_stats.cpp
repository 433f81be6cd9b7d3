#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "distbench/error.hpp"
#include "distbench/stats.hpp"
#include "oracles.hpp"

using namespace distbench;

namespace {

std::vector<double> draw(std::mt19937_64& gen, std::size_t n, bool ties) {
    std::uniform_real_distribution<double> cont(0.0, 1.0);
    std::uniform_int_distribution<int> coarse(0, 4);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = ties ? coarse(gen) / 4.0 : cont(gen);
    }
    return v;
}

}  // namespace

TEST(MidRanks, AveragesTiedPositions) {
    const std::vector<double> v{30, 10, 20, 20};
    EXPECT_EQ(midranks(v), (std::vector<double>{4, 1, 2.5, 2.5}));
    EXPECT_TRUE(midranks(std::vector<double>{}).empty());
}

TEST(RankSum, IdenticalSamplesGiveOne) {
    const std::vector<double> a{0.1, 0.5, 0.3, 0.3};
    for (const auto m : {PValueMethod::Auto, PValueMethod::Exact, PValueMethod::Normal}) {
        EXPECT_EQ(wilcoxon_rank_sum(a, a, m), 1.0);
    }
    const std::vector<double> flat{0.2, 0.2};
    EXPECT_EQ(wilcoxon_rank_sum(flat, flat), 1.0);
}

TEST(RankSum, SeparatedSamplesOfFive) {
    const std::vector<double> a{1, 2, 3, 4, 5};
    const std::vector<double> b{6, 7, 8, 9, 10};
    EXPECT_NEAR(wilcoxon_rank_sum(a, b, PValueMethod::Normal), 0.0122, 1e-4);
    EXPECT_NEAR(wilcoxon_rank_sum(a, b, PValueMethod::Exact), 2.0 / 252.0, 1e-12);
    EXPECT_EQ(wilcoxon_rank_sum(a, b), wilcoxon_rank_sum(a, b, PValueMethod::Exact));
}

TEST(RankSum, InterleavedSamplesAreNotSignificant) {
    const std::vector<double> a{1, 3, 5};
    const std::vector<double> b{2, 4, 6};
    for (const auto m : {PValueMethod::Auto, PValueMethod::Exact, PValueMethod::Normal}) {
        EXPECT_GT(wilcoxon_rank_sum(a, b, m), 0.5);
    }
}

TEST(RankSum, ExactPathMatchesEnumerationIncludingTies) {
    std::mt19937_64 gen(1);
    for (std::size_t n1 = 1; n1 <= 11; ++n1) {
        for (std::size_t n2 = 1; n1 + n2 <= 12; ++n2) {
            for (int trial = 0; trial < 6; ++trial) {
                const bool ties = trial % 2 == 1;
                const auto a = draw(gen, n1, ties);
                const auto b = draw(gen, n2, ties);
                EXPECT_NEAR(wilcoxon_rank_sum(a, b, PValueMethod::Exact), oracle::brute_rank_sum(a, b), 1e-12)
                    << n1 << " vs " << n2;
            }
        }
    }
}

TEST(RankSum, SymmetricInItsArguments) {
    std::mt19937_64 gen(2);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n1 = std::uniform_int_distribution<std::size_t>(1, 25)(gen);
        const std::size_t n2 = std::uniform_int_distribution<std::size_t>(1, 25)(gen);
        const auto a = draw(gen, n1, trial % 3 == 0);
        const auto b = draw(gen, n2, trial % 3 == 0);
        for (const auto m : {PValueMethod::Auto, PValueMethod::Exact, PValueMethod::Normal}) {
            EXPECT_EQ(wilcoxon_rank_sum(a, b, m), wilcoxon_rank_sum(b, a, m));
        }
    }
}

TEST(RankSum, AutoSwitchesToNormalForLargeSamples) {
    std::mt19937_64 gen(3);
    const auto a = draw(gen, 20, false);
    const auto b = draw(gen, 20, false);
    EXPECT_EQ(wilcoxon_rank_sum(a, b), wilcoxon_rank_sum(a, b, PValueMethod::Normal));
    const auto c = draw(gen, 15, false);
    const auto d = draw(gen, 15, false);
    EXPECT_EQ(wilcoxon_rank_sum(c, d), wilcoxon_rank_sum(c, d, PValueMethod::Exact));
}

TEST(RankSum, ConsistentShiftOverManyDatasetsIsSignificant) {
    std::vector<double> a;
    std::vector<double> b;
    for (int i = 0; i < 28; ++i) {
        a.push_back(0.80 + 0.001 * i);
        b.push_back(0.75 + 0.001 * i);
    }
    EXPECT_LT(wilcoxon_rank_sum(a, b), 0.05);
    EXPECT_LT(wilcoxon_rank_sum(a, b, PValueMethod::Exact), 0.05);
}

TEST(RankSum, ValuesStayInUnitInterval) {
    std::mt19937_64 gen(4);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = draw(gen, 1 + trial % 7, true);
        const auto b = draw(gen, 1 + trial % 5, true);
        for (const auto m : {PValueMethod::Exact, PValueMethod::Normal}) {
            const double p = wilcoxon_rank_sum(a, b, m);
            EXPECT_GE(p, 0.0);
            EXPECT_LE(p, 1.0);
        }
    }
}

TEST(RankSum, RejectsEmptySample) {
    const std::vector<double> a{1.0};
    const std::vector<double> empty;
    EXPECT_THROW(wilcoxon_rank_sum(a, empty), Error);
    EXPECT_THROW(wilcoxon_rank_sum(empty, a), Error);
}

TEST(SignedRank, MatchesEnumeration) {
    std::mt19937_64 gen(5);
    for (std::size_t n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            const auto a = draw(gen, n, trial % 2 == 1);
            const auto b = draw(gen, n, trial % 2 == 1);
            EXPECT_NEAR(wilcoxon_signed_rank(a, b, PValueMethod::Exact), oracle::brute_signed_rank(a, b), 1e-12) << n;
        }
    }
}

TEST(SignedRank, KnownValuesAndEdgeCases) {
    const std::vector<double> a{2, 3, 4, 5, 6};
    const std::vector<double> b{1, 1, 1, 1, 1};
    EXPECT_NEAR(wilcoxon_signed_rank(a, b), 2.0 / 32.0, 1e-12);
    EXPECT_EQ(wilcoxon_signed_rank(a, a), 1.0);
    EXPECT_EQ(wilcoxon_signed_rank(a, a, PValueMethod::Normal), 1.0);
    const std::vector<double> shorter{1, 2};
    try {
        wilcoxon_signed_rank(a, shorter);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::LengthMismatch);
    }
}
