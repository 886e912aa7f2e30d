// SPDX-License-Identifier: Apache-2.0

#include "test_helpers.hpp"

#include <algorithm>

using namespace ris;
using ris::test::max_abs;

TEST(DftMatrix, SmallSizes)
{
    EXPECT_EQ(dft_matrix(1)(0, 0), cd(1.0, 0.0));
    cmat two(2, 2);
    two << 1.0, 1.0, 1.0, -1.0;
    EXPECT_LT(max_abs(dft_matrix(2) - two), 1e-15);
    EXPECT_LT(std::abs(dft_matrix(3)(1, 1) - std::polar(1.0, -kTwoPi / 3)), 1e-15);
}

TEST(DftMatrix, UnitaryUpToScaleAndSymmetric)
{
    for (int n = 1; n <= 64; ++n) {
        const cmat a = dft_matrix(n);
        ASSERT_LT(max_abs(a * a.adjoint() - double(n) * cmat::Identity(n, n)), 1e-9) << n;
        ASSERT_EQ(max_abs(a - a.transpose()), 0.0) << n;
    }
}

TEST(DftCodebook, FullBookForTwoElements)
{
    const Codebook cb = dft_codebook(2, 3, sequential_order(2));
    EXPECT_LT(max_abs(cb.a_matrix - dft_matrix(3)), 1e-15);
    cvec want(2);
    want << std::polar(1.0, -kTwoPi / 3), std::polar(1.0, -2 * kTwoPi / 3);
    EXPECT_LT(max_abs(cb.codewords[1] - want), 1e-15);
}

TEST(DftCodebook, PrefixColumns)
{
    const Codebook cb = dft_codebook(2, 2, sequential_order(2));
    EXPECT_LT(max_abs(cb.a_matrix - dft_matrix(3).leftCols(2)), 1e-15);
    EXPECT_EQ(cb.size(), 2);
}

TEST(DftCodebook, OrthogonalColumnsAndEmbedding)
{
    for (int n : {1, 3, 8, 25, 64}) {
        const Codebook cb = dft_codebook(n, n + 1, sequential_order(n));
        EXPECT_LT(max_abs(cb.a_matrix.adjoint() * cb.a_matrix - double(n + 1) * cmat::Identity(n + 1, n + 1)), 1e-9);
        for (int q = 0; q <= n; ++q) {
            EXPECT_EQ(cb.a_matrix(0, q), cd(1.0, 0.0));
            EXPECT_EQ(max_abs(cb.a_matrix.col(q).tail(n) - cb.codewords[q]), 0.0);
            EXPECT_LT((cb.codewords[q].cwiseAbs().array() - 1.0).abs().maxCoeff(), 1e-12);
        }
    }
}

TEST(DftCodebook, FollowsGivenOrder)
{
    const std::vector<int> order{3, 0, 2, 1};
    const Codebook cb = dft_codebook(3, 3, order);
    const cmat a = dft_matrix(4);
    for (int i = 0; i < 3; ++i)
        EXPECT_EQ(max_abs(cb.a_matrix.col(i) - a.col(order[i])), 0.0);
}

TEST(DftCodebook, RejectsBadArguments)
{
    EXPECT_THROW(dft_codebook(3, 5, sequential_order(3)), std::invalid_argument);
    EXPECT_THROW(dft_codebook(3, 0, sequential_order(3)), std::invalid_argument);
    EXPECT_THROW(dft_codebook(3, 2, {1, 1, 0, 2}), std::invalid_argument);
    EXPECT_THROW(dft_codebook(3, 2, {1, 7, 0, 2}), std::invalid_argument);
}

TEST(RandomCodebook, UnitModulusZeroMeanReproducible)
{
    Rng rng(1);
    const Codebook cb = random_codebook(100, 1000, rng); // 1e5 entries
    cd mean = 0.0;
    for (const cvec &w : cb.codewords) {
        ASSERT_LT((w.cwiseAbs().array() - 1.0).abs().maxCoeff(), 1e-12);
        mean += w.sum();
    }
    EXPECT_LT(std::abs(mean / 1e5), 0.02);

    Rng a(9), b(9);
    const Codebook x = random_codebook(5, 3, a), y = random_codebook(5, 3, b);
    EXPECT_EQ(max_abs(x.a_matrix - y.a_matrix), 0.0);
}

TEST(EnvAwareOrder, TieBreaksByIndex)
{
    // N = 1, no direct LoS, unit cascade: L = [1, 1].
    const cmat t = cmat::Ones(1, 1), r = cmat::Ones(1, 1), d = cmat::Zero(1, 1);
    const auto l = los_alignment(t, r, d, 0, 0);
    EXPECT_NEAR(l[0], 1.0, 1e-15);
    EXPECT_NEAR(l[1], 1.0, 1e-15);
    EXPECT_EQ(env_aware_order(t, r, d), (std::vector<int>{0, 1}));
}

TEST(EnvAwareOrder, ConstructiveFirst)
{
    const cmat one = cmat::Ones(1, 1);
    const auto l = los_alignment(one, one, one, 0, 0);
    EXPECT_NEAR(l[0], 4.0, 1e-15);
    EXPECT_NEAR(l[1], 0.0, 1e-15);
    EXPECT_EQ(env_aware_order(one, one, one), (std::vector<int>{0, 1}));
    // flip the direct path so the destructive column becomes the best one
    EXPECT_EQ(env_aware_order(one, one, -one), (std::vector<int>{1, 0}));
}

TEST(EnvAwareOrder, MatchesBruteForceAlignment)
{
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        ArrayGeometry g;
        g.n_x = 2;
        g.n_y = 1;
        LinkSet links;
        for (LinkStatistics *l : {&links.bs_ris, &links.ris_ue, &links.bs_ue})
            l->rician_factor = std::numeric_limits<double>::infinity();
        const ChannelRealization ch = sample_channels(g, links, rng, AngleMode::random);
        const int mt = int(rng() % 4), mr = int(rng() % 4);

        // independent recomputation: effective channel entry for each codeword
        const Codebook cb = dft_codebook(2, 3, sequential_order(2));
        std::vector<std::pair<double, int>> ref;
        for (int q = 0; q < 3; ++q) {
            const cmat he = ch.los_d + ch.los_r * cb.codewords[q].asDiagonal() * ch.los_t;
            ref.emplace_back(std::norm(he(mr, mt)), q);
        }
        std::stable_sort(ref.begin(), ref.end(), [](auto &x, auto &y) { return x.first > y.first; });
        const std::vector<int> got = env_aware_order(ch.los_t, ch.los_r, ch.los_d, mt, mr);
        for (int i = 0; i < 3; ++i)
            EXPECT_EQ(got[i], ref[i].second);
    }
}

TEST(EnvAwareOrder, PermutationAndScaleInvariant)
{
    Rng rng(4);
    const ChannelRealization ch = sample_channels(ArrayGeometry{}, LinkSet{}, rng);
    const auto order = env_aware_order(ch.los_t, ch.los_r, ch.los_d);
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, sequential_order(25));
    // common positive scaling of the (direct, cascade) amplitudes
    const double s = 1e3;
    EXPECT_EQ(env_aware_order(std::sqrt(s) * ch.los_t, std::sqrt(s) * ch.los_r, s * ch.los_d), order);
}

TEST(EnvAwareOrder, RejectsBadAntenna)
{
    const cmat one = cmat::Ones(1, 1);
    EXPECT_THROW(los_alignment(one, one, one, 1, 0), std::invalid_argument);
}
