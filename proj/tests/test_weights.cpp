// SPDX-License-Identifier: Apache-2.0

#include "test_helpers.hpp"

using namespace ris;
using ris::test::iid;
using ris::test::max_abs;

namespace {

WeightProblem problem(const cmat &b, int n, int q, const cvec &k0)
{
    WeightProblem p;
    p.a_q = dft_codebook(n, q, sequential_order(n)).a_matrix;
    p.b = b;
    p.k0 = k0;
    return p;
}

} // namespace

TEST(BuildP, ScalingAndOrthogonality)
{
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + int(rng() % 10), m_t = 1 + int(rng() % 4), m_r = 1 + int(rng() % 4);
        const StackedChannel h = build_stacked_channel(iid(n, m_t, m_r, rng));
        Eigen::JacobiSVD<cmat> svd(h.h);
        const int m_s = 1 + int(rng() % numerical_rank(svd.singularValues()));
        const cmat p = build_P(h, m_s);
        EXPECT_LT(max_abs(p.adjoint() * p - double(n + 1) / m_s * cmat::Identity(m_s, m_s)), 1e-9);
        EXPECT_NEAR(p.squaredNorm(), double(n + 1), 1e-9);
    }
}

TEST(BuildP, SingleStreamNormIsTwoForOneElement)
{
    Rng rng(2);
    const StackedChannel h = build_stacked_channel(iid(1, 2, 2, rng));
    EXPECT_NEAR(build_P(h, 1).squaredNorm(), 2.0, 1e-12);
}

TEST(BuildP, MatchesEigenDecompositionOfGram)
{
    // Independent route: eigenvectors of H H^H span the same dominant subspace.
    Rng rng(3);
    const int n = 4, m_t = 2, m_r = 3;
    const StackedChannel h = build_stacked_channel(iid(n, m_t, m_r, rng));
    const int m_s = 2;
    const cmat p = build_P(h, m_s);
    Eigen::SelfAdjointEigenSolver<cmat> eig(h.h * h.h.adjoint());
    const cmat v = eig.eigenvectors().rightCols(m_s);
    const cmat proj_a = p * p.adjoint() * m_s / double(n + 1);
    const cmat proj_b = v * v.adjoint();
    EXPECT_LT(max_abs(proj_a - proj_b), 1e-9);
}

TEST(BuildP, RankError)
{
    StackedChannel h;
    h.n_elements = 1;
    h.m_t = 1;
    h.m_r = 2;
    h.h = cmat::Zero(2, 2);
    h.h(0, 0) = 1.0;
    EXPECT_THROW(build_P(h, 2), rank_error);
}

TEST(BuildB, IdenticalBlocksGiveConstantMatrix)
{
    Rng rng(4);
    const cmat blk = complex_gaussian_matrix(3, 2, rng);
    cmat p(12, 2);
    for (int n = 0; n < 4; ++n)
        p.middleRows(3 * n, 3) = blk;
    const cmat b = build_B(p, 3);
    EXPECT_LT(max_abs(b - blk.squaredNorm() * cmat::Ones(4, 4)), 1e-12);
}

TEST(BuildB, OrthogonalBlocksGiveDiagonal)
{
    // blocks of 2 rows: block 0 uses column 0, block 1 column 1, block 2 row 1 only
    cmat p = cmat::Zero(6, 2);
    p(0, 0) = 1.0;
    p(3, 1) = 2.0;
    p(5, 0) = 3.0;
    const cmat b = build_B(p, 2);
    EXPECT_LT(max_abs(b - b.diagonal().asDiagonal().toDenseMatrix()), 1e-15);
    EXPECT_NEAR(b(0, 0).real(), 1.0, 1e-15);
    EXPECT_NEAR(b(1, 1).real(), 4.0, 1e-15);
    EXPECT_NEAR(b(2, 2).real(), 9.0, 1e-15);
}

TEST(BuildB, EntriesAreTraceInnerProducts)
{
    Rng rng(5);
    const cmat p = complex_gaussian_matrix(15, 2, rng);
    const cmat b = build_B(p, 3);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const cd tr = (p.middleRows(3 * j, 3).adjoint() * p.middleRows(3 * i, 3)).trace();
            ASSERT_LT(std::abs(b(i, j) - tr), 1e-12);
        }
    EXPECT_LT(max_abs(b - b.adjoint()), 1e-12);
    Eigen::SelfAdjointEigenSolver<cmat> eig(b);
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10);
}

TEST(InitWeights, SelectedCodewordGivesUnitVector)
{
    const Codebook cb = dft_codebook(5, 4, sequential_order(5));
    const cvec k = init_weights(cb.a_matrix, cb.codewords[1]);
    cvec e = cvec::Zero(4);
    e(1) = 1.0;
    EXPECT_LT(max_abs(k - e), 1e-12);
}

TEST(InitWeights, FullBasisReconstructs)
{
    Rng rng(6);
    const Codebook cb = dft_codebook(7, 8, sequential_order(7));
    const cvec phi = random_phases(7, rng);
    cvec want(8);
    want << 1.0, phi;
    EXPECT_LT(max_abs(cb.a_matrix * init_weights(cb.a_matrix, phi) - want), 1e-12);
}

TEST(InitWeights, LeastSquaresAgainstNormalEquations)
{
    Rng rng(7);
    const Codebook cb = dft_codebook(9, 4, sequential_order(9));
    const cvec phi = random_phases(9, rng);
    cvec target(10);
    target << 1.0, phi;
    const cmat &a = cb.a_matrix;
    const cvec k_ne = (a.adjoint() * a).inverse() * (a.adjoint() * target);
    const cvec k = init_weights(a, phi);
    EXPECT_LT(max_abs(k - k_ne), 1e-12);
    // residual is orthogonal to the column space
    EXPECT_LT(max_abs(a.adjoint() * (a * k - target)), 1e-10);
}

TEST(Kkt, IdentityBIsFixedPoint)
{
    const int n = 6;
    const Codebook cb = dft_codebook(n, n + 1, sequential_order(n));
    WeightProblem p = problem(cmat::Identity(n + 1, n + 1), n, n + 1, init_weights(cb.a_matrix, cb.codewords[2]));
    const WeightSolution sol = kkt_iterate(p);
    EXPECT_TRUE(sol.converged);
    EXPECT_EQ(sol.iterations, 1);
    EXPECT_LT(max_abs(sol.k - p.k0), 1e-12);
}

TEST(Kkt, RankOneClosedForm)
{
    Rng rng(8);
    const int n = 8;
    const cvec b = complex_gaussian_matrix(n + 1, 1, rng);
    const Codebook cb = dft_codebook(n, n + 1, sequential_order(n));
    WeightProblem p = problem(b * b.adjoint(), n, n + 1, init_weights(cb.a_matrix, random_phases(n, rng)));
    const WeightSolution sol = kkt_iterate(p);
    const double best = std::pow(b.cwiseAbs().sum(), 2);
    EXPECT_NEAR(sol.objective_trace[1], best, 1e-9 * best);
    const cvec x = cb.a_matrix * sol.k;
    // aligned with angle(b) up to a global phase
    const cd rot = x(0) / unit_phase(b(0));
    for (int i = 0; i <= n; ++i)
        EXPECT_LT(std::abs(x(i) - rot * unit_phase(b(i))), 1e-9);
}

TEST(Kkt, PureDiagonalBObjectiveIsTrace)
{
    // With |x_n| = 1 the objective of a diagonal B is its trace at every feasible point.
    const int n = 3;
    cmat b = cmat::Identity(n + 1, n + 1);
    b(0, 0) = 10.0;
    const Codebook cb = dft_codebook(n, n + 1, sequential_order(n));
    const WeightSolution sol = kkt_iterate(problem(b, n, n + 1, init_weights(cb.a_matrix, cb.codewords[1])));
    EXPECT_NEAR(sol.objective_trace.back(), 13.0, 1e-12);
    EXPECT_TRUE(sol.converged);
}

TEST(Kkt, DiagonalBMatchesGridSearch)
{
    // B = diag(10, 1, ..., 1) plus a random PSD part so the optimum is not trivial.
    Rng rng(9);
    const int n = 3;
    for (int t = 0; t < 5; ++t) {
        const cmat g = complex_gaussian_matrix(n + 1, 2, rng);
        cmat b = g * g.adjoint();
        b.diagonal() += cvec::Ones(n + 1);
        b(0, 0) += 9.0;
        const Codebook cb = dft_codebook(n, n + 1, sequential_order(n));
        double best_start = -1.0;
        WeightSolution best;
        // multistart from every codeword
        for (int q = 0; q <= n; ++q) {
            const WeightSolution s = kkt_iterate(problem(b, n, n + 1, init_weights(cb.a_matrix, cb.codewords[q])));
            if (s.objective_trace.back() > best_start) {
                best_start = s.objective_trace.back();
                best = s;
            }
        }
        double grid = 0.0;
        cvec x(n + 1);
        x(0) = 1.0;
        for (int i = 0; i < 64; ++i)
            for (int j = 0; j < 64; ++j)
                for (int l = 0; l < 64; ++l) {
                    x(1) = std::polar(1.0, kTwoPi * i / 64);
                    x(2) = std::polar(1.0, kTwoPi * j / 64);
                    x(3) = std::polar(1.0, kTwoPi * l / 64);
                    grid = std::max(grid, x.dot(b * x).real());
                }
        EXPECT_GE(best_start, 0.99 * grid);
    }
}

TEST(Kkt, MonotoneFeasibleAndFixedPoint)
{
    Rng rng(10);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + int(rng() % 25), m_t = 1 + int(rng() % 4), m_r = 1 + int(rng() % 4);
        const StackedChannel h = build_stacked_channel(iid(n, m_t, m_r, rng));
        const cmat b = build_B(build_P(h, 1), m_t);
        const Codebook cb = dft_codebook(n, n + 1, sequential_order(n));
        WeightProblem p = problem(b, n, n + 1, init_weights(cb.a_matrix, random_phases(n, rng)));
        p.max_iterations = 1000;
        p.tolerance = 1e-14;
        const WeightSolution sol = kkt_iterate(p);
        for (std::size_t r = 1; r < sol.objective_trace.size(); ++r)
            ASSERT_GE(sol.objective_trace[r], sol.objective_trace[r - 1] - 1e-9);
        for (Eigen::Index i = 0; i < sol.upsilon.size(); ++i)
            EXPECT_GE(sol.upsilon(i), 0.0);
        EXPECT_LT(rc_modulus_violation(sol.phi), 1e-12);
        const cvec x = cb.a_matrix * sol.k;
        EXPECT_LT((x.cwiseAbs().array() - 1.0).abs().maxCoeff(), 1e-6);
        if (sol.converged) {
            // B x = diag(upsilon) x at the fixed point, up to the stopping tolerance
            const cvec bx = b * x;
            const cvec ux = sol.upsilon.cast<cd>().cwiseProduct(x);
            EXPECT_LT((bx - ux).norm() / bx.norm(), 1e-4);
        }
    }
}

TEST(Kkt, GlobalPhaseInvariance)
{
    Rng rng(11);
    const int n = 10;
    const StackedChannel h = build_stacked_channel(iid(n, 3, 3, rng));
    const cmat b = build_B(build_P(h, 2), 3);
    const Codebook cb = dft_codebook(n, n + 1, sequential_order(n));
    const cvec k0 = init_weights(cb.a_matrix, random_phases(n, rng));
    WeightProblem p = problem(b, n, n + 1, k0);
    p.tolerance = 1e-14;
    p.max_iterations = 2000;
    const double f0 = kkt_iterate(p).objective_trace.back();
    p.k0 = std::polar(1.0, 1.234) * k0;
    EXPECT_NEAR(kkt_iterate(p).objective_trace.back(), f0, 1e-8 * std::max(1.0, f0));
}

TEST(Kkt, ObjectiveIsReal)
{
    Rng rng(12);
    const StackedChannel h = build_stacked_channel(iid(5, 2, 2, rng));
    const cmat b = build_B(build_P(h, 2), 2);
    const cmat a = dft_codebook(5, 6, sequential_order(5)).a_matrix;
    const cvec k = complex_gaussian_matrix(6, 1, rng);
    const cvec x = a * k;
    EXPECT_LT(std::abs(x.dot(b * x).imag()), 1e-10 * std::max(1.0, std::abs(x.dot(b * x))));
}

TEST(Kkt, RejectsNonHermitianAndBadShapes)
{
    cmat b = cmat::Identity(3, 3);
    b(0, 1) = 1.0;
    EXPECT_THROW(kkt_iterate(problem(b, 2, 3, cvec::Ones(3))), std::invalid_argument);
    EXPECT_THROW(kkt_iterate(problem(cmat::Identity(3, 3), 2, 3, cvec::Ones(2))), std::invalid_argument);
}

TEST(ComposeRc, UnitVectorGivesCodeword)
{
    const Codebook cb = dft_codebook(6, 5, sequential_order(6));
    for (int q = 0; q < 5; ++q) {
        cvec e = cvec::Zero(5);
        e(q) = 1.0;
        EXPECT_LT(max_abs(compose_rc(cb.a_matrix, e) - cb.codewords[q]), 1e-15);
    }
}

TEST(ComposeRc, ZeroEntryMapsToOne)
{
    cmat a = cmat::Zero(3, 1);
    a(0, 0) = 1.0;
    a(2, 0) = cd(0.0, 2.0);
    cvec k(1);
    k << 1.0;
    const cvec phi = compose_rc(a, k);
    EXPECT_EQ(phi(0), cd(1.0, 0.0));
    EXPECT_LT(std::abs(phi(1) - cd(0.0, 1.0)), 1e-15);
}

TEST(ComposeRc, ConvergedFullBookIsAlreadyFeasible)
{
    Rng rng(13);
    const int n = 12;
    const StackedChannel h = build_stacked_channel(iid(n, 2, 2, rng));
    const Codebook cb = dft_codebook(n, n + 1, sequential_order(n));
    WeightProblem p = problem(build_B(build_P(h, 2), 2), n, n + 1, init_weights(cb.a_matrix, cb.codewords[0]));
    const WeightSolution sol = kkt_iterate(p);
    const cvec x = cb.a_matrix * sol.k;
    const cvec raw = x.tail(n) / unit_phase(x(0));
    EXPECT_LT(max_abs(sol.phi - raw), 1e-6);
}
