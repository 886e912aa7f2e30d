// SPDX-License-Identifier: Apache-2.0
//
// riswcb: weighted DFT codebook simulation library for RIS-assisted MIMO links
// Copyright (C) 2026 The riswcb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISWCB_TRAINING_HPP
#define RISWCB_TRAINING_HPP

#include "ris/codebook.hpp"
#include "ris/geometry.hpp"
#include "ris/rng.hpp"
#include "ris/types.hpp"

#include <vector>

// Uplink training over Q blocks and least-squares / minimum-norm estimation of
// the stacked direct-plus-cascaded channel.

namespace ris {

struct PilotConfig {
    int tau = 4;
    double p_u = 1.0;        // watts
    double sigma_bs2 = 0.0;  // watts

    void validate(int m_r) const
    {
        if (tau < m_r)
            throw std::invalid_argument("pilot length tau must be >= M_r");
        if (!(p_u >= 0.0) || !(sigma_bs2 >= 0.0))
            throw std::invalid_argument("pilot power and BS noise power must be >= 0");
    }
};

// H = [H_d, H_c1, ..., H_cN]^H stored as N+1 row blocks of size M_t x M_r.
// Block 0 is H_d^H; block n is h_t,n h_r,n^H.
struct StackedChannel {
    cmat h;
    int n_elements = 0;
    int m_t = 0;
    int m_r = 0;

    auto block(int n) const { return h.middleRows(static_cast<Eigen::Index>(n) * m_t, m_t); }
    auto block(int n) { return h.middleRows(static_cast<Eigen::Index>(n) * m_t, m_t); }
};

struct TrainingObservation {
    cmat y_stack;              // Q*M_t x tau, block q is Y_q
    std::vector<cmat> blocks;  // Y_q
    Codebook codebook;
    cmat pilot;                // M_r x tau
};

// First M_r rows of the tau-point DFT scaled so that X X^H = (tau p_u / M_r) I.
inline cmat build_pilot(int m_r, int tau, double p_u)
{
    if (m_r < 1 || tau < m_r)
        throw std::invalid_argument("build_pilot: need 1 <= M_r <= tau");
    if (!(p_u >= 0.0))
        throw std::invalid_argument("build_pilot: pilot power must be >= 0");
    return std::sqrt(p_u / m_r) * dft_matrix(tau).topRows(m_r);
}

inline StackedChannel build_stacked_channel(const ChannelRealization &ch)
{
    StackedChannel s;
    s.n_elements = static_cast<int>(ch.n_elements());
    s.m_t = static_cast<int>(ch.m_t());
    s.m_r = static_cast<int>(ch.m_r());
    s.h.resize(static_cast<Eigen::Index>(s.n_elements + 1) * s.m_t, s.m_r);
    s.block(0) = ch.h_d.adjoint();
    for (int n = 0; n < s.n_elements; ++n)
        s.block(n + 1) = ch.h_t.row(n).adjoint() * ch.h_r.col(n).adjoint();
    return s;
}

// Uplink composite H_d^H + H_t^H diag(conj(phi)) H_r^H.
inline cmat uplink_composite(const ChannelRealization &ch, const cvec &phi)
{
    if (phi.size() != ch.n_elements())
        throw std::invalid_argument("uplink_composite: RC vector length must equal N");
    return ch.h_d.adjoint() + ch.h_t.adjoint() * phi.conjugate().asDiagonal() * ch.h_r.adjoint();
}

// Y_q = (H_d^H + H_t^H diag(phi^*) H_r^H) X + N_q. No draws are taken when
// sigma_bs2 == 0.
inline cmat uplink_receive(const ChannelRealization &ch, const cvec &phi, const cmat &pilot, double sigma_bs2, Rng &rng)
{
    if (pilot.rows() != ch.m_r())
        throw std::invalid_argument("uplink_receive: pilot must have M_r rows");
    cmat y = uplink_composite(ch, phi) * pilot;
    if (sigma_bs2 > 0.0)
        y += std::sqrt(sigma_bs2) * complex_gaussian_matrix(y.rows(), y.cols(), rng);
    return y;
}

inline TrainingObservation run_training(const ChannelRealization &ch, const Codebook &cb, const cmat &pilot,
                                        double sigma_bs2, Rng &rng)
{
    TrainingObservation obs;
    obs.codebook = cb;
    obs.pilot = pilot;
    const Eigen::Index m_t = ch.m_t();
    obs.y_stack.resize(cb.size() * m_t, pilot.cols());
    obs.blocks.reserve(cb.size());
    for (int q = 0; q < cb.size(); ++q) {
        obs.blocks.push_back(uplink_receive(ch, cb.codewords[q], pilot, sigma_bs2, rng));
        obs.y_stack.middleRows(q * m_t, m_t) = obs.blocks.back();
    }
    return obs;
}

// X^H (X X^H)^{-1}
inline cmat pilot_right_inverse(const cmat &pilot)
{
    const cmat gram = pilot * pilot.adjoint();
    Eigen::LDLT<cmat> ldlt(gram);
    const double scale = gram.diagonal().real().maxCoeff();
    if (ldlt.info() != Eigen::Success || !(scale > 0.0) ||
        ldlt.vectorD().real().minCoeff() <= 1e-12 * scale)
        throw rank_error("pilot Gram matrix X X^H is singular");
    return ldlt.solve(pilot).adjoint();
}

// A_Q (A_Q^H A_Q)^{-1}, the minimum-norm left factor.
inline cmat min_norm_factor(const cmat &a_q)
{
    Eigen::JacobiSVD<cmat> svd(a_q);
    const rvec sv = svd.singularValues();
    if (sv.size() == 0 || sv(sv.size() - 1) <= 1e-10 * sv(0))
        throw rank_error("codeword matrix A_Q is not full column rank");
    const cmat gram = a_q.adjoint() * a_q;
    return a_q * gram.ldlt().solve(cmat::Identity(gram.rows(), gram.cols()));
}

// H_hat = (A_Q (A_Q^H A_Q)^{-1} (x) I_Mt) Y X^H (X X^H)^{-1}. For Q = N+1 with
// a DFT book this is (1/(N+1)) (A (x) I) Y X^H (X X^H)^{-1}.
inline StackedChannel estimate_stacked_channel(const TrainingObservation &obs, int m_t)
{
    const cmat &a_q = obs.codebook.a_matrix;
    const int q = static_cast<int>(a_q.cols());
    const int n_rows = static_cast<int>(a_q.rows());
    if (obs.y_stack.rows() != static_cast<Eigen::Index>(q) * m_t)
        throw std::invalid_argument("estimate_stacked_channel: Y stack does not match Q * M_t");

    const cmat g = min_norm_factor(a_q);
    const cmat z = obs.y_stack * pilot_right_inverse(obs.pilot); // Q*M_t x M_r

    StackedChannel est;
    est.n_elements = n_rows - 1;
    est.m_t = m_t;
    est.m_r = static_cast<int>(obs.pilot.rows());
    est.h = cmat::Zero(static_cast<Eigen::Index>(n_rows) * m_t, est.m_r);
    for (int n = 0; n < n_rows; ++n)
        for (int j = 0; j < q; ++j)
            est.block(n) += g(n, j) * z.middleRows(static_cast<Eigen::Index>(j) * m_t, m_t);
    return est;
}

// Downlink composite estimate from one block: (Y_q X^H (X X^H)^{-1})^H.
inline cmat estimate_composite_per_block(const cmat &y_q, const cmat &pilot)
{
    return (y_q * pilot_right_inverse(pilot)).adjoint();
}

} // namespace ris

#endif // RISWCB_TRAINING_HPP
