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

#ifndef RISWCB_PRECODING_HPP
#define RISWCB_PRECODING_HPP

#include "ris/geometry.hpp"
#include "ris/training.hpp"
#include "ris/types.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace ris {

struct WaterFill {
    std::vector<double> powers;
    double eta = 0.0; // 1 / water level
    int active = 0;
};

struct PrecoderSolution {
    cmat w;                     // M_t x M_s
    std::vector<double> powers; // per stream, watts
    double eta = 0.0;
    int active_streams = 0;
};

/// Largest deviation of |phi_n| from 1.
inline double rc_modulus_violation(const cvec &phi)
{
    double worst = 0.0;
    for (Eigen::Index n = 0; n < phi.size(); ++n)
        worst = std::max(worst, std::abs(std::abs(phi(n)) - 1.0));
    return worst;
}

/// H_e = H_d + H_r diag(phi) H_t. If `diag` is given, a non unit-modulus phi
/// is reported there instead of being rejected.
inline cmat effective_channel(const ChannelRealization &ch, const cvec &phi, std::ostream *diag = nullptr)
{
    if (phi.size() != ch.n_elements() || ch.h_r.cols() != ch.h_t.rows() || ch.h_d.rows() != ch.h_r.rows() ||
        ch.h_d.cols() != ch.h_t.cols())
        throw std::invalid_argument("effective_channel: shape mismatch");
    if (diag != nullptr) {
        const double v = rc_modulus_violation(phi);
        if (v > 1e-9)
            *diag << "warning: RC vector violates unit modulus by " << v << '\n';
    }
    return ch.h_d + ch.h_r * phi.asDiagonal() * ch.h_t;
}

/// H_e = x_0 H_d + H_r diag(x_1..x_N) H_t for a general weight vector on the
/// direct path and the N cascaded paths.
inline cmat effective_channel_weighted(const ChannelRealization &ch, const cvec &x)
{
    if (x.size() != ch.n_elements() + 1)
        throw std::invalid_argument("effective_channel_weighted: weight vector must have N+1 entries");
    return x(0) * ch.h_d + ch.h_r * x.tail(x.size() - 1).asDiagonal() * ch.h_t;
}

/// H_e = H^H (x (x) I_Mt) = sum_n x_n block_n^H, x = [direct weight; phi].
inline cmat effective_channel(const StackedChannel &s, const cvec &x)
{
    if (x.size() != s.n_elements + 1)
        throw std::invalid_argument("effective_channel: weight vector must have N+1 entries");
    cmat he = cmat::Zero(s.m_r, s.m_t);
    for (int n = 0; n <= s.n_elements; ++n)
        he += x(n) * s.block(n).adjoint();
    return he;
}

/// Water-filling over singular values sorted in descending order. Tries the
/// active sets {1..K} from the largest K down and keeps the first one whose
/// weakest stream still gets positive power.
inline WaterFill waterfill(const std::vector<double> &singular_values, double p_d, double sigma2)
{
    if (!(p_d >= 0.0) || !(sigma2 >= 0.0))
        throw std::invalid_argument("waterfill: powers must be >= 0");
    for (std::size_t i = 0; i < singular_values.size(); ++i) {
        if (!(singular_values[i] >= 0.0))
            throw std::invalid_argument("waterfill: singular values must be >= 0");
        if (i > 0 && singular_values[i] > singular_values[i - 1])
            throw std::invalid_argument("waterfill: singular values must be in descending order");
    }

    int usable = 0;
    while (usable < static_cast<int>(singular_values.size()) && singular_values[usable] > 0.0)
        ++usable;
    if (usable == 0)
        throw no_channel("waterfill: all singular values are zero");

    WaterFill wf;
    wf.powers.assign(singular_values.size(), 0.0);
    std::vector<double> floor(usable);
    for (int i = 0; i < usable; ++i)
        floor[i] = sigma2 / (singular_values[i] * singular_values[i]);

    double floor_sum = 0.0;
    for (int i = 0; i < usable; ++i)
        floor_sum += floor[i];
    for (int k = usable; k >= 1; --k) {
        const double level = (p_d + floor_sum) / k;
        if (level > floor[k - 1] || k == 1) {
            for (int i = 0; i < k; ++i)
                wf.powers[i] = std::max(level - floor[i], 0.0);
            wf.eta = level > 0.0 ? 1.0 / level : 0.0;
            wf.active = static_cast<int>(std::count_if(wf.powers.begin(), wf.powers.end(), [](double p) { return p > 0.0; }));
            return wf;
        }
        floor_sum -= floor[k - 1];
    }
    return wf; // unreachable
}

/// W = V~ diag(p)^{1/2} from the truncated SVD of H_e and water-filling. Streams
/// beyond the rank get zero power; a zero channel yields W = 0.
inline PrecoderSolution svd_precoder(const cmat &he, int m_s, double p_d, double sigma2)
{
    if (m_s < 1 || m_s > std::min(he.rows(), he.cols()))
        throw std::invalid_argument("svd_precoder: need 1 <= M_s <= min(M_t, M_r)");
    if (!he.allFinite())
        throw numerical_error("svd_precoder: non-finite channel");

    Eigen::JacobiSVD<cmat> svd(he, Eigen::ComputeThinV);
    std::vector<double> sv(m_s);
    for (int i = 0; i < m_s; ++i)
        sv[i] = svd.singularValues()(i);

    PrecoderSolution sol;
    sol.w = cmat::Zero(he.cols(), m_s);
    sol.powers.assign(m_s, 0.0);
    // numerically zero singular values are treated as absent streams
    const double tiny = sv[0] * 1e-12;
    for (double &s : sv)
        if (s <= tiny)
            s = 0.0;
    if (sv[0] == 0.0)
        return sol;

    const WaterFill wf = waterfill(sv, p_d, sigma2);
    sol.powers = wf.powers;
    sol.eta = wf.eta;
    sol.active_streams = wf.active;
    for (int i = 0; i < m_s; ++i)
        sol.w.col(i) = std::sqrt(wf.powers[i]) * svd.matrixV().col(i);
    return sol;
}

/// log2 det(I + H W W^H H^H / sigma2).
inline double capacity(const cmat &he, const cmat &w, double sigma2)
{
    if (he.cols() != w.rows())
        throw std::invalid_argument("capacity: H_e columns must match W rows");
    if (!(sigma2 > 0.0))
        throw std::invalid_argument("capacity: noise power must be > 0");
    if (!he.allFinite() || !w.allFinite())
        throw numerical_error("capacity: non-finite input");
    const cmat hw = he * w;
    const cmat m = cmat::Identity(he.rows(), he.rows()) + (hw * hw.adjoint()) / sigma2;
    Eigen::LLT<cmat> llt(m);
    if (llt.info() != Eigen::Success)
        throw numerical_error("capacity: I + H W W^H H^H / sigma2 is not positive definite");
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        log_det += std::log(llt.matrixL()(i, i).real());
    return std::max(0.0, 2.0 * log_det / std::log(2.0));
}

/// sum_i log2(1 + p_i s_i^2 / sigma2)
inline double capacity_from_streams(const std::vector<double> &singular_values, const std::vector<double> &powers,
                                    double sigma2)
{
    double c = 0.0;
    for (std::size_t i = 0; i < std::min(singular_values.size(), powers.size()); ++i)
        c += std::log2(1.0 + powers[i] * singular_values[i] * singular_values[i] / sigma2);
    return c;
}

/// Capacity-score of a channel under the SVD precoder and water-filling.
inline double precoded_capacity(const cmat &he, int m_s, double p_d, double sigma2)
{
    const PrecoderSolution sol = svd_precoder(he, m_s, p_d, sigma2);
    return capacity(he, sol.w, sigma2);
}

} // namespace ris

#endif // RISWCB_PRECODING_HPP
