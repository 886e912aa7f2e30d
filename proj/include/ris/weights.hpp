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

#ifndef RISWCB_WEIGHTS_HPP
#define RISWCB_WEIGHTS_HPP

#include "ris/training.hpp"
#include "ris/types.hpp"

#include <vector>

// Codeword weight design. The weights k combine the observed DFT columns,
// x = A_Q k, and are chosen to maximise the capacity lower bound x^H B x
// subject to |x_n| = 1 via the fixed point A_Q k <- exp(j angle(B A_Q k)).

namespace ris {

struct WeightProblem {
    cmat b;   // (N+1) x (N+1), Hermitian PSD
    cmat a_q; // (N+1) x Q
    cvec k0;  // Q
    int m_s = 1;
    double tolerance = 1e-8; // relative objective change
    int max_iterations = 100;
};

struct WeightSolution {
    cvec k;
    rvec upsilon; // Lagrange multipliers |B A_Q k|
    cvec phi;     // composed unit-modulus RC vector, length N
    std::vector<double> objective_trace; // entry 0 is the initial point
    std::vector<double> k_norm_trace;
    int iterations = 0;
    bool converged = false;
};

/// Numerical rank with a relative threshold on the singular values.
inline int numerical_rank(const rvec &singular_values, double rel_tol = 1e-10)
{
    if (singular_values.size() == 0 || !(singular_values(0) > 0.0))
        return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < singular_values.size(); ++i)
        if (singular_values(i) > rel_tol * singular_values(0))
            ++r;
    return r;
}

/// P = sqrt((N+1)/M_s) V(:, 1:M_s) where H^H = U S V^H. Since H = V S U^H the
/// columns of V are the left singular vectors of H itself.
inline cmat build_P(const StackedChannel &h, int m_s)
{
    if (m_s < 1)
        throw std::invalid_argument("build_P: M_s must be >= 1");
    Eigen::JacobiSVD<cmat> svd(h.h, Eigen::ComputeThinU);
    if (m_s > numerical_rank(svd.singularValues()))
        throw rank_error("build_P: M_s exceeds the rank of the stacked channel");
    const double scale = std::sqrt(static_cast<double>(h.n_elements + 1) / m_s);
    return scale * svd.matrixU().leftCols(m_s);
}

/// B(i, j) = trace(P_j^H P_i) over the N+1 row blocks of P, each m_t rows tall.
inline cmat build_B(const cmat &p, int m_t)
{
    if (m_t < 1 || p.rows() % m_t != 0)
        throw std::invalid_argument("build_B: P rows must be a multiple of M_t");
    const Eigen::Index blocks = p.rows() / m_t;
    const Eigen::Index m_s = p.cols();
    // column n of r is block n flattened column-major
    cmat r(m_t * m_s, blocks);
    for (Eigen::Index n = 0; n < blocks; ++n)
        for (Eigen::Index c = 0; c < m_s; ++c)
            r.col(n).segment(c * m_t, m_t) = p.block(n * m_t, c, m_t, 1);
    // (R^H R)(j, i) = trace(P_j^H P_i) = B(i, j)
    return (r.adjoint() * r).transpose();
}

/// (A_Q^H A_Q)^{-1} A_Q^H
inline cmat left_pseudo_inverse(const cmat &a_q)
{
    return min_norm_factor(a_q).adjoint();
}

/// k = (A_Q^H A_Q)^{-1} A_Q^H [1; phi_m]
inline cvec init_weights(const cmat &a_q, const cvec &phi_m)
{
    if (phi_m.size() + 1 != a_q.rows())
        throw std::invalid_argument("init_weights: codeword length must be N");
    cvec embedded(a_q.rows());
    embedded(0) = 1.0;
    embedded.tail(phi_m.size()) = phi_m;
    return left_pseudo_inverse(a_q) * embedded;
}

inline double weight_objective(const cmat &b, const cmat &a_q, const cvec &k)
{
    const cvec x = a_q * k;
    return x.dot(b * x).real();
}

/// phi_n = x_n / |x_n| for x = e^{-j angle(x_0)} A_Q k, zero entries -> 1.
/// The rotation puts the direct-path coefficient on the positive real axis,
/// which the objective leaves free (it is invariant to a global phase).
inline cvec compose_rc(const cmat &a_q, const cvec &k)
{
    if (a_q.cols() != k.size())
        throw std::invalid_argument("compose_rc: weight vector length must equal Q");
    const cvec x = a_q * k;
    const cd ref = std::conj(unit_phase(x(0)));
    cvec phi(x.size() - 1);
    for (Eigen::Index n = 0; n < phi.size(); ++n)
        phi(n) = unit_phase(ref * x(n + 1));
    return phi;
}

inline WeightSolution kkt_iterate(const WeightProblem &prob)
{
    const Eigen::Index rows = prob.a_q.rows();
    if (prob.b.rows() != rows || prob.b.cols() != rows)
        throw std::invalid_argument("kkt_iterate: B must be (N+1) x (N+1)");
    if (prob.k0.size() != prob.a_q.cols())
        throw std::invalid_argument("kkt_iterate: k0 length must equal Q");
    const double b_scale = std::max(1.0, prob.b.cwiseAbs().maxCoeff());
    if ((prob.b - prob.b.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * b_scale)
        throw std::invalid_argument("kkt_iterate: B is not Hermitian");
    if (!prob.b.allFinite() || !prob.k0.allFinite())
        throw numerical_error("kkt_iterate: non-finite input");

    const cmat pinv = left_pseudo_inverse(prob.a_q);

    WeightSolution sol;
    sol.k = prob.k0;
    double f = weight_objective(prob.b, prob.a_q, sol.k);
    sol.objective_trace.push_back(f);
    sol.k_norm_trace.push_back(sol.k.norm());
    sol.upsilon = (prob.b * (prob.a_q * sol.k)).cwiseAbs();

    for (int r = 1; r <= prob.max_iterations; ++r) {
        const cvec v = prob.b * (prob.a_q * sol.k);
        cvec target(v.size());
        for (Eigen::Index n = 0; n < v.size(); ++n)
            target(n) = unit_phase(v(n));
        sol.upsilon = v.cwiseAbs();
        sol.k = pinv * target;
        if (!sol.k.allFinite())
            throw numerical_error("kkt_iterate: iteration diverged");

        const double f_next = weight_objective(prob.b, prob.a_q, sol.k);
        sol.objective_trace.push_back(f_next);
        sol.k_norm_trace.push_back(sol.k.norm());
        sol.iterations = r;
        const double change = std::abs(f_next - f);
        f = f_next;
        if (change <= prob.tolerance * std::max(std::abs(f), 1e-300)) {
            sol.converged = true;
            break;
        }
    }
    sol.phi = compose_rc(prob.a_q, sol.k);
    return sol;
}

} // namespace ris

#endif // RISWCB_WEIGHTS_HPP
