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

// Step through the weight iteration on a perfectly known channel and print
// the objective after every update.

#include <ris.hpp>

#include <cstdio>

int main()
{
    using namespace ris;

    ArrayGeometry geometry;
    Rng rng(99);
    const ChannelRealization ch = sample_channels(geometry, LinkSet{}, rng);
    const int n = geometry.n_elements();
    const int q = n + 1;

    const StackedChannel h = build_stacked_channel(ch);
    const Codebook cb = dft_codebook(n, q, sequential_order(n));

    WeightProblem prob;
    prob.a_q = cb.a_matrix;
    prob.m_s = 2;
    prob.b = build_B(build_P(h, prob.m_s), geometry.m_t);
    prob.k0 = init_weights(cb.a_matrix, cb.codewords[0]);

    const WeightSolution sol = kkt_iterate(prob);
    for (std::size_t r = 0; r < sol.objective_trace.size(); ++r)
        std::printf("r=%3zu  x^H B x = %.10f  |k| = %.6f\n", r, sol.objective_trace[r], sol.k_norm_trace[r]);
    std::printf("%s after %d iterations, max ||phi_n| - 1| = %.2e\n", sol.converged ? "converged" : "stopped",
                sol.iterations, rc_modulus_violation(sol.phi));

    const double p_d = dbm_to_watts(30.0), sigma2 = dbm_to_watts(-110.0);
    std::printf("capacity, first codeword: %.4f bit/s/Hz\n",
                precoded_capacity(effective_channel(ch, cb.codewords[0]), 4, p_d, sigma2));
    std::printf("capacity, optimised RC:   %.4f bit/s/Hz\n", precoded_capacity(effective_channel(ch, sol.phi), 4, p_d, sigma2));
    return 0;
}
