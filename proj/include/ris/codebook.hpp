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

#ifndef RISWCB_CODEBOOK_HPP
#define RISWCB_CODEBOOK_HPP

#include "ris/rng.hpp"
#include "ris/types.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace ris {

// Ordered set of RIS configurations. Column q of a_matrix is the embedded
// codeword [1; codewords[q]]: row 0 multiplies the direct channel.
// Indices in `order` are 0-based DFT column indices (empty for random books).
struct Codebook {
    std::vector<cvec> codewords;
    cmat a_matrix;
    std::vector<int> order;
    bool is_dft = false;

    int size() const { return static_cast<int>(codewords.size()); }
    int n_elements() const { return a_matrix.rows() - 1; }
};

// A(m, n) = exp(-j 2 pi m n / size), m, n = 0..size-1. The exponent is reduced
// modulo size before evaluation so A is exactly symmetric.
inline cmat dft_matrix(int size)
{
    if (size < 1)
        throw std::invalid_argument("dft_matrix: size must be >= 1");
    cmat a(size, size);
    for (int m = 0; m < size; ++m)
        for (int n = 0; n < size; ++n) {
            const long long e = (static_cast<long long>(m) * n) % size;
            a(m, n) = std::polar(1.0, -kTwoPi * static_cast<double>(e) / size);
        }
    return a;
}

inline std::vector<int> sequential_order(int n_elements)
{
    std::vector<int> order(n_elements + 1);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

// Codebook from the first q entries of `order`, a permutation (or prefix of
// one) of the N+1 DFT column indices.
inline Codebook dft_codebook(int n_elements, int q, const std::vector<int> &order)
{
    if (n_elements < 1)
        throw std::invalid_argument("dft_codebook: N must be >= 1");
    const int size = n_elements + 1;
    if (q < 1 || q > size)
        throw std::invalid_argument("dft_codebook: Q must satisfy 1 <= Q <= N+1");
    if (static_cast<int>(order.size()) < q)
        throw std::invalid_argument("dft_codebook: order shorter than Q");
    std::vector<char> seen(size, 0);
    for (int i = 0; i < q; ++i) {
        const int c = order[i];
        if (c < 0 || c >= size || seen[c])
            throw std::invalid_argument("dft_codebook: order is not a permutation of the DFT columns");
        seen[c] = 1;
    }

    const cmat full = dft_matrix(size);
    Codebook cb;
    cb.is_dft = true;
    cb.order.assign(order.begin(), order.begin() + q);
    cb.a_matrix.resize(size, q);
    cb.codewords.reserve(q);
    for (int i = 0; i < q; ++i) {
        cb.a_matrix.col(i) = full.col(cb.order[i]);
        cb.codewords.push_back(full.col(cb.order[i]).tail(n_elements));
    }
    return cb;
}

// i.i.d. uniform phases, one RC vector.
inline cvec random_phases(int n_elements, Rng &rng)
{
    cvec w(n_elements);
    for (int n = 0; n < n_elements; ++n)
        w(n) = std::polar(1.0, uniform_phase(rng));
    return w;
}

inline Codebook random_codebook(int n_elements, int q, Rng &rng)
{
    if (n_elements < 1 || q < 1)
        throw std::invalid_argument("random_codebook: N and Q must be >= 1");
    Codebook cb;
    cb.a_matrix.resize(n_elements + 1, q);
    cb.codewords.reserve(q);
    for (int i = 0; i < q; ++i) {
        cvec w = random_phases(n_elements, rng);
        cb.a_matrix(0, i) = 1.0;
        cb.a_matrix.col(i).tail(n_elements) = w;
        cb.codewords.push_back(std::move(w));
    }
    return cb;
}

// Alignment of every DFT codeword with the LoS components for one antenna
// pair: L_q = |Hd(mr, mt) + Hr(mr, :) diag(phi_q) Ht(:, mt)|^2, q over all N+1
// columns.
inline std::vector<double> los_alignment(const cmat &los_t, const cmat &los_r, const cmat &los_d, int m_t, int m_r)
{
    const Eigen::Index n = los_t.rows();
    if (los_r.cols() != n || los_d.rows() != los_r.rows() || los_d.cols() != los_t.cols())
        throw std::invalid_argument("los_alignment: inconsistent LoS shapes");
    if (m_t < 0 || m_t >= los_t.cols() || m_r < 0 || m_r >= los_r.rows())
        throw std::invalid_argument("los_alignment: antenna index out of range");

    const cmat a = dft_matrix(static_cast<int>(n) + 1);
    // per-element cascaded LoS gain for the chosen antenna pair
    const cvec cascade = los_r.row(m_r).transpose().cwiseProduct(los_t.col(m_t));
    std::vector<double> metric(n + 1);
    for (Eigen::Index q = 0; q <= n; ++q) {
        const cd g = los_d(m_r, m_t) + a.col(q).tail(n).cwiseProduct(cascade).sum();
        metric[q] = std::norm(g);
    }
    return metric;
}

// Column indices sorted by descending alignment, ties by ascending index.
inline std::vector<int> env_aware_order(const cmat &los_t, const cmat &los_r, const cmat &los_d, int m_t = 0,
                                        int m_r = 0)
{
    const std::vector<double> metric = los_alignment(los_t, los_r, los_d, m_t, m_r);
    std::vector<int> order(metric.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return metric[x] > metric[y]; });
    return order;
}

} // namespace ris

#endif // RISWCB_CODEBOOK_HPP
