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

#ifndef RISWCB_SCHEMES_HPP
#define RISWCB_SCHEMES_HPP

#include "ris/codebook.hpp"
#include "ris/geometry.hpp"
#include "ris/precoding.hpp"
#include "ris/training.hpp"
#include "ris/weights.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// End-to-end schemes for one channel realization. Every scheme designs its RC
// vector and precoder from its own uplink observations and is scored on the
// true channel.

namespace ris {

enum class SchemeKind { random, ranc, dftc, wdft, ewdft };
enum class Ordering { sequential, environment_aware };

// How the optimised weights reach the downlink.
//  weighted:  the composite is H^H (A_Q k (x) I), i.e. the combined codewords
//             are applied as computed.
//  projected: phi_o is projected element-wise onto unit modulus first, which
//             is what a passive RIS can realise when Q < N+1.
// Both coincide once Q = N+1 and the iteration has converged.
enum class Composition { weighted, projected };

struct SchemeSpec {
    SchemeKind kind = SchemeKind::wdft;
    int q = 6;
    Ordering ordering = Ordering::sequential;
    double tolerance = 1e-8;
    int max_iterations = 100;
    bool genie_precoder = false; // Random only: design W on the true channel
    Composition composition = Composition::weighted;
    bool keep_best_codeword = true; // WDFT: fall back to the best observed codeword if it scores higher

    Ordering effective_ordering() const
    {
        return kind == SchemeKind::ewdft ? Ordering::environment_aware : ordering;
    }
};

inline std::string_view scheme_kind_name(SchemeKind k)
{
    switch (k) {
    case SchemeKind::random: return "Random";
    case SchemeKind::ranc: return "RanC";
    case SchemeKind::dftc: return "DFTC";
    case SchemeKind::wdft: return "WDFT";
    case SchemeKind::ewdft: return "EWDFT";
    }
    return "?";
}

inline std::optional<SchemeKind> parse_scheme_kind(std::string_view s)
{
    std::string up(s);
    for (char &c : up)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (up == "RANDOM") return SchemeKind::random;
    if (up == "RANC") return SchemeKind::ranc;
    if (up == "DFTC") return SchemeKind::dftc;
    if (up == "WDFT") return SchemeKind::wdft;
    if (up == "EWDFT") return SchemeKind::ewdft;
    return std::nullopt;
}

// Label written to result files. DFTC with the environment-aware order is
// reported as "EDFTC" so the two orders stay distinguishable.
inline std::string scheme_label(const SchemeSpec &s)
{
    if (s.kind == SchemeKind::dftc && s.ordering == Ordering::environment_aware)
        return "EDFTC";
    if (s.kind == SchemeKind::random && s.genie_precoder)
        return "RandomGenie";
    if ((s.kind == SchemeKind::wdft || s.kind == SchemeKind::ewdft) && s.composition == Composition::projected)
        return std::string(scheme_kind_name(s.kind)) + "-P";
    return std::string(scheme_kind_name(s.kind));
}

// Link parameters shared by all schemes of a trial; linear units.
struct SystemParams {
    int m_s = 4;
    int tau = 4;
    double p_d = 1.0;        // watts
    double p_u = 0.01;       // watts
    double sigma_bs2 = 1e-15; // watts
    double sigma_ue2 = 1e-14; // watts
    bool noiseless_training = false;
    int order_m_t = 0; // antenna pair for the environment-aware order (0-based)
    int order_m_r = 0;

    double training_noise() const { return noiseless_training ? 0.0 : sigma_bs2; }
};

struct CapacityRecord {
    std::string scheme;
    double capacity = 0.0; // bits/s/Hz
    int q_used = 0;
    double p_d = 0.0; // watts
    double p_u = 0.0; // watts
    int n_elements = 0;
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    int iterations = 0;
    bool converged = true;
};

struct SelectionResult {
    CapacityRecord record;
    int selected = 0;           // index into the codebook
    std::vector<double> scores; // estimated capacity per codeword
    cvec phi;
};

struct WdftResult {
    CapacityRecord record;
    WeightSolution weights;
    int best_codeword = 0; // index into the training codebook
    std::vector<int> order;
    StackedChannel estimate;
    cvec applied;              // N+1 weights on [direct; cascaded] paths used downlink
    double estimated_capacity = 0.0;
    bool used_best_codeword = false;
};

namespace detail {

inline CapacityRecord base_record(std::string scheme, const ChannelRealization &ch, const SystemParams &sys, int q)
{
    CapacityRecord r;
    r.scheme = std::move(scheme);
    r.q_used = q;
    r.p_d = sys.p_d;
    r.p_u = sys.p_u;
    r.n_elements = static_cast<int>(ch.n_elements());
    return r;
}

// Capacity of `he_true` with W designed from `he_design`.
inline double evaluate(const cmat &he_true, const cmat &he_design, const SystemParams &sys)
{
    const int m_s = std::min<int>(sys.m_s, static_cast<int>(std::min(he_design.rows(), he_design.cols())));
    const PrecoderSolution pre = svd_precoder(he_design, m_s, sys.p_d, sys.sigma_ue2);
    return capacity(he_true, pre.w, sys.sigma_ue2);
}

inline double evaluate(const ChannelRealization &ch, const cvec &phi, const cmat &he_design, const SystemParams &sys)
{
    return evaluate(effective_channel(ch, phi), he_design, sys);
}

inline cvec embed(const cvec &phi)
{
    cvec x(phi.size() + 1);
    x(0) = 1.0;
    x.tail(phi.size()) = phi;
    return x;
}

inline int clamp_streams(const SystemParams &sys, const ChannelRealization &ch)
{
    return std::min<int>(sys.m_s, static_cast<int>(std::min(ch.m_t(), ch.m_r())));
}

} // namespace detail

/// Estimated capacity of each block's composite channel and the argmax (first
/// index on ties).
inline std::pair<std::vector<double>, int> score_blocks(const TrainingObservation &obs, const SystemParams &sys)
{
    std::vector<double> scores;
    scores.reserve(obs.blocks.size());
    int best = 0;
    for (std::size_t q = 0; q < obs.blocks.size(); ++q) {
        const cmat he = estimate_composite_per_block(obs.blocks[q], obs.pilot);
        const int m_s = std::min<int>(sys.m_s, static_cast<int>(std::min(he.rows(), he.cols())));
        scores.push_back(precoded_capacity(he, m_s, sys.p_d, sys.sigma_ue2));
        if (scores.back() > scores[best])
            best = static_cast<int>(q);
    }
    return {scores, best};
}

inline CapacityRecord run_random(const ChannelRealization &ch, const SystemParams &sys, Rng &rng, bool genie = false)
{
    CapacityRecord rec = detail::base_record(genie ? "RandomGenie" : "Random", ch, sys, 1);
    const cvec phi = random_phases(static_cast<int>(ch.n_elements()), rng);
    cmat he_design;
    if (genie) {
        he_design = effective_channel(ch, phi);
    } else {
        const cmat pilot = build_pilot(static_cast<int>(ch.m_r()), sys.tau, sys.p_u);
        const cmat y = uplink_receive(ch, phi, pilot, sys.training_noise(), rng);
        he_design = estimate_composite_per_block(y, pilot);
    }
    rec.capacity = detail::evaluate(ch, phi, he_design, sys);
    return rec;
}

inline SelectionResult run_codebook_select(const ChannelRealization &ch, const Codebook &cb, const SystemParams &sys,
                                           Rng &rng, std::string label = "DFTC")
{
    if (cb.size() < 1)
        throw std::invalid_argument("run_codebook_select: empty codebook");
    SelectionResult out;
    out.record = detail::base_record(std::move(label), ch, sys, cb.size());
    const cmat pilot = build_pilot(static_cast<int>(ch.m_r()), sys.tau, sys.p_u);
    const TrainingObservation obs = run_training(ch, cb, pilot, sys.training_noise(), rng);
    auto [scores, best] = score_blocks(obs, sys);
    out.scores = std::move(scores);
    out.selected = best;
    out.phi = cb.codewords[best];
    const cmat he = estimate_composite_per_block(obs.blocks[best], pilot);
    out.record.capacity = detail::evaluate(ch, out.phi, he, sys);
    return out;
}

inline std::vector<int> codeword_order(const ChannelRealization &ch, Ordering ordering, const SystemParams &sys)
{
    if (ordering == Ordering::environment_aware)
        return env_aware_order(ch.los_t, ch.los_r, ch.los_d, sys.order_m_t, sys.order_m_r);
    return sequential_order(static_cast<int>(ch.n_elements()));
}

inline WdftResult run_wdft(const ChannelRealization &ch, const SchemeSpec &spec, const SystemParams &sys, Rng &rng)
{
    const int n = static_cast<int>(ch.n_elements());
    if (spec.q < 1 || spec.q > n + 1)
        throw std::invalid_argument("run_wdft: Q must satisfy 1 <= Q <= N+1");

    WdftResult out;
    out.record = detail::base_record(scheme_label(spec), ch, sys, spec.q);
    out.order = codeword_order(ch, spec.effective_ordering(), sys);
    const Codebook cb = dft_codebook(n, spec.q, out.order);

    const cmat pilot = build_pilot(static_cast<int>(ch.m_r()), sys.tau, sys.p_u);
    const TrainingObservation obs = run_training(ch, cb, pilot, sys.training_noise(), rng);
    out.estimate = estimate_stacked_channel(obs, static_cast<int>(ch.m_t()));
    out.best_codeword = score_blocks(obs, sys).second;

    Eigen::JacobiSVD<cmat> svd(out.estimate.h);
    const int m_s = std::min(detail::clamp_streams(sys, ch), numerical_rank(svd.singularValues()));
    if (m_s < 1)
        throw rank_error("run_wdft: estimated stacked channel is zero");

    WeightProblem prob;
    prob.a_q = cb.a_matrix;
    prob.b = build_B(build_P(out.estimate, m_s), static_cast<int>(ch.m_t()));
    prob.k0 = init_weights(cb.a_matrix, cb.codewords[out.best_codeword]);
    prob.m_s = m_s;
    prob.tolerance = spec.tolerance;
    prob.max_iterations = spec.max_iterations;
    out.weights = kkt_iterate(prob);

    const int streams = detail::clamp_streams(sys, ch);
    out.applied = spec.composition == Composition::projected ? detail::embed(out.weights.phi)
                                                             : cvec(cb.a_matrix * out.weights.k);
    out.estimated_capacity =
        precoded_capacity(effective_channel(out.estimate, out.applied), streams, sys.p_d, sys.sigma_ue2);
    if (spec.keep_best_codeword) {
        const cvec incumbent = detail::embed(cb.codewords[out.best_codeword]);
        const double c = precoded_capacity(effective_channel(out.estimate, incumbent), streams, sys.p_d, sys.sigma_ue2);
        if (c > out.estimated_capacity) {
            out.applied = incumbent;
            out.estimated_capacity = c;
            out.used_best_codeword = true;
        }
    }
    out.record.capacity = detail::evaluate(effective_channel_weighted(ch, out.applied),
                                           effective_channel(out.estimate, out.applied), sys);
    out.record.iterations = out.weights.iterations;
    out.record.converged = out.weights.converged;
    return out;
}

/// Dispatch on the scheme kind.
inline CapacityRecord run_scheme(const SchemeSpec &spec, const ChannelRealization &ch, const SystemParams &sys, Rng &rng)
{
    const int n = static_cast<int>(ch.n_elements());
    switch (spec.kind) {
    case SchemeKind::random:
        return run_random(ch, sys, rng, spec.genie_precoder);
    case SchemeKind::ranc: {
        const Codebook cb = random_codebook(n, spec.q, rng);
        return run_codebook_select(ch, cb, sys, rng, scheme_label(spec)).record;
    }
    case SchemeKind::dftc: {
        const Codebook cb = dft_codebook(n, spec.q, codeword_order(ch, spec.ordering, sys));
        return run_codebook_select(ch, cb, sys, rng, scheme_label(spec)).record;
    }
    case SchemeKind::wdft:
    case SchemeKind::ewdft:
        return run_wdft(ch, spec, sys, rng).record;
    }
    throw std::invalid_argument("run_scheme: unknown scheme kind");
}

} // namespace ris

#endif // RISWCB_SCHEMES_HPP
