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

#ifndef RISWCB_PROPERTIES_HPP
#define RISWCB_PROPERTIES_HPP

#include "ris/experiment.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <chrono>
#include <map>
#include <numeric>
#include <string>
#include <vector>

// Property checks shared by the acceptance binary (full trial counts) and the
// `selftest` subcommand (reduced counts). Each returns a pass/fail verdict
// with the measured numbers.

namespace ris::props {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double limit_seconds = 0.0; // 0: no limit
};

class Stopwatch {
  public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline CheckResult finish(std::string name, bool ok, std::string detail, const Stopwatch &sw, double limit)
{
    CheckResult r{std::move(name), ok, std::move(detail), sw.seconds(), limit};
    if (limit > 0.0 && r.seconds > limit) {
        r.passed = false;
        r.detail += fmt::format(" (runtime {:.2f} s exceeds {:.0f} s)", r.seconds, limit);
    }
    return r;
}

/// Unit-scale i.i.d. CN(0,1) channels, used where only the algebra matters.
inline ChannelRealization iid_channel(int n, int m_t, int m_r, Rng &rng)
{
    ChannelRealization ch;
    ch.h_t = complex_gaussian_matrix(n, m_t, rng);
    ch.h_r = complex_gaussian_matrix(m_r, n, rng);
    ch.h_d = complex_gaussian_matrix(m_r, m_t, rng);
    ch.los_t = cmat::Zero(n, m_t);
    ch.los_r = cmat::Zero(m_r, n);
    ch.los_d = cmat::Zero(m_r, m_t);
    return ch;
}

inline CheckResult dft_orthogonality(const std::vector<int> &sizes = {4, 9, 26, 65}, double limit = 1.0)
{
    Stopwatch sw;
    double worst = 0.0;
    for (int s : sizes) {
        const Codebook cb = dft_codebook(s - 1, s, sequential_order(s - 1));
        const cmat g = cb.a_matrix.adjoint() * cb.a_matrix;
        worst = std::max(worst, (g - static_cast<double>(s) * cmat::Identity(s, s)).cwiseAbs().maxCoeff());
    }
    return finish("dft_orthogonality", worst <= 1e-9, fmt::format("max |A^H A - (N+1) I| = {:.3e}", worst), sw, limit);
}

inline StackedChannel noiseless_estimate(const ChannelRealization &ch, const Codebook &cb)
{
    const cmat pilot = build_pilot(static_cast<int>(ch.m_r()), static_cast<int>(ch.m_r()), 1.0);
    Rng unused(0);
    const TrainingObservation obs = run_training(ch, cb, pilot, 0.0, unused);
    return estimate_stacked_channel(obs, static_cast<int>(ch.m_t()));
}

inline CheckResult noiseless_estimation(int trials = 100, std::uint64_t seed = 11, double limit = 10.0)
{
    Stopwatch sw;
    Rng rng(seed);
    const int n = 25;
    const Codebook cb = dft_codebook(n, n + 1, sequential_order(n));
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const ChannelRealization ch = iid_channel(n, 4, 4, rng);
        const StackedChannel h = build_stacked_channel(ch);
        const StackedChannel est = noiseless_estimate(ch, cb);
        worst = std::max(worst, (est.h - h.h).norm() / h.h.norm());
    }
    return finish("noiseless_estimation", worst <= 1e-9,
                  fmt::format("{} trials, worst relative error {:.3e}", trials, worst), sw, limit);
}

inline CheckResult min_norm_projection(int trials = 100, const std::vector<int> &qs = {6, 13}, std::uint64_t seed = 12,
                                       double limit = 10.0)
{
    Stopwatch sw;
    Rng rng(seed);
    const int n = 25, m_t = 4;
    double worst = 0.0;
    for (int q : qs) {
        const Codebook cb = dft_codebook(n, q, sequential_order(n));
        const cmat proj = Eigen::kroneckerProduct(cb.a_matrix.adjoint(), cmat::Identity(m_t, m_t)).eval();
        for (int t = 0; t < trials; ++t) {
            const ChannelRealization ch = iid_channel(n, m_t, 4, rng);
            const StackedChannel est = noiseless_estimate(ch, cb);
            worst = std::max(worst, (proj * (est.h - build_stacked_channel(ch).h)).norm());
        }
    }
    return finish("min_norm_projection", worst <= 1e-9,
                  fmt::format("{} trials per Q, worst |(A_Q^H x I)(H_hat - H)| = {:.3e}", trials, worst), sw, limit);
}

inline CheckResult kkt_monotonicity(int instances = 200, std::uint64_t seed = 13, double limit = 30.0)
{
    Stopwatch sw;
    Rng rng(seed);
    double worst_drop = 0.0, worst_modulus = 0.0;
    int not_converged = 0;
    for (int i = 0; i < instances; ++i) {
        const int n = 1 + static_cast<int>(rng() % 25);
        const int m_t = 1 + static_cast<int>(rng() % 4);
        const int m_r = 1 + static_cast<int>(rng() % 4);
        const ChannelRealization ch = iid_channel(n, m_t, m_r, rng);
        const StackedChannel h = build_stacked_channel(ch);
        Eigen::JacobiSVD<cmat> svd(h.h);
        const int m_s = 1 + static_cast<int>(rng() % numerical_rank(svd.singularValues()));
        const Codebook cb = dft_codebook(n, n + 1, sequential_order(n));

        WeightProblem prob;
        prob.a_q = cb.a_matrix;
        prob.b = build_B(build_P(h, m_s), m_t);
        prob.k0 = init_weights(cb.a_matrix, random_phases(n, rng));
        prob.m_s = m_s;
        const WeightSolution sol = kkt_iterate(prob);
        for (std::size_t r = 1; r < sol.objective_trace.size(); ++r)
            worst_drop = std::max(worst_drop, sol.objective_trace[r - 1] - sol.objective_trace[r]);
        if (!sol.converged) {
            ++not_converged;
            continue;
        }
        const cvec x = cb.a_matrix * sol.k;
        for (Eigen::Index j = 0; j < x.size(); ++j)
            worst_modulus = std::max(worst_modulus, std::abs(std::abs(x(j)) - 1.0));
        worst_modulus = std::max(worst_modulus, rc_modulus_violation(sol.phi));
    }
    const bool ok = worst_drop <= 1e-9 && worst_modulus <= 1e-6;
    return finish("kkt_monotonicity", ok,
                  fmt::format("{} instances, largest objective drop {:.3e}, max ||x_n|-1| {:.3e}, {} hit r_max",
                              instances, worst_drop, worst_modulus, not_converged),
                  sw, limit);
}

/// Exhaustive search over a uniform phase grid for a single-antenna link.
inline double grid_optimum_siso(const ChannelRealization &ch, int levels, double p_d, double sigma2)
{
    const int n = static_cast<int>(ch.n_elements());
    std::vector<cd> cascade(n);
    for (int e = 0; e < n; ++e)
        cascade[e] = ch.h_r(0, e) * ch.h_t(e, 0);
    std::vector<cd> phase(levels);
    for (int l = 0; l < levels; ++l)
        phase[l] = std::polar(1.0, kTwoPi * l / levels);
    double best = 0.0;
    std::vector<int> idx(n, 0);
    while (true) {
        cd h = ch.h_d(0, 0);
        for (int e = 0; e < n; ++e)
            h += cascade[e] * phase[idx[e]];
        best = std::max(best, std::norm(h));
        int e = 0;
        while (e < n && ++idx[e] == levels)
            idx[e++] = 0;
        if (e == n)
            break;
    }
    return std::log2(1.0 + p_d * best / sigma2);
}

inline CheckResult brute_force_near_optimality(int trials = 50, std::uint64_t seed = 14, double limit = 120.0)
{
    Stopwatch sw;
    ArrayGeometry g;
    g.m_t = g.m_r = 1;
    g.n_x = 3;
    g.n_y = 1;
    const LinkSet links;
    SystemParams sys;
    sys.m_s = 1;
    sys.tau = 1;
    sys.p_d = dbm_to_watts(30.0);
    sys.p_u = dbm_to_watts(10.0);
    sys.sigma_bs2 = dbm_to_watts(-120.0);
    sys.sigma_ue2 = dbm_to_watts(-110.0);
    sys.noiseless_training = true;
    SchemeSpec spec;
    spec.kind = SchemeKind::wdft;
    spec.q = 4;

    double worst_ratio = 1e300;
    for (int t = 0; t < trials; ++t) {
        Rng ch_rng(derive_seed(seed, {static_cast<std::uint64_t>(t)}));
        const ChannelRealization ch = sample_channels(g, links, ch_rng, AngleMode::random);
        Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(t), 1}));
        const double c = run_wdft(ch, spec, sys, rng).record.capacity;
        const double opt = grid_optimum_siso(ch, 64, sys.p_d, sys.sigma_ue2);
        worst_ratio = std::min(worst_ratio, c / opt);
    }
    return finish("brute_force_near_optimality", worst_ratio >= 0.98,
                  fmt::format("{} trials, worst WDFT / 64^3-grid optimum = {:.6f}", trials, worst_ratio), sw, limit);
}

// Mean capacity per (scheme, sweep value) from experiment rows.
inline std::map<std::string, std::vector<double>> means_by_scheme(const std::vector<ResultRow> &rows,
                                                                  const std::vector<double> &values)
{
    std::map<std::string, std::vector<double>> sum, count;
    for (const ResultRow &r : rows) {
        auto &s = sum[r.scheme];
        auto &c = count[r.scheme];
        s.resize(values.size(), 0.0);
        c.resize(values.size(), 0.0);
        const auto i = static_cast<std::size_t>(std::find(values.begin(), values.end(), r.sweep_value) - values.begin());
        s[i] += r.capacity;
        c[i] += 1.0;
    }
    for (auto &[name, s] : sum)
        for (std::size_t i = 0; i < s.size(); ++i)
            s[i] /= count[name][i];
    return sum;
}

inline ExperimentConfig ordering_config(int trials, std::uint64_t seed)
{
    ExperimentConfig cfg;
    cfg.noiseless_training = true;
    cfg.trials = trials;
    cfg.master_seed = seed;
    cfg.axis = SweepAxis::q;
    cfg.sweep_values = {26};
    return cfg;
}

inline CheckResult scheme_ordering(int trials = 500, std::uint64_t seed = 15, int workers = 1, double limit = 300.0)
{
    Stopwatch sw;
    const ExperimentConfig cfg = ordering_config(trials, seed);
    const std::vector<ResultRow> rows = run_experiment(cfg, workers);
    std::map<std::string, std::vector<double>> cap;
    for (const ResultRow &r : rows)
        cap[r.scheme].push_back(r.capacity);
    auto mean = [](const std::vector<double> &v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); };
    int wins = 0;
    for (int t = 0; t < trials; ++t)
        if (cap["WDFT"][t] >= cap["DFTC"][t] - 1e-6)
            ++wins;
    const double m_w = mean(cap["WDFT"]), m_d = mean(cap["DFTC"]), m_rc = mean(cap["RanC"]), m_r = mean(cap["Random"]);
    const bool ok = wins >= 0.95 * trials && m_w >= m_d - 1e-6 && m_d > m_rc && m_rc > m_r;
    return finish("scheme_ordering", ok,
                  fmt::format("WDFT >= DFTC in {}/{} trials; means WDFT {:.4f}, DFTC {:.4f}, RanC {:.4f}, Random {:.4f}",
                              wins, trials, m_w, m_d, m_rc, m_r),
                  sw, limit);
}

inline CheckResult environment_ordering(int trials = 500, std::uint64_t seed = 16, int workers = 1,
                                        double limit = 300.0)
{
    Stopwatch sw;
    ExperimentConfig cfg;
    cfg.trials = trials;
    cfg.master_seed = seed;
    for (LinkConfig *l : {&cfg.bs_ris, &cfg.ris_ue, &cfg.bs_ue})
        l->rician_factor_db = 20.0;
    cfg.schemes.clear();
    SchemeSpec w;
    w.kind = SchemeKind::wdft;
    cfg.schemes.push_back(w);
    w.kind = SchemeKind::ewdft;
    cfg.schemes.push_back(w);
    cfg.axis = SweepAxis::q;
    cfg.sweep_values = {6, 20};
    const auto m = means_by_scheme(run_experiment(cfg, workers), cfg.sweep_values);
    const double gap6 = m.at("EWDFT")[0] - m.at("WDFT")[0];
    const double gap20 = m.at("EWDFT")[1] - m.at("WDFT")[1];
    const bool ok = gap6 >= 0.0 && gap20 < gap6;
    return finish("environment_ordering", ok,
                  fmt::format("Q=6: EWDFT {:.4f} vs WDFT {:.4f} (gap {:.4f}); Q=20: EWDFT {:.4f} vs WDFT {:.4f} (gap {:.4f})",
                              m.at("EWDFT")[0], m.at("WDFT")[0], gap6, m.at("EWDFT")[1], m.at("WDFT")[1], gap20),
                  sw, limit);
}

inline CheckResult waterfill_exactness(int sets = 1000, int competitors = 1000, std::uint64_t seed = 17,
                                       double limit = 10.0)
{
    Stopwatch sw;
    Rng rng(seed);
    double worst_sum = 0.0, worst_slack = 0.0;
    int losses = 0;
    for (int s = 0; s < sets; ++s) {
        const int k = 1 + static_cast<int>(rng() % 8);
        std::vector<double> sv(k);
        for (double &v : sv)
            v = std::exp(4.0 * (uniform_open0(rng) - 0.5)); // spread over ~4 orders of magnitude in power
        std::sort(sv.rbegin(), sv.rend());
        const double p_d = std::exp(6.0 * (uniform_open0(rng) - 0.5));
        const double sigma2 = 1.0;
        const WaterFill wf = waterfill(sv, p_d, sigma2);

        const double total = std::accumulate(wf.powers.begin(), wf.powers.end(), 0.0);
        worst_sum = std::max(worst_sum, std::abs(total - p_d) / std::max(1.0, p_d));
        // active streams sit at the water level 1/eta; inactive floors lie above it
        const double level = 1.0 / wf.eta;
        for (int i = 0; i < k; ++i) {
            const double floor = sigma2 / (sv[i] * sv[i]);
            if (wf.powers[i] > 0.0)
                worst_slack = std::max(worst_slack, std::abs(wf.powers[i] + floor - level) / level);
            else
                worst_slack = std::max(worst_slack, std::max(0.0, level - floor) / level);
        }

        const double best = capacity_from_streams(sv, wf.powers, sigma2);
        for (int c = 0; c < competitors; ++c) {
            std::vector<double> p(k);
            double z = 0.0;
            for (double &v : p)
                z += (v = -std::log(uniform_open0(rng))); // uniform on the simplex
            for (double &v : p)
                v *= p_d / z;
            if (capacity_from_streams(sv, p, sigma2) > best + 1e-12)
                ++losses;
        }
    }
    const bool ok = worst_sum <= 1e-9 && worst_slack <= 1e-9 && losses == 0;
    return finish("waterfill_exactness", ok,
                  fmt::format("{} sets: max |sum p - p_d| {:.3e}, max slackness residual {:.3e}, {} random allocations "
                              "beat water-filling",
                              sets, worst_sum, worst_slack, losses),
                  sw, limit);
}

inline ExperimentConfig power_config(int trials, std::uint64_t seed)
{
    ExperimentConfig cfg;
    cfg.trials = trials;
    cfg.master_seed = seed;
    cfg.axis = SweepAxis::p_d_dbm;
    cfg.sweep_values = {10, 20, 30, 40, 50};
    return cfg;
}

inline CheckResult power_trend(const ExperimentConfig &cfg, int workers = 1, double limit = 300.0)
{
    Stopwatch sw;
    const auto m = means_by_scheme(run_experiment(cfg, workers), cfg.sweep_values);
    bool ok = true;
    std::string detail;
    for (const auto &[scheme, v] : m) {
        bool increasing = true;
        double worst_d2 = -1e300;
        for (std::size_t i = 1; i < v.size(); ++i)
            increasing = increasing && v[i] > v[i - 1];
        for (std::size_t i = 2; i < v.size(); ++i)
            worst_d2 = std::max(worst_d2, v[i] - 2.0 * v[i - 1] + v[i - 2]);
        const bool good = increasing && worst_d2 <= 0.1;
        ok = ok && good;
        detail += fmt::format("{}{} {}[inc={} max d2={:+.4f}]", detail.empty() ? "" : "; ", scheme,
                              good ? "" : "FAIL ", increasing ? "y" : "n", worst_d2);
    }
    return finish("power_trend", ok, detail, sw, limit);
}

inline ExperimentConfig size_config(int trials, std::uint64_t seed)
{
    ExperimentConfig cfg;
    cfg.trials = trials;
    cfg.master_seed = seed;
    cfg.schemes.clear();
    for (SchemeKind k : {SchemeKind::dftc, SchemeKind::wdft}) {
        SchemeSpec s;
        s.kind = k;
        s.q = 6;
        cfg.schemes.push_back(s);
    }
    cfg.axis = SweepAxis::n;
    cfg.sweep_values = {5, 10, 15, 20, 25};
    return cfg;
}

inline CheckResult size_trend(const ExperimentConfig &cfg, int workers = 1, double limit = 300.0)
{
    Stopwatch sw;
    const auto m = means_by_scheme(run_experiment(cfg, workers), cfg.sweep_values);
    const auto &w = m.at("WDFT");
    const auto &d = m.at("DFTC");
    bool monotone = true;
    for (std::size_t i = 1; i < w.size(); ++i)
        monotone = monotone && w[i] >= w[i - 1];
    const double gap_first = w.front() - d.front();
    const double gap_last = w.back() - d.back();
    std::string curve;
    for (double v : w)
        curve += fmt::format("{}{:.3f}", curve.empty() ? "" : " ", v);
    return finish("size_trend", monotone && gap_last >= gap_first,
                  fmt::format("WDFT means [{}]; gap N={}: {:.4f}, N={}: {:.4f}", curve, cfg.sweep_values.front(),
                              gap_first, cfg.sweep_values.back(), gap_last),
                  sw, limit);
}

/// Same config twice, and with a different worker count, gives identical CSV.
inline CheckResult determinism(const ExperimentConfig &cfg, double limit = 0.0)
{
    Stopwatch sw;
    const std::string a = format_csv(run_experiment(cfg, 1));
    const std::string b = format_csv(run_experiment(cfg, 1));
    const std::string c = format_csv(run_experiment(cfg, 3));
    const bool ok = a == b && a == c;
    return finish("determinism", ok,
                  fmt::format("{} bytes; repeat identical: {}; 3 workers identical: {}; sha256 {}", a.size(),
                              a == b ? "yes" : "no", a == c ? "yes" : "no", sha256_hex(a).substr(0, 16)),
                  sw, limit);
}

inline CheckResult row_count()
{
    Stopwatch sw;
    ExperimentConfig cfg;
    cfg.trials = 3;
    cfg.sweep_values = {2, 4};
    cfg.schemes = {ExperimentConfig::default_schemes()[2], ExperimentConfig::default_schemes()[3]};
    const std::size_t rows = run_experiment(cfg, 2).size();
    return finish("row_count", rows == 12, fmt::format("2 values x 3 trials x 2 schemes -> {} rows", rows), sw, 0.0);
}

/// Reduced-count subset for a quick installation check.
inline std::vector<CheckResult> selftest()
{
    ExperimentConfig small;
    small.trials = 3;
    small.sweep_values = {4, 6};
    return {dft_orthogonality(),
            noiseless_estimation(10),
            min_norm_projection(10),
            kkt_monotonicity(20),
            brute_force_near_optimality(3),
            waterfill_exactness(100, 100),
            row_count(),
            determinism(small)};
}

} // namespace ris::props

#endif // RISWCB_PROPERTIES_HPP
