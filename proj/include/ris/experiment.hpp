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

#ifndef RISWCB_EXPERIMENT_HPP
#define RISWCB_EXPERIMENT_HPP

#include "ris/config.hpp"
#include "ris/results.hpp"
#include "ris/rng.hpp"
#include "ris/schemes.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#ifndef RISWCB_VERSION
#define RISWCB_VERSION "0.1.0"
#endif

namespace ris {

inline constexpr std::uint64_t kChannelStream = 0x6368616e6e656cULL; // "channel"
inline constexpr std::uint64_t kSchemeStream = 0x736368656d65ULL;    // "scheme"

// Random streams are keyed by trial, not by sweep value: every sweep point of
// a trial sees the same channel and the same training noise, so curves along
// the sweep axis compare like with like.
inline std::uint64_t channel_seed(std::uint64_t master, std::uint64_t trial)
{
    return derive_seed(master, {kChannelStream, trial});
}

inline std::uint64_t scheme_seed(std::uint64_t master, std::uint64_t trial, const SchemeSpec &spec)
{
    return derive_seed(master, {kSchemeStream, trial, label_key(scheme_label(spec)),
                                static_cast<std::uint64_t>(spec.q)});
}

/// One (sweep value, trial) cell: every configured scheme on one channel.
inline std::vector<ResultRow> run_cell(const ExperimentConfig &cfg, const SweepPoint &pt, double sweep_value,
                                       std::uint64_t trial)
{
    Rng ch_rng(channel_seed(cfg.master_seed, trial));
    const ChannelRealization ch = sample_channels(pt.geometry, pt.links, ch_rng, cfg.angles);

    std::vector<ResultRow> rows;
    rows.reserve(pt.schemes.size());
    for (const SchemeSpec &spec : pt.schemes) {
        Rng rng(scheme_seed(cfg.master_seed, trial, spec));
        const CapacityRecord rec = run_scheme(spec, ch, pt.system, rng);
        ResultRow r;
        r.scheme = rec.scheme;
        r.sweep_axis = sweep_axis_name(cfg.axis);
        r.sweep_value = sweep_value;
        r.trial = trial;
        r.capacity = rec.capacity;
        r.iterations = rec.iterations;
        r.converged = rec.converged;
        r.q = rec.q_used;
        r.n = rec.n_elements;
        r.p_d_dbm = pt.p_d_dbm;
        r.p_u_dbm = pt.p_u_dbm;
        r.seed = cfg.master_seed;
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Worker count: explicit request, then RISWCB_WORKERS, then the hardware.
inline int resolve_workers(int requested)
{
    if (requested > 0)
        return requested;
    if (const char *env = std::getenv("RISWCB_WORKERS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(v);
        throw std::invalid_argument(std::string("RISWCB_WORKERS: expected a positive integer, got '") + env + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Runs every (sweep value, trial) cell. Rows come back ordered by sweep
/// index, trial, then scheme order, whatever the worker count.
inline std::vector<ResultRow> run_experiment(const ExperimentConfig &cfg, int workers = 0,
                                             const ProgressFn &progress = {})
{
    validate(cfg);
    std::vector<SweepPoint> points;
    for (double v : cfg.sweep_values)
        points.push_back(resolve_point(cfg, v));

    const std::size_t trials = static_cast<std::size_t>(cfg.trials);
    const std::size_t total = points.size() * trials;
    std::vector<std::vector<ResultRow>> cells(total);

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex mu;

    auto work = [&] {
        while (!failed.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total)
                return;
            const std::size_t s = i / trials;
            const std::size_t t = i % trials;
            try {
                cells[i] = run_cell(cfg, points[s], cfg.sweep_values[s], t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error)
                    error = std::current_exception();
                failed = true;
                return;
            }
            const std::size_t d = done.fetch_add(1) + 1;
            if (progress) {
                std::lock_guard<std::mutex> lock(mu);
                progress(d, total);
            }
        }
    };

    const int n_workers = static_cast<int>(std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(total, 1)));
    if (n_workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (int w = 0; w < n_workers; ++w)
            pool.emplace_back(work);
        for (std::thread &th : pool)
            th.join();
    }
    if (error)
        std::rethrow_exception(error);

    std::vector<ResultRow> rows;
    rows.reserve(total * cfg.schemes.size());
    for (auto &c : cells)
        for (auto &r : c)
            rows.push_back(std::move(r));
    return rows;
}

inline std::string sha256_hex(const std::string &data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256: digest failed");
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i)
        hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

inline nlohmann::json build_manifest(const ExperimentConfig &cfg, std::size_t rows, int workers)
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);

    nlohmann::json m;
    m["tool"] = "riswcb";
    m["version"] = RISWCB_VERSION;
    m["config_sha256"] = sha256_hex(canonical_config(cfg));
    m["master_seed"] = cfg.master_seed;
    m["trials"] = cfg.trials;
    m["sweep_axis"] = sweep_axis_name(cfg.axis);
    m["sweep_values"] = cfg.sweep_values;
    nlohmann::json schemes = nlohmann::json::array();
    for (const SchemeSpec &s : cfg.schemes)
        schemes.push_back(scheme_label(s));
    m["schemes"] = schemes;
    m["rows"] = rows;
    m["workers"] = workers;
    m["created_utc"] = stamp;
    return m;
}

inline std::filesystem::path manifest_path(const std::filesystem::path &csv)
{
    return std::filesystem::path(csv.string() + ".manifest.json");
}

/// Writes `text` to `path` via a `.partial` sibling that is renamed into place
/// only once the write is complete.
inline void write_atomically(const std::filesystem::path &path, const std::string &text)
{
    const std::filesystem::path partial(path.string() + ".partial");
    try {
        if (path.has_parent_path())
            std::filesystem::create_directories(path.parent_path());
        {
            std::ofstream out(partial, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot open '" + partial.string() + "' for writing");
            out << text;
            out.flush();
            if (!out)
                throw std::runtime_error("write to '" + partial.string() + "' failed");
        }
        std::filesystem::rename(partial, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(partial, ec);
        throw;
    }
}

struct RunSummary {
    std::size_t rows = 0;
    int workers = 0;
    std::filesystem::path csv;
    std::filesystem::path manifest;
};

/// Runs the experiment and writes the CSV plus its manifest. Nothing is left
/// at `csv_path` if the run fails.
inline RunSummary run_and_write(const ExperimentConfig &cfg, const std::filesystem::path &csv_path, int workers = 0,
                                const ProgressFn &progress = {})
{
    const int n_workers = resolve_workers(workers);
    const std::vector<ResultRow> rows = run_experiment(cfg, n_workers, progress);
    write_atomically(csv_path, format_csv(rows));
    const std::filesystem::path mpath = manifest_path(csv_path);
    write_atomically(mpath, build_manifest(cfg, rows.size(), n_workers).dump(2) + "\n");
    return {rows.size(), n_workers, csv_path, mpath};
}

inline std::string read_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace ris

#endif // RISWCB_EXPERIMENT_HPP
