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

// riswcb: run capacity sweeps, summarise their CSV output, self-check.

#include "ris/properties.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>

#include <iostream>
#include <optional>

namespace {

int cmd_run(const std::string &config_path, std::optional<std::string> output, std::optional<int> trials,
            std::optional<std::uint64_t> seed, int workers, bool quiet)
{
    ris::ExperimentConfig cfg = ris::parse_config(ris::read_file(config_path));
    if (trials)
        cfg.trials = *trials;
    if (seed)
        cfg.master_seed = *seed;
    if (output)
        cfg.output = *output;
    ris::validate(cfg);

    ris::ProgressFn progress;
    if (!quiet)
        progress = [last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
            const std::size_t pct = 100 * done / total;
            if (pct != last || done == total) {
                last = pct;
                fmt::print(stderr, "\r{:3d}% ({}/{})", pct, done, total);
                if (done == total)
                    fmt::print(stderr, "\n");
            }
        };
    const ris::RunSummary s = ris::run_and_write(cfg, cfg.output, workers, progress);
    fmt::print("wrote {} rows to {} ({} workers), manifest {}\n", s.rows, s.csv.string(), s.workers,
               s.manifest.string());
    return 0;
}

int cmd_summarize(const std::string &input, const std::optional<std::string> &output)
{
    const auto rows = ris::summarize(ris::parse_csv(ris::read_file(input)));
    const std::string text = ris::format_summary(rows);
    if (output)
        ris::write_atomically(*output, text);
    else
        std::cout << text;
    return 0;
}

int cmd_selftest()
{
    bool ok = true;
    for (const auto &r : ris::props::selftest()) {
        fmt::print("{} {}: {} [{:.2f} s]\n", r.passed ? "PASS" : "FAIL", r.name, r.detail, r.seconds);
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Weighted DFT codebook capacity sweeps for RIS-assisted MIMO links"};
    app.set_version_flag("--version", RISWCB_VERSION);
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::string> output;
    std::optional<int> trials;
    std::optional<std::uint64_t> seed;
    int workers = 0;
    bool quiet = false;
    CLI::App *run = app.add_subcommand("run", "Run the sweep described by a YAML config");
    run->add_option("config", config_path, "Experiment config (YAML)")->required()->check(CLI::ExistingFile);
    run->add_option("-o,--output", output, "Result CSV path (overrides the config's output)");
    run->add_option("-t,--trials", trials, "Trials per sweep value (overrides the config)")->check(CLI::PositiveNumber);
    run->add_option("-s,--seed", seed, "Master seed (overrides the config)");
    run->add_option("-j,--workers", workers,
                    "Worker threads; 0 uses RISWCB_WORKERS or the hardware concurrency")
        ->check(CLI::NonNegativeNumber);
    run->add_flag("-q,--quiet", quiet, "No progress output");

    std::string input;
    std::optional<std::string> summary_out;
    CLI::App *sum = app.add_subcommand("summarize", "Mean and standard error per scheme and sweep value");
    sum->add_option("input", input, "Result CSV")->required()->check(CLI::ExistingFile);
    sum->add_option("-o,--output", summary_out, "Summary CSV path (default: stdout)");

    CLI::App *self = app.add_subcommand("selftest", "Run a fast subset of the property checks");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*run)
            return cmd_run(config_path, output, trials, seed, workers, quiet);
        if (*sum)
            return cmd_summarize(input, summary_out);
        if (*self)
            return cmd_selftest();
    } catch (const std::exception &e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    }
    return 1;
}
