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

#ifndef RISWCB_RESULTS_HPP
#define RISWCB_RESULTS_HPP

#include <fmt/format.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Per-trial result rows, their CSV form, and the per-(scheme, sweep value)
// summary consumed by plotting.

namespace ris {

struct ResultRow {
    std::string scheme;
    std::string sweep_axis;
    double sweep_value = 0.0;
    std::uint64_t trial = 0;
    double capacity = 0.0;
    int iterations = 0;
    bool converged = true;
    int q = 0;
    int n = 0;
    double p_d_dbm = 0.0;
    double p_u_dbm = 0.0;
    std::uint64_t seed = 0;
};

inline constexpr const char *kResultHeader =
    "scheme,sweep_axis,sweep_value,trial,capacity_bps_hz,iterations,converged,q,n,p_d_dbm,p_u_dbm,seed";

inline constexpr const char *kSummaryHeader = "scheme,sweep_axis,sweep_value,trials,mean_capacity_bps_hz,se_capacity_bps_hz,degenerate";

// Shortest round-trip formatting keeps the output byte-stable.
inline std::string format_row(const ResultRow &r)
{
    return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}", r.scheme, r.sweep_axis, r.sweep_value, r.trial,
                       r.capacity, r.iterations, r.converged ? 1 : 0, r.q, r.n, r.p_d_dbm, r.p_u_dbm, r.seed);
}

inline std::string format_csv(const std::vector<ResultRow> &rows)
{
    std::string out = std::string(kResultHeader) + "\n";
    for (const ResultRow &r : rows)
        out += format_row(r) + "\n";
    return out;
}

struct SummaryRow {
    std::string scheme;
    std::string sweep_axis;
    double sweep_value = 0.0;
    std::size_t trials = 0;
    double mean = 0.0;
    double se = 0.0;        // sample standard deviation / sqrt(trials)
    bool degenerate = false; // fewer than two trials: SE undefined, reported as 0
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string &name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name)
                return i;
        throw std::invalid_argument("results file is missing required column '" + name + "'");
    }
};

inline std::vector<std::string> split_csv_line(const std::string &line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

inline CsvTable parse_csv(const std::string &text)
{
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        auto cells = split_csv_line(line);
        if (first) {
            t.header = std::move(cells);
            first = false;
            continue;
        }
        if (cells.size() != t.header.size())
            throw std::invalid_argument(fmt::format("results file line {}: expected {} fields, got {}", line_no,
                                                    t.header.size(), cells.size()));
        t.rows.push_back(std::move(cells));
    }
    if (first)
        throw std::invalid_argument("results file is empty");
    return t;
}

inline double parse_number(const std::string &s, const std::string &column)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception &) {
        throw std::invalid_argument("results file column '" + column + "': cannot parse '" + s + "' as a number");
    }
}

/// Mean and standard error per (scheme, sweep value), in order of first
/// appearance.
inline std::vector<SummaryRow> summarize(const CsvTable &t)
{
    const std::size_t c_scheme = t.column("scheme");
    const std::size_t c_axis = t.column("sweep_axis");
    const std::size_t c_value = t.column("sweep_value");
    const std::size_t c_cap = t.column("capacity_bps_hz");

    struct Acc {
        SummaryRow row;
        double sum = 0.0;
        double sum_sq_dev = 0.0; // Welford
    };
    std::vector<Acc> acc;
    std::map<std::pair<std::string, std::string>, std::size_t> index;
    for (const auto &cells : t.rows) {
        const double value = parse_number(cells[c_value], "sweep_value");
        const double cap = parse_number(cells[c_cap], "capacity_bps_hz");
        const auto key = std::make_pair(cells[c_scheme], cells[c_value]);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, acc.size()).first;
            Acc a;
            a.row.scheme = cells[c_scheme];
            a.row.sweep_axis = cells[c_axis];
            a.row.sweep_value = value;
            acc.push_back(a);
        }
        Acc &a = acc[it->second];
        a.row.trials += 1;
        const double delta = cap - a.row.mean;
        a.row.mean += delta / static_cast<double>(a.row.trials);
        a.sum_sq_dev += delta * (cap - a.row.mean);
    }

    std::vector<SummaryRow> out;
    out.reserve(acc.size());
    for (Acc &a : acc) {
        a.row.degenerate = a.row.trials < 2;
        a.row.se = a.row.degenerate ? 0.0
                                    : std::sqrt(a.sum_sq_dev / static_cast<double>(a.row.trials - 1) /
                                                static_cast<double>(a.row.trials));
        out.push_back(a.row);
    }
    return out;
}

inline std::string format_summary(const std::vector<SummaryRow> &rows)
{
    std::string out = std::string(kSummaryHeader) + "\n";
    for (const SummaryRow &r : rows)
        out += fmt::format("{},{},{},{},{},{},{}\n", r.scheme, r.sweep_axis, r.sweep_value, r.trials, r.mean, r.se,
                           r.degenerate ? 1 : 0);
    return out;
}

} // namespace ris

#endif // RISWCB_RESULTS_HPP
