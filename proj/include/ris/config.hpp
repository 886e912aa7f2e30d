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

#ifndef RISWCB_CONFIG_HPP
#define RISWCB_CONFIG_HPP

#include "ris/geometry.hpp"
#include "ris/schemes.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

// Experiment configuration. The file format is YAML; see docs/config.md for
// the full key list. Every key is optional and falls back to the defaults
// below. Powers are written in dBm / dB and converted when a sweep point is
// resolved into SystemParams.

namespace ris {

struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class SweepAxis { q, p_d_dbm, n, p_u_dbm };

inline std::string sweep_axis_name(SweepAxis a)
{
    switch (a) {
    case SweepAxis::q: return "q";
    case SweepAxis::p_d_dbm: return "p_d_dbm";
    case SweepAxis::n: return "n";
    case SweepAxis::p_u_dbm: return "p_u_dbm";
    }
    return "?";
}

struct LinkConfig {
    double rician_factor_db = 0.0; // +inf: pure LoS
    double path_loss_exponent = 2.0;
    double reference_loss_db = -20.0;
    double reference_distance = 1.0;

    LinkStatistics to_linear() const
    {
        LinkStatistics s;
        s.rician_factor = std::isinf(rician_factor_db) && rician_factor_db > 0 ? std::numeric_limits<double>::infinity()
                                                                               : db_to_linear(rician_factor_db);
        s.path_loss_exponent = path_loss_exponent;
        s.reference_loss = db_to_linear(reference_loss_db);
        s.reference_distance = reference_distance;
        return s;
    }
};

struct ExperimentConfig {
    ArrayGeometry geometry;
    AngleMode angles = AngleMode::geometric;
    LinkConfig bs_ris{6.0, 2.4, -20.0, 1.0};
    LinkConfig ris_ue{4.0, 2.5, -20.0, 1.0};
    LinkConfig bs_ue{3.0, 3.5, -20.0, 1.0};

    double p_d_dbm = 30.0;
    double p_u_dbm = 10.0;
    double sigma_bs_dbm = -120.0;
    double sigma_ue_dbm = -110.0;

    int tau = 0; // 0: tau = M_r
    bool noiseless_training = false;
    int order_m_t = 1; // 1-based antenna pair for the environment-aware order
    int order_m_r = 1;
    int streams = 0; // 0: min(M_t, M_r)

    std::vector<SchemeSpec> schemes = default_schemes();
    SweepAxis axis = SweepAxis::q;
    std::vector<double> sweep_values{6.0};
    int trials = 1000;
    std::uint64_t master_seed = 1;
    std::string output = "results.csv";

    static std::vector<SchemeSpec> default_schemes()
    {
        std::vector<SchemeSpec> s;
        for (SchemeKind k : {SchemeKind::random, SchemeKind::ranc, SchemeKind::dftc, SchemeKind::wdft, SchemeKind::ewdft}) {
            SchemeSpec spec;
            spec.kind = k;
            spec.q = k == SchemeKind::random ? 1 : 6;
            s.push_back(spec);
        }
        return s;
    }

    LinkSet links() const { return {bs_ris.to_linear(), ris_ue.to_linear(), bs_ue.to_linear()}; }
};

/// A config with one sweep value applied.
struct SweepPoint {
    ArrayGeometry geometry;
    LinkSet links;
    SystemParams system;
    std::vector<SchemeSpec> schemes;
    double p_d_dbm = 0.0;
    double p_u_dbm = 0.0;
};

inline bool uses_dft_book(const SchemeSpec &s)
{
    return s.kind == SchemeKind::dftc || s.kind == SchemeKind::wdft || s.kind == SchemeKind::ewdft;
}

inline SweepPoint resolve_point(const ExperimentConfig &cfg, double value)
{
    SweepPoint p;
    p.geometry = cfg.geometry;
    p.links = cfg.links();
    p.schemes = cfg.schemes;
    p.p_d_dbm = cfg.p_d_dbm;
    p.p_u_dbm = cfg.p_u_dbm;

    switch (cfg.axis) {
    case SweepAxis::q:
        for (SchemeSpec &s : p.schemes)
            if (s.kind != SchemeKind::random)
                s.q = static_cast<int>(value);
        break;
    case SweepAxis::p_d_dbm: p.p_d_dbm = value; break;
    case SweepAxis::p_u_dbm: p.p_u_dbm = value; break;
    case SweepAxis::n: p.geometry.n_y = static_cast<int>(value) / p.geometry.n_x; break;
    }

    const int m_r = p.geometry.m_r;
    p.system.m_s = cfg.streams > 0 ? cfg.streams : std::min(p.geometry.m_t, p.geometry.m_r);
    p.system.tau = cfg.tau > 0 ? cfg.tau : m_r;
    p.system.p_d = dbm_to_watts(p.p_d_dbm);
    p.system.p_u = dbm_to_watts(p.p_u_dbm);
    p.system.sigma_bs2 = dbm_to_watts(cfg.sigma_bs_dbm);
    p.system.sigma_ue2 = dbm_to_watts(cfg.sigma_ue_dbm);
    p.system.noiseless_training = cfg.noiseless_training;
    p.system.order_m_t = cfg.order_m_t - 1;
    p.system.order_m_r = cfg.order_m_r - 1;
    return p;
}

/// Checks every invariant, including the ones that depend on sweep values.
inline void validate(const ExperimentConfig &cfg)
{
    auto fail = [](const std::string &path, const std::string &what) { throw config_error(path + ": " + what); };
    try {
        cfg.geometry.validate();
        cfg.links().bs_ris.validate();
        cfg.links().ris_ue.validate();
        cfg.links().bs_ue.validate();
    } catch (const std::invalid_argument &e) {
        fail("geometry/links", e.what());
    }
    if (cfg.trials < 1)
        fail("trials", "must be >= 1");
    if (cfg.sweep_values.empty())
        fail("sweep.values", "must not be empty");
    if (cfg.schemes.empty())
        fail("schemes", "must not be empty");
    if (cfg.tau != 0 && cfg.tau < cfg.geometry.m_r)
        fail("training.tau", "must be >= M_r");
    if (cfg.streams < 0 || cfg.streams > std::min(cfg.geometry.m_t, cfg.geometry.m_r))
        fail("precoding.streams", "must satisfy 1 <= M_s <= min(M_t, M_r)");
    if (cfg.order_m_t < 1 || cfg.order_m_t > cfg.geometry.m_t || cfg.order_m_r < 1 || cfg.order_m_r > cfg.geometry.m_r)
        fail("training.order_antennas", "antenna indices out of range");

    for (std::size_t i = 0; i < cfg.schemes.size(); ++i) {
        const SchemeSpec &s = cfg.schemes[i];
        const std::string path = "schemes[" + std::to_string(i) + "]";
        if (s.q < 1)
            fail(path + ".q", "must be >= 1");
        if (!(s.tolerance > 0.0) || s.max_iterations < 1)
            fail(path, "optimizer tolerance must be > 0 and max_iterations >= 1");
    }

    for (double v : cfg.sweep_values) {
        const std::string path = "sweep.values";
        if (!std::isfinite(v))
            fail(path, "values must be finite");
        if (cfg.axis == SweepAxis::q || cfg.axis == SweepAxis::n) {
            if (v != std::floor(v) || v < 1)
                fail(path, "Q and N values must be positive integers");
        }
        if (cfg.axis == SweepAxis::n && static_cast<long long>(v) % cfg.geometry.n_x != 0)
            fail(path, "N = " + std::to_string(static_cast<long long>(v)) + " is not a multiple of ris_columns = " +
                           std::to_string(cfg.geometry.n_x));
        const SweepPoint p = resolve_point(cfg, v);
        const int n = p.geometry.n_elements();
        for (const SchemeSpec &s : p.schemes)
            if (uses_dft_book(s) && s.q > n + 1)
                fail(path, "Q = " + std::to_string(s.q) + " exceeds N+1 = " + std::to_string(n + 1) + " for " +
                               scheme_label(s));
    }
}

namespace detail {

inline void check_keys(const YAML::Node &node, const std::string &path, const std::set<std::string> &allowed)
{
    if (!node.IsMap())
        throw config_error(path.empty() ? "<root>: expected a mapping" : path + ": expected a mapping");
    for (const auto &kv : node) {
        const std::string key = kv.first.as<std::string>();
        if (!allowed.count(key))
            throw config_error((path.empty() ? key : path + "." + key) + ": unknown key");
    }
}

template <typename T>
T read_as(const YAML::Node &node, const std::string &path)
{
    try {
        return node.as<T>();
    } catch (const YAML::Exception &) {
        throw config_error(path + ": invalid value '" + YAML::Dump(node) + "'");
    }
}

template <typename T>
void read_opt(const YAML::Node &parent, const std::string &key, const std::string &path, T &out)
{
    if (const YAML::Node n = parent[key])
        out = read_as<T>(n, path.empty() ? key : path + "." + key);
}

inline Vec3 read_vec3(const YAML::Node &n, const std::string &path)
{
    if (!n.IsSequence() || n.size() != 3)
        throw config_error(path + ": expected a list of 3 numbers");
    return {read_as<double>(n[0], path), read_as<double>(n[1], path), read_as<double>(n[2], path)};
}

inline void read_link(const YAML::Node &n, const std::string &path, LinkConfig &link)
{
    check_keys(n, path, {"rician_factor_db", "path_loss_exponent", "reference_loss_db", "reference_distance"});
    read_opt(n, "rician_factor_db", path, link.rician_factor_db);
    read_opt(n, "path_loss_exponent", path, link.path_loss_exponent);
    read_opt(n, "reference_loss_db", path, link.reference_loss_db);
    read_opt(n, "reference_distance", path, link.reference_distance);
}

inline SchemeSpec read_scheme(const YAML::Node &n, const std::string &path)
{
    SchemeSpec s;
    // yaml-cpp nodes alias on assignment, so the shorthand gets a fresh map
    YAML::Node node;
    if (n.IsScalar()) {
        node = YAML::Node(YAML::NodeType::Map);
        node["kind"] = n.as<std::string>();
    } else {
        node.reset(n);
    }
    check_keys(node, path,
               {"kind", "q", "ordering", "composition", "keep_best_codeword", "genie_precoder", "tolerance",
                "max_iterations"});
    if (!node["kind"])
        throw config_error(path + ".kind: missing");
    const std::string kind = read_as<std::string>(node["kind"], path + ".kind");
    if (kind == "CE&PBF" || kind == "CEPBF")
        throw config_error(path + ".kind: CE&PBF is reserved and not implemented");
    const auto k = parse_scheme_kind(kind);
    if (!k)
        throw config_error(path + ".kind: unknown scheme '" + kind + "' (Random, RanC, DFTC, WDFT, EWDFT)");
    s.kind = *k;
    s.q = s.kind == SchemeKind::random ? 1 : 6;
    read_opt(node, "q", path, s.q);
    if (s.kind == SchemeKind::random)
        s.q = 1;
    if (const YAML::Node o = node["ordering"]) {
        const std::string v = read_as<std::string>(o, path + ".ordering");
        if (v == "sequential")
            s.ordering = Ordering::sequential;
        else if (v == "environment_aware")
            s.ordering = Ordering::environment_aware;
        else
            throw config_error(path + ".ordering: expected sequential or environment_aware");
    }
    if (const YAML::Node c = node["composition"]) {
        const std::string v = read_as<std::string>(c, path + ".composition");
        if (v == "weighted")
            s.composition = Composition::weighted;
        else if (v == "projected")
            s.composition = Composition::projected;
        else
            throw config_error(path + ".composition: expected weighted or projected");
    }
    read_opt(node, "keep_best_codeword", path, s.keep_best_codeword);
    read_opt(node, "genie_precoder", path, s.genie_precoder);
    read_opt(node, "tolerance", path, s.tolerance);
    read_opt(node, "max_iterations", path, s.max_iterations);
    return s;
}

} // namespace detail

inline ExperimentConfig parse_config_node(const YAML::Node &root)
{
    using namespace detail;
    ExperimentConfig cfg;
    if (!root || root.IsNull())
        return cfg;
    check_keys(root, "",
               {"geometry", "links", "power", "training", "precoding", "optimizer", "schemes", "sweep", "trials", "seed",
                "output"});

    if (const YAML::Node g = root["geometry"]) {
        check_keys(g, "geometry",
                   {"bs_position", "ris_position", "ue_position", "bs_antennas", "ue_antennas", "ris_columns",
                    "ris_rows", "ris_elements", "bs_spacing", "ue_spacing", "ris_spacing", "angles"});
        ArrayGeometry &geo = cfg.geometry;
        if (g["bs_position"]) geo.bs_position = read_vec3(g["bs_position"], "geometry.bs_position");
        if (g["ris_position"]) geo.ris_position = read_vec3(g["ris_position"], "geometry.ris_position");
        if (g["ue_position"]) geo.ue_position = read_vec3(g["ue_position"], "geometry.ue_position");
        read_opt(g, "bs_antennas", "geometry", geo.m_t);
        read_opt(g, "ue_antennas", "geometry", geo.m_r);
        read_opt(g, "ris_columns", "geometry", geo.n_x);
        read_opt(g, "ris_rows", "geometry", geo.n_y);
        read_opt(g, "bs_spacing", "geometry", geo.bs_spacing);
        read_opt(g, "ue_spacing", "geometry", geo.ue_spacing);
        read_opt(g, "ris_spacing", "geometry", geo.ris_spacing);
        if (const YAML::Node ne = g["ris_elements"]) {
            if (g["ris_rows"])
                throw config_error("geometry.ris_elements: give either ris_elements or ris_rows, not both");
            const int n = read_as<int>(ne, "geometry.ris_elements");
            if (geo.n_x < 1 || n < 1 || n % geo.n_x != 0)
                throw config_error("geometry.ris_elements: N = " + std::to_string(n) +
                                   " is not a positive multiple of ris_columns = " + std::to_string(geo.n_x));
            geo.n_y = n / geo.n_x;
        }
        if (const YAML::Node a = g["angles"]) {
            const std::string v = read_as<std::string>(a, "geometry.angles");
            if (v == "geometric")
                cfg.angles = AngleMode::geometric;
            else if (v == "random")
                cfg.angles = AngleMode::random;
            else
                throw config_error("geometry.angles: expected geometric or random");
        }
    }

    if (const YAML::Node l = root["links"]) {
        check_keys(l, "links", {"bs_ris", "ris_ue", "bs_ue"});
        if (l["bs_ris"]) read_link(l["bs_ris"], "links.bs_ris", cfg.bs_ris);
        if (l["ris_ue"]) read_link(l["ris_ue"], "links.ris_ue", cfg.ris_ue);
        if (l["bs_ue"]) read_link(l["bs_ue"], "links.bs_ue", cfg.bs_ue);
    }

    if (const YAML::Node p = root["power"]) {
        check_keys(p, "power", {"p_d_dbm", "p_u_dbm", "sigma_bs_dbm", "sigma_ue_dbm"});
        read_opt(p, "p_d_dbm", "power", cfg.p_d_dbm);
        read_opt(p, "p_u_dbm", "power", cfg.p_u_dbm);
        read_opt(p, "sigma_bs_dbm", "power", cfg.sigma_bs_dbm);
        read_opt(p, "sigma_ue_dbm", "power", cfg.sigma_ue_dbm);
    }

    if (const YAML::Node t = root["training"]) {
        check_keys(t, "training", {"tau", "noiseless", "order_antennas"});
        read_opt(t, "tau", "training", cfg.tau);
        read_opt(t, "noiseless", "training", cfg.noiseless_training);
        if (const YAML::Node oa = t["order_antennas"]) {
            if (!oa.IsSequence() || oa.size() != 2)
                throw config_error("training.order_antennas: expected [m_t, m_r]");
            cfg.order_m_t = read_as<int>(oa[0], "training.order_antennas");
            cfg.order_m_r = read_as<int>(oa[1], "training.order_antennas");
        }
    }

    if (const YAML::Node pc = root["precoding"]) {
        check_keys(pc, "precoding", {"streams"});
        read_opt(pc, "streams", "precoding", cfg.streams);
    }

    // optimizer defaults apply to every scheme that does not override them
    double tolerance = 1e-8;
    int max_iterations = 100;
    if (const YAML::Node o = root["optimizer"]) {
        check_keys(o, "optimizer", {"tolerance", "max_iterations"});
        read_opt(o, "tolerance", "optimizer", tolerance);
        read_opt(o, "max_iterations", "optimizer", max_iterations);
    }

    if (const YAML::Node s = root["schemes"]) {
        if (!s.IsSequence())
            throw config_error("schemes: expected a list");
        cfg.schemes.clear();
        for (std::size_t i = 0; i < s.size(); ++i) {
            const std::string path = "schemes[" + std::to_string(i) + "]";
            YAML::Node entry = s[i];
            SchemeSpec spec = read_scheme(entry, path);
            if (!entry.IsMap() || !entry["tolerance"])
                spec.tolerance = tolerance;
            if (!entry.IsMap() || !entry["max_iterations"])
                spec.max_iterations = max_iterations;
            cfg.schemes.push_back(spec);
        }
    } else {
        for (SchemeSpec &spec : cfg.schemes) {
            spec.tolerance = tolerance;
            spec.max_iterations = max_iterations;
        }
    }

    if (const YAML::Node sw = root["sweep"]) {
        check_keys(sw, "sweep", {"axis", "values"});
        if (const YAML::Node a = sw["axis"]) {
            const std::string v = read_as<std::string>(a, "sweep.axis");
            if (v == "q") cfg.axis = SweepAxis::q;
            else if (v == "p_d_dbm") cfg.axis = SweepAxis::p_d_dbm;
            else if (v == "n") cfg.axis = SweepAxis::n;
            else if (v == "p_u_dbm") cfg.axis = SweepAxis::p_u_dbm;
            else throw config_error("sweep.axis: expected one of q, p_d_dbm, n, p_u_dbm");
        }
        if (const YAML::Node vals = sw["values"]) {
            if (!vals.IsSequence())
                throw config_error("sweep.values: expected a list");
            cfg.sweep_values.clear();
            for (const auto &v : vals)
                cfg.sweep_values.push_back(read_as<double>(v, "sweep.values"));
        } else if (cfg.axis != SweepAxis::q) {
            throw config_error("sweep.values: required when sweep.axis is given");
        }
    }

    read_opt(root, "trials", "", cfg.trials);
    read_opt(root, "seed", "", cfg.master_seed);
    read_opt(root, "output", "", cfg.output);

    validate(cfg);
    return cfg;
}

inline ExperimentConfig parse_config(const std::string &text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception &e) {
        throw config_error(std::string("<root>: malformed YAML: ") + e.what());
    }
    return parse_config_node(root);
}

/// Fully resolved config as YAML, keys in fixed order. Used for the manifest
/// hash, so equal configs hash equally however they were written.
inline std::string canonical_config(const ExperimentConfig &cfg)
{
    YAML::Emitter e;
    e.SetDoublePrecision(17);
    auto vec3 = [&](const Vec3 &v) {
        e << YAML::Flow << YAML::BeginSeq << v.x() << v.y() << v.z() << YAML::EndSeq;
    };
    auto link = [&](const char *name, const LinkConfig &l) {
        e << YAML::Key << name << YAML::Value << YAML::BeginMap;
        e << YAML::Key << "rician_factor_db" << YAML::Value << l.rician_factor_db;
        e << YAML::Key << "path_loss_exponent" << YAML::Value << l.path_loss_exponent;
        e << YAML::Key << "reference_loss_db" << YAML::Value << l.reference_loss_db;
        e << YAML::Key << "reference_distance" << YAML::Value << l.reference_distance;
        e << YAML::EndMap;
    };
    const ArrayGeometry &g = cfg.geometry;
    e << YAML::BeginMap;
    e << YAML::Key << "geometry" << YAML::Value << YAML::BeginMap;
    e << YAML::Key << "bs_position" << YAML::Value;
    vec3(g.bs_position);
    e << YAML::Key << "ris_position" << YAML::Value;
    vec3(g.ris_position);
    e << YAML::Key << "ue_position" << YAML::Value;
    vec3(g.ue_position);
    e << YAML::Key << "bs_antennas" << YAML::Value << g.m_t;
    e << YAML::Key << "ue_antennas" << YAML::Value << g.m_r;
    e << YAML::Key << "ris_columns" << YAML::Value << g.n_x;
    e << YAML::Key << "ris_rows" << YAML::Value << g.n_y;
    e << YAML::Key << "bs_spacing" << YAML::Value << g.bs_spacing;
    e << YAML::Key << "ue_spacing" << YAML::Value << g.ue_spacing;
    e << YAML::Key << "ris_spacing" << YAML::Value << g.ris_spacing;
    e << YAML::Key << "angles" << YAML::Value << (cfg.angles == AngleMode::geometric ? "geometric" : "random");
    e << YAML::EndMap;
    e << YAML::Key << "links" << YAML::Value << YAML::BeginMap;
    link("bs_ris", cfg.bs_ris);
    link("ris_ue", cfg.ris_ue);
    link("bs_ue", cfg.bs_ue);
    e << YAML::EndMap;
    e << YAML::Key << "power" << YAML::Value << YAML::BeginMap;
    e << YAML::Key << "p_d_dbm" << YAML::Value << cfg.p_d_dbm;
    e << YAML::Key << "p_u_dbm" << YAML::Value << cfg.p_u_dbm;
    e << YAML::Key << "sigma_bs_dbm" << YAML::Value << cfg.sigma_bs_dbm;
    e << YAML::Key << "sigma_ue_dbm" << YAML::Value << cfg.sigma_ue_dbm;
    e << YAML::EndMap;
    e << YAML::Key << "training" << YAML::Value << YAML::BeginMap;
    e << YAML::Key << "tau" << YAML::Value << (cfg.tau > 0 ? cfg.tau : g.m_r);
    e << YAML::Key << "noiseless" << YAML::Value << cfg.noiseless_training;
    e << YAML::Key << "order_antennas" << YAML::Value << YAML::Flow << YAML::BeginSeq << cfg.order_m_t
      << cfg.order_m_r << YAML::EndSeq;
    e << YAML::EndMap;
    e << YAML::Key << "precoding" << YAML::Value << YAML::BeginMap;
    e << YAML::Key << "streams" << YAML::Value << (cfg.streams > 0 ? cfg.streams : std::min(g.m_t, g.m_r));
    e << YAML::EndMap;
    e << YAML::Key << "schemes" << YAML::Value << YAML::BeginSeq;
    for (const SchemeSpec &s : cfg.schemes) {
        e << YAML::BeginMap;
        e << YAML::Key << "kind" << YAML::Value << std::string(scheme_kind_name(s.kind));
        e << YAML::Key << "q" << YAML::Value << s.q;
        e << YAML::Key << "ordering" << YAML::Value
          << (s.ordering == Ordering::sequential ? "sequential" : "environment_aware");
        e << YAML::Key << "composition" << YAML::Value
          << (s.composition == Composition::weighted ? "weighted" : "projected");
        e << YAML::Key << "keep_best_codeword" << YAML::Value << s.keep_best_codeword;
        e << YAML::Key << "genie_precoder" << YAML::Value << s.genie_precoder;
        e << YAML::Key << "tolerance" << YAML::Value << s.tolerance;
        e << YAML::Key << "max_iterations" << YAML::Value << s.max_iterations;
        e << YAML::EndMap;
    }
    e << YAML::EndSeq;
    e << YAML::Key << "sweep" << YAML::Value << YAML::BeginMap;
    e << YAML::Key << "axis" << YAML::Value << sweep_axis_name(cfg.axis);
    e << YAML::Key << "values" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (double v : cfg.sweep_values)
        e << v;
    e << YAML::EndSeq << YAML::EndMap;
    e << YAML::Key << "trials" << YAML::Value << cfg.trials;
    e << YAML::Key << "seed" << YAML::Value << cfg.master_seed;
    e << YAML::Key << "output" << YAML::Value << cfg.output;
    e << YAML::EndMap;
    return std::string(e.c_str()) + "\n";
}

} // namespace ris

#endif // RISWCB_CONFIG_HPP
