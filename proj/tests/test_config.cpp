// SPDX-License-Identifier: Apache-2.0

#include <ris/config.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace ris;

namespace {

std::string error_of(const std::string &text)
{
    try {
        parse_config(text);
    } catch (const config_error &e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(Config, EmptyGivesPaperDefaults)
{
    for (const char *text : {"", "{}", "# nothing\n"}) {
        const ExperimentConfig c = parse_config(text);
        EXPECT_EQ(c.geometry.m_t, 4);
        EXPECT_EQ(c.geometry.m_r, 4);
        EXPECT_EQ(c.geometry.n_elements(), 25);
        EXPECT_EQ(c.geometry.n_x, 5);
        EXPECT_DOUBLE_EQ(c.geometry.ris_spacing, 0.25);
        EXPECT_DOUBLE_EQ(c.geometry.bs_spacing, 0.5);
        EXPECT_DOUBLE_EQ(c.geometry.ue_spacing, 0.5);
        EXPECT_DOUBLE_EQ(c.bs_ris.rician_factor_db, 6.0);
        EXPECT_DOUBLE_EQ(c.ris_ue.rician_factor_db, 4.0);
        EXPECT_DOUBLE_EQ(c.bs_ue.rician_factor_db, 3.0);
        EXPECT_DOUBLE_EQ(c.bs_ris.path_loss_exponent, 2.4);
        EXPECT_DOUBLE_EQ(c.ris_ue.path_loss_exponent, 2.5);
        EXPECT_DOUBLE_EQ(c.bs_ue.path_loss_exponent, 3.5);
        EXPECT_DOUBLE_EQ(c.bs_ris.reference_loss_db, -20.0);
        EXPECT_DOUBLE_EQ(c.p_d_dbm, 30.0);
        EXPECT_DOUBLE_EQ(c.sigma_bs_dbm, -120.0);
        EXPECT_DOUBLE_EQ(c.sigma_ue_dbm, -110.0);
        EXPECT_EQ(c.trials, 1000);
        EXPECT_EQ(c.schemes.size(), 5u);
        EXPECT_EQ(c.geometry.bs_position, Vec3(0, 0, 5));
        EXPECT_EQ(c.geometry.ris_position, Vec3(0, 100, 5));
        EXPECT_EQ(c.geometry.ue_position, Vec3(3, 100, 0));
    }
}

TEST(Config, ResolvedPointIsLinear)
{
    const ExperimentConfig c = parse_config("");
    const SweepPoint p = resolve_point(c, 6);
    EXPECT_NEAR(p.system.p_d, 1.0, 1e-15);
    EXPECT_NEAR(p.system.sigma_bs2, 1e-15, 1e-28);
    EXPECT_NEAR(p.system.sigma_ue2, 1e-14, 1e-27);
    EXPECT_NEAR(p.links.bs_ris.reference_loss, 1e-2, 1e-16);
    EXPECT_NEAR(p.links.bs_ris.rician_factor, std::pow(10.0, 0.6), 1e-12);
    EXPECT_EQ(p.system.tau, 4);
    EXPECT_EQ(p.system.m_s, 4);
}

TEST(Config, QSweepAccepted)
{
    const ExperimentConfig c = parse_config("sweep: {axis: q, values: [2, 4, 6, 8]}\n");
    EXPECT_EQ(c.axis, SweepAxis::q);
    EXPECT_EQ(c.sweep_values, (std::vector<double>{2, 4, 6, 8}));
    const SweepPoint p = resolve_point(c, 4);
    for (const SchemeSpec &s : p.schemes)
        EXPECT_EQ(s.q, s.kind == SchemeKind::random ? 1 : 4);
}

TEST(Config, NSweepMustFactor)
{
    EXPECT_NE(error_of("sweep: {axis: n, values: [5, 26]}").find("sweep.values"), std::string::npos);
    EXPECT_NE(error_of("geometry: {ris_elements: 26}").find("geometry.ris_elements"), std::string::npos);
    const ExperimentConfig c = parse_config("sweep: {axis: n, values: [5, 10]}\nschemes: [WDFT]\n");
    EXPECT_EQ(resolve_point(c, 10).geometry.n_y, 2);
    EXPECT_EQ(resolve_point(c, 10).geometry.n_elements(), 10);
    EXPECT_EQ(parse_config("geometry: {ris_elements: 30}").geometry.n_y, 6);
}

TEST(Config, UnknownKeysNamePath)
{
    EXPECT_NE(error_of("bogus: 1").find("bogus: unknown key"), std::string::npos);
    EXPECT_NE(error_of("power: {p_d: 3}").find("power.p_d: unknown key"), std::string::npos);
    EXPECT_NE(error_of("links: {bs_ris: {rice: 1}}").find("links.bs_ris.rice"), std::string::npos);
    EXPECT_NE(error_of("schemes: [{kind: WDFT, qq: 2}]").find("schemes[0].qq"), std::string::npos);
}

TEST(Config, InvariantViolations)
{
    EXPECT_NE(error_of("trials: 0").find("trials"), std::string::npos);
    EXPECT_NE(error_of("sweep: {axis: q, values: []}").find("sweep.values"), std::string::npos);
    EXPECT_NE(error_of("sweep: {axis: q, values: [27]}").find("exceeds N+1"), std::string::npos);
    EXPECT_NE(error_of("sweep: {axis: q, values: [2.5]}").find("integers"), std::string::npos);
    EXPECT_NE(error_of("sweep: {axis: power}").find("sweep.axis"), std::string::npos);
    EXPECT_NE(error_of("schemes: [Magic]").find("unknown scheme"), std::string::npos);
    EXPECT_NE(error_of("schemes: [CE&PBF]").find("not implemented"), std::string::npos);
    EXPECT_NE(error_of("training: {tau: 2}").find("training.tau"), std::string::npos);
    EXPECT_NE(error_of("precoding: {streams: 5}").find("precoding.streams"), std::string::npos);
    EXPECT_NE(error_of("training: {order_antennas: [0, 1]}").find("order_antennas"), std::string::npos);
    EXPECT_NE(error_of("geometry: {ue_position: [0, 100, 5]}").find("geometry"), std::string::npos);
    EXPECT_NE(error_of("power: {p_d_dbm: loud}").find("power.p_d_dbm: invalid value"), std::string::npos);
    EXPECT_NE(error_of("geometry: [1, 2]").find("geometry: expected a mapping"), std::string::npos);
    EXPECT_NE(error_of("a: [").find("malformed YAML"), std::string::npos);
}

TEST(Config, InfiniteRicianFactor)
{
    const ExperimentConfig c = parse_config("links: {bs_ue: {rician_factor_db: .inf}}");
    EXPECT_TRUE(std::isinf(c.links().bs_ue.rician_factor));
}

TEST(Config, SchemeOptions)
{
    const ExperimentConfig c = parse_config(R"(
optimizer: {tolerance: 1.0e-6, max_iterations: 40}
schemes:
  - Random
  - {kind: DFTC, q: 8, ordering: environment_aware}
  - {kind: WDFT, q: 8, composition: projected, keep_best_codeword: false, max_iterations: 7}
  - {kind: Random, genie_precoder: true}
sweep: {axis: p_d_dbm, values: [10, 20]}
)");
    ASSERT_EQ(c.schemes.size(), 4u);
    EXPECT_EQ(scheme_label(c.schemes[1]), "EDFTC");
    EXPECT_EQ(c.schemes[1].q, 8);
    EXPECT_EQ(scheme_label(c.schemes[2]), "WDFT-P");
    EXPECT_FALSE(c.schemes[2].keep_best_codeword);
    EXPECT_EQ(c.schemes[2].max_iterations, 7);
    EXPECT_DOUBLE_EQ(c.schemes[2].tolerance, 1e-6);
    EXPECT_EQ(c.schemes[1].max_iterations, 40);
    EXPECT_EQ(scheme_label(c.schemes[3]), "RandomGenie");
    EXPECT_DOUBLE_EQ(resolve_point(c, 20).p_d_dbm, 20.0);
}

TEST(Config, CanonicalFormIsStableAndRoundTrips)
{
    const ExperimentConfig a = parse_config("trials: 5\nseed: 3\n");
    const ExperimentConfig b = parse_config("seed: 3\ntrials: 5\npower: {p_d_dbm: 30}\n");
    EXPECT_EQ(canonical_config(a), canonical_config(b));
    EXPECT_NE(canonical_config(a), canonical_config(parse_config("trials: 6\nseed: 3\n")));
    EXPECT_EQ(canonical_config(parse_config(canonical_config(a))), canonical_config(a));
}

TEST(Config, ShippedFigureConfigsParse)
{
    for (const char *name : {"fig3a", "fig3b", "fig4a", "fig4b"}) {
        std::ifstream in(std::string(RISWCB_SOURCE_DIR) + "/configs/" + name + ".yaml");
        ASSERT_TRUE(in) << name;
        std::stringstream ss;
        ss << in.rdbuf();
        EXPECT_NO_THROW(parse_config(ss.str())) << name;
    }
}
