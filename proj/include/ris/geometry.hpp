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

#ifndef RISWCB_GEOMETRY_HPP
#define RISWCB_GEOMETRY_HPP

#include "ris/rng.hpp"
#include "ris/types.hpp"

#include <algorithm>
#include <limits>

// Array geometry, steering vectors, path loss and Rician channel synthesis.
//
// Orientation convention (all arrays share the global axes):
//  - BS and UE are ULAs along x. The ULA angle satisfies sin(delta) = u.x,
//    u being the unit vector toward the other terminal.
//  - The RIS is a UPA in the x-z plane facing -y. Element n (0-based) sits at
//    column c = n mod n_x (along x) and row r = n / n_x (along z).
//    For a direction u the steering phase is 2*pi*d_R*(c*u.x + r*u.z), which is
//    written as 2*pi*d_R*sin(gamma)*(r*sin(zeta) + c*cos(zeta)) with
//    zeta in [0, pi). When atan2(u.z, u.x) has to be wrapped by pi the sign is
//    carried by gamma, so gamma lies in [-pi/2, pi/2].

namespace ris {

struct ArrayGeometry {
    Vec3 bs_position{0.0, 0.0, 5.0};
    Vec3 ris_position{0.0, 100.0, 5.0};
    Vec3 ue_position{3.0, 100.0, 0.0};
    double bs_spacing = 0.5;  // wavelengths
    double ue_spacing = 0.5;  // wavelengths
    double ris_spacing = 0.25; // wavelengths
    int n_x = 5;
    int n_y = 5;
    int m_t = 4;
    int m_r = 4;

    int n_elements() const { return n_x * n_y; }

    void validate() const
    {
        if (n_x < 1 || n_y < 1 || m_t < 1 || m_r < 1)
            throw std::invalid_argument("array element counts must be >= 1");
        if (!(bs_spacing > 0.0) || !(ue_spacing > 0.0) || !(ris_spacing > 0.0))
            throw std::invalid_argument("element spacings must be > 0");
        if ((bs_position - ris_position).norm() <= 0.0 || (ris_position - ue_position).norm() <= 0.0 ||
            (bs_position - ue_position).norm() <= 0.0)
            throw degenerate_geometry("BS, RIS and UE positions must be pairwise distinct");
    }
};

struct LinkStatistics {
    double rician_factor = 1.0; // linear; +inf is pure LoS
    double path_loss_exponent = 2.0;
    double reference_loss = 1e-2; // linear
    double reference_distance = 1.0; // meters

    void validate() const
    {
        if (std::isnan(rician_factor) || rician_factor < 0.0)
            throw std::invalid_argument("Rician factor must be >= 0");
        if (!(path_loss_exponent > 0.0) || !(reference_loss > 0.0) || !(reference_distance > 0.0))
            throw std::invalid_argument("path loss parameters must be > 0");
    }
};

struct LinkSet {
    LinkStatistics bs_ris{db_to_linear(6.0), 2.4, db_to_linear(-20.0), 1.0};
    LinkStatistics ris_ue{db_to_linear(4.0), 2.5, db_to_linear(-20.0), 1.0};
    LinkStatistics bs_ue{db_to_linear(3.0), 3.5, db_to_linear(-20.0), 1.0};
};

struct UpaAngles {
    double azimuth = 0.0;   // zeta
    double elevation = 0.0; // gamma
};

struct LinkAngles {
    double bs_ris_aod = 0.0; // BS ULA, toward the RIS
    UpaAngles bs_ris_aoa;    // RIS UPA, toward the BS
    UpaAngles ris_ue_aod;    // RIS UPA, toward the UE
    double ris_ue_aoa = 0.0; // UE ULA, toward the RIS
    double bs_ue_aod = 0.0;  // BS ULA, toward the UE
    double bs_ue_aoa = 0.0;  // UE ULA, toward the BS
};

enum class AngleMode { geometric, random };

struct ChannelRealization {
    cmat h_t; // N x M_t, BS -> RIS
    cmat h_r; // M_r x N, RIS -> UE
    cmat h_d; // M_r x M_t, BS -> UE
    // sqrt(beta) * sqrt(F / (F + 1)) * LoS, same shapes as above
    cmat los_t;
    cmat los_r;
    cmat los_d;

    Eigen::Index n_elements() const { return h_t.rows(); }
    Eigen::Index m_t() const { return h_t.cols(); }
    Eigen::Index m_r() const { return h_r.rows(); }
};

inline cvec steering_ula(double angle, int count, double spacing)
{
    if (count < 1)
        throw std::invalid_argument("steering_ula: count must be >= 1");
    cvec a(count);
    const double step = kTwoPi * spacing * std::sin(angle);
    for (int m = 0; m < count; ++m)
        a(m) = std::polar(1.0, step * m);
    return a;
}

inline cvec steering_upa(double azimuth, double elevation, int n_x, int n_y, double spacing)
{
    if (n_x < 1 || n_y < 1)
        throw std::invalid_argument("steering_upa: n_x and n_y must be >= 1");
    const int n = n_x * n_y;
    cvec a(n);
    const double k = kTwoPi * spacing * std::sin(elevation);
    const double s = std::sin(azimuth);
    const double c = std::cos(azimuth);
    for (int i = 0; i < n; ++i) {
        const int row = i / n_x;
        const int col = i - row * n_x;
        a(i) = std::polar(1.0, k * (row * s + col * c));
    }
    return a;
}

inline double path_loss(double distance, const LinkStatistics &stats)
{
    if (!(distance > 0.0))
        throw std::invalid_argument("path_loss: distance must be > 0");
    return stats.reference_loss * std::pow(distance / stats.reference_distance, -stats.path_loss_exponent);
}

namespace detail {

inline Vec3 unit_toward(const Vec3 &from, const Vec3 &to)
{
    const Vec3 d = to - from;
    const double len = d.norm();
    if (!(len > 0.0))
        throw degenerate_geometry("coincident link endpoints");
    return d / len;
}

inline double ula_angle(const Vec3 &u)
{
    return std::asin(std::clamp(u.x(), -1.0, 1.0));
}

inline UpaAngles upa_angles(const Vec3 &u)
{
    const double lateral = std::sqrt(u.x() * u.x() + u.z() * u.z());
    if (lateral == 0.0)
        return {0.0, 0.0};
    double zeta = std::atan2(u.z(), u.x());
    double sign = 1.0;
    if (zeta < 0.0) {
        zeta += kPi;
        sign = -1.0;
    }
    if (zeta >= kPi) {
        zeta -= kPi;
        sign = -sign;
    }
    return {zeta, sign * std::asin(std::min(lateral, 1.0))};
}

} // namespace detail

inline LinkAngles derive_los_angles(const ArrayGeometry &g)
{
    g.validate();
    LinkAngles a;
    const Vec3 bs_to_ris = detail::unit_toward(g.bs_position, g.ris_position);
    const Vec3 ris_to_ue = detail::unit_toward(g.ris_position, g.ue_position);
    const Vec3 bs_to_ue = detail::unit_toward(g.bs_position, g.ue_position);
    a.bs_ris_aod = detail::ula_angle(bs_to_ris);
    a.bs_ris_aoa = detail::upa_angles(-bs_to_ris);
    a.ris_ue_aod = detail::upa_angles(ris_to_ue);
    a.ris_ue_aoa = detail::ula_angle(-ris_to_ue);
    a.bs_ue_aod = detail::ula_angle(bs_to_ue);
    a.bs_ue_aoa = detail::ula_angle(-bs_to_ue);
    return a;
}

// Angles drawn uniformly from their domains, for the "random angles" mode.
inline LinkAngles random_los_angles(Rng &rng)
{
    auto ula = [&] { return -kPi / 2 + kPi * (uniform_phase(rng) / kTwoPi); };
    auto upa = [&] { return UpaAngles{kPi * (uniform_phase(rng) / kTwoPi), ula()}; };
    LinkAngles a;
    a.bs_ris_aod = ula();
    a.bs_ris_aoa = upa();
    a.ris_ue_aod = upa();
    a.ris_ue_aoa = ula();
    a.bs_ue_aod = ula();
    a.bs_ue_aoa = ula();
    return a;
}

inline double los_weight(double rician_factor)
{
    if (std::isinf(rician_factor))
        return 1.0;
    return std::sqrt(rician_factor / (rician_factor + 1.0));
}

inline double nlos_weight(double rician_factor)
{
    if (std::isinf(rician_factor))
        return 0.0;
    return std::sqrt(1.0 / (rician_factor + 1.0));
}

// sqrt(beta) * (sqrt(F/(F+1)) * los + sqrt(1/(F+1)) * G), G ~ CN(0, 1) i.i.d.
// No draws are taken for F = +inf.
inline cmat sample_rician(const cmat &los, double beta, double rician_factor, Rng &rng)
{
    if (std::isnan(beta) || beta < 0.0)
        throw std::invalid_argument("sample_rician: beta must be >= 0");
    if (std::isnan(rician_factor) || rician_factor < 0.0)
        throw std::invalid_argument("sample_rician: Rician factor must be >= 0");
    const double amp = std::sqrt(beta);
    cmat out = (amp * los_weight(rician_factor)) * los;
    if (!std::isinf(rician_factor))
        out += (amp * nlos_weight(rician_factor)) * complex_gaussian_matrix(los.rows(), los.cols(), rng);
    return out;
}

inline ChannelRealization sample_channels(const ArrayGeometry &g, const LinkSet &links, Rng &rng,
                                          AngleMode mode = AngleMode::geometric)
{
    g.validate();
    links.bs_ris.validate();
    links.ris_ue.validate();
    links.bs_ue.validate();

    const LinkAngles ang = mode == AngleMode::geometric ? derive_los_angles(g) : random_los_angles(rng);

    const cvec a_bs_t = steering_ula(ang.bs_ris_aod, g.m_t, g.bs_spacing);
    const cvec a_ris_t = steering_upa(ang.bs_ris_aoa.azimuth, ang.bs_ris_aoa.elevation, g.n_x, g.n_y, g.ris_spacing);
    const cvec a_ris_r = steering_upa(ang.ris_ue_aod.azimuth, ang.ris_ue_aod.elevation, g.n_x, g.n_y, g.ris_spacing);
    const cvec a_ue_r = steering_ula(ang.ris_ue_aoa, g.m_r, g.ue_spacing);
    const cvec a_bs_d = steering_ula(ang.bs_ue_aod, g.m_t, g.bs_spacing);
    const cvec a_ue_d = steering_ula(ang.bs_ue_aoa, g.m_r, g.ue_spacing);

    const cmat los_t = a_ris_t * a_bs_t.adjoint();
    const cmat los_r = a_ue_r * a_ris_r.adjoint();
    const cmat los_d = a_ue_d * a_bs_d.adjoint();

    const double beta_t = path_loss((g.ris_position - g.bs_position).norm(), links.bs_ris);
    const double beta_r = path_loss((g.ue_position - g.ris_position).norm(), links.ris_ue);
    const double beta_d = path_loss((g.ue_position - g.bs_position).norm(), links.bs_ue);

    // One child stream per link, and NLoS draws ordered element by element
    // (H_t is sampled transposed). A surface with more elements then extends
    // the fading of a smaller one instead of redrawing it.
    Rng rng_t(rng());
    Rng rng_r(rng());
    Rng rng_d(rng());

    ChannelRealization ch;
    ch.h_t = sample_rician(los_t.transpose(), beta_t, links.bs_ris.rician_factor, rng_t).transpose();
    ch.h_r = sample_rician(los_r, beta_r, links.ris_ue.rician_factor, rng_r);
    ch.h_d = sample_rician(los_d, beta_d, links.bs_ue.rician_factor, rng_d);
    ch.los_t = (std::sqrt(beta_t) * los_weight(links.bs_ris.rician_factor)) * los_t;
    ch.los_r = (std::sqrt(beta_r) * los_weight(links.ris_ue.rician_factor)) * los_r;
    ch.los_d = (std::sqrt(beta_d) * los_weight(links.bs_ue.rician_factor)) * los_d;
    return ch;
}

} // namespace ris

#endif // RISWCB_GEOMETRY_HPP
