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

#ifndef RISWCB_RNG_HPP
#define RISWCB_RNG_HPP

#include "ris/types.hpp"

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string_view>

namespace ris {

// SplitMix64 (Steele, Lea & Flood 2014). The output for call i is a fixed
// bijective mix of (seed + i * golden_gamma), so the generator is counter
// based: a stream is fully described by its 64-bit seed.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()()
    {
        state_ += kGamma;
        return mix(state_);
    }

    std::uint64_t state() const { return state_; }

    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    static constexpr std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

using Rng = SplitMix64;

// Seed of the substream addressed by (master, keys...). Order of keys matters.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys)
{
    std::uint64_t h = SplitMix64::mix(master + SplitMix64::kGamma);
    for (std::uint64_t k : keys)
        h = SplitMix64::mix(h ^ SplitMix64::mix(k + SplitMix64::kGamma));
    return h;
}

// FNV-1a, used to turn labels into substream keys.
inline constexpr std::uint64_t label_key(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Uniform on (0, 1], 53-bit resolution.
inline double uniform_open0(Rng &rng)
{
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

inline double uniform_phase(Rng &rng)
{
    return kTwoPi * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// CN(0, 1) by Box-Muller; each component has variance 1/2.
inline cd standard_complex_normal(Rng &rng)
{
    const double r = std::sqrt(-std::log(uniform_open0(rng)));
    const double t = uniform_phase(rng);
    return {r * std::cos(t), r * std::sin(t)};
}

inline cmat complex_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng)
{
    cmat g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i)
            g(i, j) = standard_complex_normal(rng);
    return g;
}

} // namespace ris

#endif // RISWCB_RNG_HPP
