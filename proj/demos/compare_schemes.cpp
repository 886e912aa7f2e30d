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

// One channel draw, every scheme, printed side by side.

#include <ris.hpp>

#include <cstdio>

int main()
{
    using namespace ris;

    ArrayGeometry geometry; // 4x4 MIMO, 5x5 surface, default positions
    LinkSet links;
    Rng channel_rng(2026);
    const ChannelRealization ch = sample_channels(geometry, links, channel_rng);

    SystemParams sys;
    sys.p_d = dbm_to_watts(30.0);
    sys.p_u = dbm_to_watts(10.0);
    sys.sigma_bs2 = dbm_to_watts(-120.0);
    sys.sigma_ue2 = dbm_to_watts(-110.0);

    std::printf("%-8s %4s %12s %6s\n", "scheme", "Q", "C [bit/s/Hz]", "iters");
    for (SchemeKind kind : {SchemeKind::random, SchemeKind::ranc, SchemeKind::dftc, SchemeKind::wdft, SchemeKind::ewdft}) {
        SchemeSpec spec;
        spec.kind = kind;
        spec.q = kind == SchemeKind::random ? 1 : 6;
        Rng rng(derive_seed(7, {label_key(scheme_label(spec))}));
        const CapacityRecord r = run_scheme(spec, ch, sys, rng);
        std::printf("%-8s %4d %12.4f %6d\n", r.scheme.c_str(), r.q_used, r.capacity, r.iterations);
    }
    return 0;
}
