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

#ifndef RISWCB_HPP
#define RISWCB_HPP

// Core simulation library (Eigen only).
#include "ris/codebook.hpp"
#include "ris/geometry.hpp"
#include "ris/precoding.hpp"
#include "ris/rng.hpp"
#include "ris/schemes.hpp"
#include "ris/training.hpp"
#include "ris/types.hpp"
#include "ris/weights.hpp"

// The experiment layer (ris/config.hpp, ris/experiment.hpp, ris/results.hpp)
// additionally needs yaml-cpp, fmt, nlohmann/json and OpenSSL; include it
// explicitly.

#endif // RISWCB_HPP
