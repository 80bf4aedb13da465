// Copyright 2026 The wpipol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WPIPOL_SAMPLING_H
#define WPIPOL_SAMPLING_H

#include <cstdint>

#include "wpipol/rng.h"
#include "wpipol/states.h"

namespace wpipol {

/// A state description (alpha, I) from which build_rho produces rho.
struct StateParams {
    AmplitudePair amps;
    double indist;
};

/// Random (alpha, I): |a1|^2 and I uniform in [0, 1], independent uniform phases
/// on both amplitudes. With probability `empty_path_fraction` one path is made
/// exactly empty (|a1|^2 in {0, 1}).
StateParams random_state(Engine &rng, double empty_path_fraction = 0.0);
StateParams random_state(std::uint64_t seed, double empty_path_fraction = 0.0);

}  // namespace wpipol

#endif
