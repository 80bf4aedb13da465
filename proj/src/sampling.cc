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

#include "wpipol/sampling.h"

#include <cmath>
#include <numbers>
#include <random>

namespace wpipol {

StateParams random_state(Engine &rng, double empty_path_fraction) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    double alpha1_sq = unit(rng);
    const double phase1 = angle(rng);
    const double phase2 = angle(rng);
    const double indist = unit(rng);
    if (empty_path_fraction > 0.0 && unit(rng) < empty_path_fraction) {
        alpha1_sq = unit(rng) < 0.5 ? 0.0 : 1.0;
    }
    const Complex a1 = std::polar(std::sqrt(alpha1_sq), phase1);
    const Complex a2 = std::polar(std::sqrt(1.0 - alpha1_sq), phase2);
    return {AmplitudePair::make(a1, a2), indist};
}

StateParams random_state(std::uint64_t seed, double empty_path_fraction) {
    Engine rng = make_engine(seed);
    return random_state(rng, empty_path_fraction);
}

}  // namespace wpipol
