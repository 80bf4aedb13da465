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

#ifndef WPIPOL_VERIFY_H
#define WPIPOL_VERIFY_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wpipol {

struct VerifyOptions {
    std::size_t trials = 100000;
    std::uint64_t seed = 0;
    /// Runs a single trial with exactly this trial seed (as reported in
    /// InvariantResult::failing_seed) instead of `trials` derived ones.
    std::optional<std::uint64_t> replay_seed;
};

/// Outcome of one invariant over all its trials. `residual` is defined so that
/// the invariant holds iff residual <= tolerance.
struct InvariantResult {
    std::string name;
    std::string description;
    std::size_t trials = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = true;
    /// Seed of the first failing trial; passing it as the trial seed reproduces it.
    std::optional<std::uint64_t> failing_seed;
};

/// Seed of trial `index` of a verification run started from `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t index);

/// Runs every cross-module invariant on seeded random states.
std::vector<InvariantResult> run_verification(const VerifyOptions &options);

}  // namespace wpipol

#endif
