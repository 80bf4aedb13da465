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

#include "wpipol/errors.h"

#include <cstdio>

namespace wpipol {

namespace {

std::string describe(const std::string &kind, const std::string &invariant, double residual) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", residual);
    return kind + ": " + invariant + " (residual " + buf + ")";
}

}  // namespace

Error::Error(std::string kind, std::string invariant, double residual)
    : std::runtime_error(describe(kind, invariant, residual)),
      kind_(std::move(kind)),
      invariant_(std::move(invariant)),
      residual_(residual) {
}

}  // namespace wpipol
