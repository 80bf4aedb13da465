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

#ifndef WPIPOL_ERRORS_H
#define WPIPOL_ERRORS_H

#include <stdexcept>
#include <string>

namespace wpipol {

/// Base class of every error raised by the library. Carries the name of the
/// violated invariant and, where one exists, the offending residual.
class Error : public std::runtime_error {
   public:
    Error(std::string kind, std::string invariant, double residual);

    const std::string &kind() const noexcept {
        return kind_;
    }
    const std::string &invariant() const noexcept {
        return invariant_;
    }
    double residual() const noexcept {
        return residual_;
    }

   private:
    std::string kind_;
    std::string invariant_;
    double residual_;
};

#define WPIPOL_DECLARE_ERROR(Name)                                          \
    class Name : public Error {                                             \
       public:                                                              \
        Name(std::string invariant, double residual)                        \
            : Error(#Name, std::move(invariant), residual) {                \
        }                                                                   \
    }

WPIPOL_DECLARE_ERROR(NormalizationError);
WPIPOL_DECLARE_ERROR(RangeError);
WPIPOL_DECLARE_ERROR(HermiticityError);
WPIPOL_DECLARE_ERROR(TraceError);
WPIPOL_DECLARE_ERROR(PositivityError);
WPIPOL_DECLARE_ERROR(DegenerateError);
WPIPOL_DECLARE_ERROR(NonUnitaryError);

#undef WPIPOL_DECLARE_ERROR

}  // namespace wpipol

#endif
