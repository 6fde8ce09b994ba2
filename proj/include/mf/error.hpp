/*
   Copyright 2026 The mf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mf {

enum class ErrorKind {
    DimensionMismatch,
    IndexOutOfRange,
    InvalidMultiplicity,
    InvalidPoint,
    DegenerateFrame,
    DegenerateConfiguration,
    BaseLocusPoint,
    IndeterminacyPoint,
    CenterPoint,
    MalformedTree,
    UnknownSuite,
    SamplingExhausted,
    Parse,
};

inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidMultiplicity: return "InvalidMultiplicity";
        case ErrorKind::InvalidPoint: return "InvalidPoint";
        case ErrorKind::DegenerateFrame: return "DegenerateFrame";
        case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorKind::BaseLocusPoint: return "BaseLocusPoint";
        case ErrorKind::IndeterminacyPoint: return "IndeterminacyPoint";
        case ErrorKind::CenterPoint: return "CenterPoint";
        case ErrorKind::MalformedTree: return "MalformedTree";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
        case ErrorKind::SamplingExhausted: return "SamplingExhausted";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Degenerate-input errors: the input is well formed but sits on a locus
/// where the requested construction is undefined.
inline bool is_degenerate_input(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DegenerateFrame:
        case ErrorKind::DegenerateConfiguration:
        case ErrorKind::BaseLocusPoint:
        case ErrorKind::IndeterminacyPoint:
        case ErrorKind::CenterPoint:
        case ErrorKind::SamplingExhausted:
            return true;
        default:
            return false;
    }
}

/// The single exception type thrown by the library. `witness()` carries
/// the offending subset, ratio or vertex when one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string witness = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          witness_(std::move(witness)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::string witness_;
};

}  // namespace mf
