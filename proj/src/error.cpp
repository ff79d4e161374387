// Copyright 2026 The conid Authors
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

#include "conid/error.hpp"

namespace conid {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_parameter:
            return "invalid-parameter";
        case ErrorCode::invalid_graph:
            return "invalid-graph";
        case ErrorCode::invalid_channel:
            return "invalid-channel";
        case ErrorCode::unknown_label:
            return "unknown-label";
        case ErrorCode::not_snfc:
            return "not-snfc";
        case ErrorCode::not_xy_equivalent:
            return "not-xy-equivalent";
        case ErrorCode::missing_self_loops:
            return "missing-self-loops";
        case ErrorCode::improper_coloring:
            return "improper-coloring";
        case ErrorCode::too_large:
            return "too-large";
        case ErrorCode::size_mismatch:
            return "size-mismatch";
        case ErrorCode::not_a_representation:
            return "not-a-representation";
        case ErrorCode::unknown_name:
            return "unknown-name";
        case ErrorCode::precondition_violated:
            return "precondition-violated";
        case ErrorCode::parse_error:
            return "parse-error";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace conid
