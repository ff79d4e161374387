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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conid {

enum class ErrorCode {
    invalid_parameter,
    invalid_graph,
    invalid_channel,
    unknown_label,
    not_snfc,
    not_xy_equivalent,
    missing_self_loops,
    improper_coloring,
    too_large,
    size_mismatch,
    not_a_representation,
    unknown_name,
    precondition_violated,
    parse_error,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Domain error raised by every conid module. The code is stable and maps
/// one-to-one onto the error names used in the CLI and Python bindings.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace conid
