// Copyright 2026 The spcpm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace spcpm {

enum class ErrorCode {
  not_square,
  not_hermitian,
  non_finite,
  dimension_mismatch,
  shape_mismatch,
  empty_set,
  singular_matrix,
  invalid_dimension,
  invalid_block,
  not_psd,
  not_unitary,
  size_mismatch,
  not_sp,
  not_trace_preserving,
  conditions_violated,
  residual_off_block,
  singular_normalizer,
  source_target_mismatch,
  parse_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spcpm
