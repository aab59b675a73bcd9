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

#include "spcpm/error.hpp"

namespace spcpm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::not_square:
      return "NotSquare";
    case ErrorCode::not_hermitian:
      return "NotHermitian";
    case ErrorCode::non_finite:
      return "NonFinite";
    case ErrorCode::dimension_mismatch:
      return "DimensionMismatch";
    case ErrorCode::shape_mismatch:
      return "ShapeMismatch";
    case ErrorCode::empty_set:
      return "EmptySet";
    case ErrorCode::singular_matrix:
      return "SingularMatrix";
    case ErrorCode::invalid_dimension:
      return "InvalidDimension";
    case ErrorCode::invalid_block:
      return "InvalidBlock";
    case ErrorCode::not_psd:
      return "NotPSD";
    case ErrorCode::not_unitary:
      return "NotUnitary";
    case ErrorCode::size_mismatch:
      return "SizeMismatch";
    case ErrorCode::not_sp:
      return "NotSP";
    case ErrorCode::not_trace_preserving:
      return "NotTracePreserving";
    case ErrorCode::conditions_violated:
      return "ConditionsViolated";
    case ErrorCode::residual_off_block:
      return "ResidualOffBlock";
    case ErrorCode::singular_normalizer:
      return "SingularNormalizer";
    case ErrorCode::source_target_mismatch:
      return "SourceTargetMismatch";
    case ErrorCode::parse_error:
      return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace spcpm
