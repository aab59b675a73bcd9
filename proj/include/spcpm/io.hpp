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

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "spcpm/cpm.hpp"
#include "spcpm/dilation.hpp"
#include "spcpm/sp.hpp"

/**
 * @file io.hpp
 * JSON interchange format, tagged "format": "spcpm/1".
 *
 * A matrix is {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major
 * order. Each document carries a "kind": channel, f-matrix,
 * orthonormal-kraus, sp-blocks or dilation. See docs/file-format.md.
 */

namespace spcpm::io {

using json = nlohmann::json;

inline constexpr const char* kFormatTag = "spcpm/1";

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json channel_to_json(const KrausRep& rep);
json f_matrix_to_json(const FMatrixRep& rep);
json orthonormal_to_json(
    const DecomposedSpace& source, const DecomposedSpace& target,
    const std::vector<WeightedOperator>& terms);
json blocks_to_json(const SPBlockRep& blocks);
json dilation_to_json(const UnitaryDilation& dil);

KrausRep channel_from_json(const json& j);
FMatrixRep f_matrix_from_json(const json& j);
SPBlockRep blocks_from_json(const json& j);
UnitaryDilation dilation_from_json(const json& j);

/// Any map-valued document (channel, f-matrix, orthonormal-kraus,
/// sp-blocks) as a Kraus representation.
KrausRep map_from_json(const json& j);

/// Serialized document followed by a newline; doubles round-trip exactly.
std::string dump(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace spcpm::io
