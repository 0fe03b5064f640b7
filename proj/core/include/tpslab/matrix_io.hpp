// Copyright 2026 The tpslab Authors
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

// Binary matrix files.
//
//   offset  size        content
//   0       5           ASCII "TPSW1"
//   5       4           u32 dim (little-endian)
//   9       4           u32 dS  (little-endian; split of a structure unitary,
//                                  dim for plain matrices)
//   13      16*dim*dim  float64 LE, interleaved (re, im), row-major

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "tpslab/linalg.hpp"

namespace tpslab {

inline constexpr std::string_view kMatrixFileMagic = "TPSW1";

struct MatrixFile {
  ComplexMatrix matrix;
  std::uint32_t dS = 0;
};

/// Throws InvalidInput naming the file on any format problem.
MatrixFile read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m,
                       std::uint32_t dS);

}  // namespace tpslab
