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

#include "tpslab/matrix_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

namespace tpslab {

namespace {

template <typename T>
T from_le(const unsigned char* p) {
  std::array<unsigned char, sizeof(T)> buf;
  std::memcpy(buf.data(), p, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(buf.begin(), buf.end());
  }
  T out;
  std::memcpy(&out, buf.data(), sizeof(T));
  return out;
}

template <typename T>
void put_le(std::vector<unsigned char>& out, T value) {
  std::array<unsigned char, sizeof(T)> buf;
  std::memcpy(buf.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(buf.begin(), buf.end());
  }
  out.insert(out.end(), buf.begin(), buf.end());
}

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw InvalidInput("matrix file '" + path.string() + "': " + what);
}

constexpr std::size_t kHeaderSize = 5 + 4 + 4;

}  // namespace

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(path, "cannot open file");
  }
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
  if (bytes.size() < kHeaderSize ||
      std::memcmp(bytes.data(), kMatrixFileMagic.data(), kMatrixFileMagic.size()) != 0) {
    fail(path, "bad magic header, expected \"TPSW1\"");
  }
  const auto dim = from_le<std::uint32_t>(bytes.data() + 5);
  const auto dS = from_le<std::uint32_t>(bytes.data() + 9);
  if (dim == 0) {
    fail(path, "dimension must be positive");
  }
  const std::size_t expected = kHeaderSize + 16ULL * dim * dim;
  if (bytes.size() != expected) {
    fail(path, "size " + std::to_string(bytes.size()) + " bytes, expected " +
                   std::to_string(expected) + " for dim " + std::to_string(dim));
  }
  MatrixFile out;
  out.dS = dS;
  out.matrix.resize(dim, dim);
  const unsigned char* p = bytes.data() + kHeaderSize;
  for (std::uint32_t r = 0; r < dim; ++r) {
    for (std::uint32_t c = 0; c < dim; ++c) {
      const double re = from_le<double>(p);
      const double im = from_le<double>(p + 8);
      out.matrix(r, c) = Complex(re, im);
      p += 16;
    }
  }
  if (!all_finite(out.matrix)) {
    fail(path, "non-finite entry");
  }
  return out;
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m,
                       std::uint32_t dS) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidInput("write_matrix_file: matrix must be square and non-empty");
  }
  std::vector<unsigned char> bytes(kMatrixFileMagic.begin(), kMatrixFileMagic.end());
  put_le<std::uint32_t>(bytes, static_cast<std::uint32_t>(m.rows()));
  put_le<std::uint32_t>(bytes, dS);
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      put_le<double>(bytes, m(r, c).real());
      put_le<double>(bytes, m(r, c).imag());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    fail(path, "cannot open for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    fail(path, "write failed");
  }
}

}  // namespace tpslab
