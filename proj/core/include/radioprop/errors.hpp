// SPDX-License-Identifier: Apache-2.0
//
// radioprop - propagation measurement analysis toolkit
// Copyright (C) 2026 radioprop contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RADIOPROP_ERRORS_HPP
#define RADIOPROP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radioprop {

// Raised while reading a measurement CSV. `line` is 1-based and counts the
// header line, so the first data row is line 2.
class csv_error : public std::runtime_error {
  public:
    csv_error(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// Raised while decoding a binary IQ capture. `byte_offset` points at the
// first byte that could not be decoded.
class dat_error : public std::runtime_error {
  public:
    dat_error(std::size_t byte_offset, const std::string &what)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

  private:
    std::size_t byte_offset_;
};

// Raised when a structural search over a signal trace finds nothing usable,
// e.g. slot detection on an envelope without null regions.
class detection_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace radioprop

#endif // RADIOPROP_ERRORS_HPP
