// Copyright 2026 The bsuitor Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsuitor {

/// Error categories raised by the library. Each public operation documents
/// which of these it can produce.
enum class ErrorCode {
  kDuplicateEdge,
  kSelfLoop,
  kNonPositiveWeight,
  kMissingEdge,
  kNodeOutOfRange,
  kParseError,
  kMixedOwner,
  kAlreadyPresent,
  kWouldNotImprove,
  kNotPresent,
  kTooLarge,
  kInvalidArgument,
  kNotEnoughCandidates,
  kBatchConflict,
};

const char* ToString(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ToString(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the edge-list and batch readers. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bsuitor
