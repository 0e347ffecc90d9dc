// Copyright 2026 The varcast Authors
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

#ifndef VARCAST_ERROR_HPP_
#define VARCAST_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace varcast {

// Every failure the library can report. The numeric values double as the
// process exit codes of the command-line tool, so they must stay stable.
enum class Errc : int {
  kInternal = 1,
  kUsage = 2,
  kIo = 3,
  kParse = 4,
  kSchema = 5,
  kUnfillableGap = 6,
  kInvalidLength = 7,
  kInvalidLag = 8,
  kDegenerateColumn = 9,
  kDegenerateSeries = 10,
  kDegenerateRegressor = 11,
  kLengthMismatch = 12,
  kInvalidDof = 13,
  kInsufficientData = 14,
  kCollinearity = 15,
  kDegenerateCovariance = 16,
  kInvalidHorizon = 17,
  kInvalidCutoff = 18,
  kInvalidArgument = 19,
  kManifestMismatch = 20,
};

/// Stable snake_case identifier, used in machine-readable error records.
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace varcast

#endif  // VARCAST_ERROR_HPP_
