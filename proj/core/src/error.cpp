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

#include "varcast/error.hpp"

namespace varcast {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kInternal: return "internal";
    case Errc::kUsage: return "usage";
    case Errc::kIo: return "io";
    case Errc::kParse: return "parse";
    case Errc::kSchema: return "schema";
    case Errc::kUnfillableGap: return "unfillable_gap";
    case Errc::kInvalidLength: return "invalid_length";
    case Errc::kInvalidLag: return "invalid_lag";
    case Errc::kDegenerateColumn: return "degenerate_column";
    case Errc::kDegenerateSeries: return "degenerate_series";
    case Errc::kDegenerateRegressor: return "degenerate_regressor";
    case Errc::kLengthMismatch: return "length_mismatch";
    case Errc::kInvalidDof: return "invalid_dof";
    case Errc::kInsufficientData: return "insufficient_data";
    case Errc::kCollinearity: return "collinearity";
    case Errc::kDegenerateCovariance: return "degenerate_covariance";
    case Errc::kInvalidHorizon: return "invalid_horizon";
    case Errc::kInvalidCutoff: return "invalid_cutoff";
    case Errc::kInvalidArgument: return "invalid_argument";
    case Errc::kManifestMismatch: return "manifest_mismatch";
  }
  return "unknown";
}

}  // namespace varcast
