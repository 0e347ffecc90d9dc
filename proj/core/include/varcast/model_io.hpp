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

#ifndef VARCAST_MODEL_IO_HPP_
#define VARCAST_MODEL_IO_HPP_

#include <string>

#include "varcast/var_model.hpp"

namespace varcast {

// JSON object with fields p, names, intercept, coeffs (one row-major m x m
// array per lag), resid_cov, n_obs. Doubles are written in shortest
// round-trip form, so finite values read back bit-exact. Residuals are not
// stored.
std::string model_to_json(const VarModel& model);
VarModel model_from_json(const std::string& text);

void save_model(const VarModel& model, const std::string& path);
VarModel load_model(const std::string& path);

}  // namespace varcast

#endif  // VARCAST_MODEL_IO_HPP_
