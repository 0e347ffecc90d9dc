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

#include "varcast/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "varcast/error.hpp"

namespace varcast {
namespace {

using nlohmann::json;

json matrix_rows(const Eigen::MatrixXd& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd read_square(const json& rows, std::size_t m, const char* field) {
  if (!rows.is_array() || rows.size() != m) {
    throw Error(Errc::kSchema, std::string("model field '") + field + "' is not " +
                                   std::to_string(m) + "x" + std::to_string(m));
  }
  Eigen::MatrixXd a(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m) {
      throw Error(Errc::kSchema, std::string("model field '") + field + "' has a bad row");
    }
    for (std::size_t j = 0; j < m; ++j) a(i, j) = rows[i][j].get<double>();
  }
  return a;
}

}  // namespace

std::string model_to_json(const VarModel& model) {
  json doc;
  doc["p"] = model.p;
  doc["names"] = model.names;
  json intercept = json::array();
  for (Eigen::Index i = 0; i < model.intercept.size(); ++i) intercept.push_back(model.intercept(i));
  doc["intercept"] = std::move(intercept);
  json coeffs = json::array();
  for (const auto& phi : model.coeffs) coeffs.push_back(matrix_rows(phi));
  doc["coeffs"] = std::move(coeffs);
  doc["resid_cov"] = matrix_rows(model.resid_cov);
  doc["n_obs"] = model.n_obs;
  return doc.dump(2) + "\n";
}

VarModel model_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::kParse, std::string("model JSON: ") + e.what());
  }
  try {
    VarModel model;
    model.p = doc.at("p").get<std::size_t>();
    model.names = doc.at("names").get<std::vector<std::string>>();
    model.n_obs = doc.at("n_obs").get<std::size_t>();
    const std::size_t m = model.names.size();
    const auto& intercept = doc.at("intercept");
    if (!intercept.is_array() || intercept.size() != m) {
      throw Error(Errc::kSchema, "model intercept length does not match names");
    }
    model.intercept.resize(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) model.intercept(i) = intercept[i].get<double>();
    const auto& coeffs = doc.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != model.p || model.p == 0) {
      throw Error(Errc::kSchema, "model coeffs must hold p matrices");
    }
    for (const auto& c : coeffs) model.coeffs.push_back(read_square(c, m, "coeffs"));
    model.resid_cov = read_square(doc.at("resid_cov"), m, "resid_cov");
    return model;
  } catch (const json::exception& e) {
    throw Error(Errc::kSchema, std::string("model JSON: ") + e.what());
  }
}

void save_model(const VarModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kIo, "cannot write " + path);
  out << model_to_json(model);
  if (!out) throw Error(Errc::kIo, "write failed for " + path);
}

VarModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIo, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

}  // namespace varcast
