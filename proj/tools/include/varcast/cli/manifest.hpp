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


#ifndef VARCAST_CLI_MANIFEST_HPP_
#define VARCAST_CLI_MANIFEST_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace varcast::cli {

/// Lower-case hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

/// Reads a whole file; throws kIo.
std::string read_file(const std::string& path);

/// Ordered flat key=value record of one invocation. Values escape `\` and
/// newlines so that any argument survives a round trip.
class Manifest {
 public:
  void set(std::string key, std::string value);
  std::optional<std::string> get(std::string_view key) const;
  /// Throws kManifestMismatch when absent.
  const std::string& require(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string to_text() const;
  /// Throws kParse on malformed lines or duplicate keys.
  static Manifest parse(std::string_view text, const std::string& source);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace varcast::cli

#endif  // VARCAST_CLI_MANIFEST_HPP_
