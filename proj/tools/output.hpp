// Copyright 2026 The crgames Authors
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

#ifndef CRGAMES_TOOLS_OUTPUT_HPP_
#define CRGAMES_TOOLS_OUTPUT_HPP_

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace crgames::tools {

constexpr const char* kToolVersion = "0.1.0";

// Numbers are serialized with 12 significant digits everywhere, so output
// files are a stable compatibility contract.
inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header)
      : out_(path) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
    write_row_strings(header);
  }

  void write_row_strings(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  void write_row(const std::vector<double>& cells,
                 const std::vector<std::string>& prefix = {}) {
    std::vector<std::string> row = prefix;
    for (double v : cells) row.push_back(num(v));
    write_row_strings(row);
  }

 private:
  std::ofstream out_;
};

inline uint64_t fnv1a(const std::string& data) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

// Every command writes a manifest next to its outputs; re-running the
// recorded command line reproduces the outputs byte for byte.
inline void write_manifest(const std::string& manifest_path,
                           const std::vector<std::string>& argv,
                           const std::string& canonical_config,
                           std::optional<uint64_t> seed,
                           const std::vector<std::string>& outputs) {
  nlohmann::ordered_json m;
  m["tool"] = "crgames";
  m["version"] = kToolVersion;
  m["command"] = argv;
  char digest[32];
  std::snprintf(digest, sizeof(digest), "%016llx",
                static_cast<unsigned long long>(fnv1a(canonical_config)));
  m["config_digest"] = digest;
  if (seed.has_value()) {
    m["seed"] = *seed;
  } else {
    m["seed"] = nullptr;
  }
  m["outputs"] = outputs;
  std::ofstream out(manifest_path);
  if (!out) {
    throw std::runtime_error("cannot open manifest: " + manifest_path);
  }
  out << m.dump(2) << '\n';
}

}  // namespace crgames::tools

#endif  // CRGAMES_TOOLS_OUTPUT_HPP_
