// Copyright 2026 The wmh Authors
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

#pragma once

// Command-line front end: compute, count, verify.

#include <iosfwd>
#include <optional>
#include <string>

#include "wmh/polytopes.hpp"

namespace wmh::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kEmpty = 2, kResource = 3, kFailed = 4 };

enum class Format { json, csv, plain };

struct RunConfig {
  std::string command;
  bool hypersimplex = false;
  std::optional<int> panhandle_r;
  std::optional<int> n;
  std::optional<int> k;
  std::string a;  // comma separated
  std::string c;
  std::string method = "auto";
  std::string counter = "both";
  int t_max = 5;
  std::string suite;
  int n_max = 6;
  int max = 8;
  int c_max = 3;
  int c_prime_max = 2;
  int cap = 8;
  unsigned workers = 0;
  Format format = Format::plain;
};

/// Comma-separated positive integers. Throws std::invalid_argument.
IntTuple parse_tuple(const std::string& text);

/// Builds the spec named by the flags. Throws std::invalid_argument.
PolytopeSpec spec_from(const RunConfig& cfg);

/// Runs the tool; `env_cap` stands in for the WMH_ENUM_CAP variable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const char* env_cap = nullptr);

}  // namespace wmh::cli
