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

// Verification suites. Each suite walks a range of instances, checks one
// identity per instance, and collects a deterministic report.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wmh/cwp.hpp"

namespace wmh {

using Json = nlohmann::ordered_json;

struct VerifyRanges {
  int n_max = 6;
  /// Upper bound for k and m in the worpitzky suite.
  int max = 8;
  /// Largest capacity entry for c-compatible and method sweeps.
  int c_max = 3;
  /// Largest entry of c' in the main suite.
  int c_prime_max = 2;
  EnumerationOptions enumeration;
};

struct InstanceResult {
  Json key;  // e.g. {"n":4,"k":2,"m":1}
  bool pass = false;
  Json detail;
  /// Offending object in canonical notation, when one exists.
  std::optional<std::string> counterexample;
};

struct SuiteReport {
  std::string suite;
  std::vector<InstanceResult> instances;
  /// Suite-level observations that are not per-instance checks.
  Json notes = Json::object();

  bool pass() const;
  std::size_t failures() const;
  Json to_json() const;
};

/// combint, main, positivity, worpitzky, identities, methods.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite and ResourceError when
/// the ranges need enumeration above the cap.
SuiteReport run_suite(std::string_view suite, const VerifyRanges& ranges);

SuiteReport verify_combint(const VerifyRanges& ranges);
SuiteReport verify_main(const VerifyRanges& ranges);
SuiteReport verify_positivity_suite(const VerifyRanges& ranges);
SuiteReport verify_worpitzky(const VerifyRanges& ranges);
SuiteReport verify_identities(const VerifyRanges& ranges);
SuiteReport verify_methods(const VerifyRanges& ranges);

/// Every tuple in {1..max_entry}^len in lexicographic order.
std::vector<IntTuple> all_tuples(std::size_t len, int max_entry);

}  // namespace wmh
