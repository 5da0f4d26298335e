// Copyright 2026 The Authors.
//
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


#ifndef MATEXT_TOOLS_REPORT_H_
#define MATEXT_TOOLS_REPORT_H_

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"
#include "matext/lp.h"
#include "matext/matroid.h"

namespace matext::cli {

using nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "matext-report/1";

ordered_json SetJson(Mask a);
std::vector<int> SetFromJson(const ordered_json& j);
ordered_json SetsJson(const std::vector<Mask>& sets);

// Writes the LP and its outcome as separate files named by content hash
// under `dir` and returns {"lp": path, "lp_hash": h, "certificate": path,
// "certificate_hash": h}.
ordered_json SaveCertificate(const PolymatroidLP& lp, const LPOutcome& outcome,
                             const std::string& dir);

// Appends the "timestamp" member (UTC time and elapsed seconds; the only
// field that varies between identical runs) and writes the report to
// `path`, or to stdout when `path` is empty.
void WriteReport(ordered_json report, const std::string& path,
                 std::chrono::steady_clock::time_point start);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& text);

}  // namespace matext::cli

#endif  // MATEXT_TOOLS_REPORT_H_
