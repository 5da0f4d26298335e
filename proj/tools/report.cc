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


#include "report.h"

#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "matext/lp_io.h"

namespace matext::cli {

ordered_json SetJson(Mask a) { return Points(a); }

std::vector<int> SetFromJson(const ordered_json& j) {
  return j.get<std::vector<int>>();
}

ordered_json SetsJson(const std::vector<Mask>& sets) {
  ordered_json out = ordered_json::array();
  for (Mask s : sets) out.push_back(SetJson(s));
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

ordered_json SaveCertificate(const PolymatroidLP& lp, const LPOutcome& outcome,
                             const std::string& dir) {
  const std::string lp_text = LPToJson(lp);
  const std::string cert_text = OutcomeToJson(outcome);
  const std::string lp_hash = ContentHash(lp_text);
  const std::string cert_hash = ContentHash(cert_text);
  const std::string lp_path = (std::filesystem::path(dir) / (lp_hash + ".lp.json")).string();
  const std::string cert_path =
      (std::filesystem::path(dir) / (cert_hash + ".cert.json")).string();
  WriteFile(lp_path, lp_text + "\n");
  WriteFile(cert_path, cert_text + "\n");
  ordered_json ref;
  ref["lp"] = lp_path;
  ref["lp_hash"] = lp_hash;
  ref["certificate"] = cert_path;
  ref["certificate_hash"] = cert_hash;
  return ref;
}

void WriteReport(ordered_json report, const std::string& path,
                 std::chrono::steady_clock::time_point start) {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  report["timestamp"] = {
      {"utc", buf},
      {"elapsed_seconds",
       std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
           .count()}};
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    WriteFile(path, text);
  }
}

}  // namespace matext::cli
