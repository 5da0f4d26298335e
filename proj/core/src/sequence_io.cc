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


#include "matext/sequence_io.h"

#include <map>
#include <stdexcept>

#include "json.hpp"

namespace matext {

using nlohmann::json;

std::vector<std::string> PointNames(const Matroid& m, const AKSequence& seq) {
  return PointNames(m.size(), seq);
}

std::vector<std::string> PointNames(int n_points, const AKSequence& seq) {
  std::vector<std::string> names;
  for (int i = 0; i < n_points; ++i) names.push_back(std::to_string(i));
  for (std::size_t i = 0; i < seq.size(); ++i) {
    names.push_back(seq[i].name.empty() ? "z" + std::to_string(i + 1)
                                        : seq[i].name);
  }
  return names;
}

std::string NamedSet(Mask a, const std::vector<std::string>& names) {
  std::string s = "{";
  bool first = true;
  for (int p : Points(a)) {
    if (!first) s += ",";
    s += p < static_cast<int>(names.size()) ? names[p] : std::to_string(p);
    first = false;
  }
  return s + "}";
}

AKSequence SequenceFromJson(const std::string& text, const Matroid& m) {
  return SequenceFromJson(text, m.size());
}

AKSequence SequenceFromJson(const std::string& text, int n_points) {
  try {
    const json j = json::parse(text);
    const json& steps = j.is_array() ? j : j.at("steps");
    AKSequence seq;
    std::map<std::string, int> index;
    for (int i = 0; i < n_points; ++i) index[std::to_string(i)] = i;
    auto parse_set = [&](const json& arr, int avail) {
      Mask a = 0;
      for (const json& e : arr) {
        int p = -1;
        if (e.is_number_integer()) {
          p = e.get<int>();
        } else {
          auto it = index.find(e.get<std::string>());
          if (it == index.end()) {
            throw std::invalid_argument("unknown point '" +
                                        e.get<std::string>() + "'");
          }
          p = it->second;
        }
        if (p < 0 || p >= avail) {
          throw std::invalid_argument("point " + std::to_string(p) +
                                      " is not available at this step");
        }
        a |= Bit(p);
      }
      return a;
    };
    for (const json& s : steps) {
      AKStep step;
      const int z = n_points + static_cast<int>(seq.size());
      const std::string kind = s.value("kind", std::string("AK"));
      if (kind == "AK") {
        step.kind = StepKind::kAk;
      } else if (kind == "CI") {
        step.kind = StepKind::kCi;
      } else {
        throw std::invalid_argument("unknown step kind '" + kind + "'");
      }
      step.x = parse_set(s.at("X"), z);
      step.y = parse_set(s.at("Y"), z);
      step.name = s.value("z", std::string());
      const std::string key =
          step.name.empty() ? "z" + std::to_string(seq.size() + 1) : step.name;
      if (!index.emplace(key, z).second) {
        throw std::invalid_argument("duplicate point name '" + key + "'");
      }
      seq.push_back(step);
    }
    ValidateSequence(n_points, seq);
    return seq;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed sequence file: ") +
                                e.what());
  }
}

std::string SequenceToJson(const AKSequence& seq, const Matroid& m) {
  return SequenceToJson(seq, m.size());
}

std::string SequenceToJson(const AKSequence& seq, int n_points) {
  const auto names = PointNames(n_points, seq);
  json steps = json::array();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    json xs = json::array(), ys = json::array();
    for (int p : Points(seq[i].x)) xs.push_back(names[p]);
    for (int p : Points(seq[i].y)) ys.push_back(names[p]);
    steps.push_back({{"z", names[n_points + i]},
                     {"kind", ToString(seq[i].kind)},
                     {"X", xs},
                     {"Y", ys}});
  }
  return json({{"steps", steps}}).dump(1);
}

}  // namespace matext
