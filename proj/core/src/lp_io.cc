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


#include "matext/lp_io.h"

#include <cstdio>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace matext {

using nlohmann::json;

namespace {

constexpr const char* kLpSchema = "matext-lp/1";
constexpr const char* kCertSchema = "matext-certificate/1";

json SparseVector(const std::vector<Rational>& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.push_back({i, ToString(v[i])});
  }
  return out;
}

std::vector<Rational> DenseVector(const json& j, std::size_t size) {
  std::vector<Rational> v(size, 0);
  for (const json& e : j) {
    const std::size_t i = e.at(0).get<std::size_t>();
    if (i >= size) throw std::invalid_argument("vector index out of range");
    v[i] = ParseRational(e.at(1).get<std::string>());
  }
  return v;
}

Rational RationalField(const json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a fraction string");
}

template <typename Fn>
auto Guard(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string LPToJson(const PolymatroidLP& lp) {
  json j;
  j["schema"] = kLpSchema;
  j["points"] = lp.n_points();
  j["extra_vars"] = lp.extra_names();
  j["shannon_block"] = lp.has_shannon_block();
  json rows = json::array();
  for (const Row& r : lp.explicit_rows()) {
    json terms = json::array();
    for (const Term& t : r.terms) terms.push_back({t.var, t.coef});
    rows.push_back({{"terms", terms},
                    {"sense", ToString(r.sense)},
                    {"rhs", ToString(r.rhs)},
                    {"tag", ToString(r.tag)}});
  }
  j["rows"] = rows;
  std::string goal = "feasibility";
  if (lp.goal() == PolymatroidLP::Goal::kMinimize) goal = "minimize";
  if (lp.goal() == PolymatroidLP::Goal::kMaximize) goal = "maximize";
  json obj = json::array();
  for (const auto& [var, c] : lp.objective()) obj.push_back({var, ToString(c)});
  j["objective"] = {{"goal", goal}, {"terms", obj}};
  return j.dump(1);
}

PolymatroidLP LPFromJson(const std::string& text) {
  return Guard([&] {
    const json j = json::parse(text);
    if (j.value("schema", "") != kLpSchema) {
      throw std::invalid_argument("not an LP file (schema " + std::string(kLpSchema) + ")");
    }
    PolymatroidLP lp(j.at("points").get<int>(),
                     j.value("extra_vars", std::vector<std::string>{}));
    if (j.value("shannon_block", false)) lp.AddShannonBlock();
    for (const json& r : j.at("rows")) {
      std::vector<Term> terms;
      for (const json& t : r.at("terms")) {
        const int var = t.at(0).get<int>();
        if (var < 0 || var >= lp.var_limit()) {
          throw std::invalid_argument("variable id out of range");
        }
        terms.push_back({var, t.at(1).get<std::int64_t>()});
      }
      lp.AddRow(std::move(terms), ParseSense(r.at("sense").get<std::string>()),
                RationalField(r.at("rhs")),
                ParseRowTag(r.value("tag", std::string("SHANNON"))));
    }
    if (j.contains("objective")) {
      const json& o = j.at("objective");
      const std::string goal = o.value("goal", "feasibility");
      PolymatroidLP::Goal g = PolymatroidLP::Goal::kFeasibility;
      if (goal == "minimize") {
        g = PolymatroidLP::Goal::kMinimize;
      } else if (goal == "maximize") {
        g = PolymatroidLP::Goal::kMaximize;
      } else if (goal != "feasibility") {
        throw std::invalid_argument("unknown goal '" + goal + "'");
      }
      std::vector<std::pair<int, Rational>> terms;
      for (const json& t : o.value("terms", json::array())) {
        terms.push_back({t.at(0).get<int>(), RationalField(t.at(1))});
      }
      lp.SetObjective(g, std::move(terms));
    }
    return lp;
  });
}

std::string OutcomeToJson(const LPOutcome& out) {
  json j;
  j["schema"] = kCertSchema;
  j["status"] = ToString(out.status);
  j["value"] = ToString(out.value);
  j["size"] = std::max(out.point.size(), out.ray.size());
  j["point"] = SparseVector(out.point);
  j["ray"] = SparseVector(out.ray);
  json mult = json::array();
  for (const auto& [row, y] : out.multipliers) mult.push_back({row, ToString(y)});
  j["multipliers"] = mult;
  j["stats"] = {{"method", out.stats.method},
                {"iterations", out.stats.iterations},
                {"reduced_vars", out.stats.reduced_vars}};
  return j.dump(1);
}

LPOutcome OutcomeFromJson(const std::string& text) {
  return Guard([&] {
    const json j = json::parse(text);
    if (j.value("schema", "") != kCertSchema) {
      throw std::invalid_argument("not a certificate file (schema " +
                                  std::string(kCertSchema) + ")");
    }
    LPOutcome out;
    out.status = ParseLPStatus(j.at("status").get<std::string>());
    out.value = RationalField(j.value("value", json("0")));
    const std::size_t size = j.value("size", std::size_t{0});
    if (!j.value("point", json::array()).empty()) {
      out.point = DenseVector(j.at("point"), size);
    } else if (out.status == LPStatus::kFeasible ||
               out.status == LPStatus::kOptimal ||
               out.status == LPStatus::kUnbounded) {
      out.point.assign(size, 0);
    }
    if (!j.value("ray", json::array()).empty()) {
      out.ray = DenseVector(j.at("ray"), size);
    }
    for (const json& m : j.value("multipliers", json::array())) {
      out.multipliers.push_back(
          {m.at(0).get<std::size_t>(), RationalField(m.at(1))});
    }
    if (j.contains("stats")) {
      out.stats.method = j["stats"].value("method", "");
      out.stats.iterations = j["stats"].value("iterations", std::int64_t{0});
      out.stats.reduced_vars = j["stats"].value("reduced_vars", std::int64_t{0});
    }
    return out;
  });
}

std::string ContentHash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace matext
