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


#include "matext/secret_sharing.h"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace matext {

using nlohmann::json;

AccessStructure MakeAccessStructure(int n_points, int dealer,
                                    std::vector<Mask> min_authorized) {
  if (n_points < 2 || n_points > kMaxPoints) {
    throw std::invalid_argument("access structure needs 2.." +
                                std::to_string(kMaxPoints) + " points");
  }
  if (dealer < 0 || dealer >= n_points) {
    throw std::invalid_argument("dealer out of range");
  }
  AccessStructure a;
  a.n_points = n_points;
  a.dealer = dealer;
  a.participants = FullMask(n_points) & ~Bit(dealer);
  std::sort(min_authorized.begin(), min_authorized.end());
  min_authorized.erase(std::unique(min_authorized.begin(), min_authorized.end()),
                       min_authorized.end());
  for (Mask s : min_authorized) {
    if (s == 0 || !IsSubset(s, a.participants)) {
      throw std::invalid_argument("authorized set " + ToString(s) +
                                  " is empty or not made of participants");
    }
    for (Mask t : min_authorized) {
      if (t != s && IsSubset(t, s)) {
        throw std::invalid_argument("minimal authorized sets are not an antichain");
      }
    }
  }
  a.min_authorized = std::move(min_authorized);
  return a;
}

AccessStructure AccessFromJson(const std::string& text) {
  try {
    const json j = json::parse(text);
    std::vector<Mask> sets;
    for (const json& s : j.at("min_authorized")) {
      sets.push_back(FromPoints(s.get<std::vector<int>>()));
    }
    return MakeAccessStructure(j.at("points").get<int>(),
                               j.at("dealer").get<int>(), std::move(sets));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed access file: ") + e.what());
  }
}

std::string AccessToJson(const AccessStructure& a) {
  json sets = json::array();
  for (Mask s : a.min_authorized) sets.push_back(Points(s));
  return json({{"points", a.n_points},
               {"dealer", a.dealer},
               {"min_authorized", sets}})
      .dump();
}

PortSpec Port(const Matroid& m, int dealer) {
  if (dealer < 0 || dealer >= m.size()) {
    throw std::invalid_argument("dealer point out of range");
  }
  if (m.rank(Bit(dealer)) == 0) {
    throw std::invalid_argument("dealer point is a loop");
  }
  const Mask p = m.ground() & ~Bit(dealer);
  if (m.rank(p) < m.rank()) {
    throw std::invalid_argument("dealer point is a coloop; the port is empty");
  }
  std::vector<Mask> sets;
  // Subsets by increasing size so each minimal set is seen before its
  // supersets.
  std::vector<Mask> subsets;
  ForEachSubset(p, [&](Mask s) { subsets.push_back(s); });
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](Mask a, Mask b) { return Size(a) < Size(b); });
  for (Mask s : subsets) {
    if (m.rank(s | Bit(dealer)) != m.rank(s)) continue;
    bool minimal = true;
    for (Mask t : sets) {
      if (IsSubset(t, s)) {
        minimal = false;
        break;
      }
    }
    if (minimal) sets.push_back(s);
  }
  return {m, MakeAccessStructure(m.size(), dealer, std::move(sets))};
}

bool IsAuthorized(const AccessStructure& a, Mask x) {
  for (Mask s : a.min_authorized) {
    if (IsSubset(s, x)) return true;
  }
  return false;
}

std::vector<Mask> MaximalForbidden(const AccessStructure& a) {
  std::vector<Mask> out;
  ForEachSubset(a.participants, [&](Mask s) {
    if (IsAuthorized(a, s)) return;
    for (int p : Points(a.participants & ~s)) {
      if (!IsAuthorized(a, s | Bit(p))) return;
    }
    out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

PolymatroidLP BuildBoundLP(const AccessStructure& a, const AKSequence& steps,
                           const BoundOptions& options) {
  const int n = a.n_points;
  const int total = n + static_cast<int>(steps.size());
  ValidateSequence(n, steps);
  PolymatroidLP lp(total, {"v"});
  lp.AddShannonBlock();
  const int d = static_cast<int>(Bit(a.dealer));
  lp.AddRow({{d, 1}}, Sense::kEq, options.normalization, RowTag::kAccess);
  for (Mask s : a.min_authorized) {
    lp.AddRow({{static_cast<int>(s) | d, 1}, {static_cast<int>(s), -1}},
              Sense::kEq, 0, RowTag::kAccess);
  }
  for (Mask b : MaximalForbidden(a)) {
    lp.AddRow({{static_cast<int>(b) | d, 1},
               {static_cast<int>(b), -1},
               {d, -1}},
              Sense::kEq, 0, RowTag::kAccess);
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const int z = n + static_cast<int>(i);
    if (steps[i].kind == StepKind::kCi) {
      CiConstraints(lp, z, steps[i].x, steps[i].y);
      continue;
    }
    std::vector<Mask> subsets;
    ForEachSubset(steps[i].x, [&](Mask s) {
      if (s) subsets.push_back(s);
    });
    std::reverse(subsets.begin(), subsets.end());
    AkConstraints(lp, z, steps[i].x, steps[i].y, subsets);
  }
  const int v = lp.extra_var(0);
  lp.AddRow({{v, 1}}, Sense::kGe, 0, RowTag::kObjLink);
  for (int p : Points(a.participants)) {
    lp.AddRow({{v, 1}, {static_cast<int>(Bit(p)), -1}}, Sense::kGe, 0,
              RowTag::kObjLink);
  }
  lp.SetObjective(PolymatroidLP::Goal::kMinimize, {{v, 1}});
  return lp;
}

BoundResult SsBound(const AccessStructure& a, const AKSequence& steps,
                    const BoundOptions& options) {
  BoundResult r;
  r.lp = BuildBoundLP(a, steps, options);
  r.certificate = Solve(r.lp);
  if (r.certificate.status != LPStatus::kOptimal) {
    throw std::runtime_error("bound LP is " + ToString(r.certificate.status) +
                             "; the access data are inconsistent");
  }
  r.sigma_lower = r.certificate.value / options.normalization;
  for (const AKStep& s : steps) r.ak_sets_used.push_back({s.x, s.y});
  return r;
}

std::vector<AdvisorEntry> AkSetAdvisor(const PortSpec& spec,
                                       std::int64_t budget) {
  const Matroid& m = spec.matroid;
  std::vector<std::pair<Mask, Mask>> pairs;
  for (Mask x : m.flats()) {
    for (Mask y : m.flats()) {
      if (x != y && !IsModularPair(m, x, y)) pairs.push_back({x, y});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    const int ra = m.rank(a.first) + m.rank(a.second);
    const int rb = m.rank(b.first) + m.rank(b.second);
    return ra != rb ? ra < rb : a < b;
  });
  return AkSetAdvisor(spec.access, pairs, budget);
}

std::vector<AdvisorEntry> AkSetAdvisor(
    const AccessStructure& a, const std::vector<std::pair<Mask, Mask>>& candidates,
    std::int64_t budget) {
  std::vector<AdvisorEntry> out;
  for (const auto& [x, y] : candidates) {
    if (static_cast<std::int64_t>(out.size()) >= budget) break;
    const BoundResult r = SsBound(a, {{StepKind::kAk, x, y, ""}});
    out.push_back({x, y, r.sigma_lower});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const AdvisorEntry& a, const AdvisorEntry& b) {
                     return a.bound > b.bound;
                   });
  return out;
}

}  // namespace matext
