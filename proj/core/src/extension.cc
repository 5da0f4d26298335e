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

#include "matext/extension.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace matext {

namespace {

void RequireFlat(const Matroid& m, Mask f) {
  if (!IsSubset(f, m.ground()) || m.flat_index(f) < 0) {
    throw std::invalid_argument(ToString(f) + " is not a flat");
  }
}

// Membership over flat indices; closes `in` upward from `f`.
void AddUpward(const Matroid& m, Mask f, std::vector<char>* in) {
  const auto& flats = m.flats();
  for (std::size_t i = m.flat_index(f); i < flats.size(); ++i) {
    if (!(*in)[i] && IsSubset(f, flats[i])) (*in)[i] = 1;
  }
}

// Fixpoint of upward closure and modular-pair intersection. Each round adds
// at least one flat, so there are at most |flats| rounds.
void CloseCut(const Matroid& m, std::vector<char>* in) {
  const auto& flats = m.flats();
  std::size_t rounds = 0;
  bool changed = true;
  while (changed) {
    if (++rounds > flats.size() + 1) {
      throw std::logic_error("modular cut closure did not converge");
    }
    changed = false;
    std::vector<int> members;
    for (std::size_t i = 0; i < flats.size(); ++i) {
      if ((*in)[i]) members.push_back(static_cast<int>(i));
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      const Mask fa = flats[members[a]];
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const Mask fb = flats[members[b]];
        const Mask meet = fa & fb;
        const int idx = m.flat_index(meet);
        if ((*in)[idx]) continue;
        if (m.rank(fa) + m.rank(fb) == m.rank(fa | fb) + m.rank(meet)) {
          AddUpward(m, meet, in);
          changed = true;
        }
      }
    }
  }
}

ModularCut FromMembership(const Matroid& m, const std::vector<char>& in) {
  std::vector<Mask> out;
  const auto& flats = m.flats();
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (in[i]) out.push_back(flats[i]);
  }
  return ModularCut(m, std::move(out));
}

}  // namespace

ModularCut::ModularCut(Matroid host, std::vector<Mask> flats)
    : host_(std::move(host)), flats_(std::move(flats)) {
  const std::size_t nf = host_.flats().size();
  bits_.assign((nf + 63) / 64, 0);
  for (Mask f : flats_) RequireFlat(host_, f);
  std::sort(flats_.begin(), flats_.end(), [this](Mask a, Mask b) {
    return host_.flat_index(a) < host_.flat_index(b);
  });
  flats_.erase(std::unique(flats_.begin(), flats_.end()), flats_.end());
  for (Mask f : flats_) {
    const int i = host_.flat_index(f);
    bits_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

bool ModularCut::contains(Mask flat) const {
  if (!IsSubset(flat, host_.ground())) return false;
  const int i = host_.flat_index(flat);
  if (i < 0) return false;
  return (bits_[i / 64] >> (i % 64)) & 1u;
}

std::vector<Mask> ModularCut::minimal() const {
  std::vector<Mask> out;
  for (Mask f : flats_) {
    bool minimal = true;
    for (Mask g : out) {
      if (IsSubset(g, f)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(f);
  }
  return out;
}

bool ModularCut::is_loop_cut() const { return contains(host_.closure(0)); }

bool IsModularCut(const Matroid& m, const std::vector<Mask>& family,
                  std::string* why) {
  auto fail = [why](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<char> in(m.flats().size(), 0);
  for (Mask f : family) {
    if (!IsSubset(f, m.ground()) || m.flat_index(f) < 0) {
      return fail(ToString(f) + " is not a flat");
    }
    in[m.flat_index(f)] = 1;
  }
  const auto& flats = m.flats();
  for (Mask f : family) {
    for (std::size_t i = 0; i < flats.size(); ++i) {
      if (!in[i] && IsSubset(f, flats[i])) {
        return fail("not upward closed: " + ToString(flats[i]) + " lies above " +
                    ToString(f));
      }
    }
  }
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      const Mask fa = family[a], fb = family[b], meet = fa & fb;
      if (m.rank(fa) + m.rank(fb) == m.rank(fa | fb) + m.rank(meet) &&
          !in[m.flat_index(meet)]) {
        return fail("missing intersection " + ToString(meet) +
                    " of the modular pair " + ToString(fa) + ", " +
                    ToString(fb));
      }
    }
  }
  return true;
}

ModularCut GenerateCut(const Matroid& m, const std::vector<Mask>& generators) {
  std::vector<char> in(m.flats().size(), 0);
  for (Mask g : generators) {
    RequireFlat(m, g);
    AddUpward(m, g, &in);
  }
  CloseCut(m, &in);
  return FromMembership(m, in);
}

PointExtension ExtendByPoint(const Matroid& m, const ModularCut& cut) {
  if (!(cut.host() == m)) {
    throw std::invalid_argument("modular cut belongs to a different matroid");
  }
  if (m.size() + 1 > kMaxPoints) {
    throw std::length_error("extension would exceed 16 points");
  }
  if (!cut.empty() && cut.is_loop_cut()) {
    throw std::invalid_argument("loop cut: the new point would be a loop");
  }
  std::string why;
  if (!IsModularCut(m, cut.flats(), &why)) {
    throw std::invalid_argument("invalid modular cut: " + why);
  }
  const int n = m.size();
  const Mask e = Bit(n);
  std::vector<std::uint8_t> r(std::size_t{1} << (n + 1));
  for (Mask a = 0; a <= m.ground(); ++a) {
    const int ra = m.rank(a);
    r[a] = static_cast<std::uint8_t>(ra);
    r[a | e] = static_cast<std::uint8_t>(cut.contains(m.closure(a)) ? ra : ra + 1);
  }
  return PointExtension{m, n, cut, Matroid::FromRankTable(n + 1, std::move(r))};
}

CutEnumerator::CutEnumerator(const Matroid& m, std::vector<Mask> must_contain,
                             std::int64_t budget, bool allow_empty,
                             CutScope scope) {
  for (Mask f : must_contain) RequireFlat(m, f);
  const auto& flats = m.flats();
  const Mask bottom = m.closure(0);
  std::vector<Mask> candidates;
  for (Mask f : flats) {
    if (f == bottom) continue;
    bool above = must_contain.empty() || scope == CutScope::kAllFlats;
    for (Mask g : must_contain) above = above || IsSubset(g, f);
    if (above) candidates.push_back(f);
  }

  using Key = std::vector<char>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 1469598103934665603ull;
      for (char c : k) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
      return h;
    }
  };
  // Smallest start index each cut has been expanded from.
  std::unordered_map<Key, std::size_t, KeyHash> seen;
  std::vector<Key> found;
  std::int64_t spent = 0;

  std::function<void(const Key&, std::size_t)> expand =
      [&](const Key& in, std::size_t start) {
        for (std::size_t j = start; j < candidates.size(); ++j) {
          if (in[m.flat_index(candidates[j])]) continue;
          if (spent >= budget) {
            truncated_ = true;
            return;
          }
          ++spent;
          Key next = in;
          AddUpward(m, candidates[j], &next);
          CloseCut(m, &next);
          if (next[m.flat_index(bottom)]) continue;
          auto it = seen.find(next);
          if (it == seen.end()) {
            seen.emplace(next, j + 1);
            found.push_back(next);
          } else if (it->second > j + 1) {
            it->second = j + 1;
          } else {
            continue;
          }
          expand(next, j + 1);
          if (truncated_) return;
        }
      };

  Key base(flats.size(), 0);
  if (must_contain.empty()) {
    if (allow_empty) found.push_back(base);
    expand(base, 0);
  } else {
    for (Mask g : must_contain) AddUpward(m, g, &base);
    CloseCut(m, &base);
    ++spent;
    if (!base[m.flat_index(bottom)]) {
      seen.emplace(base, 0);
      found.push_back(base);
      expand(base, 0);
    }
  }
  for (const Key& k : found) cuts_.push_back(FromMembership(m, k));
  std::stable_sort(cuts_.begin(), cuts_.end(),
                   [&m](const ModularCut& a, const ModularCut& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     const auto& fa = a.flats();
                     const auto& fb = b.flats();
                     return std::lexicographical_compare(
                         fa.begin(), fa.end(), fb.begin(), fb.end(),
                         [&m](Mask x, Mask y) {
                           return m.flat_index(x) < m.flat_index(y);
                         });
                   });
}

std::optional<ModularCut> CutEnumerator::Next() {
  if (pos_ >= cuts_.size()) return std::nullopt;
  return cuts_[pos_++];
}

Matroid ChainExtend(const Matroid& m,
                    const std::vector<std::vector<Mask>>& chain) {
  Matroid cur = m;
  for (const auto& gens : chain) {
    cur = ExtendByPoint(cur, GenerateCut(cur, gens)).result;
  }
  return cur;
}

}  // namespace matext
