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

#include "matext/matroid.h"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace matext {

struct Matroid::Impl {
  int n = 0;
  int k = 0;
  Form form = Form::kBases;
  std::vector<Mask> family;
  std::vector<std::uint8_t> ranks;

  mutable std::once_flag flats_once;
  mutable std::vector<Mask> all_flats;
  mutable std::vector<std::vector<Mask>> flats_by_rank;
  mutable std::vector<int> flat_pos;
};

namespace {

void CheckSize(int n) {
  if (n < 0 || n > kMaxPoints) {
    throw std::invalid_argument("ground set size must be in [0, 16], got " +
                                std::to_string(n));
  }
}

void CheckWithin(int n, Mask a) {
  if (!IsSubset(a, FullMask(n))) {
    throw std::invalid_argument("subset " + ToString(a) +
                                " is outside the ground set of size " +
                                std::to_string(n));
  }
}

std::vector<std::uint8_t> RanksFromBases(int n, const std::vector<Mask>& bases) {
  const Mask full = FullMask(n);
  std::vector<std::uint8_t> indep(std::size_t{1} << n, 0);
  for (Mask b : bases) indep[b] = 1;
  // Downward closure: a set is independent iff adding some point gives an
  // independent set, or it is itself a basis.
  for (Mask a = full + 1; a-- > 0;) {
    if (indep[a]) continue;
    Mask rest = full & ~a;
    while (rest) {
      Mask x = rest & (~rest + 1);
      if (indep[a | x]) {
        indep[a] = 1;
        break;
      }
      rest &= rest - 1;
    }
  }
  std::vector<std::uint8_t> r(std::size_t{1} << n, 0);
  for (Mask a = 1; a <= full; ++a) {
    if (indep[a]) {
      r[a] = static_cast<std::uint8_t>(Size(a));
      continue;
    }
    std::uint8_t best = 0;
    Mask rest = a;
    while (rest) {
      Mask x = rest & (~rest + 1);
      best = std::max(best, r[a & ~x]);
      rest &= rest - 1;
    }
    r[a] = best;
  }
  return r;
}

std::vector<std::uint8_t> RanksFromSparsePaving(int n, int k,
                                                const std::vector<Mask>& chs) {
  std::vector<std::uint8_t> r(std::size_t{1} << n);
  for (Mask a = 0; a <= FullMask(n); ++a) {
    r[a] = static_cast<std::uint8_t>(std::min(Size(a), k));
  }
  for (Mask c : chs) r[c] = static_cast<std::uint8_t>(k - 1);
  return r;
}

std::vector<Mask> BasesFromRanks(int n, int k,
                                 const std::vector<std::uint8_t>& r) {
  std::vector<Mask> out;
  for (Mask a = 0; a <= FullMask(n); ++a) {
    if (Size(a) == k && r[a] == k) out.push_back(a);
  }
  return out;
}

// Circuit-hyperplane form when the table matches the sparse paving formula.
bool SparsePavingForm(int n, int k, const std::vector<std::uint8_t>& r,
                      std::vector<Mask>* chs) {
  if (k < 1 || k > n) return false;
  chs->clear();
  for (Mask a = 0; a <= FullMask(n); ++a) {
    const int s = Size(a);
    const int expect = std::min(s, k);
    if (r[a] == expect) continue;
    if (s == k && r[a] == k - 1) {
      chs->push_back(a);
      continue;
    }
    return false;
  }
  return true;
}

}  // namespace

Matroid::Matroid() {
  auto impl = std::make_shared<Impl>();
  impl->ranks = {0};
  impl->family = {0};
  impl_ = std::move(impl);
}

Matroid::Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Matroid Matroid::FromBases(int n, std::vector<Mask> bases) {
  CheckSize(n);
  if (bases.empty()) throw std::invalid_argument("basis list is empty");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int k = Size(bases.front());
  for (Mask b : bases) {
    CheckWithin(n, b);
    if (Size(b) != k) {
      throw std::invalid_argument("bases have different sizes");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->k = k;
  impl->form = Form::kBases;
  impl->ranks = RanksFromBases(n, bases);
  impl->family = std::move(bases);
  return Matroid(impl);
}

Matroid Matroid::SparsePaving(int n, int rank, std::vector<Mask> chs) {
  CheckSize(n);
  if (rank < 1 || rank > n) {
    throw std::invalid_argument("sparse paving rank must be in [1, n]");
  }
  std::sort(chs.begin(), chs.end());
  chs.erase(std::unique(chs.begin(), chs.end()), chs.end());
  for (Mask c : chs) {
    CheckWithin(n, c);
    if (Size(c) != rank) {
      throw std::invalid_argument("circuit-hyperplane " + ToString(c) +
                                  " does not have " + std::to_string(rank) +
                                  " points");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->k = rank;
  impl->form = Form::kCircuitHyperplanes;
  impl->ranks = RanksFromSparsePaving(n, rank, chs);
  impl->family = std::move(chs);
  return Matroid(impl);
}

Matroid Matroid::FromRankTable(int n, std::vector<std::uint8_t> ranks) {
  CheckSize(n);
  if (ranks.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("rank table has the wrong length");
  }
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->k = ranks[FullMask(n)];
  std::vector<Mask> chs;
  if (SparsePavingForm(n, impl->k, ranks, &chs)) {
    impl->form = Form::kCircuitHyperplanes;
    impl->family = std::move(chs);
  } else {
    impl->form = Form::kBases;
    impl->family = BasesFromRanks(n, impl->k, ranks);
  }
  impl->ranks = std::move(ranks);
  return Matroid(impl);
}

int Matroid::size() const { return impl_->n; }
int Matroid::rank() const { return impl_->k; }

int Matroid::rank(Mask a) const {
  CheckWithin(impl_->n, a);
  return impl_->ranks[a];
}

Mask Matroid::closure(Mask a) const {
  CheckWithin(impl_->n, a);
  const auto& r = impl_->ranks;
  Mask c = a;
  for (int x = 0; x < impl_->n; ++x) {
    if (!Contains(a, x) && r[a | Bit(x)] == r[a]) c |= Bit(x);
  }
  return c;
}

bool Matroid::is_flat(Mask a) const { return closure(a) == a; }

const std::vector<Mask>& Matroid::flats() const {
  const Impl& s = *impl_;
  std::call_once(s.flats_once, [&s] {
    s.flats_by_rank.assign(s.k + 1, {});
    auto cl = [&s](Mask a) {
      Mask c = a;
      for (int x = 0; x < s.n; ++x) {
        if (s.ranks[a | Bit(x)] == s.ranks[a]) c |= Bit(x);
      }
      return c;
    };
    // Level by level: every flat of rank i+1 is the closure of a flat of
    // rank i plus one point.
    s.flats_by_rank[0].push_back(cl(0));
    for (int i = 0; i < s.k; ++i) {
      std::unordered_set<Mask> next;
      for (Mask f : s.flats_by_rank[i]) {
        for (int x = 0; x < s.n; ++x) {
          if (!Contains(f, x)) next.insert(cl(f | Bit(x)));
        }
      }
      s.flats_by_rank[i + 1].assign(next.begin(), next.end());
      std::sort(s.flats_by_rank[i + 1].begin(), s.flats_by_rank[i + 1].end());
    }
    for (const auto& level : s.flats_by_rank) {
      s.all_flats.insert(s.all_flats.end(), level.begin(), level.end());
    }
    s.flat_pos.assign(std::size_t{1} << s.n, -1);
    for (std::size_t i = 0; i < s.all_flats.size(); ++i) {
      s.flat_pos[s.all_flats[i]] = static_cast<int>(i);
    }
  });
  return s.all_flats;
}

const std::vector<Mask>& Matroid::flats(int rank_level) const {
  flats();
  if (rank_level < 0 || rank_level > impl_->k) {
    throw std::invalid_argument("rank level out of range");
  }
  return impl_->flats_by_rank[rank_level];
}

int Matroid::flat_index(Mask a) const {
  CheckWithin(impl_->n, a);
  flats();
  return impl_->flat_pos[a];
}

std::vector<Mask> Matroid::flats_below(Mask a) const {
  std::vector<Mask> out;
  for (Mask f : flats()) {
    if (IsSubset(f, a)) out.push_back(f);
  }
  return out;
}

Matroid::Form Matroid::form() const { return impl_->form; }

const std::vector<Mask>& Matroid::defining_family() const {
  return impl_->family;
}

std::vector<Mask> Matroid::bases() const {
  if (impl_->form == Form::kBases) return impl_->family;
  return BasesFromRanks(impl_->n, impl_->k, impl_->ranks);
}

std::vector<Mask> Matroid::circuit_hyperplanes() const {
  if (impl_->form == Form::kCircuitHyperplanes) return impl_->family;
  std::vector<Mask> out;
  const int k = impl_->k;
  for (Mask f : flats(k > 0 ? k - 1 : 0)) {
    if (k > 0 && Size(f) == k && is_circuit(f)) out.push_back(f);
  }
  return out;
}

bool Matroid::is_circuit(Mask a) const {
  CheckWithin(impl_->n, a);
  if (a == 0) return false;
  const auto& r = impl_->ranks;
  if (r[a] != Size(a) - 1) return false;
  for (Mask rest = a; rest; rest &= rest - 1) {
    Mask x = rest & (~rest + 1);
    if (r[a & ~x] != Size(a) - 1) return false;
  }
  return true;
}

const std::vector<std::uint8_t>& Matroid::rank_table() const {
  return impl_->ranks;
}

bool Matroid::operator==(const Matroid& other) const {
  return size() == other.size() && impl_->ranks == other.impl_->ranks;
}

Matroid Dual(const Matroid& m) {
  const int n = m.size();
  const Mask full = m.ground();
  const int k = m.rank();
  std::vector<std::uint8_t> r(std::size_t{1} << n);
  for (Mask a = 0; a <= full; ++a) {
    r[a] = static_cast<std::uint8_t>(Size(a) - k + m.rank(full & ~a));
  }
  return Matroid::FromRankTable(n, std::move(r));
}

namespace {

Minor MinorOf(const Matroid& m, Mask kept, Mask contracted) {
  std::vector<int> orig = Points(kept);
  const int n = static_cast<int>(orig.size());
  const int base = m.rank(contracted);
  std::vector<std::uint8_t> r(std::size_t{1} << n);
  for (Mask a = 0; a <= FullMask(n); ++a) {
    Mask full_a = contracted;
    for (int i = 0; i < n; ++i) {
      if (Contains(a, i)) full_a |= Bit(orig[i]);
    }
    r[a] = static_cast<std::uint8_t>(m.rank(full_a) - base);
  }
  return Minor{Matroid::FromRankTable(n, std::move(r)), std::move(orig)};
}

}  // namespace

Minor Delete(const Matroid& m, Mask b) {
  CheckWithin(m.size(), b);
  if (m.size() > 0 && b == m.ground()) {
    throw std::invalid_argument("deleting every point leaves an empty matroid");
  }
  return MinorOf(m, m.ground() & ~b, 0);
}

Minor Contract(const Matroid& m, Mask b) {
  CheckWithin(m.size(), b);
  if (m.size() > 0 && b == m.ground()) {
    throw std::invalid_argument("contracting every point leaves an empty matroid");
  }
  return MinorOf(m, m.ground() & ~b, b);
}

Minor Restrict(const Matroid& m, Mask a) {
  CheckWithin(m.size(), a);
  return MinorOf(m, a, 0);
}

Matroid Relabel(const Matroid& m, const std::vector<int>& perm) {
  const int n = m.size();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation has the wrong length");
  }
  Mask seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || Contains(seen, p)) {
      throw std::invalid_argument("not a permutation");
    }
    seen |= Bit(p);
  }
  std::vector<std::uint8_t> r(std::size_t{1} << n);
  for (Mask a = 0; a <= m.ground(); ++a) {
    Mask b = 0;
    for (int i = 0; i < n; ++i) {
      if (Contains(a, i)) b |= Bit(perm[i]);
    }
    r[b] = static_cast<std::uint8_t>(m.rank(a));
  }
  return Matroid::FromRankTable(n, std::move(r));
}

bool IsModularPair(const Matroid& m, Mask x, Mask y) {
  if (!m.is_flat(x) || !m.is_flat(y)) {
    throw std::invalid_argument("modular pair test needs flats, got " +
                                ToString(x) + " and " + ToString(y));
  }
  return m.rank(x) + m.rank(y) == m.rank(x | y) + m.rank(x & y);
}

int MutualRank(const Matroid& m, Mask x, Mask y) {
  return m.rank(x) + m.rank(y) - m.rank(x | y);
}

AxiomReport VerifyMatroidAxioms(const Matroid& m) {
  AxiomReport rep;
  const int n = m.size();
  const auto& r = m.rank_table();
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.violation = std::move(msg);
    return rep;
  };
  if (r[0] != 0) return fail("r(empty) = " + std::to_string(r[0]));
  for (Mask a = 0; a <= m.ground(); ++a) {
    if (r[a] > Size(a)) {
      return fail("r(" + ToString(a) + ") exceeds its size");
    }
    for (int i = 0; i < n; ++i) {
      if (Contains(a, i)) continue;
      const int ri = r[a | Bit(i)];
      if (ri < r[a]) return fail("monotonicity fails at " + ToString(a) + " + " + std::to_string(i));
      if (ri > r[a] + 1) return fail("unit increase fails at " + ToString(a) + " + " + std::to_string(i));
      for (int j = i + 1; j < n; ++j) {
        if (Contains(a, j)) continue;
        if (ri + r[a | Bit(j)] < r[a | Bit(i) | Bit(j)] + r[a]) {
          return fail("submodularity fails for " + ToString(a | Bit(i)) +
                      " and " + ToString(a | Bit(j)));
        }
      }
    }
  }
  return rep;
}

Matroid Uniform(int rank, int n) {
  CheckSize(n);
  if (rank < 0 || rank > n) throw std::invalid_argument("bad uniform rank");
  std::vector<Mask> bases;
  for (Mask a = 0; a <= FullMask(n); ++a) {
    if (Size(a) == rank) bases.push_back(a);
  }
  return Matroid::FromBases(n, std::move(bases));
}

}  // namespace matext
