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

#include "matext/catalog.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace matext {

Matroid RandomSparsePaving(int n, int rank, std::uint64_t seed,
                           int max_circuit_hyperplanes) {
  if (n < 2 || n > kMaxPoints || rank < 2 || rank > n) {
    throw std::invalid_argument(
        "invalid size or rank for a sparse paving matroid");
  }
  std::vector<Mask> pool;
  for (Mask s = 0; s <= FullMask(n); ++s) {
    if (Size(s) == rank) pool.push_back(s);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Mask> kept;
  for (Mask s : pool) {
    if (max_circuit_hyperplanes >= 0 &&
        static_cast<int>(kept.size()) >= max_circuit_hyperplanes) {
      break;
    }
    bool ok = true;
    for (Mask t : kept) ok = ok && Size(s & t) <= rank - 2;
    if (ok) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return Matroid::SparsePaving(n, rank, std::move(kept));
}

namespace {

const Mask kRows[3] = {FromPoints({0, 1, 2}), FromPoints({3, 4, 5}),
                       FromPoints({6, 7, 8})};
const Mask kCols[3] = {FromPoints({0, 3, 6}), FromPoints({1, 4, 7}),
                       FromPoints({2, 5, 8})};

std::vector<Mask> TicTacToeCircuitHyperplanes() {
  std::vector<Mask> chs;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == 1 && j == 1) continue;
      chs.push_back(kRows[i] | kCols[j]);
    }
  }
  return chs;
}

}  // namespace

Matroid TicTacToe() {
  return Matroid::SparsePaving(9, 5, TicTacToeCircuitHyperplanes());
}

Matroid TicTacToeDual() {
  std::vector<Mask> chs;
  for (Mask c : TicTacToeCircuitHyperplanes()) chs.push_back(FullMask(9) & ~c);
  return Matroid::SparsePaving(9, 4, std::move(chs));
}

Matroid SelfDual510() {
  std::vector<Mask> chs = TicTacToeCircuitHyperplanes();
  for (Mask c : TicTacToeCircuitHyperplanes()) {
    chs.push_back((FullMask(9) & ~c) | Bit(9));
  }
  return Matroid::SparsePaving(10, 5, std::move(chs));
}

Matroid Vamos() {
  const Mask pairs[4] = {FromPoints({0, 1}), FromPoints({2, 3}),
                         FromPoints({4, 5}), FromPoints({6, 7})};
  std::vector<Mask> chs;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (i == 2 && j == 3) continue;
      chs.push_back(pairs[i] | pairs[j]);
    }
  }
  return Matroid::SparsePaving(8, 4, std::move(chs));
}

std::string FormatCatalogEntry(const std::string& name, const Matroid& m,
                               const std::string& comment) {
  std::ostringstream out;
  const bool ch = m.is_sparse_paving();
  out << "matroid " << name << " n=" << m.size() << " r=" << m.rank()
      << " form=" << (ch ? "circuit_hyperplanes" : "bases") << "\n";
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << "\n";
  }
  for (Mask s : m.defining_family()) {
    bool first = true;
    for (int p : Points(s)) {
      out << (first ? "" : " ") << p;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::vector<CatalogEntry> ParseCatalog(std::istream& in) {
  static const std::regex header(
      R"(^matroid\s+(\S+)\s+n=(\d+)\s+r=(\d+)\s+form=(bases|circuit_hyperplanes)\s*$)");
  struct Pending {
    std::string name;
    int n = 0, r = 0;
    bool bases = true;
    std::vector<Mask> sets;
    std::string comment;
    bool header_comment_open = true;
  };
  std::vector<CatalogEntry> out;
  std::vector<Pending> pending;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch mt;
    if (std::regex_match(line, mt, header)) {
      Pending p;
      p.name = mt[1];
      p.n = std::stoi(mt[2]);
      p.r = std::stoi(mt[3]);
      p.bases = mt[4] == "bases";
      pending.push_back(std::move(p));
      continue;
    }
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (!pending.empty() && pending.back().header_comment_open &&
          pending.back().sets.empty()) {
        std::string text = line.substr(first + 1);
        if (!text.empty() && text[0] == ' ') text.erase(0, 1);
        auto& c = pending.back().comment;
        c += (c.empty() ? "" : "\n") + text;
      }
      continue;
    }
    if (pending.empty()) {
      throw std::invalid_argument("catalog line " + std::to_string(line_no) +
                                  ": set before any matroid header");
    }
    pending.back().header_comment_open = false;
    std::istringstream ss(line);
    std::vector<int> pts;
    int p;
    while (ss >> p) pts.push_back(p);
    if (!ss.eof()) {
      throw std::invalid_argument("catalog line " + std::to_string(line_no) +
                                  ": expected point indices");
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i] <= pts[i - 1]) {
        throw std::invalid_argument("catalog line " + std::to_string(line_no) +
                                    ": points must be strictly increasing");
      }
    }
    for (int q : pts) {
      if (q < 0 || q >= pending.back().n) {
        throw std::invalid_argument("catalog line " + std::to_string(line_no) +
                                    ": point outside the ground set");
      }
    }
    pending.back().sets.push_back(FromPoints(pts));
  }
  for (auto& p : pending) {
    Matroid m = p.bases ? Matroid::FromBases(p.n, p.sets)
                        : Matroid::SparsePaving(p.n, p.r, p.sets);
    if (m.rank() != p.r) {
      throw std::invalid_argument("catalog entry " + p.name +
                                  ": header rank disagrees with the data");
    }
    out.push_back({p.name, std::move(m), p.comment});
  }
  return out;
}

Catalog Catalog::WithBuiltins() {
  Catalog c;
  c.Add("T3", TicTacToe(), "Tic-Tac-Toe matroid");
  c.Add("T3_dual", TicTacToeDual(), "dual of the Tic-Tac-Toe matroid");
  c.Add("ISD_5_10", SelfDual510(),
        "identically self-dual sparse paving (5,10) matroid; point 9 is e");
  c.Add("Vamos", Vamos(), "Vamos matroid");
  return c;
}

void Catalog::Add(const std::string& name, Matroid m, std::string comment) {
  entries_[name] = CatalogEntry{name, std::move(m), std::move(comment)};
}

bool Catalog::Contains(const std::string& name) const {
  if (entries_.count(name)) return true;
  static const std::regex uniform(R"(^U(\d+)_(\d+)$)");
  std::smatch mt;
  return std::regex_match(name, mt, uniform);
}

Matroid Catalog::Get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it != entries_.end()) return it->second.matroid;
  const auto lower = [](std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  };
  for (const auto& [key, e] : entries_) {
    if (lower(key) == lower(name)) return e.matroid;
  }
  static const std::regex uniform(R"(^[Uu](\d+)_(\d+)$)");
  std::smatch mt;
  if (std::regex_match(name, mt, uniform)) {
    return Uniform(std::stoi(mt[1]), std::stoi(mt[2]));
  }
  throw std::invalid_argument("unknown matroid '" + name + "'");
}

std::vector<std::string> Catalog::Names() const {
  std::vector<std::string> out;
  for (const auto& [name, e] : entries_) out.push_back(name);
  return out;
}

std::vector<std::string> Catalog::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalog file " + path);
  std::vector<std::string> names;
  for (auto& e : ParseCatalog(in)) {
    names.push_back(e.name);
    Add(e.name, std::move(e.matroid), std::move(e.comment));
  }
  return names;
}

}  // namespace matext
