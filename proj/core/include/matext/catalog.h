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

#ifndef MATEXT_CATALOG_H_
#define MATEXT_CATALOG_H_

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matext/matroid.h"

namespace matext {

// The Tic-Tac-Toe matroid: rank 5 on {0..8}. Its circuit-hyperplanes are the
// unions A_i B_j, (i,j) != (2,2), of the rows A_i and columns B_j of the 3x3
// grid numbered row by row.
Matroid TicTacToe();
Matroid TicTacToeDual();
// The identically self-dual sparse paving (5,10) matroid whose deletion of
// point 9 is TicTacToe() and whose contraction of point 9 is TicTacToeDual().
Matroid SelfDual510();
// Vamos matroid: rank 4 on {0..7}; the pairs {0,1},{2,3},{4,5},{6,7} give
// five circuit-hyperplanes (every union of two pairs except {4,5,6,7}).
Matroid Vamos();

// Sparse paving matroid with circuit-hyperplanes drawn from the shuffled
// rank-subsets, keeping each one that meets every kept set in at most
// rank - 2 points, up to max_circuit_hyperplanes (no cap when negative).
// Deterministic in the seed.
Matroid RandomSparsePaving(int n, int rank, std::uint64_t seed,
                           int max_circuit_hyperplanes = -1);

struct CatalogEntry {
  std::string name;
  Matroid matroid;
  std::string comment;
};

// Line-oriented text format:
//   matroid <name> n=<points> r=<rank> form=<bases|circuit_hyperplanes>
//   0 1 2 3
//   ...
// Lines starting with '#' are comments; a comment directly after a header
// is kept as the entry's comment.
std::string FormatCatalogEntry(const std::string& name, const Matroid& m,
                               const std::string& comment = "");
std::vector<CatalogEntry> ParseCatalog(std::istream& in);

class Catalog {
 public:
  // Built-ins: T3, T3_dual, ISD_5_10, Vamos. Names of the form U<k>_<n>
  // resolve to uniform matroids on demand.
  static Catalog WithBuiltins();

  void Add(const std::string& name, Matroid m, std::string comment = "");
  bool Contains(const std::string& name) const;
  Matroid Get(const std::string& name) const;
  std::vector<std::string> Names() const;
  // Loads every entry of a catalog file; returns the loaded names.
  std::vector<std::string> LoadFile(const std::string& path);

 private:
  std::map<std::string, CatalogEntry> entries_;
};

}  // namespace matext

#endif  // MATEXT_CATALOG_H_
