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

#include <algorithm>
#include <stdexcept>

#include "lp_internal.h"

namespace matext::internal {

namespace {

const Rational* Find(const SparseRow& row, int col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const std::pair<int, Rational>& e, int c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// a - factor * b for rows sorted by column.
SparseRow Subtract(const SparseRow& a, const Rational& factor,
                   const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -factor * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - factor * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> SolveSparseSystem(
    int num_cols, const std::vector<SparseRow>& input,
    const std::vector<Rational>& input_rhs) {
  std::vector<SparseRow> rows = input;
  std::vector<Rational> rhs = input_rhs;
  const int m = static_cast<int>(rows.size());
  std::vector<std::vector<int>> col_rows(num_cols);
  for (int r = 0; r < m; ++r) {
    auto& row = rows[r];
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow clean;
    for (auto& e : row) {
      if (e.first < 0 || e.first >= num_cols) {
        throw std::out_of_range("column out of range in sparse system");
      }
      if (!clean.empty() && clean.back().first == e.first) {
        clean.back().second += e.second;
      } else {
        clean.push_back(e);
      }
    }
    std::erase_if(clean, [](const auto& e) { return e.second == 0; });
    row = std::move(clean);
    for (const auto& e : row) col_rows[e.first].push_back(r);
  }
  std::vector<char> active(m, 1);
  std::vector<std::pair<int, int>> order;  // (row, pivot column)
  for (int step = 0; step < m; ++step) {
    int best = -1;
    for (int r = 0; r < m; ++r) {
      if (active[r] && (best < 0 || rows[r].size() < rows[best].size())) best = r;
    }
    if (best < 0) break;
    active[best] = 0;
    const SparseRow& pr = rows[best];
    if (pr.empty()) {
      if (rhs[best] != 0) return std::nullopt;
      continue;
    }
    int col = pr.front().first;
    for (const auto& e : pr) {
      if (col_rows[e.first].size() < col_rows[col].size()) col = e.first;
    }
    const Rational pivot = *Find(pr, col);
    std::vector<int> touched = col_rows[col];
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int s : touched) {
      if (!active[s]) continue;
      const Rational* v = Find(rows[s], col);
      if (!v) continue;
      const Rational factor = *v / pivot;
      rows[s] = Subtract(rows[s], factor, pr);
      rhs[s] -= factor * rhs[best];
      for (const auto& e : rows[s]) {
        if (e.first != col) col_rows[e.first].push_back(s);
      }
    }
    col_rows[col].clear();
    order.emplace_back(best, col);
  }
  std::vector<Rational> x(num_cols, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto [r, col] = *it;
    Rational acc = rhs[r];
    Rational pivot;
    for (const auto& [c, v] : rows[r]) {
      if (c == col) {
        pivot = v;
      } else {
        acc -= v * x[c];
      }
    }
    x[col] = acc / pivot;
  }
  return x;
}

namespace {

class DenseTableau {
 public:
  DenseTableau(int m, int cols) : m_(m), cols_(cols),
      t_(static_cast<std::size_t>(m + 1) * (cols + 1)), basis_(m) {}

  Rational& at(int r, int c) { return t_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  Rational& rhs(int r) { return at(r, cols_); }
  Rational& cost(int c) { return at(m_, c); }
  int& basis(int r) { return basis_[r]; }

  void Pivot(int pr, int pc) {
    const Rational p = at(pr, pc);
    for (int c = 0; c <= cols_; ++c) at(pr, c) /= p;
    for (int r = 0; r <= m_; ++r) {
      if (r == pr) continue;
      const Rational f = at(r, pc);
      if (f == 0) continue;
      for (int c = 0; c <= cols_; ++c) {
        if (at(pr, c) != 0) at(r, c) -= f * at(pr, c);
      }
    }
    basis_[pr] = pc;
  }

  // Bland's rule over columns below `limit`. Returns -1 when optimal,
  // -2 - column when that column proves unboundedness.
  int Run(int limit, std::int64_t* iterations, std::int64_t cap) {
    while (true) {
      if (++*iterations > cap) throw std::runtime_error("iteration cap reached");
      int pc = -1;
      for (int c = 0; c < limit; ++c) {
        if (cost(c) < 0) {
          pc = c;
          break;
        }
      }
      if (pc < 0) return -1;
      int pr = -1;
      Rational best;
      for (int r = 0; r < m_; ++r) {
        if (at(r, pc) <= 0) continue;
        Rational ratio = rhs(r) / at(r, pc);
        if (pr < 0 || ratio < best || (ratio == best && basis_[r] < basis_[pr])) {
          pr = r;
          best = ratio;
        }
      }
      if (pr < 0) return -2 - pc;
      Pivot(pr, pc);
    }
  }

  int rows() const { return m_; }

 private:
  int m_, cols_;
  std::vector<Rational> t_;
  std::vector<int> basis_;
};

}  // namespace

LPOutcome SolveDenseExact(const PolymatroidLP& lp, const SolveOptions& options) {
  const std::size_t m = lp.num_rows();
  std::vector<Row> rows;
  rows.reserve(m);
  std::vector<int> col_of(lp.var_limit(), -1);
  std::vector<int> var_of;
  auto use = [&](int v) {
    if (col_of[v] < 0) {
      col_of[v] = static_cast<int>(var_of.size());
      var_of.push_back(v);
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    rows.push_back(lp.row(i));
    for (const Term& t : rows.back().terms) use(t.var);
  }
  const bool optimizing = lp.goal() != PolymatroidLP::Goal::kFeasibility;
  if (optimizing) {
    for (const auto& [v, c] : lp.objective()) use(v);
  }
  const int nv = static_cast<int>(var_of.size());
  int slacks = 0;
  for (const Row& r : rows) slacks += r.sense != Sense::kEq;
  const int art0 = 2 * nv + slacks;
  const int cols = art0 + static_cast<int>(m);
  if (static_cast<double>(m + 1) * (cols + 1) > 4.0e6) {
    throw std::length_error(
        "LP is too large for the exact dense simplex (" + std::to_string(m) +
        " rows); it needs the elemental block and nonnegative costs for the "
        "floating-point path");
  }

  DenseTableau t(static_cast<int>(m), cols);
  std::vector<int> sign(m, 1);
  int slack = 2 * nv;
  for (std::size_t i = 0; i < m; ++i) {
    const Row& r = rows[i];
    sign[i] = r.rhs < 0 ? -1 : 1;
    for (const Term& term : r.terms) {
      const int c = col_of[term.var];
      t.at(i, c) += sign[i] * term.coef;
      t.at(i, nv + c) -= sign[i] * term.coef;
    }
    if (r.sense != Sense::kEq) {
      t.at(i, slack++) = r.sense == Sense::kGe ? -sign[i] : sign[i];
    }
    t.at(i, art0 + i) = 1;
    t.rhs(i) = sign[i] * r.rhs;
    t.basis(i) = art0 + static_cast<int>(i);
  }
  // Phase one: minimize the sum of artificials.
  for (int c = 0; c <= cols; ++c) {
    if (c >= art0 && c < cols) continue;
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t.at(i, c);
    t.cost(c) = -s;
  }
  LPOutcome out;
  out.stats.method = "exact-dense";
  out.stats.reduced_vars = nv;
  out.stats.reduced_rows = static_cast<std::int64_t>(m);
  std::int64_t iters = 0;
  t.Run(art0, &iters, options.max_iterations);
  if (-t.rhs(static_cast<int>(m)) > 0) {
    out.status = LPStatus::kInfeasible;
    for (std::size_t i = 0; i < m; ++i) {
      Rational y = Rational(1) - t.cost(art0 + static_cast<int>(i));
      if (y != 0) out.multipliers.emplace_back(i, y * sign[i]);
    }
    out.stats.iterations = iters;
    return out;
  }
  // Move zero-level artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis(i) < art0) continue;
    for (int c = 0; c < art0; ++c) {
      if (t.at(i, c) != 0) {
        t.Pivot(static_cast<int>(i), c);
        break;
      }
    }
  }
  auto extract = [&](auto&& value_of_col) {
    std::vector<Rational> x(lp.var_limit(), 0);
    for (int c = 0; c < nv; ++c) {
      x[var_of[c]] = value_of_col(c) - value_of_col(nv + c);
    }
    return x;
  };
  auto basic_value = [&](int col) -> Rational {
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis(i) == col) return t.rhs(i);
    }
    return 0;
  };
  if (!optimizing) {
    out.status = LPStatus::kFeasible;
    out.point = extract(basic_value);
    out.stats.iterations = iters;
    return out;
  }
  // Phase two.
  std::vector<Rational> cost(cols, 0);
  const bool maximize = lp.goal() == PolymatroidLP::Goal::kMaximize;
  for (const auto& [v, c] : lp.objective()) {
    const Rational cc = maximize ? Rational(-c) : c;
    cost[col_of[v]] += cc;
    cost[nv + col_of[v]] -= cc;
  }
  for (int c = 0; c <= cols; ++c) {
    Rational s = c < cols ? cost[c] : Rational(0);
    for (std::size_t i = 0; i < m; ++i) {
      const int b = t.basis(i);
      if (cost[b] != 0) s -= cost[b] * t.at(i, c);
    }
    t.cost(c) = s;
  }
  const int result = t.Run(art0, &iters, options.max_iterations);
  out.stats.iterations = iters;
  out.point = extract(basic_value);
  if (result <= -2) {
    const int pc = -2 - result;
    auto ray_value = [&](int col) -> Rational {
      if (col == pc) return 1;
      for (std::size_t i = 0; i < m; ++i) {
        if (t.basis(i) == col) return -t.at(i, pc);
      }
      return 0;
    };
    out.status = LPStatus::kUnbounded;
    out.ray = extract(ray_value);
    return out;
  }
  out.status = LPStatus::kOptimal;
  Rational cx = 0;
  for (const auto& [v, c] : lp.objective()) cx += c * out.point[v];
  out.value = cx;
  for (std::size_t i = 0; i < m; ++i) {
    Rational y = -t.cost(art0 + static_cast<int>(i));
    if (y != 0) out.multipliers.emplace_back(i, y * sign[i]);
  }
  return out;
}

}  // namespace matext::internal
