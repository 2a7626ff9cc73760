// Copyright 2026 The cs-eval Authors
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

#ifndef CSEVAL_ALIGN_H_
#define CSEVAL_ALIGN_H_

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <span>
#include <vector>

namespace cseval {

enum class EditOp : std::uint8_t { kMatch, kSubstitute, kDelete, kInsert };

struct AlignedPair {
  EditOp op;
  // Index into the reference (npos for insertions).
  std::size_t ref_index;
  // Index into the hypothesis (npos for deletions).
  std::size_t hyp_index;
  double cost;
};

struct EditCounts {
  std::size_t hits = 0;
  std::size_t subs = 0;
  std::size_t dels = 0;
  std::size_t ins = 0;

  std::size_t ref_length() const { return hits + subs + dels; }
  std::size_t hyp_length() const { return hits + subs + ins; }
  std::size_t errors() const { return subs + dels + ins; }

  EditCounts& operator+=(const EditCounts& other) {
    hits += other.hits;
    subs += other.subs;
    dels += other.dels;
    ins += other.ins;
    return *this;
  }
  bool operator==(const EditCounts&) const = default;
};

struct AlignmentResult {
  std::vector<AlignedPair> ops;
  EditCounts counts;
  double cost = 0.0;
};

template <typename T>
struct CostModel {
  std::function<double(const T&, const T&)> sub_cost;
  double del_cost = 1.0;
  double ins_cost = 1.0;
  std::function<bool(const T&, const T&)> match;

  static CostModel Unit() {
    return {[](const T&, const T&) { return 1.0; }, 1.0, 1.0,
            [](const T& a, const T& b) { return a == b; }};
  }
};

namespace internal {

// Relative slack for comparing accumulated floating-point costs.
inline bool CostLess(double a, double b) {
  return a < b - 1e-12 * (1.0 + (a > b ? a : b));
}

}  // namespace internal

// Minimal-cost alignment of `hyp` against `ref`. Among minimal-cost
// alignments the one with the most hits wins; remaining ties prefer
// Match > Substitute > Delete > Insert at each step of the backtrace.
template <typename T>
AlignmentResult Align(std::span<const T> ref, std::span<const T> hyp,
                      const CostModel<T>& model) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  const std::size_t width = m + 1;

  struct Cell {
    double cost;
    std::size_t hits;
    EditOp op;
  };
  std::vector<Cell> dp((n + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> Cell& {
    return dp[i * width + j];
  };

  at(0, 0) = {0.0, 0, EditOp::kMatch};
  for (std::size_t i = 1; i <= n; ++i) {
    at(i, 0) = {at(i - 1, 0).cost + model.del_cost, 0, EditOp::kDelete};
  }
  for (std::size_t j = 1; j <= m; ++j) {
    at(0, j) = {at(0, j - 1).cost + model.ins_cost, 0, EditOp::kInsert};
  }

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const Cell& diag = at(i - 1, j - 1);
      Cell best;
      if (model.match(ref[i - 1], hyp[j - 1])) {
        best = {diag.cost, diag.hits + 1, EditOp::kMatch};
      } else {
        best = {diag.cost + model.sub_cost(ref[i - 1], hyp[j - 1]), diag.hits,
                EditOp::kSubstitute};
      }
      auto consider = [&](const Cell& from, double step, EditOp op) {
        const double cost = from.cost + step;
        if (internal::CostLess(cost, best.cost) ||
            (!internal::CostLess(best.cost, cost) && from.hits > best.hits)) {
          best = {cost, from.hits, op};
        }
      };
      consider(at(i - 1, j), model.del_cost, EditOp::kDelete);
      consider(at(i, j - 1), model.ins_cost, EditOp::kInsert);
      at(i, j) = best;
    }
  }

  AlignmentResult result;
  result.cost = at(n, m).cost;
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const EditOp op = at(i, j).op;
    switch (op) {
      case EditOp::kMatch:
        result.ops.push_back({op, i - 1, j - 1, 0.0});
        ++result.counts.hits;
        --i;
        --j;
        break;
      case EditOp::kSubstitute:
        result.ops.push_back(
            {op, i - 1, j - 1, model.sub_cost(ref[i - 1], hyp[j - 1])});
        ++result.counts.subs;
        --i;
        --j;
        break;
      case EditOp::kDelete:
        result.ops.push_back({op, i - 1, npos, model.del_cost});
        ++result.counts.dels;
        --i;
        break;
      case EditOp::kInsert:
        result.ops.push_back({op, npos, j - 1, model.ins_cost});
        ++result.counts.ins;
        --j;
        break;
    }
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

template <typename T>
AlignmentResult Align(const std::vector<T>& ref, const std::vector<T>& hyp,
                      const CostModel<T>& model) {
  return Align(std::span<const T>(ref), std::span<const T>(hyp), model);
}

template <typename T>
AlignmentResult AlignUnit(const std::vector<T>& ref, const std::vector<T>& hyp) {
  return Align(ref, hyp, CostModel<T>::Unit());
}

}  // namespace cseval

#endif  // CSEVAL_ALIGN_H_
