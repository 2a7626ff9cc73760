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

#ifndef CSEVAL_STATISTICS_H_
#define CSEVAL_STATISTICS_H_

#include <optional>
#include <span>
#include <vector>

namespace cseval {

// Pearson's r. Empty optional when fewer than two samples or either series
// has zero variance (the coefficient is undefined there).
std::optional<double> Pearson(std::span<const double> x,
                              std::span<const double> y);

// Spearman's rho: Pearson over fractional ranks (ties share the mean rank).
std::optional<double> Spearman(std::span<const double> x,
                               std::span<const double> y);

// 1-based fractional ranks, ascending.
std::vector<double> FractionalRanks(std::span<const double> values);

double Mean(std::span<const double> values);

// Sample standard deviation (n - 1). Empty optional when n < 2.
std::optional<double> SampleStdDev(std::span<const double> values);

}  // namespace cseval

#endif  // CSEVAL_STATISTICS_H_
