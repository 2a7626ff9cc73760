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

#ifndef CSEVAL_TESTS_ORACLE_VALUES_H_
#define CSEVAL_TESTS_ORACLE_VALUES_H_

// Produced by tests/oracles/ngram_oracle.py; rerun it to regenerate.
namespace cseval::testing {

inline constexpr double kBleuAbcdVsAbcde = 0.7521206186172787;
inline constexpr double kChrfAbcdVsAbcf = 0.47916666666666663;
// x = {0.1, 0.4, 0.35, 0.8, 0.55}, y = {0.2, 0.3, 0.5, 0.9, 0.4}
inline constexpr double kPearsonToy = 0.8702804290815803;
inline constexpr double kSpearmanToy = 0.7;

}  // namespace cseval::testing

#endif  // CSEVAL_TESTS_ORACLE_VALUES_H_
