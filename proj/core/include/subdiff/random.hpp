// Copyright 2026 The subdiff Authors
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

#ifndef SUBDIFF_RANDOM_HPP_
#define SUBDIFF_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace subdiff {

using Rng = std::mt19937_64;

// Independent stream seed for work item `index` under `master`
// (splitmix64 finalizer over both words). Lets parallel work use per-item
// generators so output does not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Uniform permutation of 0..n-1.
std::vector<int> random_permutation(int n, Rng& rng);

}  // namespace subdiff

#endif  // SUBDIFF_RANDOM_HPP_
