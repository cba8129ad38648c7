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

#include <iostream>

#include "subdiff/count.hpp"
#include "subdiff/patterns.hpp"

int main() {
  const auto c = subdiff::count_subgraphs(subdiff::make_complete(4),
                                          subdiff::find_pattern("c4"));
  std::cout << subdiff::to_string(c) << "\n";
  return c == 3 ? 0 : 1;
}
