// Copyright 2026 The fairmine Authors.
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

#ifndef FAIRMINE_PARALLEL_HPP_
#define FAIRMINE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace fairmine {

// Worker count: FAIRMINE_THREADS when set (minimum 1), else hardware concurrency.
std::size_t thread_count();

// Runs body(i) for i in [0, n). Each index must write only its own slot so
// the result does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fairmine

#endif  // FAIRMINE_PARALLEL_HPP_
